#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpt/catalog.hpp"
#include "dpt/qseries.hpp"

namespace dpt {

// Power series attached to one transition case, all truncated at `order`
// and exact over Q.  The expansion variable is P.
struct MirrorData {
    TransitionCase d;
    int order;
    QSeries f;         // normalized solution, f(0) = 1
    QSeries g;         // primitive with f_m = m g_m, g(0) = 0
    QSeries u;         // 1 + kappa P - mu P^2
    QSeries q_of_p;    // P e^g
    QSeries extremal;  // u f^3
    QSeries v;         // theta f / f
};

QSeries f_series(TransitionCase d, int order);
QSeries g_series(TransitionCase d, int order);
QSeries u_poly(TransitionCase d, int order);
QSeries mirror_Q(TransitionCase d, int order);
QSeries extremal_series(TransitionCase d, int order);
MirrorData mirror_data(TransitionCase d, int order);

// Coefficientwise comparison of f against its Gauss hypergeometric closed
// form (degree doubling for D8).  Returns the first mismatching index, or
// nullopt when all coefficients up to `order` agree.
std::optional<int> hypergeom_check(TransitionCase d, int order);

// Residual of (1 + kappa P - mu P^2) theta^2 f + (kappa P - 2 mu P^2) theta f
//   + (lambda P - mu P^2) f, identically zero for the true solution.
QSeries ode_residual(TransitionCase d, const QSeries& f);

// Solution regular at the second-kind boundary point, in the variable
// y = 1/P: f_reg in y Q[[y]] with unit linear coefficient.  Only defined
// when mu != 0.
struct RegularSolution {
    TransitionCase d;
    int order;
    QSeries f_reg;  // variable y
    QSeries v_reg;  // -theta_y f_reg / f_reg, starts at -1
};

RegularSolution f_reg_series(TransitionCase d, int order);

// Residual of the y-form operator
//   (y^2 + kappa y - mu) theta_y^2 - (kappa y - 2 mu y^2 / y ... ) applied as
//   (y^2 + kappa y - mu) theta^2 h - (kappa y - 2 mu) theta h + (lambda y - mu) h.
QSeries ode_residual_y(TransitionCase d, const QSeries& h);

// Exponents of the y = 0 indicial equation, ascending.
std::pair<Rational, Rational> indicial_exponents(TransitionCase d);

// Degree-seven local data.  Coefficients of the y-expansion are stored
// exactly as b_k = p_k(r) (1+4r)^{-(4k-3)/2} with p_k a polynomial in r.
struct F7Data {
    int order_y;
    int order_r;
    // p[k-1] holds the coefficients of p_k, constant term first.
    std::vector<std::vector<Rational>> p;
    // b_k expanded as a series in r to order_r.
    std::vector<QSeries> b;
    // Series part of g: sum_k (b_k / k) y^k, coefficients expanded in r.
    // The full object is log(y) minus this sum; the log term is implicit.
    std::vector<QSeries> g_terms;
};

F7Data f7_series(int order_y, int order_r);

// Max absolute residual index of the degree-seven ladder
//   k^2 p_{k+1}-relation, checked symbolically for k < order_y.
// Returns nullopt when every relation holds.
std::optional<int> f7_ladder_check(const F7Data& data);

}  // namespace dpt
