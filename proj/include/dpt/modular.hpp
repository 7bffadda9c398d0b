#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dpt/catalog.hpp"
#include "dpt/dirichlet.hpp"
#include "dpt/qseries.hpp"

namespace dpt {

struct QExpansion {
    QSeries series;
    Rational weight;
    std::string note;
};

struct GQExpansion {
    GSeries series;
    Rational weight;
    std::string note;
};

enum class ClassicSeries { E2, E4, E6 };
enum class ThetaKind { theta3, theta4, f5 };

QExpansion classic_eisenstein(ClassicSeries which, int order);
QExpansion theta_series(ThetaKind which, int order);

struct EtaFactor {
    long scale;     // delta
    long exponent;  // r_delta
};

struct EtaQuotientSpec {
    std::vector<EtaFactor> factors;
    int sign = 1;
};

// prod_m (1 - q^{delta m}) as a unit series, by the pentagonal sparse product.
QSeries eta_unit(long delta, int order);

// sign * q^{sum delta r / 24} * prod eta(delta tau)^{r_delta} with the q-power
// required to be integral.
QExpansion eta_quotient(const EtaQuotientSpec& spec, int order);

// The q-expansion of the canonical degree-d coordinate; always -q + O(q^2).
QExpansion hauptmodul_P(TransitionCase d, int order);

// Same series solved order by order from theta_q log P = (u f^2)(P), with no
// modular input.
QExpansion canonical_P_of_q(TransitionCase d, int order);

// log(-Q/q) as a q-series, from the extremal function composed with P(q).
QSeries log_mq_over_q(TransitionCase d, int order);

// Weight-k double character sum, exact lane: both characters must take values
// in Q(i).  Constant term 1/2 L(1-k, psi) when chi is the trivial character
// mod 1, zero otherwise.
GQExpansion eis_general(int k, const Character& chi, const Character& psi, long n, int order);

// Same expansion with complex coefficients, any character orders.
CSeries eis_general_c(int k, const Character& chi, const Character& psi, long n, int order);

// One term alpha * E_k^{chi,psi,n}; alpha = pref * g(gauss_char) when the
// gauss factor is present, else alpha = pref.
struct EisTerm {
    GaussRational pref;
    bool has_gauss = false;
    Character gauss_char;
    int k = 3;
    Character chi;
    Character psi;
    long n = 1;

    ComplexF coef() const;
};

using EisCombo = std::vector<EisTerm>;

// The extremal function as a combination of weight-3 double character sums;
// d in {3,4,5,6I,6II,8}, the two degree-six cases sharing one combination.
EisCombo extremal_combo(TransitionCase d);

// Exact q-expansion of a combination whose terms all lie in the Q(i) lane.
GSeries combo_expansion(const EisCombo& combo, int order);
// Complex q-expansion, no restriction on character orders.
CSeries combo_expansion_c(const EisCombo& combo, int order);

struct IdentityReport {
    TransitionCase d;
    int order;
    bool theta_ok = false;
    int theta_fail_order = -1;
    bool eis_supported = false;
    bool eis_ok = false;
    int eis_fail_order = -1;
};

// (a) f_d(P_d(q)) against the classical theta object (squared for d=2 against
// the E2 combination, fourth power for d=1 against E4); (b) extremal(P_d(q))
// against the weight-3 combination where available.
IdentityReport identity_suite(TransitionCase d, int order);

}  // namespace dpt
