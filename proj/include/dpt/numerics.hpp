#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dpt/rational.hpp"

namespace dpt::num {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// psi(x) for x > 0: recurrence up the argument, then asymptotic series.
double digamma(double x);
// psi'(x) for x > 0.
double trigamma(double x);

// Hurwitz zeta(s, x) for x > 0, s != 1, via Euler-Maclaurin.
double hurwitz_zeta(double s, double x);
// d/ds zeta(s, x).
double hurwitz_zeta_ds(double s, double x);

long long gcd_ll(long long a, long long b);
long euler_phi(long n);
int moebius(long n);
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> divisors(long n);

// Best rational approximation p/q to x with q <= max_den (continued fractions).
struct RatApprox {
    long long p, q;
    double err;
};
RatApprox rational_approx(double x, long long max_den);

struct Kahan {
    long double s = 0.0L, c = 0.0L;
    void add(long double x) {
        long double y = x - c;
        long double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double get() const { return static_cast<double>(s); }
};

// Integral of f over (0, 1) by tanh-sinh quadrature; tolerates integrable
// endpoint singularities.
double tanh_sinh_01(const std::function<double(double)>& f, int levels = 12);

// Adaptive Gauss-Legendre on [a, b] (15-point base rule, bisection refinement).
double adaptive_gl(const std::function<double(double)>& f, double a, double b, double tol);
ComplexF adaptive_gl_c(const std::function<ComplexF(double)>& f, double a, double b, double tol);

}  // namespace dpt::num
