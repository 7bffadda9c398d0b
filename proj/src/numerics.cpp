#include "dpt/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace dpt::num {

namespace {

// B_2, B_4, ..., B_16
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6,  -1.0 / 30, 1.0 / 42,  -1.0 / 30,
    5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};

}  // namespace

double digamma(double x) {
    if (x <= 0.0) throw std::domain_error("digamma: x <= 0");
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x, inv2 = inv * inv;
    double r = std::log(x) - 0.5 * inv;
    double p = inv2;
    for (size_t k = 0; k < kBernoulli.size(); ++k) {
        r -= kBernoulli[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return acc + r;
}

double trigamma(double x) {
    if (x <= 0.0) throw std::domain_error("trigamma: x <= 0");
    double acc = 0.0;
    while (x < 12.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    double inv = 1.0 / x, inv2 = inv * inv;
    double r = inv + 0.5 * inv2;
    double p = inv * inv2;
    for (size_t k = 0; k < kBernoulli.size(); ++k) {
        r += kBernoulli[k] * p;
        p *= inv2;
    }
    return acc + r;
}

double hurwitz_zeta(double s, double x) {
    if (s == 1.0) throw std::domain_error("hurwitz_zeta: s = 1");
    if (x <= 0.0) throw std::domain_error("hurwitz_zeta: x <= 0");
    const int M = 28;
    Kahan sum;
    for (int n = 0; n < M; ++n) sum.add(std::pow(x + n, -s));
    double a = x + M;
    double total = sum.get() + std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
    // Euler-Maclaurin: + sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * a^{-s-2k+1}
    double rising = s;
    double apow = std::pow(a, -s - 1.0);
    double factorial = 2.0;  // (2k)!
    for (size_t k = 0; k < kBernoulli.size(); ++k) {
        total += kBernoulli[k] / factorial * rising * apow;
        double m = 2.0 * (k + 1);
        rising *= (s + m - 1.0) * (s + m);
        apow /= a * a;
        factorial *= (m + 1.0) * (m + 2.0);
    }
    return total;
}

double hurwitz_zeta_ds(double s, double x) {
    const double h = 1e-5;
    double f1 = hurwitz_zeta(s - 2 * h, x), f2 = hurwitz_zeta(s - h, x);
    double f3 = hurwitz_zeta(s + h, x), f4 = hurwitz_zeta(s + 2 * h, x);
    return (f1 - 8 * f2 + 8 * f3 - f4) / (12 * h);
}

long long gcd_ll(long long a, long long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    if (n < 0) n = -n;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.push_back({p, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

long euler_phi(long n) {
    long r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

int moebius(long n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<long> divisors(long n) {
    std::vector<long> d = {1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = d.size();
        long pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) d.push_back(d[j] * pe);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

RatApprox rational_approx(double x, long long max_den) {
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double y = x;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(y);
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = y - fl;
        if (frac < 1e-15) break;
        y = 1.0 / frac;
    }
    if (q1 == 0) return {0, 1, std::abs(x)};
    return {p1, q1, std::abs(x - static_cast<double>(p1) / static_cast<double>(q1))};
}

double tanh_sinh_01(const std::function<double(double)>& f, int levels) {
    // Nodes x = (1 + tanh((pi/2) sinh(t)))/2, weights from the derivative.
    auto g = [&](double t) {
        double sh = std::sinh(t);
        double u = std::tanh(0.5 * kPi * sh);
        double x = 0.5 * (1.0 + u);
        double ch = std::cosh(0.5 * kPi * sh);
        double w = 0.25 * kPi * std::cosh(t) / (ch * ch);
        if (x <= 0.0 || x >= 1.0 || w < 1e-300) return 0.0;
        return w * f(x);
    };
    double prev = 0.0, cur = 0.0;
    for (int level = 4; level <= levels; ++level) {
        double h = std::ldexp(1.0, -level);
        int kmax = static_cast<int>(6.5 / h);
        Kahan acc;
        acc.add(g(0.0));
        for (int k = 1; k <= kmax; ++k) {
            acc.add(g(k * h));
            acc.add(g(-k * h));
        }
        cur = h * acc.get();
        if (level > 5 && std::abs(cur - prev) <= 1e-13 * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    return cur;
}

namespace {
// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 15> kGLx = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272, -0.7244177313601701,
    -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
constexpr std::array<double, 15> kGLw = {
    0.03075324199611727, 0.07036604748810812, 0.1071592204671719, 0.1395706779261543,
    0.1662692058169939,  0.1861610000155622,  0.1984314853271116, 0.2025782419255613,
    0.1984314853271116,  0.1861610000155622,  0.1662692058169939, 0.1395706779261543,
    0.1071592204671719,  0.07036604748810812, 0.03075324199611727};

template <class R, class F>
R gl15(const F& f, double a, double b) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    R acc{};
    for (int i = 0; i < 15; ++i) acc += R(kGLw[i] * half) * f(mid + half * kGLx[i]);
    return acc;
}

template <class R, class F>
R adaptive_impl(const F& f, double a, double b, double tol, int depth) {
    R whole = gl15<R>(f, a, b);
    double mid = 0.5 * (a + b);
    R left = gl15<R>(f, a, mid), right = gl15<R>(f, mid, b);
    double err = std::abs(left + right - whole);
    if (err < tol || depth > 48) return left + right;
    return adaptive_impl<R>(f, a, mid, 0.5 * tol, depth + 1) +
           adaptive_impl<R>(f, mid, b, 0.5 * tol, depth + 1);
}
}  // namespace

double adaptive_gl(const std::function<double(double)>& f, double a, double b, double tol) {
    return adaptive_impl<double>(f, a, b, tol, 0);
}

ComplexF adaptive_gl_c(const std::function<ComplexF(double)>& f, double a, double b, double tol) {
    return adaptive_impl<ComplexF>(f, a, b, tol, 0);
}

}  // namespace dpt::num
