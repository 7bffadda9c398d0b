#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpt/rational.hpp"

namespace dpt {

// Formal variable tag for truncated series. Mixing tags in arithmetic is a bug
// except through compose(), which substitutes one variable for another.
enum class Var : unsigned char { q, P, y, x };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::q: return "q";
        case Var::P: return "P";
        case Var::y: return "y";
        default: return "x";
    }
}

constexpr int kDefaultOrder = 64;

namespace detail {
inline ComplexF coeff_to_complex(const Rational& r) { return {to_double(r), 0.0}; }
inline ComplexF coeff_to_complex(const GaussRational& g) { return g.to_complex(); }
inline ComplexF coeff_to_complex(const ComplexF& z) { return z; }
inline double coeff_abs(const Rational& r) { return std::abs(to_double(r)); }
inline double coeff_abs(const GaussRational& g) { return std::abs(g.to_complex()); }
inline double coeff_abs(const ComplexF& z) { return std::abs(z); }
}  // namespace detail

// Dense truncated power series: coefficients for exponents 0..order inclusive.
// All binary operations truncate to the smaller order of the two operands.
template <class T>
struct Series {
    Var var = Var::q;
    int order = 0;
    std::vector<T> c;

    Series() : c(1, T(0)) {}
    Series(Var v, int ord) : var(v), order(ord), c(static_cast<size_t>(ord) + 1, T(0)) {
        if (ord < 0) throw std::invalid_argument("Series: negative order");
    }
    Series(Var v, std::vector<T> coeffs)
        : var(v), order(static_cast<int>(coeffs.size()) - 1), c(std::move(coeffs)) {
        if (c.empty()) throw std::invalid_argument("Series: empty coefficient list");
    }

    static Series constant(Var v, const T& value, int ord) {
        Series s(v, ord);
        s.c[0] = value;
        return s;
    }
    static Series identity(Var v, int ord) {  // the series "t"
        Series s(v, ord);
        if (ord >= 1) s.c[1] = T(1);
        return s;
    }

    const T& operator[](int k) const { return c[static_cast<size_t>(k)]; }
    T& operator[](int k) { return c[static_cast<size_t>(k)]; }

    T coeff(int k) const { return (k >= 0 && k <= order) ? c[static_cast<size_t>(k)] : T(0); }

    bool is_zero() const {
        for (const T& x : c)
            if (!(x == T(0))) return false;
        return true;
    }

    Series truncated(int new_order) const {
        if (new_order >= order) {
            Series s = *this;
            s.order = new_order;
            s.c.resize(static_cast<size_t>(new_order) + 1, T(0));
            return s;
        }
        Series s(var, new_order);
        std::copy(c.begin(), c.begin() + new_order + 1, s.c.begin());
        return s;
    }

    Series with_var(Var v) const {
        Series s = *this;
        s.var = v;
        return s;
    }

    // t -> t^m substitution (m >= 1).
    Series dilated(int m) const {
        if (m < 1) throw std::invalid_argument("dilated: m must be >= 1");
        Series s(var, order);
        for (int k = 0; k * m <= order; ++k) s.c[static_cast<size_t>(k * m)] = c[static_cast<size_t>(k)];
        return s;
    }

    // Multiply by t^m, truncating at the original order.
    Series shifted(int m) const {
        if (m < 0) throw std::invalid_argument("shifted: negative shift");
        Series s(var, order);
        for (int k = 0; k + m <= order; ++k) s.c[static_cast<size_t>(k + m)] = c[static_cast<size_t>(k)];
        return s;
    }
};

namespace detail {
inline void check_var(Var a, Var b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string(op) + ": variable mismatch (" + var_name(a) +
                                    " vs " + var_name(b) + ")");
}
}  // namespace detail

template <class T>
bool operator==(const Series<T>& a, const Series<T>& b) {
    if (a.var != b.var || a.order != b.order) return false;
    return a.c == b.c;
}

template <class T>
Series<T> operator+(const Series<T>& a, const Series<T>& b) {
    detail::check_var(a.var, b.var, "add");
    int n = std::min(a.order, b.order);
    Series<T> r(a.var, n);
    for (int k = 0; k <= n; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

template <class T>
Series<T> operator-(const Series<T>& a, const Series<T>& b) {
    detail::check_var(a.var, b.var, "sub");
    int n = std::min(a.order, b.order);
    Series<T> r(a.var, n);
    for (int k = 0; k <= n; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

template <class T>
Series<T> operator-(const Series<T>& a) {
    Series<T> r(a.var, a.order);
    for (int k = 0; k <= a.order; ++k) r.c[k] = -a.c[k];
    return r;
}

template <class T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) {
    detail::check_var(a.var, b.var, "mul");
    int n = std::min(a.order, b.order);
    Series<T> r(a.var, n);
    for (int i = 0; i <= n; ++i) {
        if (a.c[i] == T(0)) continue;
        for (int j = 0; i + j <= n; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

template <class T>
Series<T> operator*(const T& s, const Series<T>& a) {
    Series<T> r(a.var, a.order);
    for (int k = 0; k <= a.order; ++k) r.c[k] = s * a.c[k];
    return r;
}

template <class T>
Series<T> operator*(const Series<T>& a, const T& s) {
    return s * a;
}

template <class T>
Series<T> inverse(const Series<T>& a) {
    if (a.c[0] == T(0)) throw std::domain_error("inverse: constant term is zero");
    Series<T> r(a.var, a.order);
    T lead = T(1) / a.c[0];
    r.c[0] = lead;
    for (int n = 1; n <= a.order; ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k) acc += a.c[k] * r.c[n - k];
        r.c[n] = -lead * acc;
    }
    return r;
}

template <class T>
Series<T> operator/(const Series<T>& a, const Series<T>& b) {
    return a * inverse(b);
}

// t d/dt
template <class T>
Series<T> theta(const Series<T>& a) {
    Series<T> r(a.var, a.order);
    for (int k = 1; k <= a.order; ++k) r.c[k] = T(k) * a.c[k];
    return r;
}

template <class T>
Series<T> derivative(const Series<T>& a) {
    int n = std::max(a.order - 1, 0);
    Series<T> r(a.var, n);
    for (int k = 1; k <= a.order; ++k)
        if (k - 1 <= n) r.c[k - 1] = T(k) * a.c[k];
    return r;
}

// exp(a) for a with zero constant term; y' = a' y.
template <class T>
Series<T> series_exp(const Series<T>& a) {
    if (!(a.c[0] == T(0))) throw std::domain_error("series_exp: nonzero constant term");
    Series<T> r(a.var, a.order);
    r.c[0] = T(1);
    for (int n = 1; n <= a.order; ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k) acc += T(k) * a.c[k] * r.c[n - k];
        r.c[n] = acc / T(n);
    }
    return r;
}

// log(a) for a with constant term 1.
template <class T>
Series<T> series_log(const Series<T>& a) {
    if (!(a.c[0] == T(1))) throw std::domain_error("series_log: constant term must be 1");
    Series<T> r(a.var, a.order);
    for (int n = 1; n <= a.order; ++n) {
        T acc = T(n) * a.c[n];
        for (int k = 1; k < n; ++k) acc -= T(k) * r.c[k] * a.c[n - k];
        r.c[n] = acc / T(n);
    }
    return r;
}

// k-th root with constant term 1.
template <class T>
Series<T> series_root(const Series<T>& a, int k) {
    if (k == 0) throw std::invalid_argument("series_root: k = 0");
    Series<T> l = series_log(a);
    for (int n = 0; n <= l.order; ++n) l.c[n] = l.c[n] / T(k);
    return series_exp(l);
}

template <class T>
Series<T> series_pow(const Series<T>& a, int e) {
    Series<T> acc = Series<T>::constant(a.var, T(1), a.order);
    Series<T> base = a;
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-(long long)e) : static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return invert ? inverse(acc) : acc;
}

// f(p(t)); p must have zero constant term. Result carries p's variable.
template <class T>
Series<T> compose(const Series<T>& f, const Series<T>& p) {
    if (!(p.c[0] == T(0))) throw std::domain_error("compose: inner constant term must vanish");
    int n = std::min(f.order, p.order);
    Series<T> pw = Series<T>::constant(p.var, T(1), n);
    Series<T> pt = p.truncated(n);
    Series<T> r(p.var, n);
    r.c[0] = f.c[0];
    for (int k = 1; k <= n; ++k) {
        pw = pw * pt;
        if (f.c[k] == T(0)) continue;
        for (int j = k; j <= n; ++j) r.c[j] += f.c[k] * pw.c[j];
    }
    return r;
}

// Functional inverse: returns R with a(R(t)) = t. Needs a(0) = 0 and an
// invertible linear coefficient.
template <class T>
Series<T> series_reverse(const Series<T>& a) {
    if (!(a.c[0] == T(0))) throw std::domain_error("series_reverse: constant term must vanish");
    if (a.order < 1 || a.c[1] == T(0))
        throw std::domain_error("series_reverse: linear coefficient must be invertible");
    int n = a.order;
    Series<T> r(a.var, n);
    r.c[1] = T(1) / a.c[1];
    for (int k = 2; k <= n; ++k) {
        // a(r) agrees with t below order k; the order-k defect fixes r_k
        Series<T> comp = compose(a.truncated(k), r.truncated(k));
        r.c[k] = -comp.c[k] / a.c[1];
    }
    return r;
}

// Solve t F'/F = rhs with rhs(0) = 1, returning F = sign*t*exp(sum rhs_n t^n / n).
// The result is truncated at rhs.order.
template <class T>
Series<T> solve_dlog(const Series<T>& rhs, int sign) {
    if (!(rhs.c[0] == T(1))) throw std::domain_error("solve_dlog: rhs must have constant term 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("solve_dlog: sign must be +-1");
    Series<T> g(rhs.var, rhs.order);
    for (int n = 1; n <= rhs.order; ++n) g.c[n] = rhs.c[n] / T(n);
    Series<T> e = series_exp(g);
    Series<T> r(rhs.var, rhs.order);
    for (int k = 1; k <= rhs.order; ++k) r.c[k] = T(sign) * e.c[k - 1];
    return r;
}

struct EvalResult {
    ComplexF value;
    double tail_bound;  // geometric estimate from trailing coefficient ratios
};

// Horner evaluation at z with a heuristic bound on the discarded tail. The
// bound extrapolates the tail geometrically from the worst consecutive-|c|
// ratio over the last quarter of the retained coefficients; infinite when the
// extrapolated ratio times |z| reaches 1.
template <class T>
EvalResult series_eval(const Series<T>& a, ComplexF z) {
    ComplexF acc(0.0, 0.0);
    for (int k = a.order; k >= 0; --k) acc = acc * z + detail::coeff_to_complex(a.c[k]);
    double rho = 0.0;
    int lo = std::max(1, a.order - std::max(1, a.order / 4));
    for (int k = lo; k <= a.order; ++k) {
        double prev = detail::coeff_abs(a.c[k - 1]);
        double cur = detail::coeff_abs(a.c[k]);
        if (prev > 0.0) rho = std::max(rho, cur / prev);
    }
    double az = std::abs(z);
    double last = detail::coeff_abs(a.c[a.order]) * std::pow(az, a.order);
    double t = rho * az;
    double tail = (t < 1.0 && last > 0.0) ? last * t / (1.0 - t)
                : (last == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    return {acc, tail};
}

template <class T, class F>
auto map_series(const Series<T>& a, F f) -> Series<decltype(f(a.c[0]))> {
    using U = decltype(f(a.c[0]));
    Series<U> r(a.var, a.order);
    for (int k = 0; k <= a.order; ++k) r.c[k] = f(a.c[k]);
    return r;
}

inline Series<GaussRational> to_gauss(const Series<Rational>& a) {
    return map_series(a, [](const Rational& r) { return GaussRational(r); });
}
inline Series<ComplexF> to_complexf(const Series<Rational>& a) {
    return map_series(a, [](const Rational& r) { return ComplexF(to_double(r), 0.0); });
}
inline Series<ComplexF> to_complexf(const Series<GaussRational>& a) {
    return map_series(a, [](const GaussRational& g) { return g.to_complex(); });
}

std::string to_string(const Series<Rational>& s, int max_terms = 8);
std::string to_string(const Series<GaussRational>& s, int max_terms = 8);

using QSeries = Series<Rational>;
using GSeries = Series<GaussRational>;
using CSeries = Series<ComplexF>;

}  // namespace dpt
