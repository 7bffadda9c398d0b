#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpt {

using Rational = mpq_class;
using ComplexF = std::complex<double>;

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parse "a/b" or "a".
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);

inline Rational pow_rat(Rational base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rat: 0^negative");
        base = 1 / base;
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Element of Q(i).
struct GaussRational {
    Rational re, im;

    GaussRational() : re(0), im(0) {}
    GaussRational(int n) : re(n), im(0) {}
    GaussRational(long n) : re(n), im(0) {}
    GaussRational(const Rational& r) : re(r), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational unit_i() { return GaussRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    ComplexF to_complex() const { return {to_double(re), to_double(im)}; }

    GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        Rational n = o.norm();
        if (n == 0) throw std::domain_error("GaussRational: division by zero");
        GaussRational c = o.conj();
        *this *= c;
        re /= n;
        im /= n;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

std::string to_string(const GaussRational& g);

// Fourth roots of unity as exact values: i^k.
inline GaussRational i_power(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussRational(1);
        case 1: return GaussRational::unit_i();
        case 2: return GaussRational(-1);
        default: return -GaussRational::unit_i();
    }
}

}  // namespace dpt
