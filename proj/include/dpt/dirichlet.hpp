#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpt/qseries.hpp"
#include "dpt/rational.hpp"

namespace dpt {

constexpr long kModulusCap = 240;

// Dirichlet character mod N. Values on units are exact roots of unity
// e^{2 pi i k / order}; stored as the exponent k. exps[a] = -1 off the units.
class Character {
  public:
    Character() = default;  // the trivial character mod 1

    long modulus() const { return N_; }
    long order() const { return order_; }
    long conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == N_; }
    bool is_principal() const { return order_ == 1; }
    bool is_odd() const;      // chi(-1) = -1
    bool is_quartic() const { return 4 % order_ == 0; }  // values in Q(i)

    // e^{2 pi i k/order} exponent at a, or -1 when gcd(a, N) > 1.
    long exponent(long a) const;
    ComplexF value(long a) const;
    GaussRational value_gauss(long a) const;  // requires is_quartic()

    Character primitive_part() const;
    std::string label() const;  // "N.j" in enumeration order

    friend Character mult(const Character& x, const Character& y);
    friend Character principal_character(long m);
    friend std::vector<Character> enumerate_characters(long m);
    friend bool operator==(const Character& a, const Character& b);

  private:
    long N_ = 1;
    long order_ = 1;
    long conductor_ = 1;
    int index_ = 0;  // position in enumerate_characters(N_)
    std::vector<long> exps_ = {0};
};

std::vector<Character> enumerate_characters(long m);
Character principal_character(long m);
Character mult(const Character& x, const Character& y);
// chi restricted-to-modulus m (m divisible by conductor): the character mod m
// agreeing with chi on units of m.
Character induce(const Character& chi, long m);
Character conj_character(const Character& chi);

// Named characters used throughout: the quadratic ones mod 3 and 4, and the
// quartic one mod 5 with value i at 2 (chi5_3 is its cube).
Character chi3_2();
Character chi4_2();
Character chi5_2();
Character chi5_3();
Character character_by_label(const std::string& label);

struct GaussSum {
    ComplexF value;
    bool exact = false;        // value = coef * sqrt(sqrt_arg) exactly
    GaussRational coef;
    long sqrt_arg = 1;
};

GaussSum gauss_sum(const Character& chi);

// g(chi mod N) = mu(N/f) chi_f(N/f) g(chi_f); returns the Gaussian-rational
// factor (zero allowed) and the primitive character.
std::pair<GaussRational, Character> gauss_sum_reduction(const Character& chi);

struct BernoulliValue {
    long m = 0;
    bool exact = false;
    GaussRational g;   // set when exact
    ComplexF value;
};

BernoulliValue bernoulli(const Character& chi, long m);

// L(s, chi) for s in {0, -1, -2, ...}: -B_{1-s,chi}/(1-s).
BernoulliValue l_value_negative(long s, const Character& chi);

struct LOneValue {
    ComplexF value;
    // When the conjugate's primitive part is quartic:
    //   L(1,chi) = pi*i * pi_coeff / g(conj(chi_f)) exactly, Euler factors folded in.
    bool has_exact = false;
    GaussRational pi_coeff;
    Character gauss_div;
};

// L(1, chi) for odd chi, via -pi*i*B_{1,conj}/g(conj) on the primitive part
// with Euler factors; cross-checked against Richardson-accelerated partial
// sums of sum chi(m)/m (1e-8).
LOneValue l_one_odd(const Character& chi);

// L'(-1, chi) for odd primitive chi: N*g(chi)/(4*pi*i) * L(2, conj chi).
ComplexF l_prime_minus1(const Character& chi);

// Parallel/serial reference pair for the L(2, chi) kernel (direct summation
// plus exact trigamma tail); exposed for the benchmark target.
ComplexF l2_sum(const Character& chi, bool parallel = true);

// Numeric L(s, chi) through Hurwitz zeta, and d/ds of it; oracle use.
ComplexF l_series_numeric(double s, const Character& chi);
ComplexF l_series_numeric_ds(double s, const Character& chi);

struct LLimit {
    enum class Kind { finite, divergent };
    Kind kind = Kind::finite;
    ComplexF value{0.0, 0.0};
    // Exact record, when representable:
    //   value = lprime_coeff * L'(-1, lprime_psi)
    //         + pi_coeff * pi * i / g(gauss_div)      (gauss_div mod 1: divisor 1)
    //         + const_coeff
    bool has_exact = false;
    GaussRational lprime_coeff;
    std::optional<Character> lprime_psi;
    GaussRational pi_coeff;
    std::optional<Character> gauss_div;
    GaussRational const_coeff;

    ComplexF exact_eval() const;
};

// n^{-1} lim_{s->0} L(s+1, chi) L(s+2-k, psi). Throws on parity violation;
// returns kind = divergent when the principal-chi pole meets a nonzero
// L(2-k, psi).
LLimit i_limit(int k, const Character& chi, const Character& psi, long n);

}  // namespace dpt
