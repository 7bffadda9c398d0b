#include "dpt/dirichlet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "dpt/numerics.hpp"

namespace dpt {

namespace {

using num::kPi;

struct CyclicComp {
    long pe;                 // prime power to reduce by
    long size;               // order of this cyclic factor
    std::vector<long> dlog;  // indexed by residue mod pe; -1 off units
};

struct GroupStructure {
    long N = 1;
    long exponent = 1;  // lcm of component sizes
    std::vector<CyclicComp> comps;
};

long pow_mod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

long order_mod(long a, long m) {
    long phi = num::euler_phi(m);
    long o = phi;
    for (long d : num::divisors(phi))
        if (pow_mod(a, d, m) == 1) {
            o = d;
            break;
        }
    return o;
}

CyclicComp dlog_table(long pe, long gen, long size) {
    CyclicComp c{pe, size, std::vector<long>(pe, -1)};
    long v = 1 % pe;
    for (long j = 0; j < size; ++j) {
        c.dlog[v] = j;
        v = v * gen % pe;
    }
    return c;
}

GroupStructure unit_group(long N) {
    GroupStructure g;
    g.N = N;
    for (auto [p, e] : num::factorize(N)) {
        long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 1) continue;  // trivial
            if (e == 2) {
                g.comps.push_back(dlog_table(4, 3, 2));
            } else {
                // (Z/2^e)^x = <-1> x <5>
                long half = pe / 4;
                CyclicComp sign{pe, 2, std::vector<long>(pe, -1)};
                CyclicComp five{pe, half, std::vector<long>(pe, -1)};
                long v = 1;
                for (long j = 0; j < half; ++j) {
                    sign.dlog[v] = 0;
                    five.dlog[v] = j;
                    long w = pe - v;
                    sign.dlog[w] = 1;
                    five.dlog[w] = j;
                    v = v * 5 % pe;
                }
                g.comps.push_back(std::move(sign));
                g.comps.push_back(std::move(five));
            }
        } else {
            long phi = pe / p * (p - 1);
            long gen = 0;
            for (long cand = 2; cand < pe; ++cand) {
                if (cand % p == 0) continue;
                if (order_mod(cand, pe) == phi) {
                    gen = cand;
                    break;
                }
            }
            g.comps.push_back(dlog_table(pe, gen, phi));
        }
    }
    g.exponent = 1;
    for (const auto& c : g.comps) g.exponent = g.exponent / num::gcd_ll(g.exponent, c.size) * c.size;
    return g;
}

std::mutex g_cache_mutex;

}  // namespace

bool Character::is_odd() const {
    if (N_ == 1) return false;
    long k = exponent(N_ - 1);
    return order_ % 2 == 0 && k == order_ / 2;
}

long Character::exponent(long a) const {
    long r = ((a % N_) + N_) % N_;
    return exps_[static_cast<size_t>(r)];
}

ComplexF Character::value(long a) const {
    long k = exponent(a);
    if (k < 0) return {0.0, 0.0};
    double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(order_);
    return {std::cos(t), std::sin(t)};
}

GaussRational Character::value_gauss(long a) const {
    if (!is_quartic()) throw std::domain_error("value_gauss: character order does not divide 4");
    long k = exponent(a);
    if (k < 0) return GaussRational(0);
    return i_power(k * (4 / order_));
}

std::string Character::label() const { return std::to_string(N_) + "." + std::to_string(index_); }

std::vector<Character> enumerate_characters(long m) {
    if (m < 1) throw std::invalid_argument("enumerate_characters: modulus must be positive");
    if (m > kModulusCap) throw std::invalid_argument("enumerate_characters: modulus over cap");

    static std::map<long, std::vector<Character>> cache;
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }

    GroupStructure g = unit_group(m);
    long L = g.exponent;
    size_t ncomp = g.comps.size();
    long count = 1;
    for (const auto& c : g.comps) count *= c.size;

    std::vector<long> units;
    for (long a = 0; a < m; ++a)
        if (num::gcd_ll(a, m) == 1 || m == 1) units.push_back(a);

    std::vector<Character> out;
    std::vector<long> t(ncomp, 0);
    for (long idx = 0; idx < count; ++idx) {
        // exponents over the common order L
        std::vector<long> expsL(m, -1);
        for (long a : units) {
            long k = 0;
            for (size_t i = 0; i < ncomp; ++i) {
                long d = g.comps[i].dlog[a % g.comps[i].pe];
                k = (k + t[i] * (L / g.comps[i].size) % L * d) % L;
            }
            expsL[a] = k;
        }
        // reduce to the true order
        long common = L;
        for (long a : units) common = num::gcd_ll(common, expsL[a]);
        long ord = (common == 0) ? 1 : L / common;
        Character chi;
        chi.N_ = m;
        chi.order_ = ord;
        chi.index_ = static_cast<int>(idx);
        chi.exps_.assign(m, -1);
        long step = (ord == 1) ? 1 : L / ord;
        for (long a : units) chi.exps_[a] = (ord == 1) ? 0 : (expsL[a] / step) % ord;
        // conductor: least f | m with chi trivial on units congruent to 1 mod f
        chi.conductor_ = m;
        for (long f : num::divisors(m)) {
            bool ok = true;
            for (long a : units)
                if (a % f == 1 % f && chi.exps_[a] != 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                chi.conductor_ = f;
                break;
            }
        }
        out.push_back(std::move(chi));
        // increment mixed-radix tuple
        for (size_t i = ncomp; i-- > 0;) {
            if (++t[i] < g.comps[i].size) break;
            t[i] = 0;
        }
    }

    std::lock_guard<std::mutex> lk(g_cache_mutex);
    auto [it, inserted] = cache.emplace(m, std::move(out));
    return it->second;
}

Character principal_character(long m) { return enumerate_characters(m).front(); }

namespace {

// Find the canonical (enumerated) copy matching the given value table.
Character canonical_lookup(long m, const std::vector<long>& exps, long ord) {
    for (const Character& c : enumerate_characters(m)) {
        if (c.order() != ord) continue;
        bool eq = true;
        for (long a = 0; a < m && eq; ++a) eq = (c.exponent(a) == exps[static_cast<size_t>(a)]);
        if (eq) return c;
    }
    throw std::logic_error("canonical_lookup: no match");
}

}  // namespace

bool operator==(const Character& a, const Character& b) {
    return a.N_ == b.N_ && a.order_ == b.order_ && a.exps_ == b.exps_;
}

Character mult(const Character& x, const Character& y) {
    long m = x.N_ / num::gcd_ll(x.N_, y.N_) * y.N_;
    if (m > kModulusCap) throw std::invalid_argument("mult: modulus over cap");
    long L = x.order_ / num::gcd_ll(x.order_, y.order_) * y.order_;
    std::vector<long> exps(m, -1);
    long common = L;
    for (long a = 0; a < m; ++a) {
        long kx = x.exponent(a), ky = y.exponent(a);
        if (kx < 0 || ky < 0) continue;
        long k = (kx * (L / x.order_) + ky * (L / y.order_)) % L;
        exps[a] = k;
        common = num::gcd_ll(common, k);
    }
    long ord = L / common;  // common = L when every exponent vanishes
    for (long a = 0; a < m; ++a)
        if (exps[a] >= 0) exps[a] = exps[a] / common % ord;
    return canonical_lookup(m, exps, ord);
}

Character induce(const Character& chi, long m) {
    if (m > kModulusCap) throw std::invalid_argument("induce: modulus over cap");
    if (m % chi.conductor() != 0) throw std::invalid_argument("induce: conductor does not divide");
    Character prim = chi.primitive_part();
    long f = prim.modulus();
    std::vector<long> exps(m, -1);
    for (long a = 0; a < m; ++a) {
        if (m > 1 && num::gcd_ll(a, m) != 1) continue;
        exps[a] = prim.exponent(a % f);
    }
    return canonical_lookup(m, exps, prim.order());
}

Character Character::primitive_part() const {
    long f = conductor_;
    if (f == N_) return *this;
    std::vector<long> exps(f, -1);
    for (long a = 0; a < f; ++a) {
        if (f > 1 && num::gcd_ll(a, f) != 1) continue;
        // lift to a unit mod N congruent to a mod f
        long b = a;
        while (num::gcd_ll(b, N_) != 1) b += f;
        exps[a] = exponent(b);
    }
    return canonical_lookup(f, exps, order_);
}

Character conj_character(const Character& chi) {
    long m = chi.modulus(), ord = chi.order();
    std::vector<long> exps(m, -1);
    for (long a = 0; a < m; ++a) {
        long k = chi.exponent(a);
        if (k >= 0) exps[a] = (ord - k) % ord;
    }
    return canonical_lookup(m, exps, ord);
}

Character chi3_2() { return enumerate_characters(3)[1]; }

Character chi4_2() {
    for (const Character& c : enumerate_characters(4))
        if (!c.is_principal()) return c;
    throw std::logic_error("chi4_2");
}

Character chi5_2() {
    for (const Character& c : enumerate_characters(5))
        if (c.order() == 4 && c.is_quartic() && c.value_gauss(2) == GaussRational::unit_i()) return c;
    throw std::logic_error("chi5_2");
}

Character chi5_3() { return conj_character(chi5_2()); }

Character character_by_label(const std::string& label) {
    if (label == "chi3_2") return chi3_2();
    if (label == "chi4_2") return chi4_2();
    if (label == "chi5_2") return chi5_2();
    if (label == "chi5_3") return chi5_3();
    auto dot = label.find('.');
    if (dot == std::string::npos) throw std::invalid_argument("character label: want N.j or an alias");
    long m = std::stol(label.substr(0, dot));
    long j = std::stol(label.substr(dot + 1));
    auto chars = enumerate_characters(m);
    if (j < 0 || j >= static_cast<long>(chars.size()))
        throw std::invalid_argument("character label: index out of range");
    return chars[static_cast<size_t>(j)];
}

GaussSum gauss_sum(const Character& chi) {
    long N = chi.modulus();
    ComplexF v{0.0, 0.0};
    for (long a = 0; a < N; ++a) {
        long k = chi.exponent(a);
        if (k < 0) continue;
        double t = 2.0 * kPi * static_cast<double>(a) / static_cast<double>(N);
        v += chi.value(a) * ComplexF{std::cos(t), std::sin(t)};
    }
    if (N == 1) v = {1.0, 0.0};

    GaussSum out;
    out.value = v;
    Character prim = chi.primitive_part();
    long ratio = N / prim.modulus();
    long kf = prim.exponent(ratio);
    int mu = num::moebius(ratio);
    if (mu == 0 || kf < 0) {
        out.exact = true;
        out.coef = GaussRational(0);
        out.sqrt_arg = 1;
        return out;
    }
    if (prim.order() <= 2 && kf * 4 % prim.order() == 0) {
        GaussRational fac = GaussRational(mu) * i_power(kf * 4 / prim.order());
        out.exact = true;
        long f = prim.modulus();
        if (f == 1) {
            out.coef = fac;
            out.sqrt_arg = 1;
        } else {
            out.coef = prim.is_odd() ? fac * GaussRational::unit_i() : fac;
            out.sqrt_arg = f;
        }
    }
    return out;
}

std::pair<GaussRational, Character> gauss_sum_reduction(const Character& chi) {
    Character prim = chi.primitive_part();
    long ratio = chi.modulus() / prim.modulus();
    int mu = num::moebius(ratio);
    long kf = prim.exponent(ratio);
    if (mu == 0 || kf < 0) return {GaussRational(0), prim};
    if (kf * 4 % prim.order() != 0)
        throw std::domain_error("gauss_sum_reduction: factor outside Q(i)");
    return {GaussRational(mu) * i_power(kf * 4 / prim.order()), prim};
}

BernoulliValue bernoulli(const Character& chi, long m) {
    if (m < 0) throw std::invalid_argument("bernoulli: m < 0");
    long N = chi.modulus();
    BernoulliValue out;
    out.m = m;
    int ord = static_cast<int>(m);
    if (chi.is_quartic()) {
        // sum_{nu=1..N} chi(nu) x e^{nu x} / (e^{Nx} - 1), exact in Q(i)
        GSeries numer(Var::x, ord);
        for (long nu = 1; nu <= N; ++nu) {
            GaussRational cv = chi.value_gauss(nu);
            if (cv.is_zero()) continue;
            Rational p(1);
            for (int j = 0; j <= ord; ++j) {
                numer.c[j] += cv * GaussRational(p);
                p *= Rational(nu);
                p /= Rational(j + 1);
            }
        }
        GSeries den(Var::x, ord);  // (e^{Nx}-1)/x
        {
            Rational p(N);
            for (int j = 0; j <= ord; ++j) {
                den.c[j] = GaussRational(p);
                p *= Rational(N);
                p /= Rational(j + 2);
            }
        }
        GSeries ratio = numer * inverse(den);
        GaussRational b = ratio.c[ord];
        Rational fact(1);
        for (long j = 2; j <= m; ++j) fact *= j;
        b = b * GaussRational(fact);
        out.exact = true;
        out.g = b;
        out.value = b.to_complex();
        return out;
    }
    CSeries numer(Var::x, ord);
    for (long nu = 1; nu <= N; ++nu) {
        ComplexF cv = chi.value(nu);
        if (chi.exponent(nu) < 0) continue;
        double p = 1.0;
        for (int j = 0; j <= ord; ++j) {
            numer.c[j] += cv * p;
            p = p * static_cast<double>(nu) / (j + 1);
        }
    }
    CSeries den(Var::x, ord);
    {
        double p = static_cast<double>(N);
        for (int j = 0; j <= ord; ++j) {
            den.c[j] = p;
            p = p * static_cast<double>(N) / (j + 2);
        }
    }
    CSeries ratio = numer * inverse(den);
    double fact = 1.0;
    for (long j = 2; j <= m; ++j) fact *= static_cast<double>(j);
    out.exact = false;
    out.value = ratio.c[ord] * fact;
    return out;
}

BernoulliValue l_value_negative(long s, const Character& chi) {
    if (s > 0) throw std::invalid_argument("l_value_negative: s must be <= 0");
    long m = 1 - s;
    BernoulliValue b = bernoulli(chi, m);
    BernoulliValue out;
    out.m = m;
    out.exact = b.exact;
    if (b.exact) {
        out.g = -b.g / GaussRational(Rational(m));
        out.value = out.g.to_complex();
    } else {
        out.value = -b.value / static_cast<double>(m);
    }
    return out;
}

namespace {

// Richardson-accelerated partial sums of sum chi(m)/m over full periods.
ComplexF l_one_accelerated(const Character& chi) {
    long N = chi.modulus();
    const long T = 400;
    std::array<ComplexF, 4> A;
    num::Kahan re, im;
    long m = 0;
    for (int i = 1; i <= 4; ++i) {
        long target = T * i * N;
        while (m < target) {
            ++m;
            long k = chi.exponent(m);
            if (k < 0) continue;
            ComplexF v = chi.value(m);
            re.add(v.real() / static_cast<long double>(m));
            im.add(v.imag() / static_cast<long double>(m));
        }
        A[i - 1] = {re.get(), im.get()};
    }
    double x[4] = {1.0, 0.5, 1.0 / 3.0, 0.25};
    ComplexF E{0.0, 0.0};
    for (int i = 0; i < 4; ++i) {
        double w = 1.0;
        for (int j = 0; j < 4; ++j)
            if (j != i) w *= (0.0 - x[j]) / (x[i] - x[j]);
        E += w * A[i];
    }
    return E;
}

// Digamma-based L(1, chi) for any nonprincipal chi.
ComplexF l_one_digamma(const Character& chi) {
    long N = chi.modulus();
    ComplexF acc{0.0, 0.0};
    for (long a = 1; a < N; ++a) {
        if (chi.exponent(a) < 0) continue;
        acc += chi.value(a) * num::digamma(static_cast<double>(a) / N);
    }
    return -acc / static_cast<double>(N);
}

}  // namespace

LOneValue l_one_odd(const Character& chi) {
    if (!chi.is_odd()) throw std::domain_error("l_one_odd: character must be odd");
    Character prim = chi.primitive_part();
    Character primc = conj_character(prim);
    BernoulliValue b1 = bernoulli(primc, 1);
    ComplexF g = gauss_sum(primc).value;

    // Euler factors for primes dividing the modulus but not the conductor
    ComplexF euler{1.0, 0.0};
    GaussRational euler_g(1);
    bool euler_exact = prim.is_quartic();
    for (auto [p, e] : num::factorize(chi.modulus())) {
        if (prim.modulus() % p == 0) continue;
        euler *= ComplexF{1.0, 0.0} - prim.value(p) / static_cast<double>(p);
        if (euler_exact)
            euler_g *= GaussRational(1) - prim.value_gauss(p) / GaussRational(Rational(p));
    }

    ComplexF value = euler * (ComplexF{0.0, -kPi} * b1.value) / g;

    ComplexF check = l_one_accelerated(chi);
    if (std::abs(value - check) > 1e-8)
        throw std::logic_error("l_one_odd: accelerated-sum cross-check failed");

    LOneValue out;
    out.value = value;
    if (primc.is_quartic() && b1.exact) {
        out.has_exact = true;
        out.pi_coeff = -euler_g * b1.g;
        out.gauss_div = primc;
    }
    return out;
}

ComplexF l2_sum(const Character& chi, bool parallel) {
    long N = chi.modulus();
    long K = (1000000 + N - 1) / N;
    long M = K * N;
    std::vector<ComplexF> vals(static_cast<size_t>(N));
    for (long a = 0; a < N; ++a)
        vals[static_cast<size_t>(a)] = chi.exponent(a) < 0 ? ComplexF{0.0, 0.0} : chi.value(a);

    long double re = 0.0L, im = 0.0L;
    if (parallel) {
#if defined(_OPENMP)
#pragma omp parallel reduction(+ : re, im)
        {
            num::Kahan kr, ki;
#pragma omp for schedule(static)
            for (long m = 1; m <= M; ++m) {
                const ComplexF& v = vals[static_cast<size_t>(m % N)];
                if (v.real() == 0.0 && v.imag() == 0.0) continue;
                long double w = 1.0L / (static_cast<long double>(m) * static_cast<long double>(m));
                kr.add(v.real() * w);
                ki.add(v.imag() * w);
            }
            re += kr.s;
            im += ki.s;
        }
#else
        parallel = false;
#endif
    }
    if (!parallel) {
        num::Kahan kr, ki;
        for (long m = 1; m <= M; ++m) {
            const ComplexF& v = vals[static_cast<size_t>(m % N)];
            if (v.real() == 0.0 && v.imag() == 0.0) continue;
            long double w = 1.0L / (static_cast<long double>(m) * static_cast<long double>(m));
            kr.add(v.real() * w);
            ki.add(v.imag() * w);
        }
        re = kr.s;
        im = ki.s;
    }

    // exact tail: sum_{m>M} chi(m)/m^2 = (1/N^2) sum_a chi(a) psi'(K + a/N)
    ComplexF tail{0.0, 0.0};
    for (long a = 1; a <= N; ++a) {
        if (chi.exponent(a) < 0 && N > 1) continue;
        double t = num::trigamma(static_cast<double>(K) + static_cast<double>(a) / N);
        tail += (N == 1 ? ComplexF{1.0, 0.0} : vals[static_cast<size_t>(a % N)]) * t;
    }
    tail /= static_cast<double>(N) * static_cast<double>(N);
    return ComplexF{static_cast<double>(re), static_cast<double>(im)} + tail;
}

ComplexF l_prime_minus1(const Character& chi) {
    if (!chi.is_odd() || !chi.is_primitive())
        throw std::domain_error("l_prime_minus1: need odd primitive character");

    struct Key {
        long n;
        int idx;
        bool operator<(const Key& o) const { return n != o.n ? n < o.n : idx < o.idx; }
    };
    static std::map<Key, ComplexF> cache;
    static std::mutex mtx;
    Key key{chi.modulus(), 0};
    {
        auto chars = enumerate_characters(chi.modulus());
        for (size_t i = 0; i < chars.size(); ++i)
            if (chars[i] == chi) key.idx = static_cast<int>(i);
    }
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    long N = chi.modulus();
    ComplexF g = gauss_sum(chi).value;
    ComplexF l2 = l2_sum(conj_character(chi), true);
    ComplexF val = static_cast<double>(N) * g / (ComplexF{0.0, 4.0 * kPi}) * l2;

    std::lock_guard<std::mutex> lk(mtx);
    cache[key] = val;
    return val;
}

ComplexF l_series_numeric(double s, const Character& chi) {
    long N = chi.modulus();
    ComplexF acc{0.0, 0.0};
    for (long a = 1; a <= N; ++a) {
        if (N > 1 && chi.exponent(a) < 0) continue;
        double z = num::hurwitz_zeta(s, static_cast<double>(a) / N);
        acc += (N == 1 ? ComplexF{1.0, 0.0} : chi.value(a)) * z;
    }
    return std::pow(static_cast<double>(N), -s) * acc;
}

ComplexF l_series_numeric_ds(double s, const Character& chi) {
    long N = chi.modulus();
    ComplexF acc{0.0, 0.0}, dacc{0.0, 0.0};
    for (long a = 1; a <= N; ++a) {
        if (N > 1 && chi.exponent(a) < 0) continue;
        ComplexF cv = (N == 1 ? ComplexF{1.0, 0.0} : chi.value(a));
        acc += cv * num::hurwitz_zeta(s, static_cast<double>(a) / N);
        dacc += cv * num::hurwitz_zeta_ds(s, static_cast<double>(a) / N);
    }
    double Ns = std::pow(static_cast<double>(N), -s);
    return Ns * (dacc - std::log(static_cast<double>(N)) * acc);
}

ComplexF LLimit::exact_eval() const {
    ComplexF v = const_coeff.to_complex();
    if (lprime_psi) v += lprime_coeff.to_complex() * l_prime_minus1(*lprime_psi);
    if (!pi_coeff.is_zero()) {
        ComplexF g{1.0, 0.0};
        if (gauss_div && gauss_div->modulus() > 1) g = gauss_sum(*gauss_div).value;
        v += pi_coeff.to_complex() * ComplexF{0.0, kPi} / g;
    }
    return v;
}

LLimit i_limit(int k, const Character& chi, const Character& psi, long n) {
    if (k < 2) throw std::invalid_argument("i_limit: k must be >= 2");
    if (n < 1) throw std::invalid_argument("i_limit: n must be >= 1");
    int parity = (chi.is_odd() ? 1 : 0) ^ (psi.is_odd() ? 1 : 0);
    if (parity != (k % 2)) throw std::domain_error("i_limit: parity violation");

    LLimit out;
    double inv_n = 1.0 / static_cast<double>(n);
    BernoulliValue lneg = l_value_negative(2 - k, psi);

    if (!chi.is_principal()) {
        bool lneg_zero = lneg.exact ? lneg.g.is_zero() : std::abs(lneg.value) < 1e-14;
        if (lneg_zero) {
            out.kind = LLimit::Kind::finite;
            out.value = {0.0, 0.0};
            if (lneg.exact) {
                out.has_exact = true;
                out.const_coeff = GaussRational(0);
            }
            return out;
        }
        out.kind = LLimit::Kind::finite;
        if (chi.is_odd()) {
            LOneValue lv = l_one_odd(chi);
            out.value = inv_n * lv.value * lneg.value;
            if (lv.has_exact && lneg.exact) {
                out.has_exact = true;
                out.pi_coeff = lv.pi_coeff * lneg.g / GaussRational(Rational(n));
                out.gauss_div = lv.gauss_div;
            }
        } else {
            out.value = inv_n * l_one_digamma(chi) * lneg.value;
        }
        return out;
    }

    // principal chi = 1_M: finite iff L(2-k, psi) = 0
    bool lneg_zero = lneg.exact ? lneg.g.is_zero() : std::abs(lneg.value) < 1e-14;
    if (!lneg_zero) {
        out.kind = LLimit::Kind::divergent;
        out.value = {0.0, 0.0};
        return out;
    }
    long M = chi.modulus();
    Rational phi_fac(1);
    for (auto [p, e] : num::factorize(M)) phi_fac *= Rational(p - 1, p);

    Character psi_f = psi.primitive_part();
    if (k == 3) {
        // L'(-1, psi) through Euler factors of the imprimitive lift
        ComplexF lift{1.0, 0.0};
        GaussRational lift_g(1);
        bool lift_exact = psi_f.is_quartic();
        for (auto [p, e] : num::factorize(psi.modulus())) {
            if (psi_f.modulus() % p == 0) continue;
            lift *= ComplexF{1.0, 0.0} - psi_f.value(p) * static_cast<double>(p);
            if (lift_exact)
                lift_g *= GaussRational(1) - psi_f.value_gauss(p) * GaussRational(Rational(p));
        }
        ComplexF lp = l_prime_minus1(psi_f);
        out.kind = LLimit::Kind::finite;
        out.value = inv_n * to_double(phi_fac) * lift * lp;
        if (lift_exact) {
            out.has_exact = true;
            out.lprime_coeff = GaussRational(phi_fac) * lift_g / GaussRational(Rational(n));
            out.lprime_psi = psi_f;
        }
        return out;
    }

    // general k: numeric derivative of L(s, psi) at 2-k
    ComplexF lp = l_series_numeric_ds(static_cast<double>(2 - k), psi);
    out.kind = LLimit::Kind::finite;
    out.value = inv_n * to_double(phi_fac) * lp;
    return out;
}

}  // namespace dpt
