#include "dpt/modular.hpp"

#include <stdexcept>

#include "dpt/local_model.hpp"

namespace dpt {

namespace {

Rational rq(long n) { return Rational(n); }

// divisor-power sums sigma_k(s) for s = 1..order
std::vector<Rational> sigma_table(int k, int order) {
    std::vector<Rational> sig(static_cast<size_t>(order) + 1, Rational(0));
    for (long d = 1; d <= order; ++d) {
        Rational dk(1);
        for (int i = 0; i < k; ++i) dk = dk * rq(d);
        for (long s = d; s <= order; s += d) sig[static_cast<size_t>(s)] += dk;
    }
    return sig;
}

}  // namespace

QExpansion classic_eisenstein(ClassicSeries which, int order) {
    if (order < 1) throw std::invalid_argument("classic_eisenstein: order must be positive");
    QExpansion e;
    e.series = QSeries(Var::q, order);
    e.series.c[0] = 1;
    int k = which == ClassicSeries::E2 ? 1 : which == ClassicSeries::E4 ? 3 : 5;
    long scale = which == ClassicSeries::E2 ? -24 : which == ClassicSeries::E4 ? 240 : -504;
    std::vector<Rational> sig = sigma_table(k, order);
    for (int s = 1; s <= order; ++s) e.series.c[static_cast<size_t>(s)] = rq(scale) * sig[static_cast<size_t>(s)];
    e.weight = rq(k + 1);
    e.note = which == ClassicSeries::E2 ? "quasi-modular" : "level 1";
    return e;
}

QExpansion theta_series(ThetaKind which, int order) {
    if (order < 1) throw std::invalid_argument("theta_series: order must be positive");
    QExpansion t;
    t.series = QSeries(Var::q, order);
    t.series.c[0] = 1;
    t.weight = 1;
    if (which == ThetaKind::theta3 || which == ThetaKind::theta4) {
        Character chi = which == ThetaKind::theta3 ? chi3_2() : chi4_2();
        long scale = which == ThetaKind::theta3 ? 6 : 4;
        t.note = which == ThetaKind::theta3 ? "hexagonal lattice" : "square lattice";
        for (long d = 1; d <= order; ++d) {
            GaussRational v = chi.value_gauss(d);
            if (v.is_zero()) continue;
            for (long s = d; s <= order; s += d)
                t.series.c[static_cast<size_t>(s)] += rq(scale) * v.re;
        }
        return t;
    }
    // weights (3-i)/2 chi + (3+i)/2 conj(chi) with the quartic character mod 5
    Character chi = chi5_2();
    GaussRational c1(rat(3, 2), rat(-1, 2));
    t.note = "level 5";
    for (long d = 1; d <= order; ++d) {
        GaussRational v = chi.value_gauss(d);
        if (v.is_zero()) continue;
        GaussRational w = c1 * v + c1.conj() * v.conj();
        if (!(w.im == 0)) throw std::logic_error("theta_series: f5 weight not real");
        for (long s = d; s <= order; s += d) t.series.c[static_cast<size_t>(s)] += w.re;
    }
    return t;
}

QSeries eta_unit(long delta, int order) {
    if (delta < 1) throw std::invalid_argument("eta_unit: scale must be positive");
    QSeries u(Var::q, order);
    u.c[0] = 1;
    QSeries acc = u;
    // sparse pentagonal expansion of prod (1 - x^m) at x = q^delta
    for (long k = 1;; ++k) {
        long e1 = delta * (k * (3 * k - 1) / 2);
        long e2 = delta * (k * (3 * k + 1) / 2);
        if (e1 > order && e2 > order) break;
        Rational sgn = (k % 2 == 1) ? Rational(-1) : Rational(1);
        if (e1 <= order) acc.c[static_cast<size_t>(e1)] += sgn;
        if (e2 <= order) acc.c[static_cast<size_t>(e2)] += sgn;
    }
    return acc;
}

QExpansion eta_quotient(const EtaQuotientSpec& spec, int order) {
    long wsum = 0;
    for (const EtaFactor& f : spec.factors) wsum += f.scale * f.exponent;
    if (wsum % 24 != 0) throw std::domain_error("eta_quotient: leading power is not integral");
    long lead = wsum / 24;
    if (lead < 0) throw std::domain_error("eta_quotient: negative leading power");
    QExpansion r;
    r.series = QSeries(Var::q, order);
    if (lead > order) return r;
    QSeries acc = QSeries::constant(Var::q, Rational(spec.sign), order);
    for (const EtaFactor& f : spec.factors) {
        QSeries u = eta_unit(f.scale, order);
        acc = acc * series_pow(u, static_cast<int>(f.exponent));
    }
    r.series = acc.shifted(static_cast<int>(lead));
    Rational wt(0);
    for (const EtaFactor& f : spec.factors) wt += rat(f.exponent, 2);
    r.weight = wt;
    return r;
}

namespace {

QSeries haupt_ratio(const QSeries& num_unit, const QSeries& den_unit, int order) {
    // both arguments are unit series; the value is -q num/den with den of the
    // form U + const q V
    return (QSeries::constant(Var::q, Rational(-1), order) * num_unit * inverse(den_unit)).shifted(1);
}

}  // namespace

QExpansion hauptmodul_P(TransitionCase d, int order) {
    QExpansion r;
    r.weight = 0;
    switch (d) {
        case TransitionCase::D1: {
            QSeries e4 = classic_eisenstein(ClassicSeries::E4, order).series;
            QSeries e6 = classic_eisenstein(ClassicSeries::E6, order).series;
            QSeries e432 = e4 * series_root(e4, 2);
            QSeries num = rat(-1, 864) * (e432 - e6);
            r.series = num * inverse(e432);
            r.note = "elliptic transition point";
            return r;
        }
        case TransitionCase::D2: {
            QSeries u1 = series_pow(eta_unit(1, order), 24);
            QSeries u2 = series_pow(eta_unit(2, order), 24);
            QSeries den = u1 + (QSeries::constant(Var::q, Rational(64), order) * u2).shifted(1);
            r.series = haupt_ratio(u2, den, order);
            return r;
        }
        case TransitionCase::D3: {
            QSeries u1 = series_pow(eta_unit(1, order), 12);
            QSeries u3 = series_pow(eta_unit(3, order), 12);
            QSeries den = u1 + (QSeries::constant(Var::q, Rational(27), order) * u3).shifted(1);
            r.series = haupt_ratio(u3, den, order);
            return r;
        }
        case TransitionCase::D4: {
            EtaQuotientSpec s{{{1, 8}, {4, 16}, {2, -24}}, -1};
            r.series = eta_quotient(s, order).series;
            return r;
        }
        case TransitionCase::D5: {
            // -q prod (1-q^m)^{5 chi^2(m)} with the quadratic residue pattern mod 5
            QSeries acc = QSeries::constant(Var::q, Rational(1), order);
            for (long m = 1; m <= order; ++m) {
                long rm = m % 5;
                if (rm == 0) continue;
                int w = (rm == 1 || rm == 4) ? 5 : -5;
                QSeries fac(Var::q, order);
                fac.c[0] = 1;
                fac.c[static_cast<size_t>(m)] = -1;
                acc = acc * series_pow(fac, w);
            }
            r.series = (Rational(-1) * acc).shifted(1);
            return r;
        }
        case TransitionCase::D6I: {
            EtaQuotientSpec s{{{1, 3}, {6, 9}, {2, -3}, {3, -9}}, -1};
            r.series = eta_quotient(s, order).series;
            return r;
        }
        case TransitionCase::D6II: {
            EtaQuotientSpec s{{{1, 4}, {6, 8}, {2, -8}, {3, -4}}, -1};
            r.series = eta_quotient(s, order).series;
            return r;
        }
        case TransitionCase::D8: {
            EtaQuotientSpec s{{{2, 4}, {8, 8}, {4, -12}}, -1};
            r.series = eta_quotient(s, order).series;
            return r;
        }
        default:
            throw std::domain_error("hauptmodul_P: unsupported case");
    }
}

QExpansion canonical_P_of_q(TransitionCase d, int order) {
    MirrorData md = mirror_data(d, order);
    QSeries uf2 = md.u * md.f * md.f;
    QExpansion r;
    r.series = QSeries(Var::q, order);
    r.weight = 0;
    if (order < 1) return r;
    r.series.c[1] = -1;
    for (int m = 2; m <= order; ++m) {
        QSeries pa = compose(uf2.truncated(m - 1), r.series.truncated(m - 1));
        Rational acc(0);
        for (int i = 1; i < m; ++i) acc += r.series.c[static_cast<size_t>(i)] * pa.coeff(m - i);
        r.series.c[static_cast<size_t>(m)] = acc / rq(m - 1);
    }
    return r;
}

QSeries log_mq_over_q(TransitionCase d, int order) {
    QSeries p = canonical_P_of_q(d, order).series;
    QSeries a = compose(extremal_series(d, order), p);
    QSeries s(Var::q, order);
    for (int m = 1; m <= order; ++m) s.c[static_cast<size_t>(m)] = a.coeff(m) / rq(m);
    return s;
}

namespace {

void check_parity(int k, const Character& chi, const Character& psi) {
    bool odd = chi.is_odd() != psi.is_odd();
    if (odd != (k % 2 == 1))
        throw std::domain_error("eisenstein expansion: character parity does not match weight");
}

}  // namespace

GQExpansion eis_general(int k, const Character& chi, const Character& psi, long n, int order) {
    if (k < 3) throw std::invalid_argument("eis_general: weight must be at least 3");
    if (n < 1) throw std::invalid_argument("eis_general: scale must be positive");
    check_parity(k, chi, psi);
    if (!chi.is_quartic() || !psi.is_quartic())
        throw std::domain_error("eis_general: character values leave the exact lane");
    GQExpansion r;
    r.series = GSeries(Var::q, order);
    r.weight = k;
    if (chi.modulus() == 1) {
        BernoulliValue lv = l_value_negative(1 - k, psi);
        if (!lv.exact) throw std::logic_error("eis_general: constant term not exact");
        r.series.c[0] = GaussRational(rat(1, 2)) * lv.g;
    }
    for (long m = 1; m * n <= order; ++m) {
        GaussRational pm = psi.value_gauss(m);
        if (pm.is_zero()) continue;
        Rational mk(1);
        for (int i = 0; i + 1 < k; ++i) mk = mk * rq(m);
        GaussRational coef = GaussRational(mk) * pm;
        for (long w = 1; m * n * w <= order; ++w) {
            GaussRational cw = chi.value_gauss(w);
            if (cw.is_zero()) continue;
            r.series.c[static_cast<size_t>(m * n * w)] += coef * cw;
        }
    }
    return r;
}

CSeries eis_general_c(int k, const Character& chi, const Character& psi, long n, int order) {
    if (k < 3) throw std::invalid_argument("eis_general_c: weight must be at least 3");
    if (n < 1) throw std::invalid_argument("eis_general_c: scale must be positive");
    check_parity(k, chi, psi);
    CSeries s(Var::q, order);
    if (chi.modulus() == 1) {
        BernoulliValue lv = l_value_negative(1 - k, psi);
        s.c[0] = 0.5 * lv.value;
    }
    for (long m = 1; m * n <= order; ++m) {
        ComplexF pm = psi.value(m);
        if (std::abs(pm) < 0.5) continue;
        double mk = 1.0;
        for (int i = 0; i + 1 < k; ++i) mk *= static_cast<double>(m);
        ComplexF coef = mk * pm;
        for (long w = 1; m * n * w <= order; ++w) {
            ComplexF cw = chi.value(w);
            if (std::abs(cw) < 0.5) continue;
            s.c[static_cast<size_t>(m * n * w)] += coef * cw;
        }
    }
    return s;
}

ComplexF EisTerm::coef() const {
    ComplexF v = pref.to_complex();
    if (has_gauss) v *= gauss_sum(gauss_char).value;
    return v;
}

EisCombo extremal_combo(TransitionCase d) {
    Character one = principal_character(1);
    EisCombo combo;
    auto term = [&](GaussRational pref, Character psi, long n) {
        EisTerm t;
        t.pref = pref;
        t.k = 3;
        t.chi = one;
        t.psi = psi;
        t.n = n;
        combo.push_back(t);
    };
    switch (d) {
        case TransitionCase::D3:
            term(GaussRational(Rational(-9)), chi3_2(), 1);
            break;
        case TransitionCase::D4:
            term(GaussRational(Rational(-4)), chi4_2(), 1);
            break;
        case TransitionCase::D5:
            term(GaussRational(Rational(-1), rat(1, 2)), chi5_2(), 1);
            term(GaussRational(Rational(-1), rat(-1, 2)), chi5_3(), 1);
            break;
        case TransitionCase::D6I:
        case TransitionCase::D6II:
            term(GaussRational(Rational(-1)), chi3_2(), 1);
            term(GaussRational(Rational(-8)), chi3_2(), 2);
            break;
        case TransitionCase::D8:
            term(GaussRational(Rational(-4)), chi4_2(), 2);
            break;
        default:
            throw std::domain_error("extremal_combo: no decomposition for this case");
    }
    return combo;
}

GSeries combo_expansion(const EisCombo& combo, int order) {
    GSeries acc(Var::q, order);
    for (const EisTerm& t : combo) {
        if (t.has_gauss)
            throw std::domain_error("combo_expansion: unresolved gauss factor, use the complex lane");
        GSeries e = eis_general(t.k, t.chi, t.psi, t.n, order).series;
        acc = acc + t.pref * e;
    }
    return acc;
}

CSeries combo_expansion_c(const EisCombo& combo, int order) {
    CSeries acc(Var::q, order);
    for (const EisTerm& t : combo) {
        CSeries e = eis_general_c(t.k, t.chi, t.psi, t.n, order);
        acc = acc + t.coef() * e;
    }
    return acc;
}

IdentityReport identity_suite(TransitionCase d, int order) {
    IdentityReport rep;
    rep.d = d;
    rep.order = order;
    QSeries p = hauptmodul_P(d, order).series;
    QSeries f = f_series(d, order);
    QSeries lhs = compose(f, p);
    QSeries target(Var::q, order);
    switch (d) {
        case TransitionCase::D1:
            lhs = lhs * lhs;
            lhs = lhs * lhs;
            target = classic_eisenstein(ClassicSeries::E4, order).series;
            break;
        case TransitionCase::D2: {
            lhs = lhs * lhs;
            QSeries e2 = classic_eisenstein(ClassicSeries::E2, order).series;
            target = Rational(2) * e2.dilated(2) - e2;
            break;
        }
        case TransitionCase::D3:
            target = theta_series(ThetaKind::theta3, order).series;
            break;
        case TransitionCase::D4:
            target = theta_series(ThetaKind::theta4, order).series;
            break;
        case TransitionCase::D5:
            target = theta_series(ThetaKind::f5, order).series;
            break;
        case TransitionCase::D6I: {
            QSeries t3 = theta_series(ThetaKind::theta3, order).series;
            target = rat(1, 3) * t3 + rat(2, 3) * t3.dilated(2);
            break;
        }
        case TransitionCase::D6II: {
            QSeries t3 = theta_series(ThetaKind::theta3, order).series;
            target = rat(1, 2) * t3 + rat(1, 2) * t3.dilated(2);
            break;
        }
        case TransitionCase::D8:
            target = theta_series(ThetaKind::theta4, order).series.dilated(2);
            break;
        default:
            throw std::domain_error("identity_suite: unsupported case");
    }
    rep.theta_ok = true;
    for (int m = 0; m <= order; ++m) {
        if (!(lhs.coeff(m) == target.coeff(m))) {
            rep.theta_ok = false;
            rep.theta_fail_order = m;
            break;
        }
    }
    bool has_combo = d == TransitionCase::D3 || d == TransitionCase::D4 || d == TransitionCase::D5 ||
                     d == TransitionCase::D6I || d == TransitionCase::D6II || d == TransitionCase::D8;
    if (has_combo) {
        rep.eis_supported = true;
        GSeries ext = to_gauss(compose(extremal_series(d, order), p));
        GSeries combo = combo_expansion(extremal_combo(d), order);
        rep.eis_ok = true;
        for (int m = 0; m <= order; ++m) {
            if (!(ext.coeff(m) == combo.coeff(m))) {
                rep.eis_ok = false;
                rep.eis_fail_order = m;
                break;
            }
        }
    }
    return rep;
}

}  // namespace dpt
