#include "dpt/local_model.hpp"

#include <stdexcept>

namespace dpt {

namespace {

Rational rq(long n) { return Rational(n); }

// Coefficient ladder for the normalized solution:
//   (m+1)^2 f_{m+1} + (kappa m (m+1) + lambda) f_m - mu m^2 f_{m-1} = 0,
// seeded by f_0 = 1.
std::vector<Rational> f_coeffs(const Klm& k, int order) {
    std::vector<Rational> f(static_cast<size_t>(order) + 1, Rational(0));
    f[0] = 1;
    for (int m = 0; m < order; ++m) {
        Rational acc = (rq(k.kappa) * rq(m) * rq(m + 1) + rq(k.lambda)) * f[m];
        if (m >= 1) acc -= rq(k.mu) * rq(m) * rq(m) * f[m - 1];
        f[m + 1] = -acc / (rq(m + 1) * rq(m + 1));
    }
    return f;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// r p'(r) (1+4r) - 4 e r p(r), the effect of r d/dr across a factor
// (1+4r)^{-e}; the exponent goes up by one.
std::vector<Rational> theta_step(const std::vector<Rational>& p, const Rational& e) {
    std::vector<Rational> r(p.size() + 1, Rational(0));
    for (size_t j = 1; j < p.size(); ++j) {
        Rational der = rq(static_cast<long>(j)) * p[j];
        r[j] += der;
        r[j + 1] += rq(4) * der;
    }
    for (size_t j = 0; j < p.size(); ++j) r[j + 1] -= rq(4) * e * p[j];
    return r;
}

// (1+4r)^a as a series in r, for half-integer a given as a rational.
QSeries binom_pow(const Rational& a, int order) {
    QSeries s(Var::x, order);
    s.c[0] = 1;
    Rational term(1);
    for (int j = 1; j <= order; ++j) {
        term = term * (a - rq(j - 1)) / rq(j) * rq(4);
        s.c[static_cast<size_t>(j)] = term;
    }
    return s;
}

}  // namespace

QSeries f_series(TransitionCase d, int order) {
    Klm k = case_constants(d);
    return QSeries(Var::P, f_coeffs(k, order));
}

QSeries g_series(TransitionCase d, int order) {
    QSeries f = f_series(d, order);
    QSeries g(Var::P, order);
    for (int m = 1; m <= order; ++m) g.c[static_cast<size_t>(m)] = f.c[static_cast<size_t>(m)] / rq(m);
    return g;
}

QSeries u_poly(TransitionCase d, int order) {
    Klm k = case_constants(d);
    QSeries u(Var::P, order);
    u.c[0] = 1;
    if (order >= 1) u.c[1] = k.kappa;
    if (order >= 2) u.c[2] = -k.mu;
    return u;
}

QSeries mirror_Q(TransitionCase d, int order) {
    QSeries e = series_exp(g_series(d, order));
    QSeries q(Var::P, order);
    for (int m = 1; m <= order; ++m) q.c[static_cast<size_t>(m)] = e.c[static_cast<size_t>(m - 1)];
    return q;
}

QSeries extremal_series(TransitionCase d, int order) {
    QSeries f = f_series(d, order);
    return u_poly(d, order) * f * f * f;
}

MirrorData mirror_data(TransitionCase d, int order) {
    MirrorData md;
    md.d = d;
    md.order = order;
    md.f = f_series(d, order);
    md.g = g_series(d, order);
    md.u = u_poly(d, order);
    md.q_of_p = mirror_Q(d, order);
    md.extremal = md.u * md.f * md.f * md.f;
    md.v = theta(md.f) / md.f;
    return md;
}

std::optional<int> hypergeom_check(TransitionCase d, int order) {
    bool base = d == TransitionCase::D1 || d == TransitionCase::D2 || d == TransitionCase::D3 ||
                d == TransitionCase::D4;
    if (!base && d != TransitionCase::D8)
        throw std::domain_error("hypergeom_check: no closed form for this case");
    QSeries f = f_series(d, order);
    QSeries h(Var::P, order);
    if (d == TransitionCase::D8) {
        // substitution image of the degree-four solution at -P^2, which turns
        // the argument -16 P into +16 P^2
        Rational term(1);
        h.c[0] = 1;
        for (int m = 1; 2 * m <= order; ++m) {
            Rational a = rat(2 * m - 1, 2 * m);
            term = term * a * a * rq(16);
            h.c[static_cast<size_t>(2 * m)] = term;
        }
    } else {
        Klm k = case_constants(d);
        int n = case_data(d).base_change_degree;
        // (1/n)_m (1-1/n)_m / (m!)^2 (-kappa)^m
        Rational term(1);
        h.c[0] = 1;
        for (int m = 1; m <= order; ++m) {
            Rational up = (rat(1, n) + rq(m - 1)) * (rq(1) - rat(1, n) + rq(m - 1));
            term = term * up / (rq(m) * rq(m)) * rq(-k.kappa);
            h.c[static_cast<size_t>(m)] = term;
        }
    }
    for (int m = 0; m <= order; ++m)
        if (!(f.c[static_cast<size_t>(m)] == h.c[static_cast<size_t>(m)])) return m;
    return std::nullopt;
}

QSeries ode_residual(TransitionCase d, const QSeries& f) {
    Klm k = case_constants(d);
    int n = f.order;
    QSeries u = u_poly(d, n);
    QSeries b(Var::P, n);  // kappa P - 2 mu P^2
    if (n >= 1) b.c[1] = k.kappa;
    if (n >= 2) b.c[2] = -2 * k.mu;
    QSeries c(Var::P, n);  // lambda P - mu P^2
    if (n >= 1) c.c[1] = k.lambda;
    if (n >= 2) c.c[2] = -k.mu;
    return u * theta(theta(f)) + b * theta(f) + c * f;
}

RegularSolution f_reg_series(TransitionCase d, int order) {
    Klm k = case_constants(d);
    if (k.mu == 0) throw std::domain_error("f_reg_series: needs mu != 0");
    // mu (j-1)^2 c_j = (kappa (j-1)(j-2) + lambda) c_{j-1} + (j-2)^2 c_{j-2}
    std::vector<Rational> c(static_cast<size_t>(order) + 2, Rational(0));
    c[1] = 1;
    for (int j = 2; j <= order + 1; ++j) {
        Rational acc = (rq(k.kappa) * rq(j - 1) * rq(j - 2) + rq(k.lambda)) * c[j - 1];
        acc += rq(j - 2) * rq(j - 2) * c[j - 2];
        c[static_cast<size_t>(j)] = acc / (rq(k.mu) * rq(j - 1) * rq(j - 1));
    }
    RegularSolution rs;
    rs.d = d;
    rs.order = order;
    rs.f_reg = QSeries(Var::y, order);
    for (int j = 1; j <= order; ++j) rs.f_reg.c[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
    // with f_reg = y F, theta f_reg / f_reg = 1 + theta F / F
    QSeries F(Var::y, order);
    for (int j = 0; j <= order; ++j) F.c[static_cast<size_t>(j)] = c[static_cast<size_t>(j + 1)];
    QSeries ratio = theta(F) / F;
    rs.v_reg = QSeries(Var::y, order);
    rs.v_reg.c[0] = -1;
    for (int j = 1; j <= order; ++j) rs.v_reg.c[static_cast<size_t>(j)] = -ratio.c[static_cast<size_t>(j)];
    return rs;
}

QSeries ode_residual_y(TransitionCase d, const QSeries& h) {
    Klm k = case_constants(d);
    int n = h.order;
    QSeries a(Var::y, n);  // y^2 + kappa y - mu
    a.c[0] = -k.mu;
    if (n >= 1) a.c[1] = k.kappa;
    if (n >= 2) a.c[2] = 1;
    QSeries b(Var::y, n);  // kappa y - 2 mu
    b.c[0] = -2 * k.mu;
    if (n >= 1) b.c[1] = k.kappa;
    QSeries c(Var::y, n);  // lambda y - mu
    c.c[0] = -k.mu;
    if (n >= 1) c.c[1] = k.lambda;
    return a * theta(theta(h)) - b * theta(h) + c * h;
}

std::pair<Rational, Rational> indicial_exponents(TransitionCase d) {
    Klm k = case_constants(d);
    if (k.mu != 0) return {Rational(1), Rational(1)};
    int n = case_data(d).base_change_degree;
    return {rat(1, n), Rational(1) - rat(1, n)};
}

F7Data f7_series(int order_y, int order_r) {
    if (order_y < 1) throw std::invalid_argument("f7_series: need at least one y term");
    F7Data data;
    data.order_y = order_y;
    data.order_r = order_r;
    data.p.push_back({Rational(1)});
    for (int k = 1; k < order_y; ++k) {
        const std::vector<Rational>& p = data.p.back();
        Rational e = rat(4 * k - 3, 2);
        std::vector<Rational> q1 = theta_step(p, e);
        std::vector<Rational> q2 = theta_step(q1, e + 1);
        // k^2 p (1+4r)^2 + 3k q1 (1+4r) + 2 q2, everything over (1+4r)^{e+2}
        std::vector<Rational> one4{Rational(1), Rational(4)};
        std::vector<Rational> t0 = poly_mul(poly_mul(p, one4), one4);
        std::vector<Rational> t1 = poly_mul(q1, one4);
        size_t len = std::max({t0.size(), t1.size(), q2.size()});
        std::vector<Rational> next(len, Rational(0));
        Rational k2 = rq(k) * rq(k);
        for (size_t j = 0; j < len; ++j) {
            Rational acc(0);
            if (j < t0.size()) acc += k2 * t0[j];
            if (j < t1.size()) acc += rq(3 * k) * t1[j];
            if (j < q2.size()) acc += rq(2) * q2[j];
            next[j] = -acc / k2;
        }
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        data.p.push_back(std::move(next));
    }
    for (int k = 1; k <= order_y; ++k) {
        const std::vector<Rational>& p = data.p[static_cast<size_t>(k - 1)];
        QSeries pw = binom_pow(-rat(4 * k - 3, 2), order_r);
        QSeries ps(Var::x, order_r);
        for (size_t j = 0; j < p.size() && j <= static_cast<size_t>(order_r); ++j) ps.c[j] = p[j];
        QSeries bk = ps * pw;
        data.b.push_back(bk);
        QSeries gk(Var::x, order_r);
        for (int j = 0; j <= order_r; ++j) gk.c[static_cast<size_t>(j)] = bk.c[static_cast<size_t>(j)] / rq(k);
        data.g_terms.push_back(gk);
    }
    return data;
}

std::optional<int> f7_ladder_check(const F7Data& data) {
    // independent of the polynomial ladder: apply r d/dr directly to the
    // expanded coefficients and test k^2 b_{k+1} + (k^2 + 3k theta + 2 theta^2) b_k = 0
    for (int k = 1; k < data.order_y; ++k) {
        const QSeries& bk = data.b[static_cast<size_t>(k - 1)];
        const QSeries& bn = data.b[static_cast<size_t>(k)];
        Rational k2 = rq(k) * rq(k);
        QSeries resid = k2 * bn + k2 * bk + rq(3 * k) * theta(bk) + rq(2) * theta(theta(bk));
        if (!resid.is_zero()) return k;
    }
    return std::nullopt;
}

}  // namespace dpt
