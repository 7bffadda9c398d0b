#include "dpt/gw.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dpt {

namespace {

Rational rq(long n) { return Rational(n); }

const ZLaurent kZ = ZLaurent::monomial(Rational(1), 1);

}  // namespace

ZLaurent ZLaurent::monomial(const Rational& v, int k) {
    ZLaurent z;
    z.lo = k;
    z.c.assign(1, v);
    return z;
}

Rational ZLaurent::coeff(int k) const {
    int i = k - lo;
    if (i < 0 || i >= static_cast<int>(c.size())) return Rational(0);
    return c[static_cast<size_t>(i)];
}

void ZLaurent::add_term(int k, const Rational& v) {
    if (c.empty()) {
        lo = k;
        c.assign(1, v);
        return;
    }
    if (k < lo) {
        c.insert(c.begin(), static_cast<size_t>(lo - k), Rational(0));
        lo = k;
    }
    int i = k - lo;
    if (i >= static_cast<int>(c.size())) c.resize(static_cast<size_t>(i) + 1, Rational(0));
    c[static_cast<size_t>(i)] += v;
}

bool ZLaurent::is_zero() const {
    for (const Rational& v : c)
        if (!(v == 0)) return false;
    return true;
}

void ZLaurent::trim() {
    size_t front = 0;
    while (front < c.size() && c[front] == 0) ++front;
    if (front == c.size()) {
        lo = 0;
        c.clear();
        return;
    }
    size_t back = c.size();
    while (back > front && c[back - 1] == 0) --back;
    c = std::vector<Rational>(c.begin() + front, c.begin() + back);
    lo += static_cast<int>(front);
}

int ZLaurent::degree_low() const {
    for (size_t i = 0; i < c.size(); ++i)
        if (!(c[i] == 0)) return lo + static_cast<int>(i);
    return 0;
}

int ZLaurent::degree_high() const {
    for (size_t i = c.size(); i > 0; --i)
        if (!(c[i - 1] == 0)) return lo + static_cast<int>(i) - 1;
    return 0;
}

ZLaurent operator+(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent r = a;
    for (size_t i = 0; i < b.c.size(); ++i) r.add_term(b.lo + static_cast<int>(i), b.c[i]);
    r.trim();
    return r;
}

ZLaurent operator-(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent r = a;
    for (size_t i = 0; i < b.c.size(); ++i) r.add_term(b.lo + static_cast<int>(i), -b.c[i]);
    r.trim();
    return r;
}

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent r;
    if (a.c.empty() || b.c.empty()) return r;
    r.lo = a.lo + b.lo;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

ZLaurent operator*(const Rational& s, const ZLaurent& a) {
    ZLaurent r = a;
    for (Rational& v : r.c) v = s * v;
    r.trim();
    return r;
}

bool operator==(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent d = a - b;
    return d.is_zero();
}

ZLaurent z_shift(const ZLaurent& a, int k) {
    ZLaurent r = a;
    r.lo += k;
    return r;
}

std::string to_string(const ZLaurent& a) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        int e = a.lo + static_cast<int>(i);
        if (!first) os << " + ";
        os << "(" << to_string(a.c[i]) << ")";
        if (e != 0) os << "*z^" << e;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool XClass::is_zero() const {
    for (const auto& z : comp)
        if (!z.is_zero()) return false;
    return true;
}

XClass operator+(const XClass& a, const XClass& b) {
    XClass r;
    for (int i = 0; i < 4; ++i) r.comp[i] = a.comp[i] + b.comp[i];
    return r;
}

XClass operator-(const XClass& a, const XClass& b) {
    XClass r;
    for (int i = 0; i < 4; ++i) r.comp[i] = a.comp[i] - b.comp[i];
    return r;
}

XClass operator*(const XClass& a, const XClass& b) {
    XClass r;
    for (int i = 0; i < 4; ++i) {
        if (a.comp[i].is_zero()) continue;
        for (int j = 0; i + j < 4; ++j) r.comp[i + j] = r.comp[i + j] + a.comp[i] * b.comp[j];
    }
    return r;
}

XClass operator*(const Rational& s, const XClass& a) {
    XClass r;
    for (int i = 0; i < 4; ++i) r.comp[i] = s * a.comp[i];
    return r;
}

XClass operator*(const ZLaurent& s, const XClass& a) {
    XClass r;
    for (int i = 0; i < 4; ++i) r.comp[i] = s * a.comp[i];
    return r;
}

bool operator==(const XClass& a, const XClass& b) { return (a - b).is_zero(); }

std::string to_string(const XClass& a) {
    static const char* names[4] = {"1", "h", "h^2", "h^3"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (a.comp[i].is_zero()) continue;
        if (!first) os << "  +  ";
        os << "[" << to_string(a.comp[i]) << "] " << names[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

XClass x_one() {
    XClass r;
    r.comp[0] = ZLaurent::monomial(Rational(1), 0);
    return r;
}

XClass x_linear(const Rational& alpha, long nu) {
    XClass r;
    r.comp[1] = ZLaurent::monomial(alpha, 0);
    if (nu != 0) r.comp[0] = ZLaurent::monomial(rq(nu), 1);
    return r;
}

XClass x_linear_inv(const Rational& alpha, long nu) {
    if (nu == 0) throw std::domain_error("x_linear_inv: nilpotent argument");
    XClass r;
    Rational num(1);
    for (int j = 0; j < 4; ++j) {
        num = num / rq(nu);
        r.comp[j] = ZLaurent::monomial(num, -(j + 1));
        num = num * (-alpha);
    }
    return r;
}

XClass x_pochhammer(const Rational& alpha, int count) {
    XClass r = x_one();
    for (int nu = 1; nu <= count; ++nu) r = r * x_linear(alpha, nu);
    return r;
}

XClass x_pochhammer_inv(const Rational& alpha, int count) {
    XClass r = x_one();
    for (int nu = 1; nu <= count; ++nu) r = r * x_linear_inv(alpha, nu);
    return r;
}

bool YClass::is_zero() const {
    for (const auto& z : comp)
        if (!z.is_zero()) return false;
    return true;
}

YClass operator+(const YClass& a, const YClass& b) {
    YClass r;
    for (int i = 0; i < 6; ++i) r.comp[i] = a.comp[i] + b.comp[i];
    return r;
}

YClass operator-(const YClass& a, const YClass& b) {
    YClass r;
    for (int i = 0; i < 6; ++i) r.comp[i] = a.comp[i] - b.comp[i];
    return r;
}

namespace {

// basis order: 1, E, H, E^2, H^2, T; -1 marks a vanishing product
constexpr int kYTable[6][6] = {
    {0, 1, 2, 3, 4, 5},    //
    {1, 3, -1, 5, -1, -1},  //
    {2, -1, 4, -1, 5, -1},  //
    {3, 5, -1, -1, -1, -1}, //
    {4, -1, 5, -1, -1, -1}, //
    {5, -1, -1, -1, -1, -1},
};

}  // namespace

YClass operator*(const YClass& a, const YClass& b) {
    YClass r;
    for (int i = 0; i < 6; ++i) {
        if (a.comp[i].is_zero()) continue;
        for (int j = 0; j < 6; ++j) {
            int k = kYTable[i][j];
            if (k < 0 || b.comp[j].is_zero()) continue;
            r.comp[k] = r.comp[k] + a.comp[i] * b.comp[j];
        }
    }
    return r;
}

YClass operator*(const Rational& s, const YClass& a) {
    YClass r;
    for (int i = 0; i < 6; ++i) r.comp[i] = s * a.comp[i];
    return r;
}

YClass operator*(const ZLaurent& s, const YClass& a) {
    YClass r;
    for (int i = 0; i < 6; ++i) r.comp[i] = s * a.comp[i];
    return r;
}

bool operator==(const YClass& a, const YClass& b) { return (a - b).is_zero(); }

std::string to_string(const YClass& a) {
    static const char* names[6] = {"1", "E", "H", "E^2", "H^2", "T"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 6; ++i) {
        if (a.comp[i].is_zero()) continue;
        if (!first) os << "  +  ";
        os << "[" << to_string(a.comp[i]) << "] " << names[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

YClass y_one() {
    YClass r;
    r.comp[0] = ZLaurent::monomial(Rational(1), 0);
    return r;
}

YClass y_linear(const Rational& a, const Rational& b, long nu) {
    YClass r;
    if (!(a == 0)) r.comp[1] = ZLaurent::monomial(a, 0);
    if (!(b == 0)) r.comp[2] = ZLaurent::monomial(b, 0);
    if (nu != 0) r.comp[0] = ZLaurent::monomial(rq(nu), 1);
    return r;
}

YClass y_linear_inv(const Rational& a, const Rational& b, long nu) {
    if (nu == 0) throw std::domain_error("y_linear_inv: nilpotent argument");
    // (u + nu z)^{-1} = sum_{j<=3} (-1)^j u^j (nu z)^{-j-1} for nilpotent u
    YClass u = y_linear(a, b, 0);
    YClass pw = y_one();
    YClass r;
    Rational sign(1);
    Rational den = rq(nu);
    for (int j = 0; j < 4; ++j) {
        YClass term = (sign / den) * pw;
        for (int i = 0; i < 6; ++i) r.comp[i] = r.comp[i] + z_shift(term.comp[i], -(j + 1));
        pw = pw * u;
        if (pw.is_zero()) break;
        sign = -sign;
        den = den * rq(nu);
    }
    return r;
}

YClass y_pochhammer(const Rational& a, const Rational& b, int count) {
    YClass r = y_one();
    for (int nu = 1; nu <= count; ++nu) r = r * y_linear(a, b, nu);
    return r;
}

YClass y_pochhammer_inv(const Rational& a, const Rational& b, int count) {
    YClass r = y_one();
    for (int nu = 1; nu <= count; ++nu) r = r * y_linear_inv(a, b, nu);
    return r;
}

YClass y_reciprocal_factors(const Rational& a, const Rational& b, int count) {
    YClass r = y_one();
    for (int nu = 0; nu < count; ++nu) r = r * y_linear(a, b, -nu);
    return r;
}

YClass push_to_y(const XClass& a) {
    YClass r;
    r.comp[0] = a.comp[0];
    r.comp[1] = ZLaurent() - a.comp[1];
    r.comp[2] = a.comp[1];
    r.comp[3] = a.comp[2];
    r.comp[4] = a.comp[2];
    return r;
}

namespace {

std::mutex g_ix_mutex;
std::map<TransitionCase, std::vector<XClass>>& ix_cache() {
    static std::map<TransitionCase, std::vector<XClass>> cache;
    return cache;
}

}  // namespace

XClass ix_coeff(TransitionCase d, int m) {
    if (m < 0) return XClass{};
    Klm k = case_constants(d);
    std::lock_guard<std::mutex> lock(g_ix_mutex);
    std::vector<XClass>& v = ix_cache()[d];
    if (v.empty()) v.push_back(x_one());
    while (static_cast<int>(v.size()) <= m) {
        int next = static_cast<int>(v.size());
        int prev = next - 1;
        XClass sh = x_linear(Rational(1), prev);
        XClass rec = rq(k.kappa) * (sh * sh) + rq(k.kappa) * (kZ * sh) +
                     ZLaurent::monomial(rq(k.lambda), 2) * x_one();
        XClass rhs = rec * v[static_cast<size_t>(prev)];
        if (prev >= 1) rhs = rhs + rq(k.mu) * v[static_cast<size_t>(prev - 1)];
        XClass inv = x_linear_inv(Rational(1), next);
        rhs = rhs * (inv * inv * inv * inv);
        v.push_back(rhs);
    }
    return v[static_cast<size_t>(m)];
}

XClass ix_product_form(TransitionCase d, int m) {
    if (m < 0) return XClass{};
    if (m == 0) return x_one();
    switch (d) {
        case TransitionCase::D1:
        case TransitionCase::D2:
        case TransitionCase::D3: {
            int n = case_data(d).base_change_degree;
            std::vector<int> alpha;
            if (d == TransitionCase::D1) alpha = {1, 1, 2, 3};
            else if (d == TransitionCase::D2) alpha = {1, 1, 1, 2};
            else alpha = {1, 1, 1, 1};
            XClass r = x_pochhammer(rq(n), n * m);
            r = r * x_pochhammer_inv(Rational(1), m);
            for (int a : alpha) r = r * x_pochhammer_inv(rq(a), a * m);
            return r;
        }
        case TransitionCase::D4: {
            XClass num = x_pochhammer(Rational(2), 2 * m);
            XClass r = num * num;
            XClass den = x_pochhammer_inv(Rational(1), m);
            for (int i = 0; i < 6; ++i) r = r * den;
            return r;
        }
        case TransitionCase::D8: {
            if (m % 2 == 1) return XClass{};
            XClass den = x_pochhammer_inv(rat(1, 2), m / 2);
            return den * den * den * den;
        }
        default:
            throw std::domain_error("ix_product_form: no closed product form for this case");
    }
}

YClass iy_coeff(TransitionCase d, int m, int n) {
    if (n < 0) throw std::domain_error("iy_coeff: negative second index");
    if (m < 0) return YClass{};
    YClass r = push_to_y(ix_coeff(d, m));
    r = r * y_pochhammer(Rational(-1), Rational(1), m);
    int k = n - m;
    if (k >= 0)
        r = r * y_pochhammer_inv(Rational(1), Rational(0), k);
    else
        r = r * y_reciprocal_factors(Rational(1), Rational(0), -k);
    r = r * y_pochhammer_inv(Rational(0), Rational(1), n);
    return r;
}

PFReport pf_verify(TransitionCase d, int range) {
    PFReport rep;
    rep.d = d;
    rep.range = range;
    Klm kc = case_constants(d);
    bool product = d == TransitionCase::D1 || d == TransitionCase::D2 || d == TransitionCase::D3 ||
                   d == TransitionCase::D4 || d == TransitionCase::D8;
    auto ix = [&](int m) { return product ? ix_product_form(d, m) : ix_coeff(d, m); };
    for (int m = 0; m < range; ++m) {
        XClass sh = x_linear(Rational(1), m);
        XClass lift = x_linear(Rational(1), m + 1);
        XClass lhs = lift * lift * lift * lift * ix(m + 1);
        XClass rec = rq(kc.kappa) * (sh * sh) + rq(kc.kappa) * (kZ * sh) +
                     ZLaurent::monomial(rq(kc.lambda), 2) * x_one();
        XClass rhs = rec * ix(m) + rq(kc.mu) * ix(m - 1);
        if (!(lhs == rhs)) {
            rep.failures.push_back("order-four ladder fails at m=" + std::to_string(m + 1));
        }
    }
    for (int n = 0; n <= range; ++n) {
        for (int m = 0; m < range; ++m) {
            YClass fh = y_linear(Rational(-1), Rational(1), m);
            YClass fl = y_linear(Rational(-1), Rational(1), m + 1);
            YClass lhs = fl * fl * fl * iy_coeff(d, m + 1, n);
            YClass rec = rq(kc.kappa) * (fh * fh) + rq(kc.kappa) * (kZ * fh) +
                         ZLaurent::monomial(rq(kc.lambda), 2) * y_one();
            YClass rhs = rec * y_linear(Rational(1), Rational(0), n - m) * iy_coeff(d, m, n);
            if (m >= 1) {
                YClass tail = rq(kc.mu) * fh * y_linear(Rational(1), Rational(0), n - m) *
                              y_linear(Rational(1), Rational(0), n - m + 1) * iy_coeff(d, m - 1, n);
                rhs = rhs + tail;
            }
            if (!(lhs == rhs)) {
                rep.failures.push_back("order-three ladder fails at m=" + std::to_string(m + 1) +
                                       ", n=" + std::to_string(n));
            }
        }
    }
    for (int n = 1; n <= range; ++n) {
        for (int m = 0; m <= range; ++m) {
            YClass lhs = iy_coeff(d, m, n - 1);
            YClass rhs = y_linear(Rational(1), Rational(0), n - m) *
                         y_linear(Rational(0), Rational(1), n) * iy_coeff(d, m, n);
            if (!(lhs == rhs)) {
                rep.failures.push_back("first-order ladder fails at m=" + std::to_string(m) +
                                       ", n=" + std::to_string(n));
            }
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

GWClosedX gw_x_closed(TransitionCase d, int order) {
    Klm k = case_constants(d);
    long deg = case_data(d).degree;
    GWClosedX r{QSeries(Var::x, order), QSeries(Var::x, order), QSeries(Var::x, order)};
    if (order >= 1) {
        r.pt.c[1] = k.lambda;
        r.h2h2.c[1] = rq(deg) * rq(k.kappa - 2 * k.lambda);
    }
    if (order >= 2) r.ptpt.c[2] = (rq(k.lambda) * rq(k.lambda) + rq(k.mu)) / rq(2 * deg);
    return r;
}

QSeries GradedSeries::part(int gamma_deg, int order) const {
    auto it = parts.find(gamma_deg);
    if (it == parts.end()) return QSeries(Var::P, order);
    return it->second.truncated(order);
}

GWClosedY gw_y_closed(TransitionCase d, int order) {
    Klm k = case_constants(d);
    long deg = case_data(d).degree;
    MirrorData md = mirror_data(d, order);
    GWClosedY r;
    QSeries one = QSeries::constant(Var::P, Rational(1), order);
    QSeries p = QSeries::identity(Var::P, order);
    r.pt.parts[1] = one + rq(k.lambda) * p;
    r.h2h2.parts[1] = rq(deg) * (one + rq(k.kappa - 2 * k.lambda) * p);
    Rational half_disc = Rational(rq(k.lambda) * rq(k.lambda) - rq(k.mu)) / rq(2);
    QSeries two_pt = half_disc * (p * p) + rq(k.lambda) * p + md.u * md.v;
    r.ptpt.parts[2] = rat(1, deg) * two_pt;
    r.h2e2.parts[1] = rq(-deg) * (md.u * (md.f + theta(md.f)));
    r.eee.parts[0] = rq(deg) * inverse(md.extremal);
    return r;
}

GWDifferences gw_differences(TransitionCase d, int order) {
    GWClosedX x = gw_x_closed(d, order);
    GWClosedY y = gw_y_closed(d, order);
    GWDifferences r;
    // curve-class substitution sends the k-th power of the counting variable
    // to gamma-degree k with ell-degree k
    auto lift = [&](const QSeries& s, int gamma_deg) {
        QSeries part(Var::P, order);
        if (gamma_deg <= order) part.c[static_cast<size_t>(gamma_deg)] = s.coeff(gamma_deg);
        return part;
    };
    r.pt.parts[1] = y.pt.part(1, order) - lift(x.pt.with_var(Var::P), 1);
    r.h2h2.parts[1] = y.h2h2.part(1, order) - lift(x.h2h2.with_var(Var::P), 1);
    r.ptpt.parts[2] = y.ptpt.part(2, order) - lift(x.ptpt.with_var(Var::P), 2);
    return r;
}

QSeries regularized_limit_check(TransitionCase d, int order) {
    Klm k = case_constants(d);
    if (k.mu == 0) throw std::domain_error("regularized_limit_check: needs mu != 0");
    RegularSolution rs = f_reg_series(d, order);
    QSeries one = QSeries::constant(Var::y, Rational(1), order);
    QSeries yv = QSeries::identity(Var::y, order);
    return rq(-k.mu) * (one + rs.v_reg) + (rq(k.lambda) * one + rq(k.kappa) * rs.v_reg) * yv +
           rs.v_reg * yv * yv;
}

}  // namespace dpt
