#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dpt/catalog.hpp"
#include "dpt/local_model.hpp"
#include "dpt/qseries.hpp"

namespace dpt {

// Laurent polynomial in the equivariant parameter z, exact coefficients.
struct ZLaurent {
    int lo = 0;
    std::vector<Rational> c;  // c[i] sits at z^{lo + i}

    ZLaurent() = default;
    static ZLaurent monomial(const Rational& v, int k);

    Rational coeff(int k) const;
    void add_term(int k, const Rational& v);
    bool is_zero() const;
    void trim();
    int degree_low() const;   // lowest exponent with nonzero coefficient (0 if zero)
    int degree_high() const;
};

ZLaurent operator+(const ZLaurent& a, const ZLaurent& b);
ZLaurent operator-(const ZLaurent& a, const ZLaurent& b);
ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
ZLaurent operator*(const Rational& s, const ZLaurent& a);
bool operator==(const ZLaurent& a, const ZLaurent& b);
ZLaurent z_shift(const ZLaurent& a, int k);  // multiply by z^k
std::string to_string(const ZLaurent& a);

// Element of C[h]/(h^4) with ZLaurent coefficients; basis 1, h, h^2, h^3.
struct XClass {
    std::array<ZLaurent, 4> comp;

    bool is_zero() const;
};

XClass operator+(const XClass& a, const XClass& b);
XClass operator-(const XClass& a, const XClass& b);
XClass operator*(const XClass& a, const XClass& b);
XClass operator*(const Rational& s, const XClass& a);
XClass operator*(const ZLaurent& s, const XClass& a);
bool operator==(const XClass& a, const XClass& b);
std::string to_string(const XClass& a);

XClass x_one();
XClass x_linear(const Rational& alpha, long nu);      // alpha h + nu z
XClass x_linear_inv(const Rational& alpha, long nu);  // inverse, nu != 0
// prod_{nu=1..count} (alpha h + nu z), and the product of the inverses
XClass x_pochhammer(const Rational& alpha, int count);
XClass x_pochhammer_inv(const Rational& alpha, int count);

// Element of the six-dimensional ring with basis 1, E, H, E^2, H^2, T where
// E H = 0, E * E^2 = H * H^2 = T, mixed cubics vanish and degree > 3 is cut.
struct YClass {
    std::array<ZLaurent, 6> comp;

    bool is_zero() const;
};

YClass operator+(const YClass& a, const YClass& b);
YClass operator-(const YClass& a, const YClass& b);
YClass operator*(const YClass& a, const YClass& b);
YClass operator*(const Rational& s, const YClass& a);
YClass operator*(const ZLaurent& s, const YClass& a);
bool operator==(const YClass& a, const YClass& b);
std::string to_string(const YClass& a);

YClass y_one();
YClass y_linear(const Rational& a, const Rational& b, long nu);      // a E + b H + nu z
YClass y_linear_inv(const Rational& a, const Rational& b, long nu);  // inverse, nu != 0
YClass y_pochhammer(const Rational& a, const Rational& b, int count);
YClass y_pochhammer_inv(const Rational& a, const Rational& b, int count);
// prod_{nu=0..count-1} (a E + b H - nu z): the reciprocal factors that a
// negative-index rising product turns into
YClass y_reciprocal_factors(const Rational& a, const Rational& b, int count);

// h -> H - E on components, cutting the image cubic to zero.
YClass push_to_y(const XClass& a);

// Hypergeometric lattice coefficients on the small-resolution side, defined by
// the order-four ladder
//   (h+(m+1)z)^4 I_{m+1} = (kappa (h+mz)^2 + kappa z (h+mz) + lambda z^2) I_m
//                          + mu I_{m-1}.
XClass ix_coeff(TransitionCase d, int m);

// Closed product form, available for the cases with hypergeometric f.
XClass ix_product_form(TransitionCase d, int m);

// Coefficient at lattice point m ell + n gamma on the smoothing side, built
// from ix_coeff by the factor-ratio formula.
YClass iy_coeff(TransitionCase d, int m, int n);

struct PFReport {
    TransitionCase d;
    int range;
    bool ok;
    std::vector<std::string> failures;
};

// Residuals of the three quantized operators over the lattice window
// 0 <= m, n <= range.
PFReport pf_verify(TransitionCase d, int range);

// One-pointed and two-pointed invariant generating series, small-resolution
// side; the variable is the curve-class counting parameter.
struct GWClosedX {
    QSeries pt;      // lambda Q
    QSeries h2h2;    // deg (kappa - 2 lambda) Q
    QSeries ptpt;    // ((lambda^2 + mu) / 2 deg) Q^2
};

GWClosedX gw_x_closed(TransitionCase d, int order);

// Series graded by the gamma-degree; each part expands in the ell-class
// parameter P.
struct GradedSeries {
    std::map<int, QSeries> parts;

    QSeries part(int gamma_deg, int order) const;
};

struct GWClosedY {
    GradedSeries pt;
    GradedSeries h2h2;
    GradedSeries ptpt;
    GradedSeries h2e2;
    GradedSeries eee;
};

GWClosedY gw_y_closed(TransitionCase d, int order);

// gamma-degree graded difference between the smoothing-side series and the
// substitution image of the small-resolution series (curve class -> P^{gamma+ell}).
struct GWDifferences {
    GradedSeries pt;
    GradedSeries h2h2;
    GradedSeries ptpt;
};

GWDifferences gw_differences(TransitionCase d, int order);

// The two-point difference coefficient -mu (1+v) + (lambda + kappa v) y + v y^2
// with v replaced by the boundary-regular ratio; needs mu != 0.  The constant
// term of the result vanishes identically.
QSeries regularized_limit_check(TransitionCase d, int order);

}  // namespace dpt
