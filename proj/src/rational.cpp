#include "dpt/rational.hpp"

namespace dpt {

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad input '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const GaussRational& g) {
    if (g.im == 0) return to_string(g.re);
    std::string s = to_string(g.re);
    if (g.im > 0) s += "+";
    s += to_string(g.im) + "*i";
    return s;
}

}  // namespace dpt
