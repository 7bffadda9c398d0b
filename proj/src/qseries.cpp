#include "dpt/qseries.hpp"

#include <sstream>

namespace dpt {

namespace {

template <class T>
std::string print_series(const Series<T>& s, int max_terms) {
    std::ostringstream out;
    int printed = 0;
    for (int k = 0; k <= s.order && printed < max_terms; ++k) {
        if (s.c[k] == T(0)) continue;
        if (printed > 0) out << " + ";
        out << "(" << to_string(s.c[k]) << ")";
        if (k == 1) out << "*" << var_name(s.var);
        if (k > 1) out << "*" << var_name(s.var) << "^" << k;
        ++printed;
    }
    if (printed == 0) out << "0";
    out << " + O(" << var_name(s.var) << "^" << s.order + 1 << ")";
    return out.str();
}

}  // namespace

std::string to_string(const Series<Rational>& s, int max_terms) { return print_series(s, max_terms); }
std::string to_string(const Series<GaussRational>& s, int max_terms) { return print_series(s, max_terms); }

}  // namespace dpt
