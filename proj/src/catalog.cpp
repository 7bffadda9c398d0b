#include "dpt/catalog.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace dpt {

double AlgebraicPoint::approx() const {
    return to_double(a) + to_double(b) * std::sqrt(static_cast<double>(disc));
}

const char* case_name(TransitionCase d) {
    switch (d) {
        case TransitionCase::D1: return "1";
        case TransitionCase::D2: return "2";
        case TransitionCase::D3: return "3";
        case TransitionCase::D4: return "4";
        case TransitionCase::D5: return "5";
        case TransitionCase::D6I: return "6I";
        case TransitionCase::D6II: return "6II";
        case TransitionCase::D7: return "7";
        case TransitionCase::D8: return "8";
    }
    return "?";
}

TransitionCase case_from_name(const std::string& name) {
    static const std::map<std::string, TransitionCase> m = {
        {"1", TransitionCase::D1},   {"2", TransitionCase::D2},
        {"3", TransitionCase::D3},   {"4", TransitionCase::D4},
        {"5", TransitionCase::D5},   {"6I", TransitionCase::D6I},
        {"6i", TransitionCase::D6I}, {"6II", TransitionCase::D6II},
        {"6ii", TransitionCase::D6II}, {"7", TransitionCase::D7},
        {"8", TransitionCase::D8}};
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("unknown case '" + name + "'");
    return it->second;
}

namespace {

AlgebraicPoint rat_point(long num, long den) { return {rat(num, den), Rational(0), 1}; }

std::vector<CaseData> build_table() {
    std::vector<CaseData> t;

    auto add = [&](TransitionCase tag, int degree, long k, long l, long m, int nd,
                   std::vector<AlgebraicPoint> sing, TransitionPoint tp, int h11, int h21,
                   bool partial) {
        t.push_back({tag, degree, k, l, m, nd, std::move(sing), std::move(tp), h11, h21, partial});
    };

    auto cusp = [](long a, long c) { return TransitionPoint{true, a, c, ""}; };
    auto ell = [](const char* lbl) { return TransitionPoint{false, 0, 1, lbl}; };

    add(TransitionCase::D1, 1, 432, 60, 0, 6, {rat_point(-1, 432)}, ell("[w6]"), 1, 21, false);
    add(TransitionCase::D2, 2, 64, 12, 0, 4, {rat_point(-1, 64)}, ell("[(1+i)/2]"), 1, 10, false);
    add(TransitionCase::D3, 3, 27, 6, 0, 3, {rat_point(-1, 27)}, ell("[(1+w6)/3]"), 1, 5, false);
    add(TransitionCase::D4, 4, 16, 4, 0, 2, {rat_point(-1, 16)}, cusp(1, 2), 1, 2, false);
    add(TransitionCase::D5, 5, 11, 3, 1, 2,
        {{rat(11, 2), rat(5, 2), 5}, {rat(11, 2), rat(-5, 2), 5}}, cusp(2, 5), 1, 0, false);
    add(TransitionCase::D6I, 6, 7, 2, 8, 2, {rat_point(1, 1), rat_point(-1, 8)}, cusp(1, 3), 2, 0,
        false);
    add(TransitionCase::D6II, 6, 10, 3, -9, 2, {rat_point(-1, 1), rat_point(-1, 9)}, cusp(1, 2), 3,
        0, false);
    add(TransitionCase::D7, 7, 0, 0, 0, 2, {}, TransitionPoint{}, 2, 0, true);
    add(TransitionCase::D8, 8, 0, 0, 16, 2, {rat_point(1, 4), rat_point(-1, 4)}, cusp(1, 4), 1, 0,
        false);

    return t;
}

int table_defect(TransitionCase d) {
    switch (d) {
        case TransitionCase::D1: return 60;
        case TransitionCase::D2: return 36;
        case TransitionCase::D3: return 24;
        case TransitionCase::D4: return 16;
        case TransitionCase::D5: return 10;
        case TransitionCase::D6I: return 6;
        case TransitionCase::D6II: return 4;
        case TransitionCase::D7: return 4;
        case TransitionCase::D8: return 4;
    }
    return 0;
}

}  // namespace

const CaseData& case_data(TransitionCase d) {
    static const std::vector<CaseData> table = build_table();
    for (const CaseData& cd : table)
        if (cd.tag == d) return cd;
    throw std::logic_error("case_data: missing row");
}

Klm case_constants(TransitionCase d) {
    const CaseData& cd = case_data(d);
    if (cd.partial_support)
        throw std::domain_error("case_constants: no single coefficient triple for case 7");
    return {cd.kappa, cd.lambda, cd.mu};
}

int euler_defect(TransitionCase d) {
    const CaseData& cd = case_data(d);
    int computed = 2 * (12 - cd.degree) - (2 + 2 * cd.h11 - 2 * cd.h21);
    if (computed != table_defect(d)) throw std::logic_error("euler_defect: table mismatch");
    return computed;
}

TransitionPoint transition_point(TransitionCase d) {
    const CaseData& cd = case_data(d);
    if (cd.partial_support) throw std::domain_error("transition_point: case 7 unsupported");
    return cd.transition;
}

}  // namespace dpt
