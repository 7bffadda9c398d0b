#pragma once

#include <array>
#include <string>
#include <vector>

#include "dpt/rational.hpp"

namespace dpt {

enum class TransitionCase { D1, D2, D3, D4, D5, D6I, D6II, D7, D8 };

constexpr std::array<TransitionCase, 9> kAllCases = {
    TransitionCase::D1, TransitionCase::D2,  TransitionCase::D3,
    TransitionCase::D4, TransitionCase::D5,  TransitionCase::D6I,
    TransitionCase::D6II, TransitionCase::D7, TransitionCase::D8};

const char* case_name(TransitionCase d);
TransitionCase case_from_name(const std::string& name);

// a + b*sqrt(disc); disc = 1 encodes a plain rational (with b = 0).
struct AlgebraicPoint {
    Rational a;
    Rational b;
    int disc = 1;

    bool is_rational() const { return disc == 1 || b == 0; }
    double approx() const;
};

struct TransitionPoint {
    bool is_cusp = false;
    long a = 0, c = 1;            // cusp a/c in lowest terms
    std::string elliptic_label;   // set when is_cusp is false
};

struct CaseData {
    TransitionCase tag;
    int degree;                    // anticanonical degree of the del Pezzo surface
    long kappa, lambda, mu;
    int base_change_degree;        // n_d
    std::vector<AlgebraicPoint> sing_points;  // roots of u_d(x) = 1 + kappa x - mu x^2
    TransitionPoint transition;
    int h11, h21;                  // Hodge numbers of the smoothed side
    bool partial_support;          // D7: series machinery only, no (kappa,lambda,mu)
};

const CaseData& case_data(TransitionCase d);

struct Klm {
    long kappa, lambda, mu;
};

// (kappa, lambda, mu); throws for D7.
Klm case_constants(TransitionCase d);

// 2*(12 - deg) - (2 + 2 h11 - 2 h21), asserted against the stored table value.
int euler_defect(TransitionCase d);

// Cusp class or elliptic marker; throws for D7.
TransitionPoint transition_point(TransitionCase d);

}  // namespace dpt
