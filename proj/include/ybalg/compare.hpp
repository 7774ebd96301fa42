#pragma once

// Comparison of the twisted one-parameter operator with the two-dimensional
// Okado/Perk braid matrix (c, s, gamma parameters specialised to 1).

#include "ybalg/tensorop.hpp"

#include <string>
#include <vector>

namespace ybalg {

/// [[q²x-1,0,0,0],[0,q²-1,q(x-1),0],[0,q(x-1),(q²-1)x,0],[0,0,0,q²x-1]].
Op2 okado_rhat(const Scalar& q, const Scalar& x);

/// tau composed with the prop1 operator on k[X]/(X²-sigma).
Op2 twisted_prop1_rhat(const Scalar& q, const Scalar& sigma, const Scalar& x);

enum class Verdict { identical, proportional, differ };
std::string to_string(Verdict v);

struct CompareEntry {
    Scalar x;
    Matrix okado;
    Matrix twisted;
    Matrix difference;  // okado - twisted
    Verdict verdict;
    Scalar ratio;       // twisted = ratio * okado when proportional (1 when identical)
};

struct CompareReport {
    Scalar q;
    Scalar sigma;
    std::vector<CompareEntry> entries;
};

/// Evaluates both families at q = 1, sigma = 0 for every x and records the verdict.
CompareReport compare_q1(const std::vector<Scalar>& xs);

/// Same comparison at arbitrary q (sigma = 0).
CompareReport compare_at(const Scalar& q, const std::vector<Scalar>& xs);

}  // namespace ybalg
