#pragma once

#include "ybalg/algebra.hpp"
#include "ybalg/tensorop.hpp"

namespace ybalg {

/// Coefficients of the operator a(x)b -> alpha 1(x)ab + beta ab(x)1 - gamma b(x)a.
struct Coeffs {
    Scalar alpha;
    Scalar beta;
    Scalar gamma;

    friend Coeffs operator*(const Scalar& c, const Coeffs& t) { return {c * t.alpha, c * t.beta, c * t.gamma}; }
    friend bool operator==(const Coeffs&, const Coeffs&) = default;
};

Op2 ansatz_operator(const Algebra& a, const Coeffs& k);

/// Same shape with the opposite product: alpha 1(x)ba + beta ba(x)1 - gamma b(x)a.
/// The inverse formulas are of this form.
Op2 opposite_ansatz_operator(const Algebra& a, const Coeffs& k);

/// Coalgebra analogue: c(x)d -> alpha eps(c) Delta(d) + beta eps(d) Delta(c) - gamma d(x)c.
Op2 ansatz_operator(const Coalgebra& c, const Coeffs& k);

/// Labels of V(x)V in lexicographic order, e.g. "1⊗x".
std::vector<std::string> tensor_labels(const std::vector<std::string>& labels);

}  // namespace ybalg
