#pragma once

// One-parameter operator families. Each kind carries its own composition
// map phi, so a family cannot be checked against the wrong one.

#include "ybalg/algebra.hpp"
#include "ybalg/ansatz.hpp"
#include "ybalg/tensorop.hpp"

#include <string>
#include <variant>

namespace ybalg {

enum class OneParKind { prop1, prop1_coalgebra, prop2, remark_x };

std::string to_string(OneParKind k);
OneParKind parse_onepar_kind(std::string_view name);

/// alpha = x-1, beta = q(x-1), gamma = x-q.
Coeffs prop1_coeffs(const Scalar& q, const Scalar& x);
/// alpha = x, beta = gamma = 1.
Coeffs prop2_coeffs(const Scalar& x);
/// alpha = gamma = 1, beta = x.
Coeffs remark_x_coeffs(const Scalar& x);

Scalar phi_product(const Scalar& x, const Scalar& z);  // xz
Scalar phi_second(const Scalar& x, const Scalar& z);   // z
Scalar phi_first(const Scalar& x, const Scalar& z);    // x

Op2 prop1_op(const Algebra& a, const Scalar& q, const Scalar& x);
/// Throws SingularColour when x = q or qx = 1.
Op2 prop1_inv(const Algebra& a, const Scalar& q, const Scalar& x);
Op2 prop1_coalgebra_op(const Coalgebra& c, const Scalar& q, const Scalar& x);
Op2 prop2_op(const Algebra& a, const Scalar& x);
/// Throws ZeroParameter when x = 0.
Op2 prop2_inv(const Algebra& a, const Scalar& x);
Op2 remark_x_op(const Algebra& a, const Scalar& x);

class OneParFamily {
public:
    OneParFamily(OneParKind kind, Algebra a, Scalar q = 1);
    OneParFamily(Coalgebra c, Scalar q);  // prop1_coalgebra

    OneParKind kind() const { return kind_; }
    const Scalar& q() const { return q_; }
    std::size_t dim() const;
    const std::vector<std::string>& labels() const;

    Coeffs coefficients(const Scalar& x) const;
    Op2 operator()(const Scalar& x) const;
    Scalar phi(const Scalar& x, const Scalar& z) const;

    /// Bundles evaluation with this family's composition map.
    OneParOperator as_operator() const;

private:
    OneParKind kind_;
    std::variant<Algebra, Coalgebra> space_;
    Scalar q_;
};

}  // namespace ybalg
