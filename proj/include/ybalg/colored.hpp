#pragma once

// Two-parameter (coloured) operator families built from an algebra or a
// coalgebra, with their inverses and labelled matrix forms.

#include "ybalg/algebra.hpp"
#include "ybalg/ansatz.hpp"
#include "ybalg/tensorop.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ybalg {

enum class ColoredKind { thm1, thm2, remark2, coalgebra_thm1 };

std::string to_string(ColoredKind k);
ColoredKind parse_colored_kind(std::string_view name);

/// alpha = p(u-v), beta = q(u-v), gamma = pu - qv.
Coeffs thm1_coeffs(const Scalar& p, const Scalar& q, const Scalar& u, const Scalar& v);
/// alpha = p^u q^v, beta = gamma = p^u s^v.
Coeffs thm2_coeffs(const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& u, const Scalar& v);
/// alpha = gamma = p^u q^v, beta = s^u q^v.
Coeffs remark2_coeffs(const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& u, const Scalar& v);

Op2 thm1_op(const Algebra& a, const Scalar& p, const Scalar& q, const Scalar& u, const Scalar& v);

/// Throws SingularColour when pu = qv or qu = pv.
Op2 thm1_inv(const Algebra& a, const Scalar& p, const Scalar& q, const Scalar& u, const Scalar& v);

/// Exact mode needs integer colours (NonIntegerExponent otherwise).
Op2 thm2_op(const Algebra& a, const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& u, const Scalar& v);

/// Throws ZeroParameter when any of p, q, s is zero.
Op2 thm2_inv(const Algebra& a, const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& u, const Scalar& v);

Op2 remark2_op(const Algebra& a, const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& u, const Scalar& v);

/// p(u-v) eps(c)Delta(d) + q(u-v) eps(d)Delta(c) - (pu-qv) d(x)c. Throws
/// InvalidInput for a coalgebra that fails validation.
Op2 coalgebra_colored_op(const Coalgebra& c, const Scalar& p, const Scalar& q, const Scalar& u, const Scalar& v);

struct ColoredParams {
    Scalar p = 1;
    Scalar q = 1;
    Scalar s = 1;  // thm2 / remark2 only
};

/// A coloured family bound to its algebra (or coalgebra) and parameters.
/// Immutable; evaluation is a pure function of the colours.
class ColoredFamily {
public:
    ColoredFamily(ColoredKind kind, Algebra a, ColoredParams params);
    ColoredFamily(Coalgebra c, ColoredParams params);  // coalgebra_thm1

    ColoredKind kind() const { return kind_; }
    const ColoredParams& params() const { return params_; }
    std::size_t dim() const;
    const std::vector<std::string>& labels() const;

    Coeffs coefficients(const Scalar& u, const Scalar& v) const;
    Op2 operator()(const Scalar& u, const Scalar& v) const;

private:
    ColoredKind kind_;
    std::variant<Algebra, Coalgebra> space_;
    ColoredParams params_;
};

struct MatrixForm {
    Matrix matrix;
    std::vector<std::string> basis;
    /// Abbreviations used by the dimension-3 closed forms (lambda, t, t', w, w').
    std::vector<std::pair<std::string, Scalar>> shorthand;
};

MatrixForm matrix_form(const ColoredFamily& f, const Scalar& u, const Scalar& v);

}  // namespace ybalg
