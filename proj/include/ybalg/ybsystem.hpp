#pragma once

#include "ybalg/algebra.hpp"
#include "ybalg/tensorop.hpp"

#include <array>
#include <optional>

namespace ybalg {

/// Operators W, X, Z with [W,W,W] = [Z,Z,Z] = [W,X,X] = [X,X,Z] = 0.
struct WXZSystem {
    Op2 w;
    Op2 x;
    Op2 z;
    /// Set when built by thm3_system.
    std::optional<Scalar> lambda;
    std::optional<Scalar> mu;
};

/// Max-abs entries of [W,W,W], [Z,Z,Z], [W,X,X], [X,X,Z] in that order.
/// Throws DimensionMismatch if the operators live on different dimensions.
std::array<Scalar, 4> wxz_residuals(const WXZSystem& s);

/// W = lambda 1(x)ab + ab(x)1 - b(x)a, Z = 1(x)ab + mu ab(x)1 - b(x)a,
/// X = 1(x)ab + ab(x)1 - b(x)a. Throws InvalidInput for an invalid algebra.
WXZSystem thm3_system(const Algebra& a, const Scalar& lambda, const Scalar& mu);

}  // namespace ybalg
