#include "ybalg/ybsystem.hpp"

#include "ybalg/ansatz.hpp"
#include "ybalg/error.hpp"

namespace ybalg {

std::array<Scalar, 4> wxz_residuals(const WXZSystem& s) {
    return {residual_norm(yb_commutator(s.w, s.w, s.w)), residual_norm(yb_commutator(s.z, s.z, s.z)),
            residual_norm(yb_commutator(s.w, s.x, s.x)), residual_norm(yb_commutator(s.x, s.x, s.z))};
}

WXZSystem thm3_system(const Algebra& a, const Scalar& lambda, const Scalar& mu) {
    if (auto report = validate(a); !report.ok())
        throw InvalidInput("thm3_system: algebra fails " + report.violations.front().identity);
    return {ansatz_operator(a, {lambda, Scalar(1), Scalar(1)}), ansatz_operator(a, {Scalar(1), Scalar(1), Scalar(1)}),
            ansatz_operator(a, {Scalar(1), mu, Scalar(1)}), lambda, mu};
}

}  // namespace ybalg
