#include "ybalg/funceq.hpp"

#include "ybalg/colored.hpp"
#include "ybalg/error.hpp"
#include "ybalg/onepar.hpp"

namespace ybalg {

namespace {

std::array<Scalar, 3> as_array(const Coeffs& k) { return {k.alpha, k.beta, k.gamma}; }

}  // namespace

SystemResidual eval_colored_system(const ColoredCoeffFn& t, const Scalar& u, const Scalar& v, const Scalar& w) {
    return system_lhs(as_array(t(u, v)), as_array(t(u, w)), as_array(t(v, w)));
}

SystemResidual eval_onepar_system(const OneParCoeffFn& t, const CompositionMap& phi, const Scalar& x,
                                  const Scalar& z) {
    return system_lhs(as_array(t(x)), as_array(t(phi(x, z))), as_array(t(z)));
}

Scalar max_abs(const SystemResidual& r) {
    Scalar best;
    bool any_float = false;
    for (const auto& x : r) {
        any_float = any_float || !x.is_exact();
        if (best < abs(x)) best = abs(x);
    }
    return any_float ? best.in(Field::float64) : best;
}

CatalogueEntry catalogue(std::string_view kind, const CatalogueParams& params) {
    const auto [p, q, s] = params;
    CatalogueEntry e;
    e.kind = std::string(kind);
    if (kind == "thm1") {
        e.colored = [p, q](const Scalar& u, const Scalar& v) { return thm1_coeffs(p, q, u, v); };
    } else if (kind == "thm2") {
        e.colored = [p, q, s](const Scalar& u, const Scalar& v) { return thm2_coeffs(p, q, s, u, v); };
    } else if (kind == "remark2") {
        e.colored = [p, q, s](const Scalar& u, const Scalar& v) { return remark2_coeffs(p, q, s, u, v); };
    } else if (kind == "prop1") {
        e.is_onepar = true;
        e.onepar = [q](const Scalar& x) { return prop1_coeffs(q, x); };
        e.phi = phi_product;
    } else if (kind == "prop2") {
        e.is_onepar = true;
        e.onepar = prop2_coeffs;
        e.phi = phi_second;
    } else if (kind == "remark_x") {
        e.is_onepar = true;
        e.onepar = remark_x_coeffs;
        e.phi = phi_first;
    } else {
        throw UnknownKind("unknown catalogue kind '" + std::string(kind) + "'");
    }
    return e;
}

}  // namespace ybalg
