#pragma once

// The functional-equation systems satisfied by the coefficients of the
// ansatz a(x)b -> alpha 1(x)ab + beta ab(x)1 - gamma b(x)a, and a catalogue
// of known solution families.

#include "ybalg/ansatz.hpp"
#include "ybalg/tensorop.hpp"

#include <array>
#include <functional>
#include <string>
#include <string_view>

namespace ybalg {

using ColoredCoeffFn = std::function<Coeffs(const Scalar& u, const Scalar& v)>;
using OneParCoeffFn = std::function<Coeffs(const Scalar& x)>;

using SystemResidual = std::array<Scalar, 5>;

/// The five equation left-hand sides given the coefficient triples
/// (alpha, beta, gamma) on legs 12, 13 and 23. Shared by the exact checker
/// and the double-precision search objective.
template <typename T>
std::array<T, 5> system_lhs(const std::array<T, 3>& first, const std::array<T, 3>& middle,
                            const std::array<T, 3>& last) {
    const auto& [a1, b1, g1] = first;
    const auto& [a2, b2, g2] = middle;
    const auto& [a3, b3, g3] = last;
    return {
        (b3 - g3) * (a1 * b2 - a2 * b1) + (a1 - g1) * (a3 * b2 - a2 * b3),
        b3 * (b1 - g1) * (a2 - g2) + (a3 - g3) * (b2 * g1 - b1 * g2),
        a1 * b3 * (a2 - g2) + a3 * g2 * (g1 - a1) + g3 * (a1 * g2 - a2 * g1),
        a1 * b3 * (b2 - g2) + b3 * g2 * (g1 - b1) + g3 * (b1 * g2 - b2 * g1),
        a1 * (a3 - g3) * (b2 - g2) + (b1 - g1) * (a2 * g3 - a3 * g2),
    };
}

/// Left-hand sides of the five coloured equations at colours (u, v, w).
/// Coefficients are evaluated at (u,v), (u,w) and (v,w).
SystemResidual eval_colored_system(const ColoredCoeffFn& t, const Scalar& u, const Scalar& v, const Scalar& w);

/// Left-hand sides of the five one-parameter equations at (x, z), with the
/// middle argument phi(x, z).
SystemResidual eval_onepar_system(const OneParCoeffFn& t, const CompositionMap& phi, const Scalar& x,
                                  const Scalar& z);

/// Max |entry|.
Scalar max_abs(const SystemResidual& r);

struct CatalogueParams {
    Scalar p = 1;
    Scalar q = 1;
    Scalar s = 1;
};

/// A named solution family. Coloured kinds fill `colored`; one-parameter
/// kinds fill `onepar` and `phi`.
struct CatalogueEntry {
    std::string kind;
    bool is_onepar = false;
    ColoredCoeffFn colored;
    OneParCoeffFn onepar;
    CompositionMap phi;
};

/// Kinds: thm1 (p, q), thm2 (p, q, s), remark2 (p, q, s), prop1 (q), prop2,
/// remark_x. Throws UnknownKind otherwise.
CatalogueEntry catalogue(std::string_view kind, const CatalogueParams& params = {});

}  // namespace ybalg
