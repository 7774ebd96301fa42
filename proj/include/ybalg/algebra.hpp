#pragma once

// Finite-dimensional unital associative algebras and coalgebras given by
// structure constants.
//
// Orientation shared by every module:
//   Algebra:   c(i,j,k) = coefficient of e_k in e_i * e_j
//   Coalgebra: d(i,j,k) = coefficient of e_j (x) e_k in Delta(e_i)
// Basis index 0 is the unit for the polynomial quotients built here.

#include "ybalg/matrix.hpp"
#include "ybalg/scalar.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ybalg {

class Algebra {
public:
    /// `structconst` is n^3 entries in (i,j,k) row-major order; `unit` has n entries.
    /// Only shapes are checked here; see validate() for the algebra axioms.
    Algebra(std::size_t dim, std::vector<Scalar> structconst, Vector unit, std::vector<std::string> labels = {});

    std::size_t dim() const { return dim_; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return sc_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<Scalar>& structconst() const { return sc_; }
    const Vector& unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Algebra in(Field f) const;

private:
    std::size_t dim_;
    std::vector<Scalar> sc_;
    Vector unit_;
    std::vector<std::string> labels_;
};

class Coalgebra {
public:
    Coalgebra(std::size_t dim, std::vector<Scalar> comult, Vector counit, std::vector<std::string> labels = {});

    std::size_t dim() const { return dim_; }
    const Scalar& d(std::size_t i, std::size_t j, std::size_t k) const { return comult_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<Scalar>& comult() const { return comult_; }
    const Vector& counit() const { return counit_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Coalgebra in(Field f) const;

private:
    std::size_t dim_;
    std::vector<Scalar> comult_;
    Vector counit_;
    std::vector<std::string> labels_;
};

struct Violation {
    std::string identity;  // "associativity", "left-unit", "coassociativity", ...
    std::vector<std::size_t> indices;
    Scalar residual;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// k[X]/(f) in the power basis {1, x, ..., x^{n-1}}. `coeffs` holds the
/// coefficients of f from the constant term up, leading 1 included, so
/// X^2 - sigma is {-sigma, 0, 1}. Throws InvalidInput for degree 0 or a
/// non-monic f.
Algebra poly_quotient(std::span<const Scalar> coeffs);

/// k[X]/(X^2 - sigma).
Algebra quadratic_algebra(const Scalar& sigma);

/// k[X]/(X^3 - eps X - rho).
Algebra cubic_algebra(const Scalar& eps, const Scalar& rho);

ValidationReport validate(const Algebra& a);
ValidationReport validate(const Coalgebra& c);

Vector multiply(const Algebra& a, std::span<const Scalar> x, std::span<const Scalar> y);

/// Dual coalgebra on A*: d(i,j,k) = c(j,k,i), counit(e_i*) = unit[i].
/// Throws InvalidInput when A fails validation.
Coalgebra dual_coalgebra(const Algebra& a);

/// Coordinates of the i-th basis vector.
Vector basis_vector(std::size_t n, std::size_t i);

/// "1", "x", "x²", ... as used in matrix labels.
std::string power_label(std::size_t k);

}  // namespace ybalg
