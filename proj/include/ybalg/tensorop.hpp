#pragma once

// Dense operators on V(x)V and V(x)V(x)V.
//
// Column convention: mat(i, j) is the coefficient of basis element i in the
// image of basis element j. Product bases are lexicographic, so e_a (x) e_b
// has index a*n + b and e_a (x) e_b (x) e_c has index (a*n + b)*n + c.

#include "ybalg/matrix.hpp"
#include "ybalg/scalar.hpp"

#include <cstddef>
#include <functional>

namespace ybalg {

/// Linear operator on V(x)V, dim V = n.
class Op2 {
public:
    Op2(std::size_t n, Matrix mat);

    std::size_t n() const { return n_; }
    const Matrix& mat() const { return mat_; }

    friend bool operator==(const Op2& a, const Op2& b) { return a.n_ == b.n_ && a.mat_ == b.mat_; }

private:
    std::size_t n_;
    Matrix mat_;
};

/// Linear operator on V(x)V(x)V.
class Op3 {
public:
    Op3(std::size_t n, Matrix mat);

    std::size_t n() const { return n_; }
    const Matrix& mat() const { return mat_; }

    friend bool operator==(const Op3& a, const Op3& b) { return a.n_ == b.n_ && a.mat_ == b.mat_; }

private:
    std::size_t n_;
    Matrix mat_;
};

Op2 operator*(const Op2& a, const Op2& b);
Op3 operator*(const Op3& a, const Op3& b);
Op2 operator-(const Op2& a, const Op2& b);
Op3 operator-(const Op3& a, const Op3& b);
Op2 operator*(const Scalar& s, const Op2& a);

enum class Legs { l12, l13, l23 };

Op2 identity_op2(std::size_t n);

/// The flip tau(a (x) b) = b (x) a.
Op2 flip(std::size_t n);

/// R_12 = R (x) I, R_23 = I (x) R, R_13 acting on factors 1 and 3.
Op3 embed_leg(const Op2& r, Legs legs);

/// [R,S,T] = R_12 S_13 T_23 - T_23 S_13 R_12.
Op3 yb_commutator(const Op2& r, const Op2& s, const Op2& t);

/// tau o R.
Op2 twist_compose(const Op2& r);

/// Max-abs entry; zero test is exact in rational mode.
Scalar residual_norm(const Op3& m);

using ColoredOperator = std::function<Op2(const Scalar& u, const Scalar& v)>;
using SpectralOperator = std::function<Op2(const Scalar& x)>;
using CompositionMap = std::function<Scalar(const Scalar& x, const Scalar& z)>;

/// A one-parameter operator together with the map placed on the middle factor.
struct OneParOperator {
    SpectralOperator op;
    CompositionMap phi;
};

/// Both sides of a Yang-Baxter type identity on V(x)V(x)V.
struct IdentitySides {
    Op3 lhs;
    Op3 rhs;
    Scalar residual() const { return residual_norm(lhs - rhs); }
};

/// R12(u,v) R13(u,w) R23(v,w) versus R23(v,w) R13(u,w) R12(u,v).
IdentitySides colored_qybe_sides(const ColoredOperator& f, const Scalar& u, const Scalar& v, const Scalar& w);
Scalar colored_qybe_residual(const ColoredOperator& f, const Scalar& u, const Scalar& v, const Scalar& w);

/// R12(x) R13(phi(x,z)) R23(z) versus R23(z) R13(phi(x,z)) R12(x).
IdentitySides onepar_qybe_sides(const OneParOperator& f, const Scalar& x, const Scalar& z);
Scalar onepar_qybe_residual(const OneParOperator& f, const Scalar& x, const Scalar& z);

/// Rh12(x) Rh23(xy) Rh12(y) versus Rh23(y) Rh12(xy) Rh23(x), where Rh is
/// already in braid form (for example twist_compose of a QYBE solution).
IdentitySides braid_sides(const SpectralOperator& rhat, const Scalar& x, const Scalar& y);
Scalar braid_residual(const SpectralOperator& rhat, const Scalar& x, const Scalar& y);

}  // namespace ybalg
