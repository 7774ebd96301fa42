#include "ybalg/tensorop.hpp"

#include "ybalg/error.hpp"

#include <string>

namespace ybalg {

Op2::Op2(std::size_t n, Matrix mat) : n_(n), mat_(std::move(mat)) {
    if (mat_.rows() != n * n || mat_.cols() != n * n)
        throw DimensionMismatch("Op2 on dimension " + std::to_string(n) + " needs a " + std::to_string(n * n) +
                                "x" + std::to_string(n * n) + " matrix");
}

Op3::Op3(std::size_t n, Matrix mat) : n_(n), mat_(std::move(mat)) {
    if (mat_.rows() != n * n * n || mat_.cols() != n * n * n)
        throw DimensionMismatch("Op3 on dimension " + std::to_string(n) + " needs a " + std::to_string(n * n * n) +
                                " square matrix");
}

namespace {

template <typename Op>
void require_same_base(const Op& a, const Op& b) {
    if (a.n() != b.n())
        throw DimensionMismatch("operators on different base dimensions " + std::to_string(a.n()) + " and " +
                                std::to_string(b.n()));
}

}  // namespace

Op2 operator*(const Op2& a, const Op2& b) {
    require_same_base(a, b);
    return Op2(a.n(), a.mat() * b.mat());
}

Op3 operator*(const Op3& a, const Op3& b) {
    require_same_base(a, b);
    return Op3(a.n(), a.mat() * b.mat());
}

Op2 operator-(const Op2& a, const Op2& b) {
    require_same_base(a, b);
    return Op2(a.n(), a.mat() - b.mat());
}

Op3 operator-(const Op3& a, const Op3& b) {
    require_same_base(a, b);
    return Op3(a.n(), a.mat() - b.mat());
}

Op2 operator*(const Scalar& s, const Op2& a) { return Op2(a.n(), s * a.mat()); }

Op2 identity_op2(std::size_t n) { return Op2(n, Matrix::identity(n * n)); }

Op2 flip(std::size_t n) {
    Matrix m(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m(b * n + a, a * n + b) = 1;
    return Op2(n, std::move(m));
}

Op3 embed_leg(const Op2& r, Legs legs) {
    const std::size_t n = r.n();
    const Matrix& m = r.mat();
    Matrix out(n * n * n, n * n * n);
    auto idx = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)          // input e_a (x) e_b (x) e_c
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) {  // R acts on the chosen pair
                        switch (legs) {
                            case Legs::l12:
                                out(idx(x, y, c), idx(a, b, c)) = m(x * n + y, a * n + b);
                                break;
                            case Legs::l13:
                                out(idx(x, b, y), idx(a, b, c)) = m(x * n + y, a * n + c);
                                break;
                            case Legs::l23:
                                out(idx(a, x, y), idx(a, b, c)) = m(x * n + y, b * n + c);
                                break;
                        }
                    }
    return Op3(n, std::move(out));
}

Op3 yb_commutator(const Op2& r, const Op2& s, const Op2& t) {
    require_same_base(r, s);
    require_same_base(s, t);
    Op3 r12 = embed_leg(r, Legs::l12);
    Op3 s13 = embed_leg(s, Legs::l13);
    Op3 t23 = embed_leg(t, Legs::l23);
    return r12 * s13 * t23 - t23 * s13 * r12;
}

Op2 twist_compose(const Op2& r) { return flip(r.n()) * r; }

Scalar residual_norm(const Op3& m) { return m.mat().max_abs(); }

IdentitySides colored_qybe_sides(const ColoredOperator& f, const Scalar& u, const Scalar& v, const Scalar& w) {
    Op3 r12 = embed_leg(f(u, v), Legs::l12);
    Op3 r13 = embed_leg(f(u, w), Legs::l13);
    Op3 r23 = embed_leg(f(v, w), Legs::l23);
    return {r12 * r13 * r23, r23 * r13 * r12};
}

Scalar colored_qybe_residual(const ColoredOperator& f, const Scalar& u, const Scalar& v, const Scalar& w) {
    return colored_qybe_sides(f, u, v, w).residual();
}

IdentitySides onepar_qybe_sides(const OneParOperator& f, const Scalar& x, const Scalar& z) {
    Scalar middle = f.phi(x, z);
    Op3 r12 = embed_leg(f.op(x), Legs::l12);
    Op3 r13 = embed_leg(f.op(middle), Legs::l13);
    Op3 r23 = embed_leg(f.op(z), Legs::l23);
    return {r12 * r13 * r23, r23 * r13 * r12};
}

Scalar onepar_qybe_residual(const OneParOperator& f, const Scalar& x, const Scalar& z) {
    return onepar_qybe_sides(f, x, z).residual();
}

IdentitySides braid_sides(const SpectralOperator& rhat, const Scalar& x, const Scalar& y) {
    Scalar xy = x * y;
    Op2 rx = rhat(x), ry = rhat(y), rxy = rhat(xy);
    Op3 lhs = embed_leg(rx, Legs::l12) * embed_leg(rxy, Legs::l23) * embed_leg(ry, Legs::l12);
    Op3 rhs = embed_leg(ry, Legs::l23) * embed_leg(rxy, Legs::l12) * embed_leg(rx, Legs::l23);
    return {std::move(lhs), std::move(rhs)};
}

Scalar braid_residual(const SpectralOperator& rhat, const Scalar& x, const Scalar& y) {
    return braid_sides(rhat, x, y).residual();
}

}  // namespace ybalg
