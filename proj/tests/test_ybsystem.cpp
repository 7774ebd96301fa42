#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "ybalg/error.hpp"
#include "ybalg/onepar.hpp"
#include "ybalg/ybsystem.hpp"

using namespace ybalg;
using oracle::q;

namespace {

bool all_zero(const std::array<Scalar, 4>& r) {
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("identity operators form a system") {
    const Op2 id = identity_op2(2);
    CHECK(all_zero(wxz_residuals({id, id, id, {}, {}})));
}

TEST_CASE("construction on both quadratic algebras") {
    for (int sigma : {0, 1})
        for (const auto& [l, m] : {std::pair{Scalar(1), Scalar(1)}, {Scalar(3), Scalar(5)}, {Scalar(-2), q(1, 2)}}) {
            const WXZSystem s = thm3_system(quadratic_algebra(sigma), l, m);
            CHECK(all_zero(wxz_residuals(s)));
            CHECK(s.lambda == l);
            CHECK(s.mu == m);
        }
    CHECK(all_zero(wxz_residuals(thm3_system(cubic_algebra(2, 5), 3, 5))));
}

TEST_CASE("reference matrices") {
    const WXZSystem s1 = thm3_system(quadratic_algebra(1), 3, 5);
    CHECK(s1.w.mat() == Matrix{{3, 0, 0, 4}, {0, 3, 2, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
    const WXZSystem s0 = thm3_system(quadratic_algebra(0), 3, 5);
    CHECK(s0.z.mat() == Matrix{{5, 0, 0, 0}, {0, 1, 0, 0}, {0, 4, 5, 0}, {0, 0, 0, -1}});
    CHECK(s0.x.mat() == Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
    oracle::Rng rng(6);
    for (int i = 0; i < 6; ++i) {
        const Scalar sigma = rng.rational(), l = rng.rational(), m = rng.rational();
        const WXZSystem s = thm3_system(quadratic_algebra(sigma), l, m);
        CHECK(s.w.mat() == oracle::w_matrix(sigma, l));
        CHECK(s.z.mat() == oracle::z_matrix(sigma, m));
        CHECK(s.x.mat() == oracle::x_matrix(sigma));
    }
}

TEST_CASE("relation to the one-parameter families") {
    const Algebra b = cubic_algebra(1, q(2, 3));
    const Scalar l = q(7, 2), m = q(-4, 5);
    const WXZSystem s = thm3_system(b, l, m);
    CHECK(s.w == prop2_op(b, l));
    CHECK(s.z == ansatz_operator(b, {1, m, 1}));
    CHECK(s.z == remark_x_op(b, m));
    CHECK(residual_norm(yb_commutator(s.w, s.w, s.w)).is_zero());
    CHECK(residual_norm(yb_commutator(s.z, s.z, s.z)).is_zero());
    CHECK(s.x == thm3_system(b, 1, 1).w);
    CHECK(s.x == thm3_system(b, 1, 1).z);
}

TEST_CASE("replacing X by the flip breaks the mixed equation") {
    const WXZSystem s = thm3_system(quadratic_algebra(1), 3, 5);
    const WXZSystem t{s.w, flip(2), s.z, {}, {}};
    const auto r = wxz_residuals(t);
    CHECK(r[0].is_zero());
    CHECK(r[1].is_zero());
    CHECK_FALSE(r[2].is_zero());
}

TEST_CASE("residuals scale by the cube of a common factor") {
    const Op2 id = identity_op2(2);
    const WXZSystem s{thm3_system(quadratic_algebra(1), 3, 5).w, flip(2), id, {}, {}};
    const auto r = wxz_residuals(s);
    for (const Scalar c : {Scalar(2), Scalar(-3), q(1, 5)}) {
        const auto rc = wxz_residuals({c * s.w, c * s.x, c * s.z, {}, {}});
        for (std::size_t k = 0; k < 4; ++k) CHECK(rc[k] == abs(c * c * c) * r[k]);
    }
}

TEST_CASE("dimension and validity checks") {
    CHECK_THROWS_AS(wxz_residuals({identity_op2(2), identity_op2(3), identity_op2(2), {}, {}}), DimensionMismatch);
    const Algebra bad(2, std::vector<Scalar>(8, Scalar(1)), Vector{1, 0});
    CHECK_THROWS_AS(thm3_system(bad, 1, 1), InvalidInput);
}
