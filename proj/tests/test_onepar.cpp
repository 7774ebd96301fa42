#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "ybalg/colored.hpp"
#include "ybalg/error.hpp"
#include "ybalg/onepar.hpp"

using namespace ybalg;
using oracle::q;

namespace {

std::vector<Algebra> test_algebras() {
    return {quadratic_algebra(q(0)), quadratic_algebra(q(1)), cubic_algebra(q(2), q(5)), cubic_algebra(q(1), q(0))};
}

}  // namespace

TEST_CASE("prop1 on the quadratic algebra reproduces the reference matrix") {
    oracle::Rng rng(1);
    for (int i = 0; i < 6; ++i) {
        const Scalar sigma = rng.rational(), qq = rng.rational(), x = rng.rational();
        CHECK(prop1_op(quadratic_algebra(sigma), qq, x).mat() == oracle::onepar_quadratic_matrix(sigma, qq, x));
    }
}

TEST_CASE("prop1 at x = 1 is a multiple of the flip") {
    const Scalar qq = q(5, 3);
    CHECK(prop1_coeffs(qq, 1) == Coeffs{0, 0, 1 - qq});
    CHECK(prop1_op(cubic_algebra(q(2), q(5)), qq, 1).mat() == -(1 - qq) * oracle::flip_matrix(3));
}

TEST_CASE("every one-parameter kind solves its equation and fails with a mismatched map") {
    oracle::Rng rng(2);
    for (const Algebra& a : test_algebras())
        for (int i = 0; i < 10; ++i) {
            const Scalar qq = rng.nonzero(), x = rng.nonzero(), z = rng.nonzero();
            for (OneParKind k : {OneParKind::prop1, OneParKind::prop2, OneParKind::remark_x}) {
                const OneParFamily f(k, a, qq);
                CHECK(onepar_qybe_residual(f.as_operator(), x, z).is_zero());
            }
            const OneParFamily c(dual_coalgebra(a), qq);
            CHECK(onepar_qybe_residual(c.as_operator(), x, z).is_zero());
        }
    // Swapped maps: prop1 with z and prop2 with xz.
    const Algebra a = quadratic_algebra(q(1));
    const OneParFamily p1(OneParKind::prop1, a, q(2)), p2(OneParKind::prop2, a);
    OneParOperator p1z{[&](const Scalar& x) { return p1(x); }, phi_second};
    OneParOperator p2xz{[&](const Scalar& x) { return p2(x); }, phi_product};
    CHECK_FALSE(onepar_qybe_residual(p1z, q(3), q(5)).is_zero());
    CHECK_FALSE(onepar_qybe_residual(p2xz, q(3), q(7)).is_zero());
}

TEST_CASE("named one-parameter examples") {
    const OneParFamily p1(OneParKind::prop1, cubic_algebra(q(1), q(0)), q(2));
    CHECK(p1.phi(q(3), q(5)) == Scalar(15));
    CHECK(onepar_qybe_residual(p1.as_operator(), q(3), q(5)).is_zero());
    const OneParFamily p2(OneParKind::prop2, quadratic_algebra(q(1)));
    CHECK(p2.phi(q(3), q(7)) == Scalar(7));
    CHECK(onepar_qybe_residual(p2.as_operator(), q(3), q(7)).is_zero());
    const OneParFamily rx(OneParKind::remark_x, quadratic_algebra(q(0)));
    CHECK(rx.phi(q(4), q(9)) == Scalar(4));
    CHECK(onepar_qybe_residual(rx.as_operator(), q(4), q(9)).is_zero());
    const OneParFamily c(dual_coalgebra(quadratic_algebra(q(1))), q(2));
    CHECK(onepar_qybe_residual(c.as_operator(), q(3), q(5)).is_zero());
}

TEST_CASE("x = 1 gives the constant operator for prop2 and remark_x") {
    for (const Algebra& a : test_algebras()) {
        const Op2 constant = ansatz_operator(a, {1, 1, 1});
        CHECK(prop2_op(a, 1) == constant);
        CHECK(remark_x_op(a, 1) == constant);
    }
}

TEST_CASE("remark_x matrix at x = 3") {
    const Scalar sigma = q(2, 7);
    const Algebra a = quadratic_algebra(sigma);
    CHECK(remark_x_op(a, 3).mat() == oracle::ansatz_matrix(a, {1, 3, 1}));
    // Column x(x)x: (1 + 3) sigma on 1(x)1 and -1 on x(x)x.
    CHECK(remark_x_op(a, 3).mat()(0, 3) == 4 * sigma);
}

TEST_CASE("coalgebra one-parameter family") {
    const Coalgebra c = dual_coalgebra(quadratic_algebra(q(1)));
    CHECK(prop1_coalgebra_op(c, q(2), 1).mat() == -(1 - q(2)) * oracle::flip_matrix(2));
    // q = 1, x = 2: coefficients (1, 1, 1).
    CHECK(prop1_coeffs(1, 2) == Coeffs{1, 1, 1});
    CHECK(prop1_coalgebra_op(c, 1, 2) == ansatz_operator(c, {1, 1, 1}));
}

TEST_CASE("one-parameter inverses") {
    oracle::Rng rng(3);
    for (const Algebra& a : test_algebras())
        for (int i = 0; i < 10; ++i) {
            const Scalar qq = rng.nonzero(), x = rng.nonzero();
            if (!(x == qq) && !(qq * x == Scalar(1))) {
                CHECK(prop1_op(a, qq, x) * prop1_inv(a, qq, x) == identity_op2(a.dim()));
                CHECK(prop1_inv(a, qq, x) * prop1_op(a, qq, x) == identity_op2(a.dim()));
            }
            CHECK(prop2_op(a, x) * prop2_inv(a, x) == identity_op2(a.dim()));
            CHECK(prop2_inv(a, x) * prop2_op(a, x) == identity_op2(a.dim()));
        }
    const Algebra a = quadratic_algebra(q(1));
    // ba(x)1 + (1/x) 1(x)ba - b(x)a
    CHECK(prop2_inv(a, q(4)).mat() == oracle::ansatz_matrix(a, {q(1, 4), 1, 1}, true));
    CHECK_THROWS_AS(prop1_inv(a, q(2), q(2)), SingularColour);
    CHECK_THROWS_AS(prop1_inv(a, q(2), q(1, 2)), SingularColour);
    CHECK_THROWS_AS(prop2_inv(a, 0), ZeroParameter);
}

TEST_CASE("first coloured family with p = 1 is v times prop1 at u/v") {
    oracle::Rng rng(4);
    for (const Algebra& a : test_algebras())
        for (int i = 0; i < 6; ++i) {
            const Scalar qq = rng.rational(), u = rng.rational(), v = rng.nonzero();
            CHECK(thm1_op(a, 1, qq, u, v).mat() == v * prop1_op(a, qq, u / v).mat());
        }
}

TEST_CASE("kind names") {
    CHECK(parse_onepar_kind("prop1_coalgebra") == OneParKind::prop1_coalgebra);
    CHECK(to_string(OneParKind::remark_x) == "remark_x");
    CHECK_THROWS_AS(parse_onepar_kind("prop3"), UnknownKind);
    CHECK_THROWS_AS(OneParFamily(OneParKind::prop1_coalgebra, quadratic_algebra(1), 2), InvalidInput);
}
