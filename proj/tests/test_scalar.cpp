#include "catch_amalgamated.hpp"

#include "ybalg/error.hpp"
#include "ybalg/matrix.hpp"
#include "ybalg/scalar.hpp"

using namespace ybalg;

TEST_CASE("exact arithmetic stays exact") {
    const Scalar a = Scalar::fraction(1, 3), b = Scalar::fraction(2, 6);
    CHECK(a == b);
    CHECK((a + b).str() == "2/3");
    CHECK((a * Scalar(3)).str() == "1");
    CHECK((a - b).is_zero());
    CHECK((a / Scalar(-2)).str() == "-1/6");
    CHECK_THROWS_AS(a / Scalar(0), Error);
}

TEST_CASE("parse accepts integers, fractions and decimals") {
    CHECK(Scalar::parse("-2/5").str() == "-2/5");
    CHECK(Scalar::parse("0.25").str() == "1/4");
    CHECK(Scalar::parse("7").str() == "7");
    CHECK_FALSE(Scalar::parse("0.5", Field::float64).is_exact());
    CHECK_THROWS_AS(Scalar::parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(Scalar::parse("abc"), InvalidInput);
    CHECK_THROWS_AS(Scalar::parse(""), InvalidInput);
}

TEST_CASE("float mode compares with tolerance") {
    const Scalar x(0.1 + 0.2), y(0.3);
    CHECK(x == y);
    CHECK(Scalar(1e-12).is_zero());
    CHECK_FALSE(Scalar(1e-6).is_zero());
    CHECK(Scalar(1e-6).is_zero(1e-5));
    // Mixed operands promote to float.
    CHECK_FALSE((Scalar::fraction(1, 3) + Scalar(0.5)).is_exact());
}

TEST_CASE("pow follows the exponent rules") {
    CHECK(pow(Scalar(2), Scalar(10)).str() == "1024");
    CHECK(pow(Scalar(2), Scalar(-2)).str() == "1/4");
    CHECK(pow(Scalar::fraction(-3, 2), Scalar(3)).str() == "-27/8");
    CHECK_THROWS_AS(pow(Scalar(2), Scalar::fraction(1, 2)), NonIntegerExponent);
    CHECK(pow(Scalar(4.0), Scalar(0.5)).to_double() == Catch::Approx(2.0));
}

TEST_CASE("field names round trip") {
    CHECK(parse_field("rational") == Field::rational);
    CHECK(parse_field("float64") == Field::float64);
    CHECK(to_string(Field::float64) == "float64");
    CHECK_THROWS_AS(parse_field("complex"), InvalidInput);
}

TEST_CASE("matrix basics") {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix id = Matrix::identity(2);
    CHECK(a * id == a);
    CHECK(a.transpose()(0, 1) == Scalar(3));
    CHECK(a.max_abs() == Scalar(4));
    CHECK((a - a).is_zero());
    const Matrix k = kron(id, a);
    CHECK(k.rows() == 4);
    CHECK(k(3, 2) == Scalar(3));
    CHECK(k(0, 2) == Scalar(0));
}
