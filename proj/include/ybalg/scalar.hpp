#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace ybalg {

using Rational = mpq_class;

/// Which value space a Scalar lives in.
enum class Field { rational, float64 };

std::string to_string(Field f);
Field parse_field(std::string_view name);

/// Absolute tolerance used by float-mode comparisons unless a caller passes one.
inline constexpr double kDefaultTolerance = 1e-9;

/// A ground-field element: an exact rational or a double.
///
/// Mixed arithmetic promotes to float64. Exact division by zero throws;
/// float division follows IEEE semantics.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(int v) : value_(Rational(v)) {}
    Scalar(long v) : value_(Rational(v)) {}
    Scalar(long long v);
    Scalar(const Rational& v) : value_(v) {}
    Scalar(Rational&& v) : value_(std::move(v)) {}
    Scalar(double v) : value_(v) {}

    static Scalar fraction(long num, long den);

    /// Parses "3", "-2/5", or a decimal. Decimals become exact in rational
    /// mode ("0.25" -> 1/4).
    static Scalar parse(std::string_view text, Field field = Field::rational);

    Field field() const { return std::holds_alternative<Rational>(value_) ? Field::rational : Field::float64; }
    bool is_exact() const { return field() == Field::rational; }

    /// Precondition: is_exact().
    const Rational& rational() const;
    double to_double() const;

    /// Exact: value == 0. Float: |value| <= tol.
    bool is_zero(double tol = kDefaultTolerance) const;
    bool is_integer() const;
    int sign() const;

    /// Converts to the requested field (exact -> float is lossy; float -> exact
    /// is the exact binary value of the double).
    Scalar in(Field f) const;

    /// "num/den" (or "num" for integers) in rational mode, shortest round-trip
    /// decimal in float mode.
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Exact equality if both operands are exact, otherwise |a-b| <= kDefaultTolerance.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Total order used for residual norms (max-abs); mixed operands compare as doubles.
    friend bool operator<(const Scalar& a, const Scalar& b);

private:
    std::variant<Rational, double> value_;
};

Scalar abs(const Scalar& s);

/// base^exponent. Exact mode requires an integer exponent (NonIntegerExponent
/// otherwise) and a nonzero base for negative exponents. Float mode requires
/// base > 0 for non-integer exponents.
Scalar pow(const Scalar& base, const Scalar& exponent);

bool approx_equal(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ybalg
