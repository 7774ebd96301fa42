#include "ybalg/scalar.hpp"

#include "ybalg/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>

namespace ybalg {

std::string to_string(Field f) { return f == Field::rational ? "rational" : "float64"; }

Field parse_field(std::string_view name) {
    if (name == "rational") return Field::rational;
    if (name == "float64") return Field::float64;
    throw InvalidInput("unknown field '" + std::string(name) + "' (expected rational|float64)");
}

Scalar::Scalar(long long v) {
    // mpq_class has no long long constructor on every platform.
    value_ = Rational(std::to_string(v));
}

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

namespace {

Rational parse_decimal(std::string_view text) {
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-') digits.push_back('-');
        ++i;
    }
    bool any_digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            any_digit = true;
            if (seen_point) ++scale;
        } else {
            break;
        }
    }
    if (!any_digit) throw InvalidInput("cannot parse scalar '" + std::string(text) + "'");
    long exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        auto rest = text.substr(i + 1);
        if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
        if (ec != std::errc() || ptr != rest.data() + rest.size())
            throw InvalidInput("cannot parse scalar '" + std::string(text) + "'");
        i = text.size();
    }
    if (i != text.size()) throw InvalidInput("cannot parse scalar '" + std::string(text) + "'");
    mpz_class num(digits, 10);
    long shift = exponent - scale;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q = shift < 0 ? Rational(num, p10) : Rational(num * p10);
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, Field field) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InvalidInput("empty scalar literal");
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_decimal(text.substr(0, slash));
        Rational den = parse_decimal(text.substr(slash + 1));
        if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
        value = num / den;
    } else {
        value = parse_decimal(text);
    }
    if (field == Field::float64) return Scalar(value.get_d());
    return Scalar(std::move(value));
}

const Rational& Scalar::rational() const {
    if (!is_exact()) throw InvalidInput("rational() called on a float64 scalar");
    return std::get<Rational>(value_);
}

double Scalar::to_double() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return q->get_d();
    return std::get<double>(value_);
}

bool Scalar::is_zero(double tol) const {
    if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
    return std::fabs(std::get<double>(value_)) <= tol;
}

bool Scalar::is_integer() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return q->get_den() == 1;
    double d = std::get<double>(value_);
    return std::isfinite(d) && std::floor(d) == d;
}

int Scalar::sign() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q);
    double d = std::get<double>(value_);
    return (d > 0) - (d < 0);
}

Scalar Scalar::in(Field f) const {
    if (f == field()) return *this;
    if (f == Field::float64) return Scalar(to_double());
    return Scalar(Rational(std::get<double>(value_)));
}

std::string Scalar::str() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
    double d = std::get<double>(value_);
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
    return std::string(buf, ptr);
}

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
    return Scalar(-std::get<double>(value_));
}

namespace {

template <typename ExactOp, typename FloatOp>
void combine(std::variant<Rational, double>& lhs, const Scalar& rhs, ExactOp exact, FloatOp flt) {
    if (auto* q = std::get_if<Rational>(&lhs); q && rhs.is_exact()) {
        exact(*q, rhs.rational());
        return;
    }
    double a = std::holds_alternative<Rational>(lhs) ? std::get<Rational>(lhs).get_d() : std::get<double>(lhs);
    lhs = flt(a, rhs.to_double());
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    combine(value_, o, [](Rational& a, const Rational& b) { a += b; }, [](double a, double b) { return a + b; });
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    combine(value_, o, [](Rational& a, const Rational& b) { a -= b; }, [](double a, double b) { return a - b; });
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    combine(value_, o, [](Rational& a, const Rational& b) { a *= b; }, [](double a, double b) { return a * b; });
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    combine(
        value_, o,
        [](Rational& a, const Rational& b) {
            if (sgn(b) == 0) throw InvalidInput("exact division by zero");
            a /= b;
        },
        [](double a, double b) { return a / b; });
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
    return std::fabs(a.to_double() - b.to_double()) <= kDefaultTolerance;
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
    return a.to_double() < b.to_double();
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar pow(const Scalar& base, const Scalar& exponent) {
    if (base.is_exact() && exponent.is_exact()) {
        if (!exponent.is_integer())
            throw NonIntegerExponent("exact power needs an integer exponent, got " + exponent.str());
        const mpz_class& e = exponent.rational().get_num();
        if (!e.fits_slong_p()) throw InvalidInput("exponent out of range: " + exponent.str());
        long k = e.get_si();
        if (k < 0 && base.is_zero()) throw ZeroParameter("zero base raised to a negative power");
        unsigned long mag = static_cast<unsigned long>(k < 0 ? -k : k);
        const Rational& b = base.rational();
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), mag);
        mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), mag);
        Rational r = k < 0 ? Rational(den, num) : Rational(num, den);
        r.canonicalize();
        return Scalar(std::move(r));
    }
    double b = base.to_double();
    double e = exponent.to_double();
    if (!exponent.is_integer() && !(b > 0))
        throw InvalidInput("real power with non-integer exponent needs a positive base");
    return Scalar(std::pow(b, e));
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
    if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
    return std::fabs(a.to_double() - b.to_double()) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace ybalg
