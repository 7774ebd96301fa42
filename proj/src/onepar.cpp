#include "ybalg/onepar.hpp"

#include "ybalg/error.hpp"

namespace ybalg {

std::string to_string(OneParKind k) {
    switch (k) {
        case OneParKind::prop1: return "prop1";
        case OneParKind::prop1_coalgebra: return "prop1_coalgebra";
        case OneParKind::prop2: return "prop2";
        case OneParKind::remark_x: return "remark_x";
    }
    return "?";
}

OneParKind parse_onepar_kind(std::string_view name) {
    if (name == "prop1") return OneParKind::prop1;
    if (name == "prop1_coalgebra") return OneParKind::prop1_coalgebra;
    if (name == "prop2") return OneParKind::prop2;
    if (name == "remark_x") return OneParKind::remark_x;
    throw UnknownKind("unknown one-parameter family '" + std::string(name) + "'");
}

Coeffs prop1_coeffs(const Scalar& q, const Scalar& x) {
    Scalar d = x - Scalar(1);
    return {d, q * d, x - q};
}

Coeffs prop2_coeffs(const Scalar& x) { return {x, Scalar(1), Scalar(1)}; }

Coeffs remark_x_coeffs(const Scalar& x) { return {Scalar(1), x, Scalar(1)}; }

Scalar phi_product(const Scalar& x, const Scalar& z) { return x * z; }
Scalar phi_second(const Scalar&, const Scalar& z) { return z; }
Scalar phi_first(const Scalar& x, const Scalar&) { return x; }

Op2 prop1_op(const Algebra& a, const Scalar& q, const Scalar& x) { return ansatz_operator(a, prop1_coeffs(q, x)); }

Op2 prop1_inv(const Algebra& a, const Scalar& q, const Scalar& x) {
    Scalar g = x - q;
    Scalar h = q * x - Scalar(1);
    if (g.is_zero()) throw SingularColour("prop1 inverse undefined at x = q = " + x.str());
    if (h.is_zero()) throw SingularColour("prop1 inverse undefined at qx = 1 (x = " + x.str() + ")");
    Scalar d = x - Scalar(1);
    Scalar gh = g * h;
    return opposite_ansatz_operator(a, {q * d / gh, d / gh, Scalar(1) / g});
}

Op2 prop1_coalgebra_op(const Coalgebra& c, const Scalar& q, const Scalar& x) {
    if (auto report = validate(c); !report.ok())
        throw InvalidInput("coalgebra fails " + report.violations.front().identity);
    return ansatz_operator(c, prop1_coeffs(q, x));
}

Op2 prop2_op(const Algebra& a, const Scalar& x) { return ansatz_operator(a, prop2_coeffs(x)); }

Op2 prop2_inv(const Algebra& a, const Scalar& x) {
    if (x.is_zero()) throw ZeroParameter("prop2 inverse needs x != 0");
    return opposite_ansatz_operator(a, {Scalar(1) / x, Scalar(1), Scalar(1)});
}

Op2 remark_x_op(const Algebra& a, const Scalar& x) { return ansatz_operator(a, remark_x_coeffs(x)); }

OneParFamily::OneParFamily(OneParKind kind, Algebra a, Scalar q) : kind_(kind), space_(std::move(a)), q_(std::move(q)) {
    if (kind_ == OneParKind::prop1_coalgebra)
        throw InvalidInput("prop1_coalgebra family needs a coalgebra, not an algebra");
}

OneParFamily::OneParFamily(Coalgebra c, Scalar q)
    : kind_(OneParKind::prop1_coalgebra), space_(std::move(c)), q_(std::move(q)) {
    if (auto report = validate(std::get<Coalgebra>(space_)); !report.ok())
        throw InvalidInput("coalgebra fails " + report.violations.front().identity);
}

std::size_t OneParFamily::dim() const {
    return std::visit([](const auto& s) { return s.dim(); }, space_);
}

const std::vector<std::string>& OneParFamily::labels() const {
    return std::visit([](const auto& s) -> const std::vector<std::string>& { return s.labels(); }, space_);
}

Coeffs OneParFamily::coefficients(const Scalar& x) const {
    switch (kind_) {
        case OneParKind::prop1:
        case OneParKind::prop1_coalgebra: return prop1_coeffs(q_, x);
        case OneParKind::prop2: return prop2_coeffs(x);
        case OneParKind::remark_x: return remark_x_coeffs(x);
    }
    throw UnknownKind("unhandled one-parameter family");
}

Op2 OneParFamily::operator()(const Scalar& x) const {
    Coeffs k = coefficients(x);
    return std::visit([&](const auto& s) { return ansatz_operator(s, k); }, space_);
}

Scalar OneParFamily::phi(const Scalar& x, const Scalar& z) const {
    switch (kind_) {
        case OneParKind::prop1:
        case OneParKind::prop1_coalgebra: return phi_product(x, z);
        case OneParKind::prop2: return phi_second(x, z);
        case OneParKind::remark_x: return phi_first(x, z);
    }
    throw UnknownKind("unhandled one-parameter family");
}

OneParOperator OneParFamily::as_operator() const {
    return {[self = *this](const Scalar& x) { return self(x); },
            [self = *this](const Scalar& x, const Scalar& z) { return self.phi(x, z); }};
}

}  // namespace ybalg
