#include "ybalg/colored.hpp"

#include "ybalg/error.hpp"

namespace ybalg {

std::string to_string(ColoredKind k) {
    switch (k) {
        case ColoredKind::thm1: return "thm1";
        case ColoredKind::thm2: return "thm2";
        case ColoredKind::remark2: return "remark2";
        case ColoredKind::coalgebra_thm1: return "coalgebra_thm1";
    }
    return "?";
}

ColoredKind parse_colored_kind(std::string_view name) {
    if (name == "thm1") return ColoredKind::thm1;
    if (name == "thm2") return ColoredKind::thm2;
    if (name == "remark2") return ColoredKind::remark2;
    if (name == "coalgebra_thm1" || name == "coalgebra") return ColoredKind::coalgebra_thm1;
    throw UnknownKind("unknown coloured family '" + std::string(name) + "'");
}

Coeffs thm1_coeffs(const Scalar& p, const Scalar& q, const Scalar& u, const Scalar& v) {
    Scalar d = u - v;
    return {p * d, q * d, p * u - q * v};
}

Coeffs thm2_coeffs(const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& u, const Scalar& v) {
    Scalar pu = pow(p, u);
    Scalar ps = pu * pow(s, v);
    return {pu * pow(q, v), ps, ps};
}

Coeffs remark2_coeffs(const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& u, const Scalar& v) {
    Scalar qv = pow(q, v);
    Scalar a = pow(p, u) * qv;
    return {a, pow(s, u) * qv, a};
}

Op2 thm1_op(const Algebra& a, const Scalar& p, const Scalar& q, const Scalar& u, const Scalar& v) {
    return ansatz_operator(a, thm1_coeffs(p, q, u, v));
}

Op2 thm1_inv(const Algebra& a, const Scalar& p, const Scalar& q, const Scalar& u, const Scalar& v) {
    Scalar g = p * u - q * v;
    Scalar h = q * u - p * v;
    if (g.is_zero()) throw SingularColour("thm1 inverse undefined: pu = qv at u=" + u.str() + ", v=" + v.str());
    if (h.is_zero()) throw SingularColour("thm1 inverse undefined: qu = pv at u=" + u.str() + ", v=" + v.str());
    Scalar d = u - v;
    Scalar gh = g * h;
    // ba(x)1 carries p(u-v)/(gh), 1(x)ba carries q(u-v)/(gh).
    return opposite_ansatz_operator(a, {q * d / gh, p * d / gh, Scalar(1) / g});
}

Op2 thm2_op(const Algebra& a, const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& u, const Scalar& v) {
    return ansatz_operator(a, thm2_coeffs(p, q, s, u, v));
}

Op2 thm2_inv(const Algebra& a, const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& u, const Scalar& v) {
    if (p.is_zero() || q.is_zero() || s.is_zero())
        throw ZeroParameter("thm2 inverse needs p, q, s nonzero (p=" + p.str() + ", q=" + q.str() + ", s=" + s.str() +
                            ")");
    Scalar pu = pow(p, u);
    Scalar inv_sv = Scalar(1) / (pu * pow(s, v));
    Scalar inv_qv = Scalar(1) / (pu * pow(q, v));
    return opposite_ansatz_operator(a, {inv_qv, inv_sv, inv_sv});
}

Op2 remark2_op(const Algebra& a, const Scalar& p, const Scalar& q, const Scalar& s, const Scalar& u, const Scalar& v) {
    return ansatz_operator(a, remark2_coeffs(p, q, s, u, v));
}

Op2 coalgebra_colored_op(const Coalgebra& c, const Scalar& p, const Scalar& q, const Scalar& u, const Scalar& v) {
    if (auto report = validate(c); !report.ok())
        throw InvalidInput("coalgebra fails " + report.violations.front().identity);
    return ansatz_operator(c, thm1_coeffs(p, q, u, v));
}

ColoredFamily::ColoredFamily(ColoredKind kind, Algebra a, ColoredParams params)
    : kind_(kind), space_(std::move(a)), params_(std::move(params)) {
    if (kind_ == ColoredKind::coalgebra_thm1)
        throw InvalidInput("coalgebra_thm1 family needs a coalgebra, not an algebra");
}

ColoredFamily::ColoredFamily(Coalgebra c, ColoredParams params)
    : kind_(ColoredKind::coalgebra_thm1), space_(std::move(c)), params_(std::move(params)) {
    if (auto report = validate(std::get<Coalgebra>(space_)); !report.ok())
        throw InvalidInput("coalgebra fails " + report.violations.front().identity);
}

std::size_t ColoredFamily::dim() const {
    return std::visit([](const auto& s) { return s.dim(); }, space_);
}

const std::vector<std::string>& ColoredFamily::labels() const {
    return std::visit([](const auto& s) -> const std::vector<std::string>& { return s.labels(); }, space_);
}

Coeffs ColoredFamily::coefficients(const Scalar& u, const Scalar& v) const {
    const auto& [p, q, s] = params_;
    switch (kind_) {
        case ColoredKind::thm1:
        case ColoredKind::coalgebra_thm1: return thm1_coeffs(p, q, u, v);
        case ColoredKind::thm2: return thm2_coeffs(p, q, s, u, v);
        case ColoredKind::remark2: return remark2_coeffs(p, q, s, u, v);
    }
    throw UnknownKind("unhandled coloured family");
}

Op2 ColoredFamily::operator()(const Scalar& u, const Scalar& v) const {
    Coeffs k = coefficients(u, v);
    return std::visit([&](const auto& s) { return ansatz_operator(s, k); }, space_);
}

MatrixForm matrix_form(const ColoredFamily& f, const Scalar& u, const Scalar& v) {
    MatrixForm out{f(u, v).mat(), tensor_labels(f.labels()), {}};
    if ((f.kind() == ColoredKind::thm1 || f.kind() == ColoredKind::coalgebra_thm1) && f.dim() == 3) {
        const Scalar& p = f.params().p;
        const Scalar& q = f.params().q;
        out.shorthand = {{"λ", u - v}, {"t", q - p}, {"t′", q + p}, {"w", q * u - p * v}, {"w′", q * v - p * u}};
    }
    return out;
}

}  // namespace ybalg
