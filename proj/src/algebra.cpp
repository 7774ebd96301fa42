#include "ybalg/algebra.hpp"

#include "ybalg/error.hpp"

namespace ybalg {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
    return out;
}

}  // namespace

Algebra::Algebra(std::size_t dim, std::vector<Scalar> structconst, Vector unit, std::vector<std::string> labels)
    : dim_(dim), sc_(std::move(structconst)), unit_(std::move(unit)), labels_(std::move(labels)) {
    if (dim_ == 0) throw InvalidInput("algebra dimension must be positive");
    if (sc_.size() != dim_ * dim_ * dim_)
        throw DimensionMismatch("structure constants need " + std::to_string(dim_ * dim_ * dim_) + " entries, got " +
                                std::to_string(sc_.size()));
    if (unit_.size() != dim_) throw DimensionMismatch("unit vector has wrong length");
    if (labels_.empty()) labels_ = default_labels(dim_);
    if (labels_.size() != dim_) throw DimensionMismatch("basis label count differs from dimension");
}

Algebra Algebra::in(Field f) const {
    std::vector<Scalar> sc;
    for (const auto& x : sc_) sc.push_back(x.in(f));
    Vector unit;
    for (const auto& x : unit_) unit.push_back(x.in(f));
    return Algebra(dim_, std::move(sc), std::move(unit), labels_);
}

Coalgebra::Coalgebra(std::size_t dim, std::vector<Scalar> comult, Vector counit, std::vector<std::string> labels)
    : dim_(dim), comult_(std::move(comult)), counit_(std::move(counit)), labels_(std::move(labels)) {
    if (dim_ == 0) throw InvalidInput("coalgebra dimension must be positive");
    if (comult_.size() != dim_ * dim_ * dim_) throw DimensionMismatch("comultiplication has wrong size");
    if (counit_.size() != dim_) throw DimensionMismatch("counit has wrong length");
    if (labels_.empty()) labels_ = default_labels(dim_);
    if (labels_.size() != dim_) throw DimensionMismatch("basis label count differs from dimension");
}

Coalgebra Coalgebra::in(Field f) const {
    std::vector<Scalar> d;
    for (const auto& x : comult_) d.push_back(x.in(f));
    Vector e;
    for (const auto& x : counit_) e.push_back(x.in(f));
    return Coalgebra(dim_, std::move(d), std::move(e), labels_);
}

std::string power_label(std::size_t k) {
    static const char* const sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    if (k == 0) return "1";
    if (k == 1) return "x";
    std::string digits = std::to_string(k);
    std::string out = "x";
    for (char ch : digits) out += sup[ch - '0'];
    return out;
}

Vector basis_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

Algebra poly_quotient(std::span<const Scalar> coeffs) {
    if (coeffs.size() < 2) throw InvalidInput("poly_quotient needs a polynomial of degree >= 1");
    const std::size_t n = coeffs.size() - 1;
    if (!(coeffs[n] == Scalar(1))) throw InvalidInput("poly_quotient needs a monic polynomial");

    // powers[m] = coordinates of x^m reduced mod f, for m < 2n - 1.
    std::vector<Vector> powers;
    for (std::size_t m = 0; m < n; ++m) powers.push_back(basis_vector(n, m));
    for (std::size_t m = n; m + 1 < 2 * n; ++m) {
        const Vector& prev = powers.back();
        // x * prev: shift up, then replace x^n by -(c_0 + ... + c_{n-1} x^{n-1}).
        Vector next(n);
        for (std::size_t k = 0; k + 1 < n; ++k) next[k + 1] = prev[k];
        const Scalar& top = prev[n - 1];
        for (std::size_t k = 0; k < n; ++k) next[k] -= top * coeffs[k];
        powers.push_back(std::move(next));
    }

    std::vector<Scalar> sc(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) sc[(i * n + j) * n + k] = powers[i + j][k];

    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back(power_label(k));
    return Algebra(n, std::move(sc), basis_vector(n, 0), std::move(labels));
}

Algebra quadratic_algebra(const Scalar& sigma) {
    std::vector<Scalar> f{-sigma, Scalar(0), Scalar(1)};
    return poly_quotient(f);
}

Algebra cubic_algebra(const Scalar& eps, const Scalar& rho) {
    std::vector<Scalar> f{-rho, -eps, Scalar(0), Scalar(1)};
    return poly_quotient(f);
}

ValidationReport validate(const Algebra& a) {
    ValidationReport report;
    const std::size_t n = a.dim();
    // (e_i e_j) e_k = e_i (e_j e_k), coordinate l.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar lhs, rhs;
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs += a.c(i, j, m) * a.c(m, k, l);
                        rhs += a.c(j, k, m) * a.c(i, m, l);
                    }
                    Scalar diff = lhs - rhs;
                    if (!diff.is_zero()) report.violations.push_back({"associativity", {i, j, k, l}, diff});
                }
    // 1 e_j = e_j = e_j 1, coordinate k.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Scalar left, right;
            for (std::size_t m = 0; m < n; ++m) {
                left += a.unit()[m] * a.c(m, j, k);
                right += a.unit()[m] * a.c(j, m, k);
            }
            Scalar expect = j == k ? Scalar(1) : Scalar(0);
            if (!(left - expect).is_zero()) report.violations.push_back({"left-unit", {j, k}, left - expect});
            if (!(right - expect).is_zero()) report.violations.push_back({"right-unit", {j, k}, right - expect});
        }
    return report;
}

ValidationReport validate(const Coalgebra& c) {
    ValidationReport report;
    const std::size_t n = c.dim();
    // (Delta (x) id) Delta (e_i) = (id (x) Delta) Delta (e_i), coefficient of e_j (x) e_k (x) e_l.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar lhs, rhs;
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs += c.d(i, m, l) * c.d(m, j, k);
                        rhs += c.d(i, j, m) * c.d(m, k, l);
                    }
                    Scalar diff = lhs - rhs;
                    if (!diff.is_zero()) report.violations.push_back({"coassociativity", {i, j, k, l}, diff});
                }
    // (eps (x) id) Delta (e_i) = e_i = (id (x) eps) Delta (e_i), coordinate k.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Scalar left, right;
            for (std::size_t m = 0; m < n; ++m) {
                left += c.counit()[m] * c.d(i, m, k);
                right += c.d(i, k, m) * c.counit()[m];
            }
            Scalar expect = i == k ? Scalar(1) : Scalar(0);
            if (!(left - expect).is_zero()) report.violations.push_back({"left-counit", {i, k}, left - expect});
            if (!(right - expect).is_zero()) report.violations.push_back({"right-counit", {i, k}, right - expect});
        }
    return report;
}

Vector multiply(const Algebra& a, std::span<const Scalar> x, std::span<const Scalar> y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n)
        throw DimensionMismatch("multiply: vectors must have length " + std::to_string(n));
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_exact() && x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_exact() && y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) out[k] += xy * a.c(i, j, k);
        }
    }
    return out;
}

Coalgebra dual_coalgebra(const Algebra& a) {
    if (auto report = validate(a); !report.ok())
        throw InvalidInput("dual_coalgebra: algebra fails " + report.violations.front().identity);
    const std::size_t n = a.dim();
    std::vector<Scalar> d(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) d[(i * n + j) * n + k] = a.c(j, k, i);
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back(l + "*");
    return Coalgebra(n, std::move(d), a.unit(), std::move(labels));
}

}  // namespace ybalg
