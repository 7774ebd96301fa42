#include "ybalg/ansatz.hpp"

namespace ybalg {

namespace {

Op2 algebra_ansatz(const Algebra& a, const Coeffs& k, bool opposite) {
    const std::size_t n = a.dim();
    const Vector& one = a.unit();
    Matrix m(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t col = i * n + j;
            for (std::size_t r = 0; r < n; ++r) {
                const Scalar& prod = opposite ? a.c(j, i, r) : a.c(i, j, r);
                if (prod.is_exact() && prod.is_zero()) continue;
                for (std::size_t e = 0; e < n; ++e) {
                    if (one[e].is_exact() && one[e].is_zero()) continue;
                    m(e * n + r, col) += k.alpha * one[e] * prod;  // 1 (x) ab
                    m(r * n + e, col) += k.beta * prod * one[e];   // ab (x) 1
                }
            }
            m(j * n + i, col) -= k.gamma;  // b (x) a
        }
    return Op2(n, std::move(m));
}

}  // namespace

Op2 ansatz_operator(const Algebra& a, const Coeffs& k) { return algebra_ansatz(a, k, false); }

Op2 opposite_ansatz_operator(const Algebra& a, const Coeffs& k) { return algebra_ansatz(a, k, true); }

Op2 ansatz_operator(const Coalgebra& c, const Coeffs& k) {
    const std::size_t n = c.dim();
    const Vector& eps = c.counit();
    Matrix m(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t col = i * n + j;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    m(x * n + y, col) += k.alpha * eps[i] * c.d(j, x, y);  // eps(c) Delta(d)
                    m(x * n + y, col) += k.beta * eps[j] * c.d(i, x, y);   // eps(d) Delta(c)
                }
            m(j * n + i, col) -= k.gamma;  // d (x) c
        }
    return Op2(n, std::move(m));
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    for (const auto& a : labels)
        for (const auto& b : labels) out.push_back(a + "⊗" + b);
    return out;
}

}  // namespace ybalg
