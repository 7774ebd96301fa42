#include "ybalg/matrix.hpp"

#include "ybalg/error.hpp"

#include <string>

namespace ybalg {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::in(Field f) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = x.in(f);
    return m;
}

Scalar Matrix::max_abs() const {
    Scalar best;
    bool any_float = false;
    for (const auto& x : data_) {
        any_float = any_float || !x.is_exact();
        Scalar a = abs(x);
        if (best < a) best = a;
    }
    return any_float ? best.in(Field::float64) : best;
}

bool Matrix::is_zero(double tol) const {
    for (const auto& x : data_)
        if (!x.is_zero(tol)) return false;
    return true;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
}

}  // namespace

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(*this, o, "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(*this, o, "matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product: " + std::to_string(a.cols_) + " vs " + std::to_string(b.rows_));
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_exact() && aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (bkj.is_exact() && bkj.is_zero()) continue;
                out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (!(a.data_[i] == b.data_[i])) return false;
    return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij.is_exact() && aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

}  // namespace ybalg
