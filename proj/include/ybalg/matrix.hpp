#pragma once

#include "ybalg/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ybalg {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of Scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix in(Field f) const;

    /// Largest |entry|; exact when every entry is exact.
    Scalar max_abs() const;
    bool is_zero(double tol = kDefaultTolerance) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);

    /// Entrywise Scalar equality (exact, or within kDefaultTolerance when floats are involved).
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Kronecker product, (A (x) B)[(i,k),(j,l)] = A[i][j] B[k][l].
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace ybalg
