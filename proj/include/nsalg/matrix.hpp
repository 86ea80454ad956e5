#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nsalg/errors.hpp"
#include "nsalg/rational.hpp"

namespace nsalg {

/// Dense matrix over the exact rationals. Column-vector convention:
/// basis vector e_j maps to sum_i A(i,j) e_i.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& q : data_)
            if (!q.is_zero()) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Rational& q) const;
    friend bool operator==(const Matrix&, const Matrix&) = default;

    Matrix transposed() const;

    /// Column rank via exact Gauss elimination.
    std::size_t rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }
    /// True iff A^n = 0 where n = dimension (square only).
    bool nilpotent() const;

    /// Basis of { x : A x = 0 }, each vector of length cols().
    std::vector<std::vector<Rational>> kernel_basis() const;

    /// Determinant (square only), by fraction-free-ish elimination.
    Rational determinant() const;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace nsalg
