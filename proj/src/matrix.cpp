#include "nsalg/matrix.hpp"

#include <utility>

namespace nsalg {

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw SpecError("matrix product dimension mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SpecError("matrix sum dimension mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SpecError("matrix difference dimension mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

Matrix Matrix::operator*(const Rational& q) const {
    Matrix out = *this;
    for (auto& v : out.data_) v *= q;
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const Rational f = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t Matrix::rank() const {
    Matrix work = *this;
    return eliminate(work).size();
}

bool Matrix::nilpotent() const {
    if (rows_ != cols_) throw SpecError("nilpotency needs a square matrix");
    Matrix power = *this;
    for (std::size_t step = 1; step < rows_; step <<= 1) {
        if (power.is_zero()) return true;
        power = power * power;
    }
    return power.is_zero();
}

std::vector<std::vector<Rational>> Matrix::kernel_basis() const {
    Matrix work = *this;
    const auto pivots = eliminate(work);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols_);
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -work.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational Matrix::determinant() const {
    if (rows_ != cols_) throw SpecError("determinant needs a square matrix");
    Matrix work = *this;
    Rational det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t p = col;
        while (p < rows_ && work.at(p, col).is_zero()) ++p;
        if (p == rows_) return Rational(0);
        if (p != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(work.at(p, j), work.at(col, j));
            det = -det;
        }
        det *= work.at(col, col);
        const Rational inv = Rational(1) / work.at(col, col);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (work.at(r, col).is_zero()) continue;
            const Rational f = work.at(r, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) work.at(r, j) -= f * work.at(col, j);
        }
    }
    return det;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw SpecError("matrix-vector dimension mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !x[j].is_zero()) out[i] += at(i, j) * x[j];
    return out;
}

std::string Matrix::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += i == 0 ? "[" : " [";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]";
        if (i + 1 < rows_) out += "\n";
    }
    return out + "]";
}

} // namespace nsalg
