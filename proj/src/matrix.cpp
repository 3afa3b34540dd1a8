#include "engellab/matrix.hpp"

#include <sstream>

namespace engellab {

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols,
                         const std::vector<Vec>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("row " + std::to_string(r) + " has length " +
                                    std::to_string(rows[r].size()) + ", expected " +
                                    std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    return entries_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    if (!(v.field() == field_)) throw FieldMismatch("entry field does not match matrix field");
    entries_[r * cols_ + c] = std::move(v);
}

Vec Matrix::row(std::size_t r) const {
    Vec v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Matrix Matrix::transposed() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m = *this;
    for (auto& e : m.entries_) e *= c;
    return m;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vec y = zero_vec(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
    return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix addition shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix subtraction shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                Scalar v = m.at(r, c) + ark * b.at(k, c);
                m.set(r, c, std::move(v));
            }
        }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (a.entries_[i] != b.entries_[i]) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) out << "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << " ";
            out << at(r, c).str();
        }
    }
    out << "]";
    return out.str();
}

} // namespace engellab
