#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "engellab/field.hpp"

namespace engellab {

// Dense matrix of exact scalars, row-major. Vectors are columns: a matrix
// acts by apply(x) = M x.
class Matrix {
public:
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& field, std::size_t n);
    // All rows must share the field and have equal length.
    static Matrix from_rows(const FieldSpec& field, std::size_t cols,
                            const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const Scalar& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Scalar v);

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    Matrix transposed() const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Vec apply(const Vec& x) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

} // namespace engellab
