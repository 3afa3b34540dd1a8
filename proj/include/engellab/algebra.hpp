#pragma once

// Finite-dimensional left Leibniz algebras presented by structure constants.
// The product convention throughout is the left identity
//     a(bc) = (ab)c + b(ac),
// which is exactly the convention under which squares left-annihilate:
// x(xy) = (xx)y + x(xy) forces x^2 y = 0.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "engellab/subspace.hpp"

namespace engellab {

// e_i . e_j = sum_k c[i][j][k] e_k, 0-based.
class StructureConstants {
public:
    StructureConstants(const FieldSpec& field, std::size_t dim);

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }

    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const;
    void set(std::size_t i, std::size_t j, std::size_t k, Scalar v);
    Vec basis_product(std::size_t i, std::size_t j) const;

    friend bool operator==(const StructureConstants& a, const StructureConstants& b);
    friend bool operator!=(const StructureConstants& a, const StructureConstants& b) { return !(a == b); }

private:
    FieldSpec field_;
    std::size_t dim_;
    std::vector<Scalar> c_;
};

// Raised by validation when the left Leibniz identity fails; names the first
// failing basis triple in lexicographic order, with both sides evaluated.
struct IdentityViolation : Error {
    IdentityViolation(std::size_t i, std::size_t j, std::size_t k, Vec lhs, Vec rhs);
    std::size_t i, j, k;
    Vec lhs, rhs;
};

struct NotAnIdeal : Error {
    using Error::Error;
};

// A Leibniz algebra known to satisfy the identity; instances exist only via
// validate(), so holding one is a certificate in itself.
class LeibnizAlgebra {
public:
    // Checks the identity on all dim^3 basis triples (equivalent to the
    // identity for all elements, by trilinearity).
    static LeibnizAlgebra validate(StructureConstants c);

    const FieldSpec& field() const { return constants_.field(); }
    std::size_t dim() const { return constants_.dim(); }
    const StructureConstants& constants() const { return constants_; }

private:
    explicit LeibnizAlgebra(StructureConstants c) : constants_(std::move(c)) {}
    StructureConstants constants_;
};

// Bilinear extension of the structure constants.
Vec multiply(const LeibnizAlgebra& alg, const Vec& x, const Vec& y);

// d_a: x -> a x, as a matrix (column j = a . e_j); linear in a.
Matrix left_mult_matrix(const LeibnizAlgebra& alg, const Vec& a);
// r_a: x -> x a.
Matrix right_mult_matrix(const LeibnizAlgebra& alg, const Vec& a);

// Span of all squares, computed as span{e_i e_i, e_i e_j + e_j e_i (i<j)};
// the two agree by polarization since char != 2.
Subspace leibniz_kernel(const LeibnizAlgebra& alg);

bool is_ideal(const LeibnizAlgebra& alg, const Subspace& s);

// [L^1 = L, L^2, ...] with L^{k+1} = L . L^k, listed until the first stable
// term (inclusive). Every term is an ideal.
std::vector<Subspace> lower_central_series(const LeibnizAlgebra& alg);

struct NilpotencyVerdict {
    bool nilpotent;
    std::optional<std::size_t> nilpotency_class;
};
NilpotencyVerdict is_nilpotent_algebra(const LeibnizAlgebra& alg);

// Antisymmetry of the tensor; in char != 2 this is equivalent to a trivial
// Leibniz kernel.
bool is_lie(const LeibnizAlgebra& alg);

struct QuotientAlgebra {
    LeibnizAlgebra algebra;
    Matrix projection; // maps old coordinates onto quotient coordinates
};
QuotientAlgebra quotient_algebra(const LeibnizAlgebra& alg, const Subspace& ideal);

struct AlgebraAnalysis {
    std::size_t dim;
    bool lie;
    Subspace leib;
    std::vector<Subspace> series;
    bool nilpotent;
    std::optional<std::size_t> nilpotency_class;
};
AlgebraAnalysis analyze(const LeibnizAlgebra& alg);

} // namespace engellab
