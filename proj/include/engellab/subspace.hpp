#pragma once

// Canonical subspaces of a coordinate space and the elimination-based
// operations on them. The canonical form is the reduced row-echelon basis,
// so subspace equality is plain structural equality.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "engellab/matrix.hpp"

namespace engellab {

struct RrefResult {
    Matrix r;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination; deterministic (first nonzero pivot row wins).
RrefResult rref(const Matrix& m);

class Subspace {
public:
    static Subspace zero(const FieldSpec& field, std::size_t ambient_dim);
    static Subspace full(const FieldSpec& field, std::size_t ambient_dim);
    static Subspace row_span(const Matrix& rows);
    static Subspace row_span(const FieldSpec& field, std::size_t ambient_dim,
                             const std::vector<Vec>& rows);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    const FieldSpec& field() const { return basis_.field(); }
    // dim x ambient matrix in RREF, one basis vector per row.
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim_; }

    // Remainder of v after eliminating the pivot coordinates; zero iff v lies
    // in the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Coefficients c with c . basis = v, or nullopt when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    std::string str() const;

private:
    Subspace(std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots);

    std::size_t ambient_dim_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// Null space {x : m x = 0}, canonical.
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Coordinates for the quotient space ambient/w. The representatives are the
// standard basis vectors at w's non-pivot columns; projection maps the
// ambient space onto quotient coordinates and has kernel exactly w.
struct QuotientBasis {
    std::vector<Vec> representatives; // (ambient-dim(w)) vectors of length ambient
    Matrix projection;                // (ambient-dim(w)) x ambient
    std::vector<std::size_t> representative_columns;
};
QuotientBasis quotient_basis(std::size_t ambient_dim, const Subspace& w);

// True iff m^n = 0 for n = side length; computed by repeated squaring.
bool is_nilpotent_matrix(const Matrix& m);

// Gauss-Jordan inverse; throws SingularMatrix.
Matrix inverse(const Matrix& m);

} // namespace engellab
