#include "engellab/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace engellab {

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    const std::size_t rows = r.rows(), cols = r.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0; // next pivot row
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        // First nonzero entry in column pc at or below row pr.
        std::size_t hit = rows;
        for (std::size_t i = pr; i < rows; ++i) {
            if (!r.at(i, pc).is_zero()) { hit = i; break; }
        }
        if (hit == rows) continue;
        if (hit != pr) {
            for (std::size_t c = 0; c < cols; ++c) {
                Scalar tmp = r.at(pr, c);
                r.set(pr, c, r.at(hit, c));
                r.set(hit, c, tmp);
            }
        }
        Scalar inv = r.at(pr, pc).inverse();
        for (std::size_t c = pc; c < cols; ++c) r.set(pr, c, r.at(pr, c) * inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            Scalar f = r.at(i, pc);
            if (f.is_zero()) continue;
            for (std::size_t c = pc; c < cols; ++c)
                r.set(i, c, r.at(i, c) - f * r.at(pr, c));
        }
        pivots.push_back(pc);
        ++pr;
    }
    return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

Subspace::Subspace(std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
    std::vector<std::size_t> pivots(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
    return Subspace(ambient_dim, Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::row_span(const Matrix& rows) {
    RrefResult rr = rref(rows);
    Matrix basis(rows.field(), rr.rank, rows.cols());
    for (std::size_t r = 0; r < rr.rank; ++r)
        for (std::size_t c = 0; c < rows.cols(); ++c) basis.set(r, c, rr.r.at(r, c));
    return Subspace(rows.cols(), std::move(basis), std::move(rr.pivots));
}

Subspace Subspace::row_span(const FieldSpec& field, std::size_t ambient_dim,
                            const std::vector<Vec>& rows) {
    return row_span(Matrix::from_rows(field, ambient_dim, rows));
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_dim_) throw DimensionMismatch("reduce: wrong ambient dimension");
    Vec r = v;
    // RREF rows have 1 at their own pivot and 0 at every other pivot, so the
    // elimination coefficients can be read off in one pass.
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        Scalar c = r[pivots_[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_dim_; ++j) r[j] -= c * basis_.at(i, j);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const {
    return is_zero_vec(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_)
        throw DimensionMismatch("contains: ambient dimensions differ");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c;
    c.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) c.push_back(v[pivots_[i]]);
    return c;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
}

std::string Subspace::str() const {
    std::ostringstream out;
    out << "span";
    out << "{";
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        if (i) out << ", ";
        out << vec_str(basis_.row(i));
    }
    out << "}";
    return out.str();
}

Subspace kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec x = zero_vec(m.field(), n);
        x[f] = Scalar::one(m.field());
        for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = -rr.r.at(r, f);
        rows.push_back(std::move(x));
    }
    return Subspace::row_span(m.field(), n, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("intersect: ambient dimensions differ");
    const std::size_t n = a.ambient_dim();
    const FieldSpec& f = a.field();
    // Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    Matrix block(f, a.dim() + b.dim(), 2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            block.set(r, c, a.basis().at(r, c));
            block.set(r, n + c, a.basis().at(r, c));
        }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) block.set(a.dim() + r, c, b.basis().at(r, c));
    RrefResult rr = rref(block);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < rr.rank; ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            if (!rr.r.at(r, c).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vec right;
        right.reserve(n);
        for (std::size_t c = 0; c < n; ++c) right.push_back(rr.r.at(r, n + c));
        rows.push_back(std::move(right));
    }
    return Subspace::row_span(f, n, rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("sum: ambient dimensions differ");
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < a.dim(); ++r) rows.push_back(a.basis().row(r));
    for (std::size_t r = 0; r < b.dim(); ++r) rows.push_back(b.basis().row(r));
    return Subspace::row_span(a.field(), a.ambient_dim(), rows);
}

QuotientBasis quotient_basis(std::size_t ambient_dim, const Subspace& w) {
    if (w.ambient_dim() != ambient_dim)
        throw DimensionMismatch("quotient_basis: ambient dimension mismatch");
    const FieldSpec& f = w.field();
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : w.pivots()) is_pivot[p] = true;
    QuotientBasis q{ {}, Matrix(f, ambient_dim - w.dim(), ambient_dim), {} };
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) q.representative_columns.push_back(c);
    for (std::size_t c : q.representative_columns)
        q.representatives.push_back(unit_vec(f, ambient_dim, c));
    // Column c of the projection is reduce(e_c) restricted to the
    // representative columns; this kills w and fixes each representative.
    for (std::size_t c = 0; c < ambient_dim; ++c) {
        Vec red = w.reduce(unit_vec(f, ambient_dim, c));
        for (std::size_t j = 0; j < q.representative_columns.size(); ++j)
            q.projection.set(j, c, red[q.representative_columns[j]]);
    }
    return q;
}

bool is_nilpotent_matrix(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("nilpotency is defined for square matrices");
    const std::size_t n = m.rows();
    if (n == 0) return true;
    // m is nilpotent iff m^n = 0; square until the exponent reaches n.
    Matrix s = m;
    std::size_t e = 1;
    while (e < n) {
        s = s * s;
        e *= 2;
    }
    return s.is_zero();
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const FieldSpec& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
        aug.set(r, n + r, Scalar::one(f));
    }
    RrefResult rr = rref(aug);
    // Invertible iff the left block reduced to the identity.
    if (rr.rank < n || rr.pivots[n - 1] >= n) throw SingularMatrix("matrix is singular");
    Matrix inv(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, rr.r.at(r, n + c));
    return inv;
}

} // namespace engellab
