#include "engellab/algebra.hpp"

#include <sstream>

namespace engellab {

StructureConstants::StructureConstants(const FieldSpec& field, std::size_t dim)
    : field_(field), dim_(dim), c_(dim * dim * dim, Scalar::zero(field)) {}

const Scalar& StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw DimensionMismatch("structure constant index out of range");
    return c_[(i * dim_ + j) * dim_ + k];
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, Scalar v) {
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw DimensionMismatch("structure constant index out of range");
    if (!(v.field() == field_)) throw FieldMismatch("structure constant from the wrong field");
    c_[(i * dim_ + j) * dim_ + k] = std::move(v);
}

Vec StructureConstants::basis_product(std::size_t i, std::size_t j) const {
    Vec v;
    v.reserve(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v.push_back(at(i, j, k));
    return v;
}

bool operator==(const StructureConstants& a, const StructureConstants& b) {
    if (!(a.field_ == b.field_) || a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

namespace {

std::string violation_message(std::size_t i, std::size_t j, std::size_t k,
                              const Vec& lhs, const Vec& rhs) {
    std::ostringstream out;
    out << "left Leibniz identity fails at basis triple (" << i << ", " << j << ", " << k
        << "): e" << i << "(e" << j << " e" << k << ") = " << vec_str(lhs)
        << " but (e" << i << " e" << j << ")e" << k << " + e" << j << "(e" << i << " e" << k
        << ") = " << vec_str(rhs);
    return out.str();
}

Vec raw_multiply(const StructureConstants& c, const Vec& x, const Vec& y) {
    const std::size_t n = c.dim();
    Vec r = zero_vec(c.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar f = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) r[k] += f * c.at(i, j, k);
        }
    }
    return r;
}

} // namespace

IdentityViolation::IdentityViolation(std::size_t i_, std::size_t j_, std::size_t k_,
                                     Vec lhs_, Vec rhs_)
    : Error(violation_message(i_, j_, k_, lhs_, rhs_)),
      i(i_), j(j_), k(k_), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {}

LeibnizAlgebra LeibnizAlgebra::validate(StructureConstants c) {
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // a(bc) vs (ab)c + b(ac) on (e_i, e_j, e_k).
                Vec lhs = raw_multiply(c, unit_vec(c.field(), n, i), c.basis_product(j, k));
                Vec rhs = add(raw_multiply(c, c.basis_product(i, j), unit_vec(c.field(), n, k)),
                              raw_multiply(c, unit_vec(c.field(), n, j), c.basis_product(i, k)));
                if (lhs != rhs) throw IdentityViolation(i, j, k, std::move(lhs), std::move(rhs));
            }
    return LeibnizAlgebra(std::move(c));
}

Vec multiply(const LeibnizAlgebra& alg, const Vec& x, const Vec& y) {
    if (x.size() != alg.dim() || y.size() != alg.dim())
        throw DimensionMismatch("multiply: element size does not match algebra dimension");
    return raw_multiply(alg.constants(), x, y);
}

Matrix left_mult_matrix(const LeibnizAlgebra& alg, const Vec& a) {
    const std::size_t n = alg.dim();
    Matrix m(alg.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = multiply(alg, a, unit_vec(alg.field(), n, j));
        for (std::size_t k = 0; k < n; ++k) m.set(k, j, col[k]);
    }
    return m;
}

Matrix right_mult_matrix(const LeibnizAlgebra& alg, const Vec& a) {
    const std::size_t n = alg.dim();
    Matrix m(alg.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = multiply(alg, unit_vec(alg.field(), n, j), a);
        for (std::size_t k = 0; k < n; ++k) m.set(k, j, col[k]);
    }
    return m;
}

Subspace leibniz_kernel(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(alg.constants().basis_product(i, i));
        for (std::size_t j = i + 1; j < n; ++j)
            rows.push_back(add(alg.constants().basis_product(i, j),
                               alg.constants().basis_product(j, i)));
    }
    return Subspace::row_span(alg.field(), n, rows);
}

bool is_ideal(const LeibnizAlgebra& alg, const Subspace& s) {
    if (s.ambient_dim() != alg.dim())
        throw DimensionMismatch("is_ideal: subspace lives in the wrong space");
    const std::size_t n = alg.dim();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vec v = s.basis().row(r);
        for (std::size_t i = 0; i < n; ++i) {
            Vec e = unit_vec(alg.field(), n, i);
            if (!s.contains(multiply(alg, e, v))) return false;
            if (!s.contains(multiply(alg, v, e))) return false;
        }
    }
    return true;
}

std::vector<Subspace> lower_central_series(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<Subspace> series;
    series.push_back(Subspace::full(alg.field(), n));
    while (true) {
        const Subspace& cur = series.back();
        // L . L^k spanned by e_i . w over basis elements e_i and rows w.
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < n; ++i) {
            Vec e = unit_vec(alg.field(), n, i);
            for (std::size_t r = 0; r < cur.dim(); ++r)
                rows.push_back(multiply(alg, e, cur.basis().row(r)));
        }
        Subspace next = Subspace::row_span(alg.field(), n, rows);
        bool stable = (next == cur);
        series.push_back(std::move(next));
        if (stable) break;
        if (series.back().is_zero()) break;
    }
    return series;
}

NilpotencyVerdict is_nilpotent_algebra(const LeibnizAlgebra& alg) {
    std::vector<Subspace> series = lower_central_series(alg);
    if (!series.back().is_zero()) return {false, std::nullopt};
    // series[k] = L^{k+1}, so the first zero index k gives L^{k+1} = 0 with
    // L^k != 0: class k. The zero algebra gets class 0.
    for (std::size_t k = 0; k < series.size(); ++k)
        if (series[k].is_zero()) return {true, k};
    return {true, series.size() - 1}; // unreachable
}

bool is_lie(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vec sym = add(alg.constants().basis_product(i, j),
                          alg.constants().basis_product(j, i));
            if (!is_zero_vec(sym)) return false;
        }
    return true;
}

QuotientAlgebra quotient_algebra(const LeibnizAlgebra& alg, const Subspace& ideal) {
    if (!is_ideal(alg, ideal)) throw NotAnIdeal("quotient by a subspace that is not an ideal");
    QuotientBasis q = quotient_basis(alg.dim(), ideal);
    const std::size_t m = q.representatives.size();
    StructureConstants c(alg.field(), m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec prod = q.projection.apply(multiply(alg, q.representatives[i], q.representatives[j]));
            for (std::size_t k = 0; k < m; ++k) c.set(i, j, k, prod[k]);
        }
    // Well-defined because the ideal is two-sided; validate() re-checks the
    // identity anyway rather than trusting the argument.
    return QuotientAlgebra{LeibnizAlgebra::validate(std::move(c)), q.projection};
}

AlgebraAnalysis analyze(const LeibnizAlgebra& alg) {
    AlgebraAnalysis a{alg.dim(), is_lie(alg), leibniz_kernel(alg),
                      lower_central_series(alg), false, std::nullopt};
    NilpotencyVerdict v = is_nilpotent_algebra(alg);
    a.nilpotent = v.nilpotent;
    a.nilpotency_class = v.nilpotency_class;
    return a;
}

} // namespace engellab
