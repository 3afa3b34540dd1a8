#include "engellab/catalog.hpp"

#include <algorithm>
#include <tuple>

namespace engellab {

namespace {

LeibnizAlgebra make(const FieldSpec& f, std::size_t n,
                    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>>& prods) {
    StructureConstants c(f, n);
    for (const auto& [i, j, k, v] : prods) c.set(i, j, k, Scalar::of_int(f, v));
    return LeibnizAlgebra::validate(std::move(c));
}

} // namespace

std::vector<CatalogEntry> catalog(const FieldSpec& f) {
    std::vector<CatalogEntry> out;
    out.push_back({"abelian1", make(f, 1, {}), {true, 0, 1}});
    out.push_back({"abelian2", make(f, 2, {}), {true, 0, 1}});
    out.push_back({"abelian3", make(f, 3, {}), {true, 0, 1}});
    // e1 e1 = e2: the smallest non-Lie Leibniz algebra.
    out.push_back({"A2", make(f, 2, {{0, 0, 1, 1}}), {false, 1, 2}});
    // e1 e1 = e2, e1 e2 = e3: null-filiform of dimension 3.
    out.push_back({"NF3", make(f, 3, {{0, 0, 1, 1}, {0, 1, 2, 1}}), {false, 2, 3}});
    // e1 e2 = e3 = -e2 e1: Heisenberg, Lie and nilpotent of class 2.
    out.push_back({"heisenberg", make(f, 3, {{0, 1, 2, 1}, {1, 0, 2, -1}}), {true, 0, 2}});
    // e1 e2 = e2 = -e2 e1: solvable, not nilpotent.
    out.push_back({"R2", make(f, 2, {{0, 1, 1, 1}, {1, 0, 1, -1}}), {true, 0, std::nullopt}});
    // e = e1, f = e2, h = e3 with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
    out.push_back({"sl2",
                   make(f, 3,
                        {{0, 1, 2, 1},
                         {1, 0, 2, -1},
                         {2, 0, 0, 2},
                         {0, 2, 0, -2},
                         {2, 1, 1, -2},
                         {1, 2, 1, 2}}),
                   {true, 0, std::nullopt}});
    return out;
}

std::optional<CatalogEntry> catalog_entry(const FieldSpec& f, const std::string& name) {
    for (CatalogEntry& e : catalog(f))
        if (e.name == name) return std::move(e);
    return std::nullopt;
}

LeibnizAlgebra change_of_basis(const LeibnizAlgebra& alg, const Matrix& p) {
    const std::size_t n = alg.dim();
    if (p.rows() != n || p.cols() != n)
        throw DimensionMismatch("change_of_basis: matrix shape does not match the algebra");
    Matrix p_inv = inverse(p); // throws SingularMatrix on bad input
    StructureConstants c(alg.field(), n);
    // New basis vector i is column i of p; products are computed in old
    // coordinates and mapped back.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = p_inv.apply(multiply(alg, p.col(i), p.col(j)));
            for (std::size_t k = 0; k < n; ++k) c.set(i, j, k, prod[k]);
        }
    return LeibnizAlgebra::validate(std::move(c));
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("direct_sum: fields differ");
    const std::size_t na = a.dim(), nb = b.dim();
    StructureConstants c(a.field(), na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) c.set(i, j, k, a.constants().at(i, j, k));
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                c.set(na + i, na + j, na + k, b.constants().at(i, j, k));
    return LeibnizAlgebra::validate(std::move(c));
}

Representation rep_from_ideal(const LeibnizAlgebra& alg, const Subspace& ideal) {
    if (!is_ideal(alg, ideal))
        throw NotAbelianIdeal("rep_from_ideal: the subspace is not an ideal");
    const std::size_t d = ideal.dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s)
            if (!is_zero_vec(multiply(alg, ideal.basis().row(r), ideal.basis().row(s))))
                throw NotAbelianIdeal("rep_from_ideal: the ideal is not abelian");
    // I abelian makes the actions of L on I factor through L/I.
    QuotientAlgebra q = quotient_algebra(alg, ideal);
    QuotientBasis qb = quotient_basis(alg.dim(), ideal);
    const std::size_t m = q.algebra.dim();
    std::vector<Matrix> t, s;
    for (std::size_t i = 0; i < m; ++i) {
        Matrix ti(alg.field(), d, d), si(alg.field(), d, d);
        for (std::size_t c = 0; c < d; ++c) {
            Vec left = multiply(alg, qb.representatives[i], ideal.basis().row(c));
            Vec right = multiply(alg, ideal.basis().row(c), qb.representatives[i]);
            std::optional<Vec> lc = ideal.coordinates(left);
            std::optional<Vec> rc = ideal.coordinates(right);
            if (!lc || !rc)
                throw InternalCheckFailure("ideal is not closed under multiplication");
            for (std::size_t r = 0; r < d; ++r) {
                ti.set(r, c, (*lc)[r]);
                si.set(r, c, (*rc)[r]);
            }
        }
        t.push_back(std::move(ti));
        s.push_back(std::move(si));
    }
    return Representation::validate(q.algebra, std::move(t), std::move(s));
}

std::uint32_t Lcg::next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 33);
}

std::uint64_t Lcg::below(std::uint64_t k) {
    if (k == 0) throw Error("Lcg::below(0)");
    return next() % k;
}

long Lcg::int_in(long lo, long hi) {
    if (hi < lo) throw Error("Lcg::int_in: empty range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar random_small_scalar(Lcg& rng, const FieldSpec& f) {
    if (f.is_prime_field()) return Scalar::of_int(f, rng.int_in(0, f.characteristic() - 1));
    long num = rng.int_in(-3, 3);
    long den = 1 + static_cast<long>(rng.below(2));
    return Scalar::of_int(f, num) / Scalar::of_int(f, den);
}

Vec random_vec(Lcg& rng, const FieldSpec& f, std::size_t n) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_small_scalar(rng, f));
    return v;
}

Vec random_nonzero_vec(Lcg& rng, const FieldSpec& f, std::size_t n) {
    if (n == 0) throw DimensionMismatch("no nonzero vector in a zero space");
    Vec v = random_vec(rng, f, n);
    // Force one coordinate away from zero instead of rejection sampling.
    std::size_t pos = rng.below(n);
    long val;
    if (f.is_prime_field()) {
        val = 1 + rng.int_in(0, f.characteristic() - 2);
    } else {
        long sign = rng.below(2) ? 1 : -1; // drawn before the magnitude on purpose
        val = sign * rng.int_in(1, 3);
    }
    v[pos] = Scalar::of_int(f, val);
    return v;
}

Matrix random_invertible(Lcg& rng, const FieldSpec& f, std::size_t n) {
    // P * unit-lower * unit-upper is invertible by construction.
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    Matrix l = Matrix::identity(f, n), u = Matrix::identity(f, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) {
            l.set(r, c, random_small_scalar(rng, f));
            u.set(c, r, random_small_scalar(rng, f));
        }
    Matrix p(f, n, n);
    for (std::size_t i = 0; i < n; ++i) p.set(perm[i], i, Scalar::one(f));
    return p * l * u;
}

InstanceBounds default_bounds(const FieldSpec&) {
    return InstanceBounds{5, 1, 1};
}

InstanceSet random_instances(std::uint64_t seed, const FieldSpec& f, const InstanceBounds& bounds) {
    Lcg rng(seed);
    InstanceSet out;
    std::vector<CatalogEntry> base = catalog(f);

    if (bounds.compositions == 0) {
        for (const CatalogEntry& e : base)
            if (e.algebra.dim() <= bounds.max_dim) out.algebras.push_back({e.name, e.algebra});
        return out;
    }

    for (const CatalogEntry& e : base) {
        if (e.algebra.dim() > bounds.max_dim) continue;
        out.algebras.push_back({e.name, e.algebra});
        for (std::size_t v = 0; v < bounds.variations; ++v) {
            Matrix p = random_invertible(rng, f, e.algebra.dim());
            out.algebras.push_back({e.name + "#b" + std::to_string(v + 1),
                                    change_of_basis(e.algebra, p)});
        }
    }
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i; j < base.size(); ++j) {
            if (base[i].algebra.dim() + base[j].algebra.dim() > bounds.max_dim) continue;
            out.algebras.push_back({base[i].name + "+" + base[j].name,
                                    direct_sum(base[i].algebra, base[j].algebra)});
        }
    for (const CatalogEntry& e : base) {
        Subspace leib = leibniz_kernel(e.algebra);
        if (!leib.is_zero() && !leib.is_full())
            out.algebras.push_back({e.name + "/leib",
                                    quotient_algebra(e.algebra, leib).algebra});
    }

    // Representations are derived from the base entries only; the split
    // extensions behind regular bimodules get big fast.
    for (const CatalogEntry& e : base) {
        out.reps.push_back({e.name + ":reg", regular_bimodule(e.algebra)});
        out.reps.push_back({e.name + ":triv1", trivial_representation(e.algebra, 1)});
    }
    for (const char* name : {"A2", "NF3"}) {
        const CatalogEntry& e = *std::find_if(base.begin(), base.end(),
                                              [&](const CatalogEntry& x) { return x.name == name; });
        out.reps.push_back({std::string(name) + ":leib", rep_from_ideal(e.algebra, leibniz_kernel(e.algebra))});
    }
    return out;
}

} // namespace engellab
