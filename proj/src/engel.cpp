#include "engellab/engel.hpp"

#include <sstream>

namespace engellab {

std::vector<std::size_t> FlagCertificate::chain_dims() const {
    std::vector<std::size_t> d;
    d.reserve(chain.size());
    for (const Subspace& w : chain) d.push_back(w.dim());
    return d;
}

namespace {

// Kernel common to every matrix in the family; the empty family pins down
// nothing, so its common kernel is the whole space.
Subspace common_kernel(const std::vector<Matrix>& family, const FieldSpec& f, std::size_t q) {
    Matrix stacked(f, family.size() * q, q);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < q; ++c) stacked.set(i * q + r, c, family[i].at(r, c));
    return kernel(stacked);
}

Matrix lift_matrix(const FieldSpec& f, std::size_t ambient, const QuotientBasis& qb) {
    Matrix lift(f, ambient, qb.representatives.size());
    for (std::size_t c = 0; c < qb.representatives.size(); ++c)
        for (std::size_t r = 0; r < ambient; ++r) lift.set(r, c, qb.representatives[c][r]);
    return lift;
}

// In RREF the set of leading indices of nonzero vectors equals the pivot
// set, and W' <= W forces pivots(W') <= pivots(W); the basis vectors of W
// whose lead is new relative to W' therefore complete W' to W.
std::vector<Vec> layer_rows(const Subspace& larger, const Subspace& smaller) {
    std::vector<Vec> rows;
    std::vector<bool> old_pivot(larger.ambient_dim(), false);
    for (std::size_t p : smaller.pivots()) old_pivot[p] = true;
    for (std::size_t r = 0; r < larger.dim(); ++r)
        if (!old_pivot[larger.pivots()[r]]) rows.push_back(larger.basis().row(r));
    return rows;
}

Matrix adapted_basis_columns(const FieldSpec& f, std::size_t m,
                             const std::vector<Subspace>& chain) {
    Matrix b(f, m, m);
    std::size_t col = 0;
    // Top layer first: a covered operator maps block k into blocks placed
    // strictly later, which is exactly strict block-lower-triangularity.
    for (std::size_t k = chain.size(); k-- > 1;) {
        for (const Vec& v : layer_rows(chain[k], chain[k - 1])) {
            for (std::size_t r = 0; r < m; ++r) b.set(r, col, v[r]);
            ++col;
        }
    }
    if (col != m)
        throw InternalCheckFailure("flag layers do not add up to the module dimension");
    return b;
}

FlagSearch build_flag(const Representation& rep, bool use_s) {
    const FieldSpec& f = rep.field();
    const std::size_t m = rep.mod_dim();
    std::vector<Matrix> family = rep.t_mats();
    if (use_s)
        for (const Matrix& si : rep.s_mats()) family.push_back(si);

    std::vector<Subspace> chain{Subspace::zero(f, m)};
    while (!chain.back().is_full()) {
        const Subspace& w = chain.back();
        QuotientBasis qb = quotient_basis(m, w);
        Matrix lift = lift_matrix(f, m, qb);
        // Induced operators on V/W; well defined because the loop invariant
        // M . W_k <= W_{k-1} holds by construction.
        std::vector<Matrix> induced;
        induced.reserve(family.size());
        for (const Matrix& mat : family) induced.push_back(qb.projection * mat * lift);
        Subspace k = common_kernel(induced, f, m - w.dim());
        if (k.is_zero()) {
            Subspace residual = Subspace::row_span(f, m, qb.representatives);
            return FlagSearch{std::nullopt, FlagFailure{chain.size() - 1, std::move(residual)}};
        }
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < w.dim(); ++r) rows.push_back(w.basis().row(r));
        for (std::size_t r = 0; r < k.dim(); ++r) rows.push_back(lift.apply(k.basis().row(r)));
        chain.push_back(Subspace::row_span(f, m, rows));
    }
    Matrix b = adapted_basis_columns(f, m, chain);
    return FlagSearch{FlagCertificate{m, std::move(chain), std::move(b), use_s}, std::nullopt};
}

} // namespace

FlagSearch t_flag(const Representation& rep) {
    return build_flag(rep, false);
}

FlagSearch full_flag(const Representation& rep) {
    return build_flag(rep, true);
}

std::optional<Vec> engel_witness(const Representation& rep) {
    if (rep.mod_dim() == 0) return std::nullopt;
    FlagSearch s = full_flag(rep);
    if (!s.certificate) return std::nullopt;
    return s.certificate->chain[1].basis().row(0);
}

Matrix in_adapted_basis(const FlagCertificate& cert, const Matrix& op) {
    return inverse(cert.change_of_basis) * op * cert.change_of_basis;
}

bool is_strictly_block_lower(const FlagCertificate& cert, const Matrix& adapted) {
    // Column-order block sizes: top layer first, matching change_of_basis.
    std::vector<std::size_t> dims = cert.chain_dims();
    std::vector<std::size_t> sizes;
    for (std::size_t k = dims.size(); k-- > 1;) sizes.push_back(dims[k] - dims[k - 1]);
    std::vector<std::size_t> block_of(cert.mod_dim);
    std::size_t idx = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (std::size_t i = 0; i < sizes[b]; ++i) block_of[idx++] = b;
    for (std::size_t r = 0; r < cert.mod_dim; ++r)
        for (std::size_t c = 0; c < cert.mod_dim; ++c)
            if (block_of[r] <= block_of[c] && !adapted.at(r, c).is_zero()) return false;
    return true;
}

EngelReport engel_report(const Representation& rep) {
    EngelReport r{false, std::nullopt, std::nullopt, std::nullopt,
                  std::nullopt, std::nullopt, false};
    FlagSearch t = t_flag(rep);
    if (!t.certificate) {
        r.failure_point = std::move(t.failure);
        return r;
    }
    r.t_nilpotent = true;
    r.t_certificate = std::move(t.certificate);
    FlagSearch full = full_flag(rep);
    if (full.certificate) {
        r.s_nilpotent = true;
        if (rep.mod_dim() > 0) r.witness = full.certificate->chain[1].basis().row(0);
        r.flag = std::move(full.certificate);
    } else {
        // The whole point of the theorem is that this branch is dead.
        r.failure_point = std::move(full.failure);
        r.theorem_violated = true;
    }
    return r;
}

AlgebraEngelReport check_engel_algebra(const LeibnizAlgebra& alg) {
    Representation reg = regular_bimodule(alg);
    FlagSearch s = t_flag(reg);
    NilpotencyVerdict v = is_nilpotent_algebra(alg);
    AlgebraEngelReport r{s.certificate.has_value(), std::move(s.certificate),
                         std::move(s.failure), v, false};
    // A flag for the left-multiplication family exists iff the algebra is
    // nilpotent; the two verdicts come from independent computations.
    r.theorem_violated = (r.certificate_found != v.nilpotent);
    return r;
}

namespace {

std::string irred_message(const SubmoduleWitness& w) {
    if (w.subspace.ambient_dim() == 0) return "the zero module is not irreducible";
    std::ostringstream out;
    out << "module is not irreducible: the invariant subspace " << w.subspace.str()
        << " of dimension " << w.subspace.dim() << " generated by " << vec_str(w.generator)
        << " is proper and nonzero";
    return out.str();
}

} // namespace

NotIrreducible::NotIrreducible(SubmoduleWitness w)
    : Error(irred_message(w)), witness(std::move(w)) {}

const char* branch_name(IrredBranch b) {
    switch (b) {
        case IrredBranch::antisymmetric: return "antisymmetric";
        case IrredBranch::symmetric: return "symmetric";
        case IrredBranch::neither: return "neither";
    }
    return "?";
}

IrredReport verify_irred_theorem(const Representation& rep) {
    const std::size_t m = rep.mod_dim();
    if (m == 0)
        throw NotIrreducible(SubmoduleWitness{Subspace::zero(rep.field(), 0), Vec{}, false});
    if (std::optional<SubmoduleWitness> w = find_proper_submodule(rep))
        throw NotIrreducible(std::move(*w));
    bool certified = rep.field().is_prime_field() || m == 1;

    Subspace c = centraliser(rep);
    QuotientAlgebra q = quotient_algebra(rep.algebra(), c);

    bool all_s_zero = true, s_is_minus_t = true;
    for (std::size_t i = 0; i < rep.alg_dim(); ++i) {
        if (!rep.s(i).is_zero()) all_s_zero = false;
        if (rep.s(i) != -rep.t(i)) s_is_minus_t = false;
    }
    IrredBranch branch = all_s_zero            ? IrredBranch::antisymmetric
                         : s_is_minus_t        ? IrredBranch::symmetric
                                               : IrredBranch::neither;
    bool lie = is_lie(q.algebra);
    return IrredReport{certified, c.dim(), q.algebra.dim(), lie, branch,
                       !lie || branch == IrredBranch::neither};
}

} // namespace engellab
