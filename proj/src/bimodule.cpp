#include "engellab/bimodule.hpp"

#include <deque>
#include <sstream>

namespace engellab {

namespace {

std::string axiom_message(const std::string& axiom, std::size_t i, std::size_t j,
                          const std::string& detail) {
    std::ostringstream out;
    out << "representation axiom '" << axiom << "' fails at basis pair (" << i << ", " << j
        << ")";
    if (!detail.empty()) out << ": " << detail;
    return out.str();
}

// T_a or S_a for a basis-coefficient vector, as sum a_i * mats[i].
Matrix combine(const std::vector<Matrix>& mats, const Vec& a,
               const FieldSpec& field, std::size_t m) {
    Matrix r(field, m, m);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (a[i].is_zero()) continue;
        r = r + mats[i].scaled(a[i]);
    }
    return r;
}

struct AxiomFailure {
    std::string axiom;
    std::size_t i, j;
    std::string detail;
};

// First operator identity that fails, in a fixed scan order, or nullopt.
std::optional<AxiomFailure> first_axiom_failure(const LeibnizAlgebra& alg,
                                                const std::vector<Matrix>& t,
                                                const std::vector<Matrix>& s,
                                                std::size_t m) {
    const std::size_t n = alg.dim();
    const FieldSpec& f = alg.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = alg.constants().basis_product(i, j);
            Matrix t_prod = combine(t, prod, f, m);
            Matrix s_prod = combine(s, prod, f, m);
            if (t_prod != t[i] * t[j] - t[j] * t[i])
                return AxiomFailure{"T[ab] = T_a T_b - T_b T_a", i, j,
                                    "T of e" + std::to_string(i) + "e" + std::to_string(j) +
                                        " differs from the commutator"};
            if (s_prod != t[i] * s[j] - s[j] * t[i])
                return AxiomFailure{"S[ab] = T_a S_b - S_b T_a", i, j,
                                    "S of e" + std::to_string(i) + "e" + std::to_string(j) +
                                        " differs from the mixed commutator"};
            if (s[j] * s[i] != -(s[j] * t[i]))
                return AxiomFailure{"S_b S_a = -S_b T_a", i, j,
                                    "right actions do not satisfy the square-kill identity"};
        }
    return std::nullopt;
}

} // namespace

NotARepresentation::NotARepresentation(std::string axiom_, std::size_t i_, std::size_t j_,
                                       const std::string& detail)
    : Error(axiom_message(axiom_, i_, j_, detail)), axiom(std::move(axiom_)), i(i_), j(j_) {}

Representation::Representation(LeibnizAlgebra algebra, std::size_t mod_dim,
                               std::vector<Matrix> t, std::vector<Matrix> s)
    : algebra_(std::move(algebra)), mod_dim_(mod_dim), t_(std::move(t)), s_(std::move(s)) {}

Representation Representation::validate(LeibnizAlgebra algebra,
                                        std::vector<Matrix> t,
                                        std::vector<Matrix> s) {
    const std::size_t n = algebra.dim();
    if (t.size() != n || s.size() != n)
        throw DimensionMismatch("expected one T and one S matrix per algebra basis element");
    const std::size_t m = t.empty() ? 0 : t[0].rows();
    for (const auto* fam : {&t, &s})
        for (const Matrix& mat : *fam) {
            if (mat.rows() != m || mat.cols() != m)
                throw DimensionMismatch("action matrices must all be m x m");
            if (!(mat.field() == algebra.field()))
                throw FieldMismatch("action matrix field differs from the algebra field");
        }

    // Route 1: the defining property — the split extension satisfies the
    // Leibniz identity.
    bool split_ok = true;
    try {
        LeibnizAlgebra::validate(split_extension_constants(algebra, t, s));
    } catch (const IdentityViolation&) {
        split_ok = false;
    }
    // Route 2: the equivalent operator identities, derived independently.
    std::optional<AxiomFailure> fail = first_axiom_failure(algebra, t, s, m);
    if (split_ok && fail)
        throw InternalCheckFailure("split extension validates but operator axiom '" +
                                   fail->axiom + "' fails");
    if (!split_ok && !fail)
        throw InternalCheckFailure(
            "operator axioms hold but the split extension violates the Leibniz identity");
    if (fail) throw NotARepresentation(fail->axiom, fail->i, fail->j, fail->detail);
    return Representation(std::move(algebra), m, std::move(t), std::move(s));
}

Matrix Representation::t_of(const Vec& a) const {
    if (a.size() != alg_dim()) throw DimensionMismatch("t_of: wrong coefficient count");
    return combine(t_, a, field(), mod_dim_);
}

Matrix Representation::s_of(const Vec& a) const {
    if (a.size() != alg_dim()) throw DimensionMismatch("s_of: wrong coefficient count");
    return combine(s_, a, field(), mod_dim_);
}

StructureConstants split_extension_constants(const LeibnizAlgebra& alg,
                                             const std::vector<Matrix>& t,
                                             const std::vector<Matrix>& s) {
    const std::size_t n = alg.dim();
    const std::size_t m = t.empty() ? 0 : t[0].rows();
    StructureConstants c(alg.field(), n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c.set(i, j, k, alg.constants().at(i, j, k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                c.set(i, n + j, n + k, t[i].at(k, j)); // e_i . f_j
                c.set(n + j, i, n + k, s[i].at(k, j)); // f_j . e_i
            }
    return c;
}

LeibnizAlgebra split_extension(const Representation& rep) {
    try {
        return LeibnizAlgebra::validate(
            split_extension_constants(rep.algebra(), rep.t_mats(), rep.s_mats()));
    } catch (const IdentityViolation& v) {
        throw InternalCheckFailure(
            std::string("split extension of a validated representation failed: ") + v.what());
    }
}

bool satisfies_operator_axioms(const LeibnizAlgebra& alg,
                               const std::vector<Matrix>& t,
                               const std::vector<Matrix>& s) {
    const std::size_t m = t.empty() ? 0 : t[0].rows();
    return !first_axiom_failure(alg, t, s, m).has_value();
}

Subspace centraliser(const Representation& rep) {
    const std::size_t n = rep.alg_dim(), m = rep.mod_dim();
    // Column i holds vec(T[i]) stacked on vec(S[i]); the kernel of the map
    // a -> (T_a, S_a) is exactly the centraliser.
    Matrix stacked(rep.field(), 2 * m * m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                stacked.set(r * m + c, i, rep.t(i).at(r, c));
                stacked.set(m * m + r * m + c, i, rep.s(i).at(r, c));
            }
    return kernel(stacked);
}

bool is_faithful(const Representation& rep) {
    return centraliser(rep).is_zero();
}

SubmoduleWitness spin(const Representation& rep, const Vec& v) {
    if (v.size() != rep.mod_dim()) throw DimensionMismatch("spin: vector outside the module");
    const FieldSpec& f = rep.field();
    Subspace w = Subspace::row_span(f, rep.mod_dim(), {v});
    std::deque<Vec> todo;
    if (!is_zero_vec(v)) todo.push_back(v);
    while (!todo.empty()) {
        Vec x = std::move(todo.front());
        todo.pop_front();
        for (const auto* fam : {&rep.t_mats(), &rep.s_mats()})
            for (const Matrix& mat : *fam) {
                Vec y = mat.apply(x);
                if (!w.contains(y)) {
                    w = sum(w, Subspace::row_span(f, rep.mod_dim(), {y}));
                    todo.push_back(std::move(y));
                }
            }
    }
    bool proper = w.dim() > 0 && w.dim() < rep.mod_dim();
    return SubmoduleWitness{std::move(w), v, proper};
}

namespace {

// Canonical line representatives of F_p^m: first nonzero coordinate 1,
// ordered by leading index then lexicographically on the tail.
template <typename Fn>
void for_each_line(const FieldSpec& f, std::size_t m, Fn&& fn) {
    const long p = f.characteristic();
    for (std::size_t lead = 0; lead < m; ++lead) {
        std::vector<long> tail(m - lead - 1, 0);
        while (true) {
            Vec v = zero_vec(f, m);
            v[lead] = Scalar::one(f);
            for (std::size_t i = 0; i < tail.size(); ++i)
                v[lead + 1 + i] = Scalar::of_int(f, tail[i]);
            if (fn(v)) return;
            // Odometer increment, most significant digit first.
            std::size_t pos = tail.size();
            while (pos > 0) {
                if (++tail[pos - 1] < p) break;
                tail[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
}

} // namespace

std::optional<SubmoduleWitness> find_proper_submodule(const Representation& rep) {
    const std::size_t m = rep.mod_dim();
    if (m == 0) return std::nullopt;
    std::optional<SubmoduleWitness> found;
    if (rep.field().is_prime_field()) {
        // Any nonzero submodule contains a full line, so spinning every line
        // representative is a complete search: a miss certifies
        // irreducibility.
        for_each_line(rep.field(), m, [&](const Vec& v) {
            SubmoduleWitness w = spin(rep, v);
            if (w.proper) {
                found = std::move(w);
                return true;
            }
            return false;
        });
        return found;
    }
    // Over Q the line set is infinite; try a fixed candidate list.
    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < m; ++i) candidates.push_back(unit_vec(rep.field(), m, i));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            candidates.push_back(add(unit_vec(rep.field(), m, i), unit_vec(rep.field(), m, j)));
    Subspace null_space = common_null_space(rep);
    for (std::size_t r = 0; r < null_space.dim(); ++r)
        candidates.push_back(null_space.basis().row(r));
    for (const Vec& v : candidates) {
        SubmoduleWitness w = spin(rep, v);
        if (w.proper) return w;
    }
    return std::nullopt;
}

Representation sub_representation(const Representation& rep, const SubmoduleWitness& w) {
    const Subspace& sub = w.subspace;
    if (sub.ambient_dim() != rep.mod_dim())
        throw DimensionMismatch("sub_representation: witness lives in the wrong module");
    const std::size_t n = rep.alg_dim(), d = sub.dim();
    std::vector<Matrix> t, s;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix ti(rep.field(), d, d), si(rep.field(), d, d);
        for (std::size_t c = 0; c < d; ++c) {
            for (auto [mat, out] : {std::pair{&rep.t(i), &ti}, std::pair{&rep.s(i), &si}}) {
                Vec img = mat->apply(sub.basis().row(c));
                std::optional<Vec> coords = sub.coordinates(img);
                if (!coords)
                    throw NotInvariant("subspace is not invariant under the action of e" +
                                       std::to_string(i));
                for (std::size_t r = 0; r < d; ++r) out->set(r, c, (*coords)[r]);
            }
        }
        t.push_back(std::move(ti));
        s.push_back(std::move(si));
    }
    return Representation::validate(rep.algebra(), std::move(t), std::move(s));
}

Representation quotient_representation(const Representation& rep, const SubmoduleWitness& w) {
    const Subspace& sub = w.subspace;
    if (sub.ambient_dim() != rep.mod_dim())
        throw DimensionMismatch("quotient_representation: witness lives in the wrong module");
    const std::size_t n = rep.alg_dim();
    // Invariance first: the induced operators are only well defined on V/W
    // when W is stable under every action.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < sub.dim(); ++r) {
            if (!sub.contains(rep.t(i).apply(sub.basis().row(r))) ||
                !sub.contains(rep.s(i).apply(sub.basis().row(r))))
                throw NotInvariant("subspace is not invariant under the action of e" +
                                   std::to_string(i));
        }
    QuotientBasis q = quotient_basis(rep.mod_dim(), sub);
    Matrix lift(rep.field(), rep.mod_dim(), q.representatives.size());
    for (std::size_t c = 0; c < q.representatives.size(); ++c)
        for (std::size_t r = 0; r < rep.mod_dim(); ++r)
            lift.set(r, c, q.representatives[c][r]);
    std::vector<Matrix> t, s;
    for (std::size_t i = 0; i < n; ++i) {
        t.push_back(q.projection * rep.t(i) * lift);
        s.push_back(q.projection * rep.s(i) * lift);
    }
    return Representation::validate(rep.algebra(), std::move(t), std::move(s));
}

Subspace common_null_space(const Representation& rep) {
    const std::size_t n = rep.alg_dim(), m = rep.mod_dim();
    Matrix stacked(rep.field(), 2 * n * m, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                stacked.set(i * m + r, c, rep.t(i).at(r, c));
                stacked.set(n * m + i * m + r, c, rep.s(i).at(r, c));
            }
    return kernel(stacked);
}

Representation regular_bimodule(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<Matrix> t, s;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = unit_vec(alg.field(), n, i);
        t.push_back(left_mult_matrix(alg, e));
        s.push_back(right_mult_matrix(alg, e));
    }
    return Representation::validate(alg, std::move(t), std::move(s));
}

Representation trivial_representation(const LeibnizAlgebra& alg, std::size_t m) {
    std::vector<Matrix> t(alg.dim(), Matrix(alg.field(), m, m));
    std::vector<Matrix> s(alg.dim(), Matrix(alg.field(), m, m));
    return Representation::validate(alg, std::move(t), std::move(s));
}

} // namespace engellab
