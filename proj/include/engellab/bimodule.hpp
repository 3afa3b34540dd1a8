#pragma once

// Bimodules (V, S, T) over a Leibniz algebra: T[i] is the left action of
// e_i on V, S[i] the right action. The representation axioms are *defined*
// as "the split extension of V by L is a Leibniz algebra"; the three
// operator identities that definition forces,
//     T_{ab} = [T_a, T_b],   S_{ab} = [T_a, S_b],   S_b S_a = -S_b T_a,
// are kept as a redundant cross-check and any disagreement between the two
// routes is an InternalCheckFailure.

#include <cstddef>
#include <optional>
#include <vector>

#include "engellab/algebra.hpp"

namespace engellab {

struct NotARepresentation : Error {
    NotARepresentation(std::string axiom, std::size_t i, std::size_t j,
                       const std::string& detail);
    std::string axiom;
    std::size_t i, j;
};

struct NotInvariant : Error {
    using Error::Error;
};

class Representation {
public:
    // The one constructor; throws NotARepresentation when the split
    // extension fails to validate.
    static Representation validate(LeibnizAlgebra algebra,
                                   std::vector<Matrix> t,
                                   std::vector<Matrix> s);

    const LeibnizAlgebra& algebra() const { return algebra_; }
    std::size_t alg_dim() const { return algebra_.dim(); }
    std::size_t mod_dim() const { return mod_dim_; }
    const FieldSpec& field() const { return algebra_.field(); }
    const std::vector<Matrix>& t_mats() const { return t_; }
    const std::vector<Matrix>& s_mats() const { return s_; }
    const Matrix& t(std::size_t i) const { return t_.at(i); }
    const Matrix& s(std::size_t i) const { return s_.at(i); }

    // T_a = sum a_i T[i]; linear in a. Likewise s_of.
    Matrix t_of(const Vec& a) const;
    Matrix s_of(const Vec& a) const;

private:
    Representation(LeibnizAlgebra algebra, std::size_t mod_dim,
                   std::vector<Matrix> t, std::vector<Matrix> s);

    LeibnizAlgebra algebra_;
    std::size_t mod_dim_;
    std::vector<Matrix> t_, s_;
};

// Structure constants of the split extension X of V by L on the ordered
// basis (e_1..e_n, f_1..f_m): algebra block first, module block trailing.
// Works on raw (T, S) candidates; validity of the result is exactly the
// representation-axiom check.
StructureConstants split_extension_constants(const LeibnizAlgebra& alg,
                                             const std::vector<Matrix>& t,
                                             const std::vector<Matrix>& s);

// Split extension of a validated representation; always validates.
LeibnizAlgebra split_extension(const Representation& rep);

// True on the raw candidate iff the three operator identities hold; this is
// the independent second route used by validate and by the test suites.
bool satisfies_operator_axioms(const LeibnizAlgebra& alg,
                               const std::vector<Matrix>& t,
                               const std::vector<Matrix>& s);

// Centraliser of V in L: {a : T_a = 0 and S_a = 0}, the kernel of the
// representation.
Subspace centraliser(const Representation& rep);
bool is_faithful(const Representation& rep);

struct SubmoduleWitness {
    Subspace subspace;
    Vec generator;
    bool proper; // 0 < dim < mod_dim
};

// Smallest subspace containing v invariant under every T[i] and S[i]
// (worklist closure).
SubmoduleWitness spin(const Representation& rep, const Vec& v);

// Over F_p: spins one representative per line of V; a miss certifies
// irreducibility. Over Q: heuristic only (standard basis vectors, their
// pairwise sums, and the common T/S kernels); a miss is "no witness found".
std::optional<SubmoduleWitness> find_proper_submodule(const Representation& rep);

Representation sub_representation(const Representation& rep, const SubmoduleWitness& w);
Representation quotient_representation(const Representation& rep, const SubmoduleWitness& w);

// Intersection of all operator kernels: {v : T_a v = S_a v = 0 for all a}.
Subspace common_null_space(const Representation& rep);

// V = L with T = left and S = right multiplication.
Representation regular_bimodule(const LeibnizAlgebra& alg);

// T = S = 0 on an m-dimensional module.
Representation trivial_representation(const LeibnizAlgebra& alg, std::size_t m);

} // namespace engellab
