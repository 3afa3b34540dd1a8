#pragma once

// Flag certificates: the finite, machine-checkable witnesses behind every
// "nilpotent for all a" statement. A certificate is a strictly increasing
// chain 0 = W_0 < W_1 < ... < W_r = V with T_a W_{k+1} <= W_k for every a
// (and S_a too when uses_s); its existence is equivalent to simultaneous
// strict triangularizability of the whole operator family.

#include <cstddef>
#include <optional>
#include <vector>

#include "engellab/bimodule.hpp"

namespace engellab {

struct FlagCertificate {
    std::size_t mod_dim;
    std::vector<Subspace> chain; // [0, ..., full], strictly increasing
    // Invertible; columns are the adapted basis vectors in descending block
    // order (top layer first, W_1 last), so every covered operator becomes
    // strictly block-lower-triangular under conjugation.
    Matrix change_of_basis;
    bool uses_s;

    std::vector<std::size_t> chain_dims() const;
};

struct FlagFailure {
    // Index of the last chain term built before the common kernel came out
    // zero; residual is the canonical complement of that term (what is left
    // of V unprocessed).
    std::size_t stage;
    Subspace residual;
};

// Exactly one of the two members is set; absence of a certificate is a
// value, not an error.
struct FlagSearch {
    std::optional<FlagCertificate> certificate;
    std::optional<FlagFailure> failure;
};

// Certificate for the family {T[i]} alone. Succeeds iff every T_a is
// nilpotent (Engel for the Lie family T).
FlagSearch t_flag(const Representation& rep);
// Same construction with both families; the kernel at each stage is the
// common null space of the quotient actions.
FlagSearch full_flag(const Representation& rep);

// First basis row of the first nonzero term of full_flag's chain; a nonzero
// vector killed by every T[i] and S[i]. None iff full_flag fails (or V = 0).
std::optional<Vec> engel_witness(const Representation& rep);

// Conjugate op into the certificate's adapted basis.
Matrix in_adapted_basis(const FlagCertificate& cert, const Matrix& op);
// Check strict block-lower-triangularity of a matrix already in adapted
// coordinates, against the certificate's block sizes.
bool is_strictly_block_lower(const FlagCertificate& cert, const Matrix& adapted);

struct EngelReport {
    bool t_nilpotent;
    std::optional<bool> s_nilpotent; // unset when the T hypothesis fails
    std::optional<Vec> witness;
    std::optional<FlagCertificate> t_certificate;
    std::optional<FlagCertificate> flag; // the full (T and S) certificate
    std::optional<FlagFailure> failure_point;
    bool theorem_violated; // t_flag succeeded but full_flag stalled
};
EngelReport engel_report(const Representation& rep);

struct AlgebraEngelReport {
    bool certificate_found;
    std::optional<FlagCertificate> flag; // on the regular bimodule, T family
    std::optional<FlagFailure> failure_point;
    NilpotencyVerdict nilpotency;
    // Certificate without nilpotency or vice versa; never expected.
    bool theorem_violated;
};
// Runs t_flag on the regular bimodule (the d_a family) and cross-checks the
// verdict against the lower central series.
AlgebraEngelReport check_engel_algebra(const LeibnizAlgebra& alg);

struct NotIrreducible : Error {
    explicit NotIrreducible(SubmoduleWitness w);
    SubmoduleWitness witness;
};

enum class IrredBranch { antisymmetric, symmetric, neither };
const char* branch_name(IrredBranch b);

struct IrredReport {
    // True when irreducibility was certified by line enumeration (F_p) or
    // m = 1; over Q with m > 1 it is caller-asserted after the heuristic
    // search found nothing.
    bool certified;
    std::size_t centraliser_dim;
    std::size_t quotient_dim;
    bool quotient_is_lie;
    IrredBranch branch;
    bool theorem_violated; // quotient not Lie, or neither branch
};

// Checks the irreducible-bimodule structure statement: L modulo the
// centraliser is Lie, and either VL = 0 (all S[i] zero) or vx = -xv
// (S[i] = -T[i] throughout). Throws NotIrreducible when a proper submodule
// is found (or V = 0).
IrredReport verify_irred_theorem(const Representation& rep);

} // namespace engellab
