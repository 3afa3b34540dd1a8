#pragma once

// Known algebras with frozen invariants, plus identity-preserving instance
// generators. Random structure constants almost never satisfy the Leibniz
// identity, so every generated instance is built from catalog entries by
// basis change, direct sum, quotients and ideal-derived representations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "engellab/bimodule.hpp"

namespace engellab {

struct ExpectedInvariants {
    bool lie;
    std::size_t leib_dim;
    std::optional<std::size_t> nilpotency_class; // unset: not nilpotent
};

struct CatalogEntry {
    std::string name;
    LeibnizAlgebra algebra;
    ExpectedInvariants expected;
};

// abelian1..3, A2 (e1e1=e2), NF3 (e1e1=e2, e1e2=e3), heisenberg, R2
// (solvable non-nilpotent), sl2.
std::vector<CatalogEntry> catalog(const FieldSpec& field);
std::optional<CatalogEntry> catalog_entry(const FieldSpec& field, const std::string& name);

// Pull the product back along e -> p.e; an isomorphism, so the result always
// validates and all invariants are preserved.
LeibnizAlgebra change_of_basis(const LeibnizAlgebra& alg, const Matrix& p);

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

struct NotAbelianIdeal : Error {
    using Error::Error;
};

// Carves a representation out of an abelian ideal: the quotient L/v acts on
// v by left and right multiplication. Inverse of split_extension when v is
// the trailing module block.
Representation rep_from_ideal(const LeibnizAlgebra& alg, const Subspace& ideal);

// Deterministic generator with a fixed, documented contract: the MMIX
// linear congruential sequence state <- state*6364136223846793005 +
// 1442695040888963407 (mod 2^64), output = top 32 bits.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint32_t next();
    // Uniform-ish value in [0, k); k must be positive and small.
    std::uint64_t below(std::uint64_t k);
    long int_in(long lo, long hi); // inclusive bounds
private:
    std::uint64_t state_;
};

Scalar random_small_scalar(Lcg& rng, const FieldSpec& field);
Vec random_vec(Lcg& rng, const FieldSpec& field, std::size_t n);
Vec random_nonzero_vec(Lcg& rng, const FieldSpec& field, std::size_t n);
// Built as P*unit_lower*unit_upper, so no rejection loop is needed.
Matrix random_invertible(Lcg& rng, const FieldSpec& field, std::size_t n);

struct NamedAlgebra {
    std::string name;
    LeibnizAlgebra algebra;
};
struct NamedRep {
    std::string name;
    Representation rep;
};
struct InstanceBounds {
    std::size_t max_dim;      // cap on algebra dimensions (direct sums obey it)
    std::size_t variations;   // basis-change variants per catalog entry
    std::size_t compositions; // 0: emit the catalog unchanged and nothing else
};
struct InstanceSet {
    std::vector<NamedAlgebra> algebras;
    std::vector<NamedRep> reps;
};

InstanceBounds default_bounds(const FieldSpec& field);

// Deterministic for a fixed seed; every emitted object validates.
InstanceSet random_instances(std::uint64_t seed, const FieldSpec& field,
                             const InstanceBounds& bounds);

} // namespace engellab
