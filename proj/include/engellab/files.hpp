#pragma once

// JSON file formats for algebras and representations.
//
// Algebra file:   {"dim": n, "field": "Q" | {"Fp": p},
//                  "products": [[i, j, k, "c"], ...]}   (sparse, 0-based)
// Rep file:       {"dim": m, "T": [n m-by-m string matrices], "S": [...]}
//
// Scalars are strings: "a/b" reduced with b > 0 ("/1" omitted) over Q, the
// canonical residue "r" over F_p. Parsing accepts any integer-pair fraction
// and re-canonicalises; serialisation always emits the canonical form.

#include <string>
#include <utility>

#include "engellab/bimodule.hpp"

namespace engellab {

struct AlgebraFile {
    FieldSpec field;
    StructureConstants constants;
};

// Throws ParseError on malformed input (bad JSON, out-of-range indices,
// duplicate (i,j,k) entries, unparseable scalars). Does NOT check the
// Leibniz identity; that is LeibnizAlgebra::validate's job.
AlgebraFile parse_algebra_file(const std::string& text);
std::string serialize_algebra_file(const LeibnizAlgebra& alg);
std::string serialize_constants_file(const FieldSpec& field, const StructureConstants& c);

struct RepFile {
    std::size_t mod_dim;
    std::vector<Matrix> t;
    std::vector<Matrix> s;
};

// `alg_dim` fixes the expected number of T/S matrices; the field comes from
// the accompanying algebra. Axioms are checked by Representation::validate.
RepFile parse_rep_file(const std::string& text, const FieldSpec& field, std::size_t alg_dim);
std::string serialize_rep_file(const Representation& rep);

std::string read_file(const std::string& path);  // throws IoError
void write_file(const std::string& path, const std::string& content);

} // namespace engellab
