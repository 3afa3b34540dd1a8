#pragma once

// Brute-force reference implementations used to pin down the clever code
// paths. Everything here is deliberately naive.

#include "engellab/bimodule.hpp"

namespace engellab::oracle {

// Nilpotency by direct power iteration m, m^2, ..., m^n.
inline bool nilpotent_by_powers(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("oracle: non-square");
    if (m.rows() == 0) return true;
    Matrix p = m;
    for (std::size_t k = 1; k < m.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * m;
    }
    return p.is_zero();
}

// Every coefficient vector over F_p, in odometer order.
template <typename Fn>
inline void for_each_fp_vector(const FieldSpec& f, std::size_t n, Fn&& fn) {
    const long p = f.characteristic();
    std::vector<long> digits(n, 0);
    while (true) {
        Vec v = zero_vec(f, n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::of_int(f, digits[i]);
        fn(v);
        std::size_t pos = 0;
        while (pos < n) {
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
}

// "All T_a nilpotent" decided by exhaustive enumeration over F_p^n.
inline bool all_t_nilpotent_by_enumeration(const Representation& rep) {
    bool all = true;
    for_each_fp_vector(rep.field(), rep.alg_dim(), [&](const Vec& a) {
        if (all && !nilpotent_by_powers(rep.t_of(a))) all = false;
    });
    return all;
}

// The annihilated set {v : T[i] v = S[i] v = 0 for all i}, found by testing
// every vector of F_p^m and spanning the hits.
inline Subspace annihilated_by_enumeration(const Representation& rep) {
    std::vector<Vec> hits;
    for_each_fp_vector(rep.field(), rep.mod_dim(), [&](const Vec& v) {
        for (std::size_t i = 0; i < rep.alg_dim(); ++i) {
            if (!is_zero_vec(rep.t(i).apply(v))) return;
            if (!is_zero_vec(rep.s(i).apply(v))) return;
        }
        hits.push_back(v);
    });
    return Subspace::row_span(rep.field(), rep.mod_dim(), hits);
}

} // namespace engellab::oracle
