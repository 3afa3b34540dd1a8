#pragma once

#include <initializer_list>

#include "engellab/subspace.hpp"

namespace engellab::testutil {

inline Vec vec(const FieldSpec& f, std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Scalar::of_int(f, x));
    return v;
}

inline Matrix mat(const FieldSpec& f, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vec> rs;
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) rs.push_back(vec(f, r));
    return Matrix::from_rows(f, cols, rs);
}

inline Subspace span(const FieldSpec& f, std::size_t ambient,
                     std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vec> rs;
    for (const auto& r : rows) rs.push_back(vec(f, r));
    return Subspace::row_span(f, ambient, rs);
}

} // namespace engellab::testutil
