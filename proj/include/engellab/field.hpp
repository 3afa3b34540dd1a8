#pragma once

// Exact scalar arithmetic over Q and F_p (p an odd prime). Every value is
// immutable after construction and all operations are pure; nothing here
// ever rounds.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "engellab/errors.hpp"

namespace engellab {

enum class FieldKind { rationals, prime_field };

class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }
    // Requires an odd prime p >= 3; characteristic 2 is excluded because the
    // square-polarization identity used for the Leibniz kernel degenerates there.
    static FieldSpec prime(long p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::prime_field; }
    // 0 for Q, p for F_p.
    long characteristic() const { return p_; }

    std::string str() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) = default;

private:
    FieldSpec(FieldKind kind, long p) : kind_(kind), p_(p) {}
    FieldKind kind_;
    long p_;
};

// One exact field element. Over Q the value is a fully reduced fraction with
// positive denominator; over F_p it is the canonical residue in [0, p).
class Scalar {
public:
    static Scalar zero(const FieldSpec& f) { return of_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return of_int(f, 1); }
    static Scalar of_int(const FieldSpec& f, long value);
    // "a/b" (b omitted when 1) over Q, decimal residue over F_p. Parsing is
    // a little generous (unreduced fractions, signed residues) but printing
    // is always canonical.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar inverse() const; // throws Error on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    Scalar(FieldSpec f, mpq_class v) : field_(f), v_(std::move(v)) {}
    static void require_same_field(const Scalar& a, const Scalar& b);

    FieldSpec field_;
    mpq_class v_; // reduced fraction over Q; residue/1 over F_p
};

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Scalar& c);
std::string vec_str(const Vec& v);

} // namespace engellab
