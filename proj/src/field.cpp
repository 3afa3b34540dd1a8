#include "engellab/field.hpp"

#include <sstream>

namespace engellab {

namespace {

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

// Canonical residue of q = a/b in F_p, as an integer in [0, p).
mpz_class residue_mod(const mpq_class& q, long p) {
    mpz_class pz(p);
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    if (den < 0) den += pz;
    if (den == 0) throw ParseError("denominator divisible by the field characteristic");
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw ParseError("denominator not invertible modulo p");
    mpz_class r = (num * den_inv) % pz;
    if (r < 0) r += pz;
    return r;
}

mpq_class canonicalize(const FieldSpec& f, const mpq_class& raw) {
    mpq_class q = raw;
    q.canonicalize();
    if (f.is_prime_field()) return mpq_class(residue_mod(q, f.characteristic()));
    return q;
}

} // namespace

FieldSpec FieldSpec::prime(long p) {
    if (p < 3 || p % 2 == 0 || !is_prime_long(p))
        throw ParseError("field characteristic must be an odd prime >= 3, got " + std::to_string(p));
    return FieldSpec(FieldKind::prime_field, p);
}

std::string FieldSpec::str() const {
    if (is_rationals()) return "Q";
    return "F" + std::to_string(p_);
}

Scalar Scalar::of_int(const FieldSpec& f, long value) {
    return Scalar(f, canonicalize(f, mpq_class(value)));
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    // Accept an optional sign, digits, optionally "/" and more digits.
    std::size_t i = 0;
    auto fail = [&]() -> Scalar {
        throw ParseError("bad scalar literal '" + text + "' for field " + f.str());
    };
    if (text.empty()) return fail();
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) return fail();
    mpq_class value;
    if (i == text.size()) {
        value = mpq_class(mpz_class(text));
    } else {
        if (text[i] != '/') return fail();
        std::size_t den_start = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i != text.size() || den_start == text.size()) return fail();
        mpz_class num(text.substr(0, den_start - 1));
        mpz_class den(text.substr(den_start));
        if (den == 0) throw ParseError("zero denominator in scalar '" + text + "'");
        value = mpq_class(num, den);
    }
    return Scalar(f, canonicalize(f, value));
}

Scalar Scalar::operator-() const {
    return Scalar(field_, canonicalize(field_, -v_));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Scalar(field_, canonicalize(field_, 1 / v_));
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_))
        throw FieldMismatch("scalars from different fields: " + a.field_.str() + " vs " + b.field_.str());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    return Scalar(a.field_, canonicalize(a.field_, a.v_ + b.v_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    return Scalar(a.field_, canonicalize(a.field_, a.v_ - b.v_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    return Scalar(a.field_, canonicalize(a.field_, a.v_ * b.v_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    return a.v_ == b.v_;
}

std::string Scalar::str() const {
    return v_.get_str();
}

Vec zero_vec(const FieldSpec& f, std::size_t n) {
    return Vec(n, Scalar::zero(f));
}

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector addition size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector subtraction size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scaled(const Vec& v, const Scalar& c) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

std::string vec_str(const Vec& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].str();
    }
    out << ")";
    return out.str();
}

} // namespace engellab
