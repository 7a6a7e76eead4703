#include "torext/scalar.hpp"

namespace torext {

namespace {

bool is_prime_i64(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    // extended Euclid; a in [1, p)
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    std::int64_t inv = old_s % p;
    if (inv < 0) inv += p;
    return inv;
}

}  // namespace

Field Field::prime(std::int64_t p) {
    if (p > (std::int64_t(1) << 31)) throw Error("prime modulus exceeds 2^31");
    if (!is_prime_i64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return Field(FieldKind::PrimeField, p);
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

std::string Field::to_string() const {
    return kind_ == FieldKind::PrimeField ? "Fp(p=" + std::to_string(p_) + ")" : "Q";
}

Scalar::Scalar(const Field& field, std::int64_t n) : field_(field) {
    if (field.kind() == FieldKind::PrimeField) {
        std::int64_t r = n % field.modulus();
        if (r < 0) r += field.modulus();
        value_ = r;
    } else {
        value_ = mpq_class(n);
    }
}

Scalar::Scalar(const Field& field, const mpz_class& n) : field_(field) {
    if (field.kind() == FieldKind::PrimeField) {
        mpz_class r = n % field.modulus();
        if (r < 0) r += field.modulus();
        value_ = r.get_si();
    } else {
        value_ = mpq_class(n);
    }
}

Scalar Scalar::fraction(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    Scalar s(Field::rationals(), 0);
    mpq_class q(num, den);
    q.canonicalize();
    s.value_ = q;
    return s;
}

bool Scalar::is_zero() const {
    if (field_.kind() == FieldKind::PrimeField) return residue() == 0;
    return rational() == 0;
}

bool Scalar::is_one() const {
    if (field_.kind() == FieldKind::PrimeField) return residue() == 1;
    return rational() == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_, 0);
    if (field_.kind() == FieldKind::PrimeField)
        r.value_ = (residue() + o.residue()) % field_.modulus();
    else
        r.value_ = mpq_class(rational() + o.rational());
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_, 0);
    if (field_.kind() == FieldKind::PrimeField) {
        std::int64_t v = (residue() - o.residue()) % field_.modulus();
        if (v < 0) v += field_.modulus();
        r.value_ = v;
    } else {
        r.value_ = mpq_class(rational() - o.rational());
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_, 0);
    if (field_.kind() == FieldKind::PrimeField)
        r.value_ = (residue() * o.residue()) % field_.modulus();  // p < 2^31 keeps this in range
    else
        r.value_ = mpq_class(rational() * o.rational());
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r(field_, 0);
    if (field_.kind() == FieldKind::PrimeField) {
        std::int64_t v = residue() == 0 ? 0 : field_.modulus() - residue();
        r.value_ = v;
    } else {
        r.value_ = mpq_class(-rational());
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r(field_, 0);
    if (field_.kind() == FieldKind::PrimeField)
        r.value_ = mod_inverse(residue(), field_.modulus());
    else
        r.value_ = mpq_class(1 / rational());
    return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar acc = Scalar::one(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_.kind() == FieldKind::PrimeField) return residue() == o.residue();
    return rational() == o.rational();
}

std::string Scalar::to_string() const {
    if (field_.kind() == FieldKind::PrimeField) {
        std::int64_t p = field_.modulus();
        std::int64_t v = residue();
        if (2 * v > p) v -= p;  // balanced representative
        return std::to_string(v);
    }
    return rational().get_str();
}

}  // namespace torext
