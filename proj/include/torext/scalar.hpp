#ifndef TOREXT_SCALAR_HPP
#define TOREXT_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "torext/errors.hpp"

namespace torext {

enum class FieldKind { PrimeField, Rationals };

// Descriptor of the coefficient field k: either F_p (p prime, p < 2^31) or Q.
class Field {
  public:
    static Field prime(std::int64_t p);
    static Field rationals();

    FieldKind kind() const { return kind_; }
    // Modulus for prime fields, 0 for the rationals.
    std::int64_t modulus() const { return p_; }
    // Characteristic: p or 0.
    std::int64_t characteristic() const { return p_; }

    bool operator==(const Field& other) const = default;

    std::string to_string() const;

  private:
    Field(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}
    FieldKind kind_;
    std::int64_t p_;
};

// An exact field element in canonical form: residue in [0, p) for F_p,
// reduced fraction with positive denominator for Q. Equality of values is
// bit-identity of representations.
class Scalar {
  public:
    Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}
    Scalar(const Field& field, std::int64_t n);
    Scalar(const Field& field, const mpz_class& n);
    static Scalar fraction(const mpz_class& num, const mpz_class& den);  // rationals only

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Residue for prime fields; undefined for rationals.
    std::int64_t residue() const { return std::get<std::int64_t>(value_); }
    // Value for rationals; undefined for prime fields.
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }

    // Canonical text: "3", "-2/3", ... Prime-field values print the balanced
    // representative in (-p/2, p/2] so small negatives read naturally.
    std::string to_string() const;

  private:
    void check_same_field(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }
    Field field_;
    std::variant<std::int64_t, mpq_class> value_;
};

inline Scalar operator*(std::int64_t n, const Scalar& s) { return Scalar(s.field(), n) * s; }

}  // namespace torext

#endif
