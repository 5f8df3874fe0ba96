#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace lclab {

/// The coefficient field k: either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rational() { return Field(0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Accepts "rational", "Q" or "p:<prime>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

/// A residue modulo p, always reduced into [0, p).
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// An element of the configured field. Rationals are kept canonical (lowest terms,
/// positive denominator) by GMP.
class FieldScalar {
 public:
  FieldScalar() : value_(mpq_class(0)) {}
  FieldScalar(const Field& field, std::int64_t n);
  FieldScalar(const Field& field, const mpq_class& q);

  static FieldScalar zero(const Field& field) { return FieldScalar(field, 0); }
  static FieldScalar one(const Field& field) { return FieldScalar(field, 1); }

  bool is_zero() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  Field field() const;
  /// Rational value; residues are returned as their representative in [0, p).
  mpq_class to_rational() const;
  std::string to_string() const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  /// Throws std::domain_error on division by zero.
  FieldScalar& operator/=(const FieldScalar& o);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }
  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

 private:
  std::variant<mpq_class, Residue> value_;
};

}  // namespace lclab
