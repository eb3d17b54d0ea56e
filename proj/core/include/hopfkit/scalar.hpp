#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include "hopfkit/errors.hpp"

namespace hopfkit {

/// Ground field tag: the rationals (characteristic 0) or a prime field GF(p).
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws UnsupportedField unless p is a prime below 2^61.
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "F<p>" (e.g. "F3").
  static Field parse(const std::string& text);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  constexpr bool operator==(const Field&) const = default;

 private:
  constexpr explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact element of a Field. Arithmetic between different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}
  explicit Scalar(Field field) : Scalar(field, 0) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpz_class& numerator, const mpz_class& denominator);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  /// Throws DivisionByZero on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& rhs) const;

  /// Numerator/denominator in lowest terms; prime-field values are in [0, p) over 1.
  mpz_class numerator() const;
  mpz_class denominator() const;

  /// "3", "-1/2", etc.
  std::string str() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfkit
