#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "sweedler/field.hpp"

namespace sweedler {

/// An exact element of Q or F_p.
///
/// Rationals are always kept as reduced fractions with positive denominator and
/// residues in [0, p), so two scalars are equal iff their representations are.
/// Binary operations on scalars of different fields throw FieldMismatch.
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  Scalar(FieldSpec field, long value);
  explicit Scalar(mpq_class value);
  Scalar(Residue r);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1); }

  /// Parses the canonical text form: "n" or "p/q" in lowest terms with q > 1
  /// for Q, a decimal in [0, p) for F_p. Anything else throws
  /// std::invalid_argument.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const;  // std::domain_error on zero

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

  std::string to_string() const;

  bool holds_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<Residue>(v_).value; }

 private:
  void check_same(const Scalar& o) const;
  std::variant<Residue, mpq_class> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace sweedler
