#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace jacobson {

bool is_prime_u64(std::uint64_t n);

/// Coefficient field: the rationals, or F_p for a word-sized prime p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime_field(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  std::uint64_t prime() const { return p_; }

  bool operator==(const FieldSpec&) const = default;

  /// "q" or "fp:<p>"; parse accepts the same forms.
  std::string str() const;
  static FieldSpec parse(const std::string& text);

 private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field values are residues in 0..p-1.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(long value, const FieldSpec& field);
  static Scalar from_mpq(const mpq_class& value, const FieldSpec& field);
  /// "a", "a/b" or a residue literal; throws std::invalid_argument on junk.
  static Scalar parse(const std::string& text, const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Rational value; only valid over the rationals.
  const mpq_class& rational() const;
  /// Residue in 0..p-1; only valid over a prime field.
  std::uint64_t residue() const;

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar operator-() const;
  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  Scalar inverse() const;

  std::string str() const;

 private:
  explicit Scalar(const FieldSpec& field) : field_(field) {}
  void check_same_field(const Scalar& other) const;

  FieldSpec field_;
  mpq_class q_;          // active over the rationals
  std::uint64_t r_ = 0;  // active over a prime field
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace jacobson
