#pragma once

#include <string>

#include "jacobson/poly.hpp"

namespace jacobson {

/// Rational formal power series in canonical form poly_part + num/den with
/// den monic, den(0) != 0, deg num < deg den, gcd(num, den) = 1 and den = 1
/// whenever num = 0. Two series are equal as coefficient streams exactly
/// when their canonical forms coincide.
class RationalSeries {
 public:
  static RationalSeries zero(const FieldSpec& field);
  static RationalSeries from_poly(const Poly& p);
  /// num/den as a power series; requires den(0) != 0.
  static RationalSeries fraction(const Poly& num, const Poly& den);
  /// The multiplicative inverse 1/p; well defined since p(0) != 0.
  static RationalSeries invert(const PPoly& p);

  const FieldSpec& field() const { return poly_part_.field(); }
  const Poly& poly_part() const { return poly_part_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return poly_part_.is_zero() && num_.is_zero(); }
  bool is_polynomial() const { return num_.is_zero(); }

  Scalar coeff(int n) const;

  RationalSeries operator+(const RationalSeries& other) const;
  RationalSeries operator-(const RationalSeries& other) const;
  RationalSeries operator*(const RationalSeries& other) const;
  RationalSeries operator-() const;
  RationalSeries scaled(const Scalar& k) const;
  bool operator==(const RationalSeries& other) const;
  bool operator!=(const RationalSeries& other) const { return !(*this == other); }

  /// Multiplication by x (prepends a zero coefficient).
  RationalSeries shifted_up() const;
  /// Drops the constant coefficient and shifts the rest down.
  RationalSeries shifted_down() const;

  std::string str(const std::string& var = "x") const;

 private:
  RationalSeries(Poly pp, Poly num, Poly den);
  /// Canonicalizes a full fraction total/den.
  static RationalSeries make(const Poly& total, const Poly& den);
  /// poly_part*den + num, the numerator of the series over den.
  Poly total() const;

  Poly poly_part_;
  Poly num_;
  Poly den_;
};

}  // namespace jacobson
