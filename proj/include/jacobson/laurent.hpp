#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jacobson/poly.hpp"

namespace jacobson {

/// Laurent polynomial: finitely many nonzero coefficients on powers x^n,
/// n ranging over all integers. Zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(const FieldSpec& field) : field_(field) {}

  static LaurentPoly monomial(const Scalar& k, int deg);
  static LaurentPoly from_poly(const Poly& p);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int deg) const;
  int min_degree() const;
  int max_degree() const;
  const std::map<int, Scalar>& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Scalar& k) const;
  bool operator==(const LaurentPoly& other) const;
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

  void add_term(int deg, const Scalar& k);

  /// Factors a nonzero Laurent polynomial as x^m * p with p(0) != 0.
  std::pair<int, Poly> split_monomial() const;

  std::string str(const std::string& var = "x") const;

 private:
  FieldSpec field_;
  std::map<int, Scalar> terms_;
};

/// Monic gcd of the ordinary-polynomial parts: each nonzero input factors
/// as x^m * p with p(0) != 0 and the gcd of the p's is returned (its
/// constant term is automatically nonzero). Zero inputs are skipped;
/// throws if every input is zero or the list is empty.
PPoly laurent_gcd(const std::vector<LaurentPoly>& items);

}  // namespace jacobson
