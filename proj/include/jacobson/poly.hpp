#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jacobson/field.hpp"

namespace jacobson {

/// Dense univariate polynomial over a FieldSpec, coefficients stored low to
/// high with no trailing zeros. The zero polynomial has degree -1.
class Poly {
 public:
  explicit Poly(const FieldSpec& field) : field_(field) {}
  Poly(const FieldSpec& field, std::vector<Scalar> coeffs);

  static Poly zero(const FieldSpec& field) { return Poly(field); }
  static Poly constant(const Scalar& value);
  static Poly x(const FieldSpec& field);
  static Poly from_ints(const FieldSpec& field, const std::vector<long>& coeffs);

  const FieldSpec& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i; zero beyond the degree.
  Scalar coeff(int i) const;
  const Scalar& leading() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator-() const;
  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  Poly scaled(const Scalar& k) const;
  /// Multiplication by x^k, k >= 0.
  Poly shifted_up(int k) const;
  Poly monic() const;
  Poly pow(unsigned n) const;
  Scalar eval(const Scalar& at) const;
  bool is_monic() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder with deg r < deg b; throws on b == 0.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

struct XgcdResult {
  Poly g;  // monic gcd (zero when a = b = 0)
  Poly s;
  Poly t;  // s*a + t*b = g
};
XgcdResult poly_xgcd(const Poly& a, const Poly& b);

enum class Ternary { False, True, Unknown };

/// Exact over a prime field. Over Q: degree <= 3 and rational-root /
/// reduction-mod-p criteria, Unknown when none of them decide.
Ternary is_irreducible(const Poly& f);

/// Inverse of x in K[x]/(p) for p(0) != 0, reduced mod p.
Poly inverse_of_x_mod(const Poly& p);

/// Member of the divisor family: irreducible with f(0) = -1, so f = x*g - 1.
class FPoly {
 public:
  /// Throws unless f(0) = -1 and deg f >= 1. Irreducibility must check True
  /// unless allow_unverified is set (then False/Unknown verdicts are kept
  /// but the polynomial is accepted).
  static FPoly make(const Poly& f, bool allow_unverified = false);

  const Poly& poly() const { return f_; }
  const FieldSpec& field() const { return f_.field(); }
  int degree() const { return f_.degree(); }
  /// The cofactor with f = x*g - 1; the class of g is the inverse of x
  /// in K[x]/(f).
  const Poly& g() const { return g_; }
  Ternary irreducibility() const { return irreducibility_; }

  bool operator==(const FPoly& other) const { return f_ == other.f_; }

 private:
  FPoly(Poly f, Poly g, Ternary verdict)
      : f_(std::move(f)), g_(std::move(g)), irreducibility_(verdict) {}
  Poly f_;
  Poly g_;
  Ternary irreducibility_;
};

/// Polynomial with nonzero constant term (x stays invertible mod p).
class PPoly {
 public:
  /// Throws unless p(0) != 0.
  static PPoly make(const Poly& p);

  const Poly& poly() const { return p_; }
  const FieldSpec& field() const { return p_.field(); }
  int degree() const { return p_.degree(); }
  Scalar constant_term() const { return p_.coeff(0); }

  bool operator==(const PPoly& other) const { return p_ == other.p_; }

 private:
  explicit PPoly(Poly p) : p_(std::move(p)) {}
  Poly p_;
};

}  // namespace jacobson
