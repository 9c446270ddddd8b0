#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jacobson/laurent.hpp"
#include "jacobson/poly.hpp"

namespace jacobson {

/// Basis monomial of the algebra, one of four sectors:
///   A(i,j) = c^i (c*)^j   (A(0,0) = v),
///   B(i)   = c^i d,
///   C(j)   = d* (c*)^j,
///   D      = w.
/// Unused indices are kept at zero so the encoding is a bijection.
struct Monomial {
  enum class Sector : std::uint8_t { D = 0, C = 1, B = 2, A = 3 };

  Sector sector = Sector::D;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  static Monomial monA(std::uint32_t i, std::uint32_t j) { return {Sector::A, i, j}; }
  static Monomial monB(std::uint32_t i) { return {Sector::B, i, 0}; }
  static Monomial monC(std::uint32_t j) { return {Sector::C, 0, j}; }
  static Monomial monD() { return {Sector::D, 0, 0}; }
  static Monomial vertex_v() { return monA(0, 0); }
  static Monomial vertex_w() { return monD(); }

  /// Range idempotent v/w seen from the left factor of a product.
  bool left_idempotent_is_v() const {
    return sector == Sector::A || sector == Sector::B;
  }
  /// Source idempotent v/w seen from the right factor of a product.
  bool right_idempotent_is_v() const {
    return sector == Sector::A || sector == Sector::C;
  }

  auto operator<=>(const Monomial&) const = default;

  std::string str() const;
};

/// Element in canonical form: an ordered term map with no zero coefficients.
class Element {
 public:
  explicit Element(const FieldSpec& field) : field_(field) {}

  static Element zero(const FieldSpec& field) { return Element(field); }
  static Element monomial(const Monomial& m, const Scalar& k);
  static Element monomial(const Monomial& m, const FieldSpec& field);
  static Element one(const FieldSpec& field);  // v + w
  static Element vertex_v(const FieldSpec& field);
  static Element vertex_w(const FieldSpec& field);
  static Element gen_c(const FieldSpec& field);
  static Element gen_cstar(const FieldSpec& field);
  static Element gen_d(const FieldSpec& field);
  static Element gen_dstar(const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  Scalar coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Scalar& k);

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(const Element& other) const;
  Element operator-() const;
  Element scaled(const Scalar& k) const;
  Element pow(unsigned n) const;
  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }

  std::string str() const;

 private:
  FieldSpec field_;
  std::map<Monomial, Scalar> terms_;
};

/// Structure-constant product of two basis monomials.
Element mono_mul(const Monomial& m1, const Monomial& m2, const FieldSpec& field);

/// g(c) = g_0·1_R + g_1 c + ... with the constant term against 1_R = v + w.
Element gf_embed(const Poly& g);
/// g|_v(c) = v·g(c) = g_0 v + g_1 c + ...: the same combination cut to v.
Element gf_embed_v(const Poly& g);

/// Quotient map modulo the socle: A(i,j) -> x^(i-j), other sectors -> 0.
LaurentPoly laurent_image(const Element& e);

/// Membership in the socle J (the two-sided ideal generated by w).
bool socle_membership(const Element& e);

/// e_i = c^i d d* (c*)^i = A(i,i) - A(i+1,i+1).
Element idempotent_ei(std::uint32_t i, const FieldSpec& field);

struct SocleDecomposition {
  Element rw_part;                                // e·w
  std::vector<std::pair<std::uint32_t, Element>> components;  // (i, e·e_i), nonzero only
};

/// Splits e ∈ J along J = Rw ⊕ (⊕_i R c^i dd*(c*)^i); throws when e ∉ J.
SocleDecomposition socle_decompose(const Element& e);

}  // namespace jacobson
