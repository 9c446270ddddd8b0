#pragma once

#include <optional>

#include "jacobson/algebra.hpp"
#include "jacobson/poly.hpp"

namespace jacobson {

/// Element of V^f: the coefficient of the infinite path c^∞, living in
/// K' = K[x]/(f). Stored as the reduced residue polynomial against the
/// basis 1, x̄, ..., x̄^(deg f - 1).
class VfElement {
 public:
  VfElement(const FPoly& f, const Poly& value);  // reduces value mod f
  static VfElement zero(const FPoly& f);
  /// The generator c^∞ (residue 1).
  static VfElement cinf(const FPoly& f);

  const FPoly& f() const { return f_; }
  const Poly& residue() const { return residue_; }
  const FieldSpec& field() const { return f_.field(); }
  bool is_zero() const { return residue_.is_zero(); }

  VfElement operator+(const VfElement& other) const;
  VfElement operator-(const VfElement& other) const;
  VfElement operator-() const;
  VfElement scaled(const Scalar& k) const;
  bool operator==(const VfElement& other) const;
  bool operator!=(const VfElement& other) const { return !(*this == other); }

  /// Multiplication by x̄^e for any integer e; x̄^(-1) = g(x̄) from f = xg - 1.
  VfElement mul_xbar(int e) const;

 private:
  FPoly f_;
  Poly residue_;
};

/// Module action of the algebra on V^f: A(i,j) acts as x̄^(i-j), the B, C
/// and D sectors act as zero.
VfElement act_vf(const Element& r, const VfElement& m);

/// Whether r annihilates V^f, i.e. r ∈ Rf(c). Decided by the action on
/// c^∞ and cross-checked on the whole basis.
bool annihilator_check(const Element& r, const FPoly& f);

/// Element of the left ideal Rw, in the split basis {w} ∪ {c^i d}:
/// w_coeff·w + sum_i d_poly[i]·c^i d.
class RwElement {
 public:
  RwElement(Scalar w_coeff, Poly d_poly);
  static RwElement zero(const FieldSpec& field);
  static RwElement w(const FieldSpec& field);
  static RwElement d(const FieldSpec& field);

  const Scalar& w_coeff() const { return w_coeff_; }
  const Poly& d_poly() const { return d_poly_; }
  const FieldSpec& field() const { return w_coeff_.field(); }
  bool is_zero() const { return w_coeff_.is_zero() && d_poly_.is_zero(); }

  RwElement operator+(const RwElement& other) const;
  RwElement operator-(const RwElement& other) const;
  RwElement operator-() const;
  RwElement scaled(const Scalar& k) const;
  bool operator==(const RwElement& other) const;
  bool operator!=(const RwElement& other) const { return !(*this == other); }

  Element embed() const;
  /// Inverse of embed on span{w, c^i d}; nullopt when e has terms outside it.
  static std::optional<RwElement> extract(const Element& e);

 private:
  Scalar w_coeff_;
  Poly d_poly_;
};

/// Left action of the algebra on Rw (multiplication in R, re-extracted).
RwElement rw_act(const Element& r, const RwElement& m);

struct RwSolution {
  RwElement solution;
  int kernel_dim = 0;  // 1 when p(0) = 0: the w-coefficient is free
};

/// Solves p(c)·x = b in Rw, exactly. The equation splits into
/// p(0)·k = b.w_coeff and p·h = b.d_poly over K[x]. Returns nullopt
/// (NoSolution) when either part is unsolvable; throws on p = 0.
std::optional<RwSolution> solve_poly_c_in_rw(const Poly& p, const RwElement& b);

/// Brute-force simplicity of V^f over a small prime field: every nonzero
/// element must generate the whole space under the x̄^(±1) action.
/// Requires deg f ≤ 3 and prime ≤ 7; throws outside those bounds.
bool simplicity_probe(const FPoly& f, const FieldSpec& field);

}  // namespace jacobson
