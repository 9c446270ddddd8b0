#pragma once

#include <optional>

#include "jacobson/algebra.hpp"
#include "jacobson/series.hpp"
#include "jacobson/simple_modules.hpp"

namespace jacobson {

/// Element of the series module Y: k_{-1}·w + k_0·d + k_1·cd + k_2·c²d + ⋯
/// with the column stream (k_0, k_1, ...) kept as an exact rational series.
class YElement {
 public:
  YElement(Scalar w_coeff, RationalSeries series);

  static YElement zero(const FieldSpec& field);
  static YElement w(const FieldSpec& field);
  static YElement d(const FieldSpec& field);
  static YElement from_rw(const RwElement& m);

  const Scalar& w_coeff() const { return w_coeff_; }
  const RationalSeries& series() const { return series_; }
  const FieldSpec& field() const { return w_coeff_.field(); }
  bool is_zero() const { return w_coeff_.is_zero() && series_.is_zero(); }

  /// Back in Rw when the stream is a plain polynomial column.
  std::optional<RwElement> to_rw() const;

  YElement operator+(const YElement& other) const;
  YElement operator-(const YElement& other) const;
  YElement operator-() const;
  YElement scaled(const Scalar& k) const;
  bool operator==(const YElement& other) const;
  bool operator!=(const YElement& other) const { return !(*this == other); }

 private:
  Scalar w_coeff_;
  RationalSeries series_;
};

/// Left action on Y. Monomial rules: w keeps only the w-part; c^i d picks
/// k_{-1} into column slot i; d'(c')^j reads the stream at j into w; and
/// c^i (c')^j shifts the stream down j then up i dropping the w-part (so
/// v·y = y - k_{-1}w, forced by v = 1 - w even though the source formula
/// displays the shift rule only from k_1 on).
YElement y_act(const Element& r, const YElement& y);

struct EssentialWitness {
  Element r;         // w, or d'(c')^l for the first nonzero stream index l
  RwElement image;   // y_act(r, y), a nonzero element of Rw
};

/// Every nonzero y sees Rw: multiplying by the witness lands in Rw \ {0}.
/// Throws std::invalid_argument on y = 0.
EssentialWitness essential_witness(const YElement& y);

/// A hom J → Y is determined by φ(w) = w_val·w and φ(d'(c')^i) = vals_i·w;
/// its extension to R is Φ(1) = w_val·w + Σ vals_i·c^i d.
YElement extend_hom_from_J(const Scalar& w_val, const RationalSeries& vals);

/// The z with p(c)·z = y, for p(0) ≠ 0: the w-part divides by p(0) and the
/// stream divides by p as a rational series. Verifies p(c)·z = y and throws
/// std::logic_error on mismatch.
YElement solve_pc_in_y(const PPoly& p, const YElement& y);

/// k_{-1} at idx = -1, the stream coefficient k_idx for idx ≥ 0.
Scalar y_coeff(const YElement& y, int idx);

}  // namespace jacobson
