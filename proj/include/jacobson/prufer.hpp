#pragma once

#include <optional>
#include <vector>

#include "jacobson/algebra.hpp"
#include "jacobson/division.hpp"
#include "jacobson/poly.hpp"

namespace jacobson {

/// Coset in M_n^f = R/Rf^n(c), in the canonical coordinates
/// coords[0] + coords[1]·f(c) + ... + coords[n-1]·f^(n-1)(c) + Rf^n(c)
/// with deg coords[t] < deg f. Cosets are equal iff coordinates are equal.
class MnElement {
 public:
  /// The canonical projection of an Element (n iterated divisions).
  MnElement(const FPoly& f, unsigned n, const Element& rep);
  /// Direct coordinates; throws unless every entry has degree < deg f.
  MnElement(const FPoly& f, std::vector<Poly> coords);

  static MnElement zero(const FPoly& f, unsigned n);
  static MnElement unit(const FPoly& f, unsigned n);  // 1 + Rf^n(c)

  const FPoly& f() const { return f_; }
  unsigned n() const { return static_cast<unsigned>(coords_.size()); }
  const std::vector<Poly>& coords() const { return coords_; }
  const FieldSpec& field() const { return f_.field(); }
  bool is_zero() const;

  /// The canonical representative Σ coords[t](c)·f(c)^t.
  Element lift() const;
  /// The same representative viewed in M_target (zero coordinates appended).
  /// Unlike psi this does not move along the direct system.
  MnElement padded(unsigned target_level) const;

  MnElement operator+(const MnElement& other) const;
  MnElement operator-(const MnElement& other) const;
  MnElement operator-() const;
  MnElement scaled(const Scalar& k) const;
  bool operator==(const MnElement& other) const;
  bool operator!=(const MnElement& other) const { return !(*this == other); }

 private:
  FPoly f_;
  std::vector<Poly> coords_;
};

/// Left action r·m, reduced back to coordinates (the tail f^n-part drops).
MnElement mn_act(const Element& r, const MnElement& m);

/// Connecting map ψ: M_n → M_target, x + Rf^n ↦ x·f^(target-n)(c) + Rf^target.
/// In coordinates a shift up by (target_level - n). Throws when
/// target_level < n.
MnElement psi(const MnElement& m, unsigned target_level);

/// Solves a·x = b in M_n^f by exact K-linear algebra on the n·deg f
/// dimensional space; any solution, or nullopt. Throws when n·deg f > 64.
std::optional<MnElement> solve_linear_in_Mn(const Element& a, const MnElement& b);

/// K-dimensions of the distinct cyclic submodules R·m of M_n^f, sorted,
/// one entry per submodule (0 included). Brute force over a small prime
/// field; the module is uniserial of layer d = deg f iff the result is
/// exactly {0, d, 2d, ..., nd}. Throws when |field|^(n·deg f) exceeds the
/// enumeration bound.
std::vector<unsigned> submodule_chain(const FPoly& f, unsigned n);

/// Element of the Prüfer module U^f = lim M_n^f, stored at minimal level:
/// coords[0] ≠ 0, or the canonical zero at level 1.
class UfElement {
 public:
  static UfElement zero(const FPoly& f);
  /// α_{n,f}: the image of 1 + Rf^n(c) at level n.
  static UfElement generator(const FPoly& f, unsigned n);
  /// Normalizes an arbitrary representative.
  static UfElement from_rep(const MnElement& rep);

  const FPoly& f() const { return rep_.f(); }
  unsigned level() const { return rep_.n(); }
  const MnElement& rep() const { return rep_; }
  const FieldSpec& field() const { return rep_.field(); }
  bool is_zero() const { return rep_.is_zero(); }

  UfElement operator+(const UfElement& other) const;
  UfElement operator-(const UfElement& other) const;
  UfElement operator-() const;
  UfElement scaled(const Scalar& k) const;
  bool operator==(const UfElement& other) const;
  bool operator!=(const UfElement& other) const { return !(*this == other); }

 private:
  explicit UfElement(MnElement rep) : rep_(std::move(rep)) {}
  MnElement rep_;
};

/// Validates that rep sits at the stated level and normalizes it.
UfElement uf_normalize(const FPoly& f, unsigned level, const MnElement& rep);

UfElement uf_act(const Element& r, const UfElement& u);

/// The v with f(c)·v = u; always exists (one level up, same coordinates).
UfElement uf_divide_by_fc(const UfElement& u);

/// Baer extension step: given a hom Rp(c) → U^f prescribed by
/// φ(p(c)) = image, returns Φ(1) with p(c)·Φ(1) = image. Writes
/// p = f^ℓ·p_0 with f ∤ p_0 and inverts p_0 modulo f^(level+ℓ); throws
/// std::domain_error when p_0 shares a factor with f (reducible f only),
/// std::logic_error if the verified postcondition fails.
UfElement extend_hom_to_Uf(const PPoly& p, const FPoly& f, const UfElement& image);

}  // namespace jacobson
