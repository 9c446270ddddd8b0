#include "jacobson/division.hpp"

#include <cstdint>
#include <stdexcept>

namespace jacobson {

namespace {

// Star weight of a basis monomial: the number of starred letters.
std::uint32_t star_weight(const Monomial& m) {
  switch (m.sector) {
    case Monomial::Sector::A:
    case Monomial::Sector::C:
      return m.j;
    default:
      return 0;
  }
}

}  // namespace

VfElement rho(const Element& beta, const FPoly& f) {
  return act_vf(beta, VfElement::cinf(f));
}

GfElement sigma(const VfElement& val, const FPoly& f) {
  if (val.f() != f) throw std::invalid_argument("sigma: divisor mismatch");
  return val.residue();
}

std::optional<Element> right_divide_general(const Element& gamma, const PPoly& p) {
  const FieldSpec& field = gamma.field();
  if (p.field() != field) throw std::invalid_argument("right_divide: field mismatch");
  const Scalar p0 = p.poly().coeff(0);
  const Element pc = gf_embed(p.poly());

  Element rest = gamma;
  Element q = Element::zero(field);

  // B and D sectors: mu·p(c) = p(0)·mu, solved exactly in one pass. The
  // later weight eliminations never regenerate these sectors.
  {
    Element forced(field);
    for (const auto& [m, k] : rest.terms()) {
      if (m.sector == Monomial::Sector::B || m.sector == Monomial::Sector::D) {
        forced.add_term(m, k / p0);
      }
    }
    q = q + forced;
    rest = rest - forced * pc;
  }

  // C and A sectors, star weight >= 1: right multiplication by c^k with
  // k >= 1 strictly lowers the weight, so the top-weight layer of rest is
  // p(0) times the same layer of q. Each pass clears one weight level.
  for (;;) {
    std::uint32_t top = 0;
    for (const auto& [m, k] : rest.terms()) {
      if (star_weight(m) > top) top = star_weight(m);
    }
    if (top == 0) break;
    Element layer(field);
    for (const auto& [m, k] : rest.terms()) {
      if (star_weight(m) == top) layer.add_term(m, k / p0);
    }
    q = q + layer;
    rest = rest - layer * pc;
  }

  // Leftover C(0) term: d'·p(c) = p(0)·d'.
  {
    Element forced(field);
    for (const auto& [m, k] : rest.terms()) {
      if (m.sector == Monomial::Sector::C) forced.add_term(m, k / p0);
    }
    q = q + forced;
    rest = rest - forced * pc;
  }

  // What remains lives in span{A(m,0)} = v·K[c]; divide by p in K[x].
  std::vector<Scalar> coeffs;
  for (const auto& [m, k] : rest.terms()) {
    if (m.sector != Monomial::Sector::A || m.j != 0) {
      throw std::logic_error("right_divide: residual escaped the weight-0 A span");
    }
    if (coeffs.size() <= m.i) coeffs.resize(m.i + 1, Scalar::zero(field));
    coeffs[m.i] = k;
  }
  const auto [qt, rt] = poly_divrem(Poly(field, std::move(coeffs)), p.poly());
  if (!rt.is_zero()) return std::nullopt;
  return q + gf_embed_v(qt);
}

std::optional<Element> right_divide(const Element& gamma, const FPoly& f) {
  return right_divide_general(gamma, PPoly::make(f.poly()));
}

DivisionResult divide(const Element& beta, const FPoly& f) {
  const GfElement r = sigma(rho(beta, f), f);
  const auto q = right_divide(beta - gf_embed(r), f);
  if (!q) throw std::logic_error("divide: beta - r(c) not divisible by f(c)");
  if (*q * gf_embed(f.poly()) + gf_embed(r) != beta) {
    throw std::logic_error("divide: postcondition q·f(c) + r = beta failed");
  }
  return DivisionResult{*q, r};
}

GfCoordinates gf_coordinates(const Element& beta, const FPoly& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("gf_coordinates: n >= 1 required");
  GfCoordinates out{{}, beta};
  for (unsigned t = 0; t < n; ++t) {
    auto [q, r] = divide(out.tail, f);
    out.coords.push_back(std::move(r));
    out.tail = std::move(q);
  }
  return out;
}

bool in_ideal(const Element& beta, const FPoly& f, unsigned n) {
  const auto coordinates = gf_coordinates(beta, f, n);
  for (const auto& g : coordinates.coords) {
    if (!g.is_zero()) return false;
  }
  return true;
}

}  // namespace jacobson
