#pragma once

#include <optional>
#include <vector>

#include "jacobson/algebra.hpp"
#include "jacobson/poly.hpp"
#include "jacobson/simple_modules.hpp"

namespace jacobson {

/// Division remainder: a polynomial of degree < deg f, read as g(c) with the
/// constant term against 1_R.
using GfElement = Poly;

struct DivisionResult {
  Element quotient;
  GfElement remainder;  // beta = quotient·f(c) + remainder(c)
};

/// rho(beta) = beta acting on the class of c^∞: A(i,j) ↦ x̄^(i-j) in
/// K[x]/(f), the B, C and D sectors ↦ 0.
VfElement rho(const Element& beta, const FPoly& f);

/// The K-linear section x̄^t ↦ c^t: returns the residue polynomial of val
/// as a remainder candidate.
GfElement sigma(const VfElement& val, const FPoly& f);

/// Right division with remainder: the unique (q, r) with
/// beta = q·f(c) + r(c) and deg r < deg f. Verifies its own postcondition
/// by one multiplication; a mismatch throws std::logic_error.
DivisionResult divide(const Element& beta, const FPoly& f);

/// The unique q with q·f(c) = gamma when gamma ∈ Rf(c); nullopt otherwise.
std::optional<Element> right_divide(const Element& gamma, const FPoly& f);

/// Same elimination for any p with p(0) ≠ 0: q with q·p(c) = gamma, or
/// nullopt. Sector by sector: B and D quotients are gamma/p(0) exactly;
/// C and A star weights ≥ 1 are eliminated top down (right-multiplying a
/// weight-j monomial by c^k strictly lowers the weight); the leftover
/// weight-0 A part is one commutative polynomial division by p.
std::optional<Element> right_divide_general(const Element& gamma, const PPoly& p);

struct GfCoordinates {
  std::vector<GfElement> coords;  // n remainders, degree < deg f each
  Element tail;                   // beta = Σ coords[t](c)·f(c)^t + tail·f(c)^n
};

/// n iterated divisions by f(c).
GfCoordinates gf_coordinates(const Element& beta, const FPoly& f, unsigned n);

/// Membership in Rf^n(c): all n coordinates vanish.
bool in_ideal(const Element& beta, const FPoly& f, unsigned n);

}  // namespace jacobson
