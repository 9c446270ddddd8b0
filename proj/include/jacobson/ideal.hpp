#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jacobson/algebra.hpp"

namespace jacobson {

/// Searches for left multipliers q_k with sum q_k * g_k = target. Complete
/// for targets divisible by a p(c)-shaped generator (handled by exact
/// division); otherwise a bounded witness search over the monomials with
/// indices <= index_bound, solved by exact linear algebra. A returned
/// witness always satisfies the equation exactly; nullopt only means no
/// witness was found within the bound.
std::optional<std::vector<Element>> ideal_membership_witness(
    const Element& target, const std::vector<Element>& generators,
    std::uint32_t index_bound);

enum class IdealCase { InsideSocle, ContainsSocle, SummandCase };

/// Placement of a finitely generated left ideal I relative to the socle J.
/// InsideSocle: every generator has zero Laurent image, so I <= J.
/// ContainsSocle: I + J = Rp(c) and J <= I was certified generator by
///   generator, so I = Rp(c).
/// SummandCase: I + J = Rp(c) but some socle generators resisted the
///   bounded membership search; I may still be all of Rp(c) or a proper
///   summand of it, hence decided = false.
struct IdealClassification {
  IdealCase kind;
  std::optional<PPoly> p;  // monic image gcd; absent inside the socle
  std::vector<SocleDecomposition> components;  // per generator, InsideSocle only
  std::vector<int> socle_complement_indices;   // uncertified: -1 is w, i >= 0 is d*(c*)^i
  bool decided;

  std::string describe() const;
};

/// Classifies the left ideal generated by the given elements. socle_bound
/// controls how many of the generators w, d*, d*c*, ... are tested for
/// membership; witness_index_bound caps the witness search.
IdealClassification classify_ideal(const std::vector<Element>& generators,
                                   std::uint32_t socle_bound = 8,
                                   std::uint32_t witness_index_bound = 8);

}  // namespace jacobson
