#include "jacobson/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "jacobson/division.hpp"
#include "jacobson/linalg.hpp"

namespace jacobson {

namespace {

// Recognizes k_0*1_R + k_1*c + ... + k_m*c^m with nonzero constant term,
// the shape whose principal ideal has a complete membership test.
std::optional<PPoly> as_pc(const Element& g) {
  if (g.is_zero()) return std::nullopt;
  int deg = 0;
  for (const auto& [m, k] : g.terms()) {
    if (m.sector == Monomial::Sector::A && m.j == 0) {
      deg = std::max(deg, static_cast<int>(m.i));
    } else if (m.sector != Monomial::Sector::D) {
      return std::nullopt;
    }
  }
  std::vector<Scalar> coeffs(static_cast<std::size_t>(deg) + 1, Scalar::zero(g.field()));
  for (const auto& [m, k] : g.terms()) {
    if (m.sector == Monomial::Sector::A) coeffs[m.i] = k;
  }
  const Poly p(g.field(), std::move(coeffs));
  if (p.coeff(0).is_zero() || gf_embed(p) != g) return std::nullopt;
  return PPoly::make(p);
}

std::vector<Monomial> monomials_up_to(std::uint32_t n) {
  std::vector<Monomial> out;
  out.push_back(Monomial::monD());
  for (std::uint32_t i = 0; i <= n; ++i) {
    out.push_back(Monomial::monB(i));
    out.push_back(Monomial::monC(i));
  }
  for (std::uint32_t i = 0; i <= n; ++i) {
    for (std::uint32_t j = 0; j <= n; ++j) out.push_back(Monomial::monA(i, j));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Element>> ideal_membership_witness(
    const Element& target, const std::vector<Element>& generators,
    std::uint32_t index_bound) {
  if (generators.empty()) {
    throw std::invalid_argument("ideal_membership_witness: empty generator list");
  }
  const FieldSpec& field = target.field();
  for (const auto& g : generators) {
    if (g.field() != field) {
      throw std::invalid_argument("ideal_membership_witness: field mismatch");
    }
  }
  std::vector<Element> witnesses(generators.size(), Element::zero(field));
  if (target.is_zero()) return witnesses;

  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto p = as_pc(generators[k]);
    if (!p) continue;
    if (auto q = right_divide_general(target, *p)) {
      witnesses[k] = *q;
      return witnesses;
    }
  }

  // Bounded witness search: one unknown per (generator, monomial) pair,
  // one equation per basis monomial reachable by the products.
  const auto mons = monomials_up_to(index_bound);
  std::vector<Element> products;
  std::vector<std::pair<std::size_t, std::size_t>> origin;  // (generator, monomial)
  for (std::size_t k = 0; k < generators.size(); ++k) {
    for (std::size_t t = 0; t < mons.size(); ++t) {
      Element prod = Element::monomial(mons[t], field) * generators[k];
      if (prod.is_zero()) continue;
      products.push_back(std::move(prod));
      origin.emplace_back(k, t);
    }
  }
  std::map<Monomial, std::size_t> row_of;
  auto row_index = [&row_of](const Monomial& m) {
    return row_of.emplace(m, row_of.size()).first->second;
  };
  for (const auto& prod : products) {
    for (const auto& [m, k] : prod.terms()) row_index(m);
  }
  for (const auto& [m, k] : target.terms()) row_index(m);

  std::vector<std::vector<Scalar>> rows(
      row_of.size(), std::vector<Scalar>(products.size(), Scalar::zero(field)));
  std::vector<Scalar> rhs(row_of.size(), Scalar::zero(field));
  for (std::size_t col = 0; col < products.size(); ++col) {
    for (const auto& [m, k] : products[col].terms()) rows[row_index(m)][col] = k;
  }
  for (const auto& [m, k] : target.terms()) rhs[row_index(m)] = k;

  const auto x = solve_dense(std::move(rows), std::move(rhs), field);
  if (!x) return std::nullopt;
  for (std::size_t col = 0; col < products.size(); ++col) {
    if ((*x)[col].is_zero()) continue;
    const auto [k, t] = origin[col];
    witnesses[k].add_term(mons[t], (*x)[col]);
  }
  Element check = Element::zero(field);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    check = check + witnesses[k] * generators[k];
  }
  if (check != target) throw std::logic_error("ideal_membership_witness: witness check failed");
  return witnesses;
}

std::string IdealClassification::describe() const {
  std::ostringstream os;
  switch (kind) {
    case IdealCase::InsideSocle:
      os << "inside the socle: every generator has zero Laurent image";
      break;
    case IdealCase::ContainsSocle:
      os << "I = R p(c) with p = " << p->poly().str()
         << "; socle generators certified as members up to the scan bound";
      break;
    case IdealCase::SummandCase:
      os << "I + J = R p(c) with p = " << p->poly().str()
         << "; undecided between I = R p(c) and a proper summand (uncertified:";
      for (const int i : socle_complement_indices) {
        if (i < 0) {
          os << " w";
        } else {
          os << " d*(c*)^" << i;
        }
      }
      os << ")";
      break;
  }
  return os.str();
}

IdealClassification classify_ideal(const std::vector<Element>& generators,
                                   std::uint32_t socle_bound,
                                   std::uint32_t witness_index_bound) {
  if (generators.empty()) {
    throw std::invalid_argument("classify_ideal: empty generator list");
  }
  const FieldSpec& field = generators.front().field();
  std::vector<LaurentPoly> images;
  bool all_zero = true;
  for (const auto& g : generators) {
    if (g.field() != field) throw std::invalid_argument("classify_ideal: field mismatch");
    images.push_back(laurent_image(g));
    all_zero = all_zero && images.back().is_zero();
  }

  IdealClassification out{IdealCase::InsideSocle, std::nullopt, {}, {}, true};
  if (all_zero) {
    for (const auto& g : generators) out.components.push_back(socle_decompose(g));
    return out;
  }

  out.p = laurent_gcd(images);
  Element target = Element::vertex_w(field);
  if (!ideal_membership_witness(target, generators, witness_index_bound)) {
    out.socle_complement_indices.push_back(-1);
  }
  for (std::uint32_t i = 0; i <= socle_bound; ++i) {
    target = Element::monomial(Monomial::monC(i), field);
    if (!ideal_membership_witness(target, generators, witness_index_bound)) {
      out.socle_complement_indices.push_back(static_cast<int>(i));
    }
  }
  out.decided = out.socle_complement_indices.empty();
  out.kind = out.decided ? IdealCase::ContainsSocle : IdealCase::SummandCase;
  return out;
}

}  // namespace jacobson
