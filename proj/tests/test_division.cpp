#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "jacobson/division.hpp"
#include "jacobson/expr.hpp"
#include "random_gen.hpp"

using namespace jacobson;
using jacobson::testing::random_element;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

std::vector<FPoly> standard_divisors(const FieldSpec& field) {
  // x - 1, x^2 + x - 1, x^3 + x - 1; the quadratic splits over F_101, which
  // the division algorithm does not care about
  return {FPoly::make(Poly::from_ints(field, {-1, 1}), true),
          FPoly::make(Poly::from_ints(field, {-1, 1, 1}), true),
          FPoly::make(Poly::from_ints(field, {-1, 1, 0, 1}), true)};
}


// Order-independence oracle: eliminates one forced term at a time, picking
// uniformly among the currently eliminable ones. Every choice is forced
// (only one quotient term can produce it), so any order must reproduce
// right_divide's answer exactly.
std::optional<Element> shuffled_right_divide(const Element& gamma, const FPoly& f,
                                             std::mt19937_64& rng) {
  const FieldSpec& field = gamma.field();
  const Poly& fp = f.poly();
  const Scalar p0 = fp.coeff(0);
  const Scalar top = fp.coeff(fp.degree());
  const Element pc = gf_embed(fp);
  Element rest = gamma;
  Element q = Element::zero(field);

  while (!rest.is_zero()) {
    std::uint32_t max_a = 0, max_c = 0;
    std::uint32_t top_deg = 0;
    bool has_a0 = false;
    for (const auto& [m, k] : rest.terms()) {
      if (m.sector == Monomial::Sector::A) {
        if (m.j == 0) {
          has_a0 = true;
          if (m.i > top_deg) top_deg = m.i;
        } else if (m.j > max_a) {
          max_a = m.j;
        }
      } else if (m.sector == Monomial::Sector::C && m.j > max_c) {
        max_c = m.j;
      }
    }

    std::vector<std::pair<Monomial, Scalar>> candidates;
    for (const auto& [m, k] : rest.terms()) {
      switch (m.sector) {
        case Monomial::Sector::B:
        case Monomial::Sector::D:
          candidates.emplace_back(m, k / p0);
          break;
        case Monomial::Sector::C:
          if (m.j == max_c) candidates.emplace_back(m, k / p0);
          break;
        case Monomial::Sector::A:
          if (m.j >= 1 && m.j == max_a) {
            candidates.emplace_back(m, k / p0);
          } else if (m.j == 0 && max_a == 0 && m.i == top_deg && has_a0) {
            // long-division step on the commutative residual
            if (m.i < static_cast<std::uint32_t>(fp.degree())) return std::nullopt;
            candidates.emplace_back(
                Monomial::monA(m.i - static_cast<std::uint32_t>(fp.degree()), 0), k / top);
          }
          break;
      }
    }
    REQUIRE(!candidates.empty());
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const auto& [qm, qk] = candidates[pick(rng)];
    const Element term = Element::monomial(qm, qk);
    q = q + term;
    rest = rest - term * pc;
  }
  return q;
}
}  // namespace

TEST_CASE("rho acts on the infinite path and sigma sections it back") {
  const FPoly cubic = FPoly::make(Poly::from_ints(kQ, {-1, 1, 0, 1}));
  CHECK(rho(Element::vertex_v(kQ), cubic) == VfElement::cinf(cubic));
  CHECK(rho(Element::gen_d(kQ), cubic).is_zero());
  CHECK(rho(Element::gen_dstar(kQ), cubic).is_zero());
  CHECK(rho(Element::vertex_w(kQ), cubic).is_zero());

  // c^i (c*)^j -> xbar^(i-j); here xbar^(-1) = g(xbar) = x^2 + 1
  const Element m = Element::monomial(Monomial::monA(1, 2), kQ);
  CHECK(rho(m, cubic) == VfElement(cubic, Poly::from_ints(kQ, {1, 0, 1})));
  CHECK(rho(Element::monomial(Monomial::monA(4, 2), kQ), cubic) ==
        VfElement(cubic, Poly::from_ints(kQ, {0, 0, 1})));

  CHECK(sigma(rho(m, cubic), cubic) == Poly::from_ints(kQ, {1, 0, 1}));
  CHECK(sigma(VfElement::zero(cubic), cubic).is_zero());
  CHECK(sigma(VfElement::cinf(cubic), cubic) == Poly::constant(Scalar::one(kQ)));
  CHECK_THROWS_AS(sigma(VfElement::cinf(cubic), FPoly::make(Poly::from_ints(kQ, {-1, 1}))),
                  std::invalid_argument);
}

TEST_CASE("division pins down the worked examples") {
  const FPoly lin = FPoly::make(Poly::from_ints(kQ, {-1, 1}));
  const Element beta = parse_element("c^2*c'", kQ);

  const DivisionResult res = divide(beta, lin);
  CHECK(res.quotient == parse_element("c + 1 - c^2*c'", kQ));
  CHECK(res.remainder == Poly::constant(Scalar::one(kQ)));

  for (const FPoly& f : standard_divisors(kQ)) {
    const DivisionResult rw = divide(Element::vertex_w(kQ), f);
    CHECK(rw.quotient == -Element::vertex_w(kQ));
    CHECK(rw.remainder.is_zero());
  }

  const DivisionResult rv = divide(Element::vertex_v(kQ), lin);
  CHECK(rv.quotient == Element::vertex_w(kQ));
  CHECK(rv.remainder == Poly::constant(Scalar::one(kQ)));

  CHECK(right_divide(Element::vertex_w(kQ), lin) == -Element::vertex_w(kQ));
  CHECK(right_divide(parse_element("c^2*c' - 1", kQ), lin) ==
        parse_element("c + 1 - c^2*c'", kQ));
  CHECK_FALSE(right_divide(Element::vertex_v(kQ), lin).has_value());
}

TEST_CASE("division identity holds on random elements") {
  std::mt19937_64 rng(808);
  const FieldSpec f101 = FieldSpec::prime_field(101);
  for (const FieldSpec& field : {kQ, f101}) {
    for (const FPoly& f : standard_divisors(field)) {
      const Element fc = gf_embed(f.poly());
      for (int iter = 0; iter < 168; ++iter) {
        const Element beta = random_element(rng, field, 8, 6);
        const DivisionResult res = divide(beta, f);
        CHECK(res.quotient * fc + gf_embed(res.remainder) == beta);
        CHECK(res.remainder.degree() < f.degree());

        // right multiplication by f(c) is injective
        if (!beta.is_zero()) CHECK_FALSE((beta * fc).is_zero());
        // and f(c) annihilates the infinite path
        CHECK(rho(beta * fc, f).is_zero());
      }
    }
  }
}

TEST_CASE("quotients are independent of the elimination order") {
  std::mt19937_64 rng(99);
  const FieldSpec f101 = FieldSpec::prime_field(101);
  for (const FieldSpec& field : {kQ, f101}) {
    for (const FPoly& f : standard_divisors(field)) {
      const Element fc = gf_embed(f.poly());
      for (int iter = 0; iter < 35; ++iter) {
        const Element beta = random_element(rng, field, 6, 5);
        const Element divisible = beta * fc;
        const Element arbitrary = random_element(rng, field, 6, 5);
        for (const Element& gamma : {divisible, arbitrary}) {
          const auto reference = right_divide(gamma, f);
          for (int rep = 0; rep < 3; ++rep) {
            CHECK(shuffled_right_divide(gamma, f, rng) == reference);
          }
        }
        REQUIRE(right_divide(divisible, f) == beta);
      }
    }
  }
}

TEST_CASE("the ideal of f(c) meets the remainder space trivially") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (const FPoly& f : standard_divisors(kQ)) {
    for (int iter = 0; iter < 100; ++iter) {
      std::vector<Scalar> coeffs;
      for (int t = 0; t < f.degree(); ++t) {
        coeffs.push_back(Scalar::from_int(coeff(rng), kQ));
      }
      const Poly g(kQ, std::move(coeffs));
      if (g.is_zero()) continue;
      CHECK_FALSE(right_divide(gf_embed(g), f).has_value());
    }
  }
}

TEST_CASE("iterated division produces ideal coordinates") {
  const FPoly lin = FPoly::make(Poly::from_ints(kQ, {-1, 1}));
  const FPoly quad = FPoly::make(Poly::from_ints(kQ, {-1, 1, 1}));

  const auto expand_f = gf_coordinates(gf_embed(quad.poly()), quad, 2);
  REQUIRE(expand_f.coords.size() == 2);
  CHECK(expand_f.coords[0].is_zero());
  CHECK(expand_f.coords[1] == Poly::constant(Scalar::one(kQ)));
  CHECK(expand_f.tail.is_zero());

  const auto expand_c = gf_coordinates(Element::gen_c(kQ), lin, 2);
  CHECK(expand_c.coords[0] == Poly::constant(Scalar::one(kQ)));
  CHECK(expand_c.coords[1] == Poly::constant(Scalar::one(kQ)));
  CHECK(expand_c.tail.is_zero());

  const auto expand_w = gf_coordinates(Element::vertex_w(kQ), quad, 2);
  CHECK(expand_w.coords[0].is_zero());
  CHECK(expand_w.coords[1].is_zero());
  CHECK(expand_w.tail == Element::vertex_w(kQ));

  CHECK_THROWS_AS(gf_coordinates(Element::gen_c(kQ), lin, 0), std::invalid_argument);

  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 200; ++iter) {
    const Element beta = random_element(rng, kQ, 6, 5);
    const auto co = gf_coordinates(beta, quad, 3);
    const Element fc = gf_embed(quad.poly());
    Element rebuilt = co.tail;
    for (int t = 2; t >= 0; --t) {
      rebuilt = rebuilt * fc + gf_embed(co.coords[static_cast<std::size_t>(t)]);
    }
    CHECK(rebuilt == beta);
    CHECK(co.coords[0].degree() < quad.degree());
  }
}

TEST_CASE("ideal membership by vanishing coordinates") {
  for (const FPoly& f : standard_divisors(kQ)) {
    for (unsigned n = 1; n <= 6; ++n) {
      CHECK(in_ideal(Element::vertex_w(kQ), f, n));
    }
    CHECK_FALSE(in_ideal(Element::one(kQ), f, 1));
    const Element fc = gf_embed(f.poly());
    CHECK(in_ideal(fc * fc, f, 2));
    CHECK_FALSE(in_ideal(fc, f, 2));
    CHECK(in_ideal(fc, f, 1));
  }
}
