#include <random>
#include <stdexcept>

#include "doctest.h"
#include "jacobson/division.hpp"
#include "jacobson/expr.hpp"
#include "jacobson/ideal.hpp"
#include "random_gen.hpp"

using namespace jacobson;
using jacobson::testing::random_element;
using jacobson::testing::random_poly;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

Element pc(const std::string& text) { return gf_embed(parse_poly(text, kQ)); }
}  // namespace

TEST_CASE("membership witnesses are found and verified") {
  const std::vector<Element> gens{pc("x - 1")};

  // w = -w(c - 1): the one-step certificate behind the socle scan
  const auto qw = ideal_membership_witness(Element::vertex_w(kQ), gens, 4);
  REQUIRE(qw.has_value());
  CHECK((*qw)[0] == -Element::vertex_w(kQ));

  // d*(c*)^j needs the telescoping witness -sum of d*(c*)^t, t <= j
  for (std::uint32_t j = 0; j <= 4; ++j) {
    const auto q = ideal_membership_witness(
        Element::monomial(Monomial::monC(j), kQ), gens, 4);
    REQUIRE(q.has_value());
    CHECK((*q)[0] * gens[0] == Element::monomial(Monomial::monC(j), kQ));
  }

  // no scalar multiple of w lands in R(c - v): acting by anything kills it
  const std::vector<Element> vcut{parse_element("v*c - v", kQ)};
  CHECK_FALSE(ideal_membership_witness(Element::vertex_w(kQ), vcut, 6).has_value());
  CHECK(ideal_membership_witness(Element::monomial(Monomial::monC(3), kQ), vcut, 6).has_value());

  CHECK(ideal_membership_witness(Element::zero(kQ), gens, 2).has_value());
  CHECK_THROWS_AS(ideal_membership_witness(Element::vertex_w(kQ), {}, 2),
                  std::invalid_argument);
}

TEST_CASE("membership search agrees with exact division on principal p(c) ideals") {
  std::mt19937_64 rng(909);
  const FieldSpec f7 = FieldSpec::prime_field(7);
  for (int iter = 0; iter < 60; ++iter) {
    const FieldSpec& field = iter % 2 == 0 ? kQ : f7;
    Poly p = random_poly(rng, field, 3);
    if (p.coeff(0).is_zero()) p = p + Poly::constant(Scalar::one(field));
    const std::vector<Element> gens{gf_embed(p)};
    const Element beta = random_element(rng, field, 3, 3);
    const Element member = beta * gens[0];
    const auto q = ideal_membership_witness(member, gens, 5);
    REQUIRE(q.has_value());
    CHECK((*q)[0] * gens[0] == member);
  }
}

TEST_CASE("multi-generator witnesses combine generators") {
  // d* + w is in <v(c-1), w> but in neither principal piece alone
  const std::vector<Element> gens{parse_element("v*c - v", kQ), Element::vertex_w(kQ)};
  const Element target = Element::monomial(Monomial::monC(0), kQ) + Element::vertex_w(kQ);
  CHECK_FALSE(ideal_membership_witness(target, {gens[0]}, 5).has_value());
  CHECK_FALSE(ideal_membership_witness(target, {gens[1]}, 5).has_value());
  const auto q = ideal_membership_witness(target, gens, 5);
  REQUIRE(q.has_value());
  CHECK((*q)[0] * gens[0] + (*q)[1] * gens[1] == target);
}

TEST_CASE("principal f(c) ideals classify as the whole R p(c)") {
  for (const char* text : {"x - 1", "x^2 + x - 1", "x^3 + x - 1"}) {
    const auto cls = classify_ideal({pc(text)});
    CHECK(cls.kind == IdealCase::ContainsSocle);
    CHECK(cls.decided);
    REQUIRE(cls.p.has_value());
    CHECK(cls.p->poly() == parse_poly(text, kQ));
    CHECK(cls.socle_complement_indices.empty());
  }
  // scaling the generator does not change the monic image gcd
  const auto scaled = classify_ideal({pc("x - 1").scaled(Scalar::from_int(3, kQ))});
  CHECK(scaled.kind == IdealCase::ContainsSocle);
  CHECK(scaled.p->poly() == parse_poly("x - 1", kQ));
}

TEST_CASE("socle generators classify as inside the socle") {
  const auto cls = classify_ideal({Element::vertex_w(kQ)});
  CHECK(cls.kind == IdealCase::InsideSocle);
  CHECK(cls.decided);
  CHECK_FALSE(cls.p.has_value());
  REQUIRE(cls.components.size() == 1);
  CHECK(cls.components[0].rw_part == Element::vertex_w(kQ));

  const Element mixed = parse_element("d + 2*c*d", kQ) + idempotent_ei(1, kQ);
  const auto cls2 = classify_ideal({Element::vertex_w(kQ), mixed});
  CHECK(cls2.kind == IdealCase::InsideSocle);
  CHECK(cls2.components.size() == 2);
}

TEST_CASE("the v-cut generator stays undecided with w as the uncertified piece") {
  const auto cls = classify_ideal({parse_element("v*c - v", kQ)});
  CHECK(cls.kind == IdealCase::SummandCase);
  CHECK_FALSE(cls.decided);
  REQUIRE(cls.p.has_value());
  CHECK(cls.p->poly() == parse_poly("x - 1", kQ));
  CHECK(cls.socle_complement_indices == std::vector<int>{-1});
  CHECK(cls.describe().find("undecided") != std::string::npos);
}

TEST_CASE("adding w back to the v-cut generator settles the classification") {
  const auto cls = classify_ideal(
      {parse_element("v*c - v", kQ), Element::vertex_w(kQ)}, 4, 6);
  CHECK(cls.kind == IdealCase::ContainsSocle);
  CHECK(cls.decided);
  CHECK(cls.p->poly() == parse_poly("x - 1", kQ));
}

TEST_CASE("mixed socle and non-socle generators take the gcd of the images") {
  const auto cls = classify_ideal({pc("x^2 + x - 1"), Element::gen_d(kQ)});
  CHECK(cls.p->poly() == parse_poly("x^2 + x - 1", kQ));
  CHECK(cls.kind == IdealCase::ContainsSocle);

  // images x-1 and x(x-1): gcd strips the invertible x factor
  const auto cls2 = classify_ideal(
      {pc("x - 1"), Element::gen_c(kQ) * pc("x - 1")});
  CHECK(cls2.p->poly() == parse_poly("x - 1", kQ));

  CHECK_THROWS_AS(classify_ideal({}), std::invalid_argument);
}
