#include <random>
#include <stdexcept>

#include "doctest.h"
#include "jacobson/simple_modules.hpp"
#include "random_gen.hpp"

using namespace jacobson;
using jacobson::testing::random_element;
using jacobson::testing::random_poly;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

FPoly golden_ratio_f(const FieldSpec& field) {
  return FPoly::make(Poly::from_ints(field, {-1, 1, 1}));  // x^2 + x - 1
}

VfElement random_vf(std::mt19937_64& rng, const FPoly& f) {
  return VfElement(f, random_poly(rng, f.field(), f.degree() + 2));
}

RwElement random_rw(std::mt19937_64& rng, const FieldSpec& field) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  return RwElement(Scalar::from_int(coeff(rng), field), random_poly(rng, field, 5));
}
}  // namespace

TEST_CASE("V^f action reduces modulo f") {
  const FPoly f = golden_ratio_f(kQ);
  const VfElement xbar(f, Poly::x(kQ));

  // x^2 = 1 - x mod x^2 + x - 1
  CHECK(act_vf(Element::gen_c(kQ), xbar) == VfElement(f, Poly::from_ints(kQ, {1, -1})));
  // xbar^(-1) = g(xbar) = 1 + xbar
  CHECK(act_vf(Element::gen_cstar(kQ), VfElement::cinf(f)) ==
        VfElement(f, Poly::from_ints(kQ, {1, 1})));
  CHECK(act_vf(Element::vertex_v(kQ), xbar) == xbar);
  CHECK(act_vf(Element::one(kQ), xbar) == xbar);
  CHECK(act_vf(Element::vertex_w(kQ), xbar).is_zero());
  CHECK(act_vf(Element::gen_d(kQ), xbar).is_zero());
  CHECK(act_vf(Element::gen_dstar(kQ), VfElement::cinf(f)).is_zero());

  // deg f = 1 collapses every power of xbar to a scalar
  const FPoly lin = FPoly::make(Poly::from_ints(kQ, {-1, 1}));
  CHECK(act_vf(Element::gen_c(kQ), VfElement::cinf(lin)) == VfElement::cinf(lin));

  const FPoly other = FPoly::make(Poly::from_ints(kQ, {-1, 1, 0, 1}));
  CHECK_THROWS_AS((void)(VfElement::cinf(f) + VfElement::cinf(other)), std::invalid_argument);
}

TEST_CASE("V^f module axioms hold on random instances") {
  const FPoly fq = golden_ratio_f(kQ);
  const FieldSpec f7 = FieldSpec::prime_field(7);
  const FPoly fp = FPoly::make(Poly::from_ints(f7, {-1, 1, 0, 1}));  // x^3 + x - 1

  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 1000; ++iter) {
    const bool rational = iter < 700;
    const FieldSpec& field = rational ? kQ : f7;
    const FPoly& f = rational ? fq : fp;
    const Element r = random_element(rng, field, 5, 4);
    const Element s = random_element(rng, field, 5, 4);
    const VfElement m1 = random_vf(rng, f);
    const VfElement m2 = random_vf(rng, f);

    CHECK(act_vf(r * s, m1) == act_vf(r, act_vf(s, m1)));
    CHECK(act_vf(r + s, m1) == act_vf(r, m1) + act_vf(s, m1));
    CHECK(act_vf(r, m1 + m2) == act_vf(r, m1) + act_vf(r, m2));
    const Scalar k = Scalar::from_int(3, field);
    CHECK(act_vf(r.scaled(k), m1) == act_vf(r, m1).scaled(k));
    // c acts exactly as multiplication by x mod f
    CHECK(act_vf(Element::gen_c(field), m1) == m1.mul_xbar(1));
    CHECK(m1.mul_xbar(1).mul_xbar(-1) == m1);
  }
}

TEST_CASE("annihilator of V^f is the left ideal of f(c)") {
  std::mt19937_64 rng(77);
  for (const auto& coeffs : {std::vector<long>{-1, 1}, std::vector<long>{-1, 1, 1},
                             std::vector<long>{-1, 1, 0, 1}}) {
    const FPoly f = FPoly::make(Poly::from_ints(kQ, coeffs));
    const Element fc = gf_embed(f.poly());
    CHECK(annihilator_check(fc, f));
    CHECK(annihilator_check(Element::vertex_w(kQ), f));
    CHECK(annihilator_check(Element::gen_d(kQ), f));
    CHECK_FALSE(annihilator_check(Element::vertex_v(kQ), f));
    for (int iter = 0; iter < 50; ++iter) {
      const Element beta = random_element(rng, kQ, 5, 4);
      CHECK(annihilator_check(beta * fc, f));
      CHECK(act_vf(beta * fc, random_vf(rng, f)).is_zero());
    }
  }
  CHECK_FALSE(annihilator_check(Element::gen_c(kQ), golden_ratio_f(kQ)));
}

TEST_CASE("Rw embedding round-trips and rejects foreign elements") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const RwElement m = random_rw(rng, kQ);
    const auto back = RwElement::extract(m.embed());
    REQUIRE(back.has_value());
    CHECK(*back == m);
  }
  CHECK_FALSE(RwElement::extract(Element::vertex_v(kQ)).has_value());
  CHECK_FALSE(RwElement::extract(Element::gen_cstar(kQ)).has_value());
  CHECK_FALSE(RwElement::extract(Element::gen_dstar(kQ)).has_value());
  const auto mixed = RwElement::extract(Element::vertex_w(kQ) + Element::gen_d(kQ).scaled(
                                            Scalar::from_int(3, kQ)));
  REQUIRE(mixed.has_value());
  CHECK(mixed->w_coeff() == Scalar::one(kQ));
  CHECK(mixed->d_poly() == Poly::constant(Scalar::from_int(3, kQ)));
}

TEST_CASE("Rw action matches products in the algebra") {
  CHECK(rw_act(Element::gen_dstar(kQ), RwElement::d(kQ)) == RwElement::w(kQ));
  const RwElement cd(Scalar::zero(kQ), Poly::x(kQ));
  const RwElement ccd(Scalar::zero(kQ), Poly::x(kQ) * Poly::x(kQ));
  CHECK(rw_act(Element::gen_c(kQ), cd) == ccd);
  CHECK(rw_act(Element::vertex_w(kQ), RwElement::d(kQ)).is_zero());
  CHECK(rw_act(Element::gen_d(kQ), RwElement::w(kQ)) == RwElement::d(kQ));
  CHECK(rw_act(Element::gen_cstar(kQ), RwElement::d(kQ)).is_zero());

  const FieldSpec f7 = FieldSpec::prime_field(7);
  std::mt19937_64 rng(414);
  for (int iter = 0; iter < 1000; ++iter) {
    const FieldSpec& field = iter < 700 ? kQ : f7;
    const Element r = random_element(rng, field, 5, 4);
    const RwElement m = random_rw(rng, field);
    CHECK(rw_act(r, m).embed() == r * m.embed());
  }
}

TEST_CASE("equation solving in Rw splits into scalar and polynomial parts") {
  const RwElement d = RwElement::d(kQ);
  CHECK_FALSE(solve_poly_c_in_rw(Poly::from_ints(kQ, {-1, 1}), d).has_value());

  const auto half = solve_poly_c_in_rw(Poly::from_ints(kQ, {2}), d);
  REQUIRE(half.has_value());
  CHECK(half->kernel_dim == 0);
  CHECK(half->solution == d.scaled(Scalar::parse("1/2", kQ)));

  const RwElement cd(Scalar::zero(kQ), Poly::x(kQ));
  const auto degenerate = solve_poly_c_in_rw(Poly::x(kQ), cd);
  REQUIRE(degenerate.has_value());
  CHECK(degenerate->kernel_dim == 1);
  CHECK(degenerate->solution == d);

  // p(0) = 0 while b has a w part: p(c)x never reaches w
  CHECK_FALSE(solve_poly_c_in_rw(Poly::x(kQ), RwElement::w(kQ)).has_value());
  CHECK_THROWS_AS(solve_poly_c_in_rw(Poly::zero(kQ), d), std::invalid_argument);

  // d is never divisible by f(c) inside Rw
  for (const auto& coeffs : {std::vector<long>{-1, 1}, std::vector<long>{-1, 1, 1},
                             std::vector<long>{-1, 1, 0, 1}}) {
    CHECK_FALSE(solve_poly_c_in_rw(Poly::from_ints(kQ, coeffs), d).has_value());
  }

  const FieldSpec f7 = FieldSpec::prime_field(7);
  std::mt19937_64 rng(555);
  int kernel_cases = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const FieldSpec& field = iter < 350 ? kQ : f7;
    Poly p = random_poly(rng, field, 3);
    if (p.is_zero()) p = Poly::x(field);
    const RwElement x0 = random_rw(rng, field);
    const RwElement b = rw_act(gf_embed(p), x0);
    const auto sol = solve_poly_c_in_rw(p, b);
    REQUIRE(sol.has_value());
    CHECK(rw_act(gf_embed(p), sol->solution) == b);
    if (p.coeff(0).is_zero()) {
      ++kernel_cases;
      CHECK(sol->kernel_dim == 1);
    } else {
      CHECK(sol->kernel_dim == 0);
      CHECK(sol->solution == x0);
    }
  }
  CHECK(kernel_cases > 20);
}

TEST_CASE("brute-force simplicity agrees with irreducibility on small fields") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const FieldSpec f3 = FieldSpec::prime_field(3);
  const FieldSpec f5 = FieldSpec::prime_field(5);

  CHECK(simplicity_probe(FPoly::make(Poly::from_ints(f5, {-1, 1})), f5));
  CHECK(simplicity_probe(FPoly::make(Poly::from_ints(f3, {-1, 1, 1})), f3));
  CHECK(simplicity_probe(FPoly::make(Poly::from_ints(f5, {-1, 1, 0, 1})), f5));
  // x^2 + x - 1 = (x + 3)^2 over F_5: the probe sees the proper submodule
  CHECK_FALSE(simplicity_probe(FPoly::make(Poly::from_ints(f5, {-1, 1, 1}), true), f5));

  // monic quadratics x^2 + b x - 1: simplicity iff irreducibility
  for (const FieldSpec& field : {f2, f3, f5}) {
    for (long b = 0; b < static_cast<long>(field.prime()); ++b) {
      const Poly raw = Poly::from_ints(field, {-1, b, 1});
      const FPoly f = FPoly::make(raw, true);
      CHECK(simplicity_probe(f, field) == (is_irreducible(raw) == Ternary::True));
    }
  }

  CHECK_THROWS_AS(simplicity_probe(FPoly::make(Poly::from_ints(f2, {-1, 0, 0, 0, 1}), true), f2),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      simplicity_probe(FPoly::make(Poly::from_ints(FieldSpec::prime_field(11), {-1, 1})),
                       FieldSpec::prime_field(11)),
      std::invalid_argument);
  CHECK_THROWS_AS(simplicity_probe(FPoly::make(Poly::from_ints(kQ, {-1, 1})), kQ),
                  std::invalid_argument);
}
