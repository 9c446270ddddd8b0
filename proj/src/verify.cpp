#include "jacobson/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "jacobson/division.hpp"
#include "jacobson/expr.hpp"
#include "jacobson/ideal.hpp"
#include "jacobson/prufer.hpp"
#include "jacobson/sampling.hpp"
#include "jacobson/simple_modules.hpp"
#include "jacobson/y_module.hpp"

namespace jacobson {

namespace {

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  void expect(bool ok, const std::string& name, const std::string& detail) {
    ++report_.cases;
    if (!ok) report_.failures.push_back({name, detail});
  }

 private:
  VerifyReport& report_;
};

const FieldSpec kQ = FieldSpec::rationals();

// x-1, x^2+x-1, x^3+x-1: pinned divisors; the latter two are reducible
// over some of the pinned prime fields, which the division machinery
// tolerates (only f(0) = -1 is load bearing there).
std::vector<FPoly> standard_divisors(const FieldSpec& field) {
  return {FPoly::make(Poly::from_ints(field, {-1, 1}), true),
          FPoly::make(Poly::from_ints(field, {-1, 1, 1}), true),
          FPoly::make(Poly::from_ints(field, {-1, 1, 0, 1}), true)};
}

std::string describe(const Element& e) { return e.str(); }

void suite_relations(Checker& ck, Sampler& s, int size) {
  for (const FieldSpec& field : {kQ, FieldSpec::prime_field(7)}) {
    const Element v = Element::vertex_v(field);
    const Element w = Element::vertex_w(field);
    const Element c = Element::gen_c(field);
    const Element cs = Element::gen_cstar(field);
    const Element d = Element::gen_d(field);
    const Element ds = Element::gen_dstar(field);
    const Element one = Element::one(field);
    const std::string tag = " over " + field.str();
    ck.expect(cs * c == v, "c*c = v" + tag, describe(cs * c));
    ck.expect(ds * d == w, "d*d = w" + tag, describe(ds * d));
    ck.expect((cs * d).is_zero(), "c*d = 0" + tag, describe(cs * d));
    ck.expect((ds * c).is_zero(), "d*c = 0" + tag, describe(ds * c));
    ck.expect(c * cs + d * ds == v, "cc* + dd* = v" + tag, describe(c * cs + d * ds));
    ck.expect(v + w == one, "v + w = 1" + tag, describe(v + w));
    ck.expect(v != one, "v is not the identity" + tag, describe(v));
  }

  const Element X = parse_element("X", kQ, Presentation::Jacobson);
  const Element Y = parse_element("Y", kQ, Presentation::Jacobson);
  ck.expect(X * Y == Element::one(kQ), "XY = 1", describe(X * Y));
  ck.expect(Y * X == Element::vertex_v(kQ), "YX = v", describe(Y * X));
  ck.expect(parse_element("(c' + d')*(c + d)", kQ) == Element::one(kQ),
            "(c*+d*)(c+d) = v+0+0+w", describe(parse_element("(c' + d')*(c + d)", kQ)));
  ck.expect(Y * Y * X == Element::gen_c(kQ), "Y^2 X = c", describe(Y * Y * X));

  for (const char* gen : {"v", "w", "c", "c'", "d", "d'"}) {
    const Element e = parse_element(gen, kQ);
    ck.expect(parse_element(to_jacobson(e), kQ, Presentation::Jacobson) == e,
              std::string("generator round trip through X,Y: ") + gen, to_jacobson(e));
  }
  for (int iter = 0; iter < size; ++iter) {
    const Element e = s.element(kQ, 4, 3);
    ck.expect(parse_element(to_jacobson(e), kQ, Presentation::Jacobson) == e,
              "element round trip through X,Y", describe(e));
  }
}

void suite_division(Checker& ck, Sampler& s, int size) {
  const std::vector<FieldSpec> fields{kQ, FieldSpec::prime_field(101)};
  for (int iter = 0; iter < size; ++iter) {
    const FieldSpec& field = fields[static_cast<std::size_t>(iter) % fields.size()];
    const auto divisors = standard_divisors(field);
    const FPoly& f = divisors[static_cast<std::size_t>(iter / 2) % divisors.size()];
    const Element fc = gf_embed(f.poly());
    const Element beta = s.element(field, 8, 5);
    const DivisionResult res = divide(beta, f);
    const std::string tag = describe(beta) + " by " + f.poly().str() + " over " + field.str();
    ck.expect(res.quotient * fc + gf_embed(res.remainder) == beta,
              "beta = q f(c) + r", tag);
    ck.expect(res.remainder.degree() < f.degree(), "remainder lies in G^f", tag);
    const auto again = right_divide(beta - gf_embed(res.remainder), f);
    ck.expect(again.has_value() && *again == res.quotient,
              "quotient agrees on the re-divided difference", tag);
    if (iter % 4 == 0) {
      const Element beta2 = s.element(field, 8, 5);
      const DivisionResult res2 = divide(beta2, f);
      const DivisionResult sum = divide(beta + beta2, f);
      ck.expect(sum.quotient == res.quotient + res2.quotient &&
                    sum.remainder == res.remainder + res2.remainder,
                "division is linear", tag);
    }
  }
}

void suite_ideal_split(Checker& ck, Sampler& s, int size) {
  const std::vector<FieldSpec> fields{kQ, FieldSpec::prime_field(101)};
  for (int iter = 0; iter < size; ++iter) {
    const FieldSpec& field = fields[static_cast<std::size_t>(iter) % fields.size()];
    const auto divisors = standard_divisors(field);
    const FPoly& f = divisors[static_cast<std::size_t>(iter / 2) % divisors.size()];
    const Element beta = s.nonzero_element(field, 8, 5);
    const Element prod = beta * gf_embed(f.poly());
    const std::string tag = describe(beta) + " times " + f.poly().str() + "(c)";
    ck.expect(!prod.is_zero(), "right multiplication by f(c) is injective", tag);
    ck.expect(rho(prod, f).is_zero(), "multiples of f(c) act as zero on c^inf", tag);
  }
  for (int iter = 0; iter < std::max(1, size / 5); ++iter) {
    const FieldSpec& field = fields[static_cast<std::size_t>(iter) % fields.size()];
    const auto divisors = standard_divisors(field);
    const FPoly& f = divisors[static_cast<std::size_t>(iter) % divisors.size()];
    const Poly g = s.nonzero_poly(field, f.degree() - 1);
    const std::string tag = g.str() + " against " + f.poly().str();
    ck.expect(!right_divide(gf_embed(g), f).has_value(),
              "G^f meets Rf(c) only in zero", tag);
    const DivisionResult res = divide(gf_embed(g), f);
    ck.expect(res.quotient.is_zero() && res.remainder == g,
              "G^f elements are their own remainder", tag);
  }
}

void suite_equation(Checker& ck, Sampler&, int) {
  for (const FieldSpec& field : {kQ, FieldSpec::prime_field(5)}) {
    for (const auto& coeffs : {std::vector<long>{-1, 1}, std::vector<long>{-1, 1, 1}}) {
      const FPoly f = FPoly::make(Poly::from_ints(field, coeffs), true);
      const Element fc = gf_embed(f.poly());
      for (unsigned n = 1; n <= 4; ++n) {
        std::ostringstream tag;
        tag << "f = " << f.poly().str() << ", n = " << n << ", field " << field.str();
        ck.expect(!solve_linear_in_Mn(fc, MnElement::unit(f, n)).has_value(),
                  "f(c)x = 1 has no solution in M_n", tag.str());
        ck.expect(solve_linear_in_Mn(fc, psi(MnElement::unit(f, n), n + 1)).has_value(),
                  "the shifted equation is solvable one level up", tag.str());
        const UfElement u = UfElement::generator(f, n);
        const UfElement div = uf_divide_by_fc(u);
        ck.expect(uf_act(fc, div) == u && div.level() == n + 1,
                  "f(c)x = alpha_n is solved at level n+1 in U^f", tag.str());
      }
    }
  }
}

void suite_uniserial(Checker& ck, Sampler&, int) {
  struct Instance {
    std::uint64_t p;
    std::vector<long> f;
    unsigned n;
  };
  const std::vector<Instance> instances{
      {3, {-1, 1}, 4},    {3, {-1, 1}, 6},    {3, {-1, 1, 1}, 4},
      {3, {-1, 0, 1, 1}, 2},  // irreducible cubic over F_3
      {5, {-1, 1}, 4},    {5, {-1, 2, 1}, 3},  // irreducible quadratic over F_5
  };
  for (const auto& inst : instances) {
    const FieldSpec field = FieldSpec::prime_field(inst.p);
    const FPoly f = FPoly::make(Poly::from_ints(field, inst.f), true);
    const auto dims = submodule_chain(f, inst.n);
    std::vector<unsigned> chain;
    const auto d = static_cast<unsigned>(f.degree());
    for (unsigned t = 0; t <= inst.n; ++t) chain.push_back(t * d);
    std::ostringstream tag;
    tag << "f = " << f.poly().str() << ", n = " << inst.n << " over F_" << inst.p
        << ": dims";
    for (const unsigned dim : dims) tag << " " << dim;
    ck.expect(dims == chain, "cyclic submodules form the full chain", tag.str());
  }

  // negative control: a split divisor is not uniserial already at n = 1
  const FieldSpec f3 = FieldSpec::prime_field(3);
  const FPoly split = FPoly::make(Poly::from_ints(f3, {-1, 0, 1}), true);
  const auto dims = submodule_chain(split, 1);
  ck.expect(dims == std::vector<unsigned>{0, 1, 1, 2},
            "a split divisor shows parallel simple submodules", "x^2 - 1 over F_3");
}

void baer_uf_cases(Checker& ck, Sampler& s, const std::vector<FieldSpec>& fields, int size) {
  for (int iter = 0; iter < size; ++iter) {
    const FieldSpec& field = fields[static_cast<std::size_t>(iter) % fields.size()];
    const FPoly f = FPoly::make(
        Poly::from_ints(field, iter % 2 == 0 ? std::vector<long>{-1, 1}
                                             : std::vector<long>{-1, 1, 1}),
        true);
    const unsigned n = 1 + static_cast<unsigned>(iter) % 3;
    const UfElement image = uf_normalize(f, n, MnElement(f, n, s.element(field, 5, 4)));
    const PPoly p = s.ppoly(field, 5);
    std::ostringstream tag;
    tag << "p = " << p.poly().str() << ", f = " << f.poly().str() << ", image level "
        << image.level() << " over " << field.str();
    const UfElement phi1 = extend_hom_to_Uf(p, f, image);
    ck.expect(uf_act(gf_embed(p.poly()), phi1) == image,
              "extension satisfies p(c) Phi(1) = image", tag.str());
  }
}

void suite_baer_uf(Checker& ck, Sampler& s, int size) {
  baer_uf_cases(ck, s, {kQ, FieldSpec::prime_field(7)}, size);

  // Hom(J, U^f) = 0 manifestation: the socle generators annihilate U^f
  for (int iter = 0; iter < std::max(1, size / 4); ++iter) {
    const FPoly f = FPoly::make(Poly::from_ints(kQ, {-1, 1, 1}));
    const unsigned n = 1 + static_cast<unsigned>(iter) % 3;
    const UfElement u = uf_normalize(f, n, MnElement(f, n, s.element(kQ, 5, 4)));
    ck.expect(uf_act(Element::vertex_w(kQ), u).is_zero(), "w annihilates U^f",
              std::to_string(u.level()));
    for (std::uint32_t i = 0; i <= 6; ++i) {
      ck.expect(uf_act(Element::monomial(Monomial::monC(i), kQ), u).is_zero(),
                "d*(c*)^i annihilates U^f", std::to_string(i));
    }
  }
}

void baer_y_cases(Checker& ck, Sampler& s, const std::vector<FieldSpec>& fields, int size) {
  for (int iter = 0; iter < size; ++iter) {
    const FieldSpec& field = fields[static_cast<std::size_t>(iter) % fields.size()];
    const PPoly p = s.ppoly(field, 5);
    const YElement y = s.y_element(field);
    const YElement z = solve_pc_in_y(p, y);
    ck.expect(y_act(gf_embed(p.poly()), z) == y, "p(c) z = y with structural equality",
              "p = " + p.poly().str() + " over " + field.str());
  }
}

void suite_baer_y(Checker& ck, Sampler& s, int size) {
  baer_y_cases(ck, s, {kQ, FieldSpec::prime_field(7)}, size);

  for (int iter = 0; iter < std::max(1, size / 4); ++iter) {
    const Scalar w_val = s.scalar(kQ);
    const RationalSeries vals = s.series(kQ);
    const YElement phi1 = extend_hom_from_J(w_val, vals);
    ck.expect(y_act(Element::vertex_w(kQ), phi1) ==
                  YElement(w_val, RationalSeries::zero(kQ)),
              "extension restricts to the prescribed value at w", w_val.str());
    bool all = true;
    for (std::uint32_t i = 0; i <= 32; ++i) {
      all = all && y_coeff(y_act(Element::monomial(Monomial::monC(i), kQ), phi1), -1) ==
                       vals.coeff(static_cast<int>(i));
    }
    ck.expect(all, "extension restricts to the prescribed values at d*(c*)^i, i <= 32",
              vals.str());
  }
}

void suite_rw(Checker& ck, Sampler& s, int size) {
  for (const FPoly& f : standard_divisors(kQ)) {
    ck.expect(rw_act(gf_embed(f.poly()), RwElement::w(kQ)) == -RwElement::w(kQ),
              "w f(c) = -w", f.poly().str());
    const auto nosol = solve_poly_c_in_rw(f.poly(), RwElement::d(kQ));
    ck.expect(!nosol.has_value(), "f(c)x = d has no solution in Rw", f.poly().str());
    const YElement z = solve_pc_in_y(PPoly::make(f.poly()), YElement::d(kQ));
    ck.expect(y_act(gf_embed(f.poly()), z) == YElement::d(kQ),
              "the same equation is solvable in Y", f.poly().str());
  }
  ck.expect(rw_act(Element::gen_c(kQ), RwElement::w(kQ)).is_zero(), "c w = 0", "");
  ck.expect(rw_act(Element::gen_dstar(kQ), RwElement::d(kQ)) == RwElement::w(kQ),
            "d* d = w", "");

  for (int iter = 0; iter < std::max(1, size / 2); ++iter) {
    const RwElement m(s.scalar(kQ), s.poly(kQ, 4));
    const Element r = s.element(kQ, 4, 3);
    ck.expect(rw_act(r, m).embed() == r * m.embed(), "Rw action matches the product",
              describe(r));
    ck.expect(RwElement::extract(m.embed()).has_value() &&
                  *RwElement::extract(m.embed()) == m,
              "embed and extract are inverse", describe(m.embed()));
  }

  for (int iter = 0; iter < size; ++iter) {
    YElement y = s.y_element(kQ);
    if (iter % 3 == 0) {
      // pure rational tail: the witness has to look past every polynomial prefix
      Poly den = s.poly(kQ, 2);
      if (den.coeff(0).is_zero()) den = den + Poly::constant(Scalar::one(kQ));
      y = YElement(Scalar::zero(kQ), RationalSeries::fraction(s.poly(kQ, 1), den));
    }
    if (y.is_zero()) continue;
    const EssentialWitness ew = essential_witness(y);
    const auto image = y_act(ew.r, y).to_rw();
    ck.expect(!ew.image.is_zero() && image.has_value() && *image == ew.image,
              "every nonzero element of Y sees Rw", describe(ew.r));
  }
}

void suite_socle(Checker& ck, Sampler& s, int size) {
  const std::vector<FieldSpec> fields{kQ, FieldSpec::prime_field(7)};
  for (int iter = 0; iter < size; ++iter) {
    const FieldSpec& field = fields[static_cast<std::size_t>(iter) % fields.size()];
    const Element a = s.element(field, 6, 4);
    const Element b = s.element(field, 6, 4);
    ck.expect(laurent_image(a * b) == laurent_image(a) * laurent_image(b),
              "the Laurent image is multiplicative", describe(a) + " ; " + describe(b));
    ck.expect(laurent_image(a + b) == laurent_image(a) + laurent_image(b),
              "the Laurent image is additive", describe(a) + " ; " + describe(b));
  }

  for (int iter = 0; iter < std::max(1, size / 5); ++iter) {
    const FieldSpec& field = fields[static_cast<std::size_t>(iter) % fields.size()];
    Element e = s.element(field, 6, 5);
    const LaurentPoly img = laurent_image(e);
    for (const auto& [deg, k] : img.terms()) {
      const Monomial m = deg >= 0 ? Monomial::monA(static_cast<std::uint32_t>(deg), 0)
                                  : Monomial::monA(0, static_cast<std::uint32_t>(-deg));
      e.add_term(m, -k);
    }
    ck.expect(socle_membership(e), "vanishing Laurent image means socle membership",
              describe(e));
    const SocleDecomposition dec = socle_decompose(e);
    Element sum = dec.rw_part;
    for (const auto& [i, comp] : dec.components) {
      (void)i;
      sum = sum + comp;
    }
    ck.expect(sum == e, "the socle decomposition reconstructs its input", describe(e));
    const Element outside = gf_embed(s.nonzero_poly(field, 4));
    ck.expect(!socle_membership(outside), "polynomials in c stay outside the socle",
              describe(outside));
  }

  for (std::uint32_t i = 0; i <= 6; ++i) {
    for (std::uint32_t j = 0; j <= 6; ++j) {
      const Element prod = idempotent_ei(i, kQ) * idempotent_ei(j, kQ);
      const Element want = i == j ? idempotent_ei(i, kQ) : Element::zero(kQ);
      ck.expect(prod == want, "e_i e_j = delta_ij e_i",
                std::to_string(i) + "," + std::to_string(j));
    }
  }

  for (const FPoly& f : standard_divisors(kQ)) {
    const auto cls = classify_ideal({gf_embed(f.poly())});
    ck.expect(cls.kind == IdealCase::ContainsSocle && cls.decided &&
                  cls.p->poly() == f.poly(),
              "the ideal of f(c) is decided as all of R f(c)", f.poly().str());
  }
  const auto inside = classify_ideal({Element::vertex_w(kQ)});
  ck.expect(inside.kind == IdealCase::InsideSocle, "the ideal of w lies in the socle", "w");
  const auto open = classify_ideal({parse_element("v*c - v", kQ)});
  ck.expect(open.kind == IdealCase::SummandCase && !open.decided &&
                open.socle_complement_indices == std::vector<int>{-1},
            "the v-cut generator stays undecided with w uncertified", "v(c-1)");
}

void suite_cogenerator(Checker& ck, Sampler& s, int size) {
  // Rw embeds in Y as its socle: nonzero, intertwining, essential image
  ck.expect(!YElement::from_rw(RwElement::w(kQ)).is_zero(),
            "the simple Rw maps nonzero into Y", "w");
  for (int iter = 0; iter < size; ++iter) {
    const RwElement m(s.scalar(kQ), s.poly(kQ, 4));
    const Element r = s.element(kQ, 4, 3);
    ck.expect(y_act(r, YElement::from_rw(m)) == YElement::from_rw(rw_act(r, m)),
              "the embedding Rw -> Y intertwines the action", describe(r));
  }

  // V^f embeds in U^f as the level-one copy, which f(c) kills
  for (const auto& coeffs : {std::vector<long>{-1, 1}, std::vector<long>{-1, 1, 1}}) {
    const FPoly f = FPoly::make(Poly::from_ints(kQ, coeffs));
    const Element fc = gf_embed(f.poly());
    const auto embed = [&f](const VfElement& m) {
      return uf_normalize(f, 1, MnElement(f, {m.residue()}));
    };
    ck.expect(!embed(VfElement::cinf(f)).is_zero(),
              "the simple V^f maps nonzero into U^f", f.poly().str());
    for (int iter = 0; iter < size; ++iter) {
      const VfElement m(f, s.poly(kQ, f.degree() - 1));
      const Element r = s.element(kQ, 4, 3);
      ck.expect(embed(act_vf(r, m)) == uf_act(r, embed(m)),
                "the embedding V^f -> U^f intertwines the action", f.poly().str());
      ck.expect(uf_act(fc, embed(m)).is_zero(), "f(c) kills the level-one copy",
                f.poly().str());
    }
    for (int iter = 0; iter < std::max(1, size / 2); ++iter) {
      const unsigned n = 1 + static_cast<unsigned>(iter) % 3;
      const UfElement u = uf_normalize(f, n, MnElement(f, n, s.element(kQ, 5, 4)));
      if (u.is_zero()) continue;
      const UfElement hit = uf_act(gf_embed(f.poly().pow(u.level() - 1)), u);
      ck.expect(!hit.is_zero() && hit.level() == 1,
                "every nonzero element of U^f reaches the socle copy",
                std::to_string(u.level()));
    }
  }

  // the designated envelopes pass their Baer families at reduced size
  baer_uf_cases(ck, s, {kQ}, std::max(1, size / 2));
  baer_y_cases(ck, s, {kQ}, std::max(1, size / 2));
}

struct SuiteEntry {
  std::string name;
  int default_size;
  std::function<void(Checker&, Sampler&, int)> run;
};

const std::vector<SuiteEntry>& suite_table() {
  static const std::vector<SuiteEntry> table{
      {"relations", 20, suite_relations},
      {"division", 1000, suite_division},
      {"ideal-split", 1000, suite_ideal_split},
      {"equation", 0, suite_equation},
      {"uniserial", 0, suite_uniserial},
      {"baer-uf", 200, suite_baer_uf},
      {"baer-y", 200, suite_baer_y},
      {"rw", 200, suite_rw},
      {"socle", 1000, suite_socle},
      {"cogenerator", 60, suite_cogenerator},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : suite_table()) out.push_back(entry.name);
    return out;
  }();
  return names;
}

std::vector<std::string> expand_verify_suites(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> groups{
      {"all", verify_suite_names()},
      {"baer", {"baer-uf", "baer-y"}},
      {"prufer", {"equation", "uniserial", "baer-uf"}},
      {"y", {"baer-y", "rw"}},
      {"cogenerator-finite", {"cogenerator"}},
  };
  if (const auto it = groups.find(name); it != groups.end()) return it->second;
  for (const auto& entry : suite_table()) {
    if (entry.name == name) return {name};
  }
  throw std::invalid_argument("unknown verify suite: " + name);
}

VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed, int size) {
  const SuiteEntry* entry = nullptr;
  for (const auto& e : suite_table()) {
    if (e.name == suite) entry = &e;
  }
  if (entry == nullptr) throw std::invalid_argument("unknown verify suite: " + suite);

  VerifyReport report;
  report.suite = suite;
  Checker ck(report);
  Sampler sampler(seed);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    entry->run(ck, sampler, size > 0 ? size : entry->default_size);
  } catch (const std::exception& ex) {
    ++report.cases;
    report.failures.push_back({"suite aborted by exception", ex.what()});
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace jacobson
