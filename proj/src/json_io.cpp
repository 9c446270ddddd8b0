#include "jacobson/json_io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace jacobson {

namespace {

std::string sector_letter(Monomial::Sector s) {
  switch (s) {
    case Monomial::Sector::A: return "A";
    case Monomial::Sector::B: return "B";
    case Monomial::Sector::C: return "C";
    case Monomial::Sector::D: return "D";
  }
  throw std::logic_error("sector_letter: bad sector");
}

Monomial::Sector sector_of(const std::string& s) {
  if (s == "A") return Monomial::Sector::A;
  if (s == "B") return Monomial::Sector::B;
  if (s == "C") return Monomial::Sector::C;
  if (s == "D") return Monomial::Sector::D;
  throw std::invalid_argument("element JSON: unknown sector \"" + s + "\"");
}

// The divisor family is re-admitted without re-proving irreducibility:
// the JSON form carries no verdict, and the pinned instances include
// divisors that are reducible over their prime field.
FPoly f_from_json(const Json& j, const FieldSpec& field) {
  return FPoly::make(poly_from_json(j, field), /*allow_unverified=*/true);
}

}  // namespace

Json to_json(const FieldSpec& field) { return field.str(); }

FieldSpec field_from_json(const Json& j) { return FieldSpec::parse(j.get<std::string>()); }

Json to_json(const Scalar& k) { return k.str(); }

Scalar scalar_from_json(const Json& j, const FieldSpec& field) {
  return Scalar::parse(j.get<std::string>(), field);
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& k : p.coeffs()) out.push_back(to_json(k));
  return out;
}

Poly poly_from_json(const Json& j, const FieldSpec& field) {
  std::vector<Scalar> coeffs;
  for (const auto& entry : j) coeffs.push_back(scalar_from_json(entry, field));
  return Poly(field, std::move(coeffs));
}

Json to_json(const Element& e) {
  Json terms = Json::array();
  for (const auto& [m, k] : e.terms()) {
    terms.push_back(Json{{"sector", sector_letter(m.sector)},
                         {"i", m.i},
                         {"j", m.j},
                         {"coeff", to_json(k)}});
  }
  return Json{{"field", to_json(e.field())}, {"terms", std::move(terms)}};
}

Element element_from_json(const Json& j) {
  const FieldSpec field = field_from_json(j.at("field"));
  Element out(field);
  for (const auto& term : j.at("terms")) {
    const Monomial m{sector_of(term.at("sector").get<std::string>()),
                     term.at("i").get<std::uint32_t>(),
                     term.at("j").get<std::uint32_t>()};
    out.add_term(m, scalar_from_json(term.at("coeff"), field));
  }
  return out;
}

Json to_json(const VfElement& m) {
  return Json{{"field", to_json(m.field())},
              {"f", to_json(m.f().poly())},
              {"residue", to_json(m.residue())}};
}

VfElement vf_from_json(const Json& j) {
  const FieldSpec field = field_from_json(j.at("field"));
  const FPoly f = f_from_json(j.at("f"), field);
  return VfElement(f, poly_from_json(j.at("residue"), field));
}

Json to_json(const RwElement& m) {
  return Json{{"field", to_json(m.field())},
              {"w", to_json(m.w_coeff())},
              {"d", to_json(m.d_poly())}};
}

RwElement rw_from_json(const Json& j) {
  const FieldSpec field = field_from_json(j.at("field"));
  return RwElement(scalar_from_json(j.at("w"), field), poly_from_json(j.at("d"), field));
}

Json to_json(const MnElement& m) {
  Json coords = Json::array();
  for (const auto& c : m.coords()) coords.push_back(to_json(c));
  return Json{{"field", to_json(m.field())},
              {"f", to_json(m.f().poly())},
              {"n", m.n()},
              {"coords", std::move(coords)}};
}

MnElement mn_from_json(const Json& j) {
  const FieldSpec field = field_from_json(j.at("field"));
  const FPoly f = f_from_json(j.at("f"), field);
  const auto n = j.at("n").get<unsigned>();
  std::vector<Poly> coords;
  for (const auto& c : j.at("coords")) coords.push_back(poly_from_json(c, field));
  if (coords.size() != n) throw std::invalid_argument("MnElement JSON: n != #coords");
  return MnElement(f, std::move(coords));
}

Json to_json(const UfElement& u) {
  Json coords = Json::array();
  for (const auto& c : u.rep().coords()) coords.push_back(to_json(c));
  return Json{{"field", to_json(u.field())},
              {"f", to_json(u.f().poly())},
              {"level", u.level()},
              {"coords", std::move(coords)}};
}

UfElement uf_from_json(const Json& j) {
  const FieldSpec field = field_from_json(j.at("field"));
  const FPoly f = f_from_json(j.at("f"), field);
  const auto level = j.at("level").get<unsigned>();
  std::vector<Poly> coords;
  for (const auto& c : j.at("coords")) coords.push_back(poly_from_json(c, field));
  return uf_normalize(f, level, MnElement(f, std::move(coords)));
}

Json to_json(const YElement& y) {
  return Json{{"field", to_json(y.field())},
              {"w", to_json(y.w_coeff())},
              {"poly", to_json(y.series().poly_part())},
              {"num", to_json(y.series().num())},
              {"den", to_json(y.series().den())}};
}

YElement y_from_json(const Json& j) {
  const FieldSpec field = field_from_json(j.at("field"));
  const Poly den = poly_from_json(j.at("den"), field);
  if (den.coeff(0).is_zero()) throw std::invalid_argument("YElement JSON: den[0] = 0");
  const RationalSeries series =
      RationalSeries::from_poly(poly_from_json(j.at("poly"), field)) +
      RationalSeries::fraction(poly_from_json(j.at("num"), field), den);
  return YElement(scalar_from_json(j.at("w"), field), series);
}

Json to_json(const DivisionResult& d) {
  return Json{{"quotient", to_json(d.quotient)}, {"remainder", to_json(d.remainder)}};
}

Json to_json(const GfCoordinates& c) {
  Json coords = Json::array();
  for (const auto& g : c.coords) coords.push_back(to_json(g));
  return Json{{"coords", std::move(coords)}, {"tail", to_json(c.tail)}};
}

Json to_json(const RwSolution& s) {
  return Json{{"solution", to_json(s.solution)}, {"kernel_dim", s.kernel_dim}};
}

Json to_json(const SocleDecomposition& d) {
  Json comps = Json::array();
  for (const auto& [i, e] : d.components) {
    comps.push_back(Json{{"i", i}, {"value", to_json(e)}});
  }
  return Json{{"rw_part", to_json(d.rw_part)}, {"components", std::move(comps)}};
}

Json to_json(const IdealClassification& c) {
  Json out;
  switch (c.kind) {
    case IdealCase::InsideSocle: out["case"] = "inside_socle"; break;
    case IdealCase::ContainsSocle: out["case"] = "contains_socle"; break;
    case IdealCase::SummandCase: out["case"] = "summand_case"; break;
  }
  out["decided"] = c.decided;
  if (c.p) out["p"] = to_json(c.p->poly());
  if (!c.components.empty()) {
    Json comps = Json::array();
    for (const auto& d : c.components) comps.push_back(to_json(d));
    out["generators"] = std::move(comps);
  }
  if (!c.socle_complement_indices.empty()) {
    out["uncertified_socle_indices"] = c.socle_complement_indices;
  }
  out["summary"] = c.describe();
  return out;
}

Json to_json(const VerifyReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"case", f.case_name}, {"detail", f.detail}});
  }
  return Json{{"suite", r.suite},
              {"cases", r.cases},
              {"failures", std::move(failures)},
              {"wall_seconds", r.wall_seconds},
              {"ok", r.ok()}};
}

}  // namespace jacobson
