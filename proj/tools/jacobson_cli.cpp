#include <algorithm>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jacobson/division.hpp"
#include "jacobson/expr.hpp"
#include "jacobson/ideal.hpp"
#include "jacobson/json_io.hpp"
#include "jacobson/prufer.hpp"
#include "jacobson/simple_modules.hpp"
#include "jacobson/verify.hpp"
#include "jacobson/y_module.hpp"

using namespace jacobson;

namespace {

Presentation presentation_of(const std::string& text) {
  if (text == "lpa") return Presentation::Lpa;
  if (text == "jacobson") return Presentation::Jacobson;
  throw std::invalid_argument("unknown presentation: " + text + " (use lpa or jacobson)");
}

// Element arguments accept the expression grammar or the JSON form the
// tool itself prints, so output can be piped back in.
Element element_arg(const std::string& text, const FieldSpec& field, Presentation pres) {
  const auto at = text.find_first_not_of(" \t\n");
  if (at != std::string::npos && text[at] == '{') {
    const Element e = element_from_json(Json::parse(text));
    if (e.field() != field) {
      throw std::invalid_argument("element JSON field disagrees with --field");
    }
    return e;
  }
  return parse_element(text, field, pres);
}

// Polynomial arguments: expression text, a bare coefficient list, or the
// JSON array-of-strings form the tool prints.
Poly poly_arg(const std::string& text, const FieldSpec& field) {
  if (text.find('"') != std::string::npos) {
    return poly_from_json(Json::parse(text), field);
  }
  return parse_poly(text, field);
}

std::vector<Poly> coords_arg(const std::string& text, const FieldSpec& field) {
  std::vector<Poly> out;
  for (const auto& entry : Json::parse(text)) out.push_back(poly_from_json(entry, field));
  return out;
}

RationalSeries series_arg(const std::string& poly_s, const std::string& num_s,
                          const std::string& den_s, const FieldSpec& field) {
  const Poly den = poly_arg(den_s, field);
  if (den.coeff(0).is_zero()) throw std::invalid_argument("--den must not vanish at 0");
  return RationalSeries::from_poly(poly_arg(poly_s, field)) +
         RationalSeries::fraction(poly_arg(num_s, field), den);
}

void emit(bool as_json, const Json& j, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::string coords_text(const std::vector<Poly>& coords) {
  std::ostringstream os;
  os << "[";
  for (std::size_t t = 0; t < coords.size(); ++t) {
    if (t > 0) os << "; ";
    os << coords[t].str();
  }
  os << "]";
  return os.str();
}

std::string y_text(const YElement& y) {
  return "w: " + y.w_coeff().str() + "   stream: " + y.series().str();
}

struct CommonArgs {
  std::string field = "q";
  bool json = false;

  FieldSpec spec() const { return FieldSpec::parse(field); }
};

void add_common(CLI::App* cmd, CommonArgs& common) {
  cmd->add_option("--field", common.field, "coefficient field: q or fp:<p>")
      ->capture_default_str();
  cmd->add_flag("--json", common.json, "print JSON instead of text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in the algebra K<X,Y | XY = 1> and its modules"};
  app.require_subcommand(1);
  int exit_code = 0;

  // normalize
  auto common_norm = std::make_shared<CommonArgs>();
  auto pres_norm = std::make_shared<std::string>("lpa");
  auto expr_norm = std::make_shared<std::string>();
  {
    auto* cmd = app.add_subcommand("normalize", "canonical form of an expression");
    add_common(cmd, *common_norm);
    cmd->add_option("--pres", *pres_norm, "input presentation: lpa or jacobson")
        ->capture_default_str();
    cmd->add_option("expr", *expr_norm, "expression")->required();
    cmd->callback([=] {
      const FieldSpec field = common_norm->spec();
      const Element e = element_arg(*expr_norm, field, presentation_of(*pres_norm));
      emit(common_norm->json, to_json(e), e.str());
    });
  }

  // multiply
  auto common_mul = std::make_shared<CommonArgs>();
  auto pres_mul = std::make_shared<std::string>("lpa");
  auto exprs_mul = std::make_shared<std::vector<std::string>>();
  {
    auto* cmd = app.add_subcommand("multiply", "product of expressions, normalized");
    add_common(cmd, *common_mul);
    cmd->add_option("--pres", *pres_mul, "input presentation: lpa or jacobson")
        ->capture_default_str();
    cmd->add_option("expr", *exprs_mul, "factors, left to right")->required()->expected(2, -1);
    cmd->callback([=] {
      const FieldSpec field = common_mul->spec();
      const Presentation pres = presentation_of(*pres_mul);
      Element acc = Element::one(field);
      for (const auto& text : *exprs_mul) acc = acc * element_arg(text, field, pres);
      emit(common_mul->json, to_json(acc), acc.str());
    });
  }

  // divide
  auto common_div = std::make_shared<CommonArgs>();
  auto f_div = std::make_shared<std::string>();
  auto n_div = std::make_shared<unsigned>(0);
  auto expr_div = std::make_shared<std::string>();
  {
    auto* cmd = app.add_subcommand(
        "divide", "division by f(c): quotient and remainder, or iterated coordinates");
    add_common(cmd, *common_div);
    cmd->add_option("--f", *f_div, "divisor polynomial with f(0) = -1")->required();
    cmd->add_option("--n", *n_div, "iterate n divisions and print ideal coordinates");
    cmd->add_option("expr", *expr_div, "dividend")->required();
    cmd->callback([=] {
      const FieldSpec field = common_div->spec();
      const FPoly f = FPoly::make(poly_arg(*f_div, field), true);
      const Element beta = element_arg(*expr_div, field, Presentation::Lpa);
      if (*n_div == 0) {
        const DivisionResult res = divide(beta, f);
        emit(common_div->json, to_json(res),
             "q = " + res.quotient.str() + "\nr = " + res.remainder.str());
      } else {
        const GfCoordinates coords = gf_coordinates(beta, f, *n_div);
        std::ostringstream os;
        os << "coords = " << coords_text(coords.coords) << "\ntail = " << coords.tail.str()
           << "\nin ideal of f^n(c): " << (in_ideal(beta, f, *n_div) ? "yes" : "no");
        emit(common_div->json, to_json(coords), os.str());
      }
    });
  }

  // act
  auto common_act = std::make_shared<CommonArgs>();
  auto module_act = std::make_shared<std::string>();
  auto f_act = std::make_shared<std::string>();
  auto on_act = std::make_shared<std::string>("1");
  auto w_act = std::make_shared<std::string>("0");
  auto d_act = std::make_shared<std::string>("0");
  auto expr_act = std::make_shared<std::string>();
  {
    auto* cmd = app.add_subcommand("act", "act an element on a simple module element");
    add_common(cmd, *common_act);
    cmd->add_option("--module", *module_act, "vf or rw")->required();
    cmd->add_option("--f", *f_act, "divisor for V^f");
    cmd->add_option("--on", *on_act, "V^f residue acted on")->capture_default_str();
    cmd->add_option("--w", *w_act, "Rw target: w coefficient")->capture_default_str();
    cmd->add_option("--d", *d_act, "Rw target: polynomial h with h(c)d")
        ->capture_default_str();
    cmd->add_option("expr", *expr_act, "acting element")->required();
    cmd->callback([=] {
      const FieldSpec field = common_act->spec();
      const Element r = element_arg(*expr_act, field, Presentation::Lpa);
      if (*module_act == "vf") {
        if (f_act->empty()) throw std::invalid_argument("--module vf needs --f");
        const FPoly f = FPoly::make(poly_arg(*f_act, field), true);
        const VfElement out = act_vf(r, VfElement(f, poly_arg(*on_act, field)));
        emit(common_act->json, to_json(out), out.residue().str());
      } else if (*module_act == "rw") {
        const RwElement target(Scalar::parse(*w_act, field), poly_arg(*d_act, field));
        const RwElement out = rw_act(r, target);
        emit(common_act->json, to_json(out), out.embed().str());
      } else {
        throw std::invalid_argument("unknown module: " + *module_act + " (use vf or rw)");
      }
    });
  }

  // solve-rw
  auto common_srw = std::make_shared<CommonArgs>();
  auto p_srw = std::make_shared<std::string>();
  auto w_srw = std::make_shared<std::string>("0");
  auto d_srw = std::make_shared<std::string>("0");
  {
    auto* cmd = app.add_subcommand("solve-rw", "solve p(c) x = b inside Rw");
    add_common(cmd, *common_srw);
    cmd->add_option("--p", *p_srw, "left factor polynomial")->required();
    cmd->add_option("--w", *w_srw, "b: w coefficient")->capture_default_str();
    cmd->add_option("--d", *d_srw, "b: polynomial h with h(c)d")->capture_default_str();
    cmd->callback([=] {
      const FieldSpec field = common_srw->spec();
      const RwElement b(Scalar::parse(*w_srw, field), poly_arg(*d_srw, field));
      const auto sol = solve_poly_c_in_rw(poly_arg(*p_srw, field), b);
      if (!sol) {
        emit(common_srw->json, Json{{"solvable", false}}, "no solution");
        return;
      }
      Json j = to_json(*sol);
      j["solvable"] = true;
      emit(common_srw->json, j,
           "x = " + sol->solution.embed().str() +
               "\nkernel dimension = " + std::to_string(sol->kernel_dim));
    });
  }

  // prufer act|solve|extend
  auto* prufer = app.add_subcommand("prufer", "finite levels M_n and the limit U^f");
  prufer->require_subcommand(1);
  auto common_pa = std::make_shared<CommonArgs>();
  auto f_pa = std::make_shared<std::string>();
  auto coords_pa = std::make_shared<std::string>();
  auto n_pa = std::make_shared<unsigned>(0);
  auto expr_pa = std::make_shared<std::string>();
  {
    auto* cmd = prufer->add_subcommand("act", "act an element on an M_n coset");
    add_common(cmd, *common_pa);
    cmd->add_option("--f", *f_pa, "divisor polynomial")->required();
    cmd->add_option("--n", *n_pa, "level (checked against --coords)");
    cmd->add_option("--coords", *coords_pa, "JSON coordinates [[...], ...]")->required();
    cmd->add_option("expr", *expr_pa, "acting element")->required();
    cmd->callback([=] {
      const FieldSpec field = common_pa->spec();
      const FPoly f = FPoly::make(poly_arg(*f_pa, field), true);
      auto coords = coords_arg(*coords_pa, field);
      if (*n_pa != 0 && *n_pa != coords.size()) {
        throw std::invalid_argument("--n disagrees with the coordinate count");
      }
      const MnElement m(f, std::move(coords));
      const Element r = element_arg(*expr_pa, field, Presentation::Lpa);
      const MnElement out = mn_act(r, m);
      emit(common_pa->json, to_json(out), coords_text(out.coords()));
    });
  }
  auto common_ps = std::make_shared<CommonArgs>();
  auto f_ps = std::make_shared<std::string>();
  auto a_ps = std::make_shared<std::string>();
  auto b_ps = std::make_shared<std::string>();
  {
    auto* cmd = prufer->add_subcommand("solve", "solve a x = b in M_n");
    add_common(cmd, *common_ps);
    cmd->add_option("--f", *f_ps, "divisor polynomial")->required();
    cmd->add_option("--a", *a_ps, "left factor element")->required();
    cmd->add_option("--b", *b_ps, "target coordinates, JSON")->required();
    cmd->callback([=] {
      const FieldSpec field = common_ps->spec();
      const FPoly f = FPoly::make(poly_arg(*f_ps, field), true);
      const MnElement b(f, coords_arg(*b_ps, field));
      const Element a = element_arg(*a_ps, field, Presentation::Lpa);
      const auto sol = solve_linear_in_Mn(a, b);
      if (!sol) {
        emit(common_ps->json, Json{{"solvable", false}}, "no solution");
        return;
      }
      Json j = to_json(*sol);
      j["solvable"] = true;
      emit(common_ps->json, j, coords_text(sol->coords()));
    });
  }
  auto common_pe = std::make_shared<CommonArgs>();
  auto f_pe = std::make_shared<std::string>();
  auto p_pe = std::make_shared<std::string>();
  auto level_pe = std::make_shared<unsigned>();
  auto image_pe = std::make_shared<std::string>();
  {
    auto* cmd = prufer->add_subcommand(
        "extend", "extend the hom R p(c) -> U^f with phi(p(c)) = image to Phi(1)");
    add_common(cmd, *common_pe);
    cmd->add_option("--f", *f_pe, "divisor polynomial")->required();
    cmd->add_option("--p", *p_pe, "ideal generator polynomial, p(0) != 0")->required();
    cmd->add_option("--level", *level_pe, "level of the image coordinates")->required();
    cmd->add_option("--image", *image_pe, "image coordinates, JSON")->required();
    cmd->callback([=] {
      const FieldSpec field = common_pe->spec();
      const FPoly f = FPoly::make(poly_arg(*f_pe, field), true);
      const PPoly p = PPoly::make(poly_arg(*p_pe, field));
      const UfElement image =
          uf_normalize(f, *level_pe, MnElement(f, coords_arg(*image_pe, field)));
      const UfElement phi1 = extend_hom_to_Uf(p, f, image);
      emit(common_pe->json, to_json(phi1),
           "level " + std::to_string(phi1.level()) + ": " +
               coords_text(phi1.rep().coords()));
    });
  }

  // y act|solve|witness|extend-j
  auto* ymod = app.add_subcommand("y", "the series module Y");
  ymod->require_subcommand(1);
  struct YArgs {
    CommonArgs common;
    std::string w = "0", poly = "0", num = "0", den = "1";
  };
  auto add_y_flags = [](CLI::App* cmd, const std::shared_ptr<YArgs>& args) {
    add_common(cmd, args->common);
    cmd->add_option("--w", args->w, "w coefficient")->capture_default_str();
    cmd->add_option("--poly", args->poly, "polynomial part of the stream")
        ->capture_default_str();
    cmd->add_option("--num", args->num, "numerator of the stream tail")
        ->capture_default_str();
    cmd->add_option("--den", args->den, "denominator of the stream tail, den(0) != 0")
        ->capture_default_str();
  };
  auto y_of = [](const YArgs& args) {
    const FieldSpec field = args.common.spec();
    return YElement(Scalar::parse(args.w, field),
                    series_arg(args.poly, args.num, args.den, field));
  };
  auto ya = std::make_shared<YArgs>();
  auto expr_ya = std::make_shared<std::string>();
  {
    auto* cmd = ymod->add_subcommand("act", "act an element on a Y element");
    add_y_flags(cmd, ya);
    cmd->add_option("expr", *expr_ya, "acting element")->required();
    cmd->callback([=] {
      const YElement y = y_of(*ya);
      const Element r = element_arg(*expr_ya, ya->common.spec(), Presentation::Lpa);
      const YElement out = y_act(r, y);
      emit(ya->common.json, to_json(out), y_text(out));
    });
  }
  auto ys = std::make_shared<YArgs>();
  auto p_ys = std::make_shared<std::string>();
  {
    auto* cmd = ymod->add_subcommand("solve", "solve p(c) z = y in Y");
    add_y_flags(cmd, ys);
    cmd->add_option("--p", *p_ys, "left factor polynomial, p(0) != 0")->required();
    cmd->callback([=] {
      const YElement y = y_of(*ys);
      const PPoly p = PPoly::make(poly_arg(*p_ys, ys->common.spec()));
      const YElement z = solve_pc_in_y(p, y);
      emit(ys->common.json, to_json(z), y_text(z));
    });
  }
  auto yw = std::make_shared<YArgs>();
  {
    auto* cmd = ymod->add_subcommand(
        "witness", "an element r with r y landing in Rw but not at zero");
    add_y_flags(cmd, yw);
    cmd->callback([=] {
      const EssentialWitness ew = essential_witness(y_of(*yw));
      emit(yw->common.json,
           Json{{"r", to_json(ew.r)}, {"image", to_json(ew.image)}},
           "r = " + ew.r.str() + "\nimage = " + ew.image.embed().str());
    });
  }
  auto ye = std::make_shared<YArgs>();
  {
    auto* cmd = ymod->add_subcommand(
        "extend-j", "extend hom data on the socle J to Phi(1) in Y");
    add_y_flags(cmd, ye);
    cmd->callback([=] {
      const FieldSpec field = ye->common.spec();
      const YElement phi1 = extend_hom_from_J(
          Scalar::parse(ye->w, field), series_arg(ye->poly, ye->num, ye->den, field));
      emit(ye->common.json, to_json(phi1), y_text(phi1));
    });
  }

  // classify-ideal
  auto common_ci = std::make_shared<CommonArgs>();
  auto bound_ci = std::make_shared<unsigned>(8);
  auto gens_ci = std::make_shared<std::vector<std::string>>();
  {
    auto* cmd = app.add_subcommand("classify-ideal",
                                   "place a finitely generated left ideal relative to "
                                   "the socle and the chain R p(c)");
    add_common(cmd, *common_ci);
    cmd->add_option("--bound", *bound_ci, "socle generator scan bound")
        ->capture_default_str();
    cmd->add_option("generators", *gens_ci, "generator expressions")->required();
    cmd->callback([=] {
      const FieldSpec field = common_ci->spec();
      std::vector<Element> gens;
      for (const auto& text : *gens_ci) {
        gens.push_back(element_arg(text, field, Presentation::Lpa));
      }
      const IdealClassification cls =
          classify_ideal(gens, *bound_ci, std::max(*bound_ci, 8u));
      emit(common_ci->json, to_json(cls), cls.describe());
    });
  }

  // verify
  auto common_v = std::make_shared<CommonArgs>();
  auto suite_v = std::make_shared<std::string>();
  auto seed_v = std::make_shared<std::uint64_t>(20260814);
  auto size_v = std::make_shared<int>(0);
  {
    auto* cmd = app.add_subcommand("verify", "replay an invariant suite");
    add_common(cmd, *common_v);
    cmd->add_option("suite", *suite_v,
                    "suite or group: relations, division, ideal-split, equation, "
                    "uniserial, baer-uf, baer-y, rw, socle, cogenerator, or one of "
                    "all, baer, prufer, y, cogenerator-finite")
        ->required();
    cmd->add_option("--seed", *seed_v, "sampler seed")->capture_default_str();
    cmd->add_option("--size", *size_v, "randomized case count (0 = suite default)")
        ->capture_default_str();
    cmd->callback([=, &exit_code] {
      Json reports = Json::array();
      bool all_ok = true;
      double total = 0.0;
      for (const auto& name : expand_verify_suites(*suite_v)) {
        const VerifyReport report = run_verify_suite(name, *seed_v, *size_v);
        total += report.wall_seconds;
        all_ok = all_ok && report.ok();
        if (common_v->json) {
          reports.push_back(to_json(report));
          continue;
        }
        std::ostringstream os;
        os << "suite " << name;
        for (std::size_t pad = name.size(); pad < 12; ++pad) os << ' ';
        os << (report.ok() ? "PASS" : "FAIL") << "  " << report.cases << " cases  "
           << report.wall_seconds << "s";
        std::cout << os.str() << "\n";
        for (const auto& f : report.failures) {
          std::cout << "  case failed: " << f.case_name << " [" << f.detail << "]\n";
        }
      }
      if (common_v->json) {
        std::cout << reports.dump(2) << "\n";
      } else {
        std::cout << "verify " << *suite_v << ": " << (all_ok ? "all checks passed" : "FAILED")
                  << " (" << total << "s)\n";
      }
      if (!all_ok) exit_code = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
