#include <stdexcept>

#include "doctest.h"
#include "jacobson/json_io.hpp"
#include "jacobson/sampling.hpp"
#include "jacobson/verify.hpp"

using namespace jacobson;

TEST_CASE("the sampler is deterministic in the seed") {
  Sampler a(42);
  Sampler b(42);
  const FieldSpec q = FieldSpec::rationals();
  for (int iter = 0; iter < 50; ++iter) {
    CHECK(a.element(q, 6, 4) == b.element(q, 6, 4));
    CHECK(a.poly(q, 4) == b.poly(q, 4));
    CHECK(a.series(q) == b.series(q));
  }
  CHECK(a.ppoly(q, 4).constant_term() != Scalar::zero(q));
  CHECK_FALSE(a.nonzero_element(q, 4, 3).is_zero());
}

TEST_CASE("suite registry resolves names and aliases") {
  CHECK(verify_suite_names().size() == 10);
  CHECK(expand_verify_suites("all") == verify_suite_names());
  CHECK(expand_verify_suites("baer") == std::vector<std::string>{"baer-uf", "baer-y"});
  CHECK(expand_verify_suites("prufer") ==
        std::vector<std::string>{"equation", "uniserial", "baer-uf"});
  CHECK(expand_verify_suites("y") == std::vector<std::string>{"baer-y", "rw"});
  CHECK(expand_verify_suites("cogenerator-finite") ==
        std::vector<std::string>{"cogenerator"});
  CHECK(expand_verify_suites("division") == std::vector<std::string>{"division"});
  CHECK_THROWS_AS(expand_verify_suites("nope"), std::invalid_argument);
  CHECK_THROWS_AS(run_verify_suite("nope", 1, 1), std::invalid_argument);
}

TEST_CASE("every suite passes at reduced size") {
  for (const auto& name : verify_suite_names()) {
    const VerifyReport report = run_verify_suite(name, 7, 40);
    INFO(name, ": ", report.failures.empty() ? "" : report.failures[0].case_name, " ",
         report.failures.empty() ? "" : report.failures[0].detail);
    CHECK(report.ok());
    CHECK(report.cases > 0);
    CHECK(report.suite == name);
  }
}

TEST_CASE("reports are reproducible and serialize to JSON") {
  const VerifyReport r1 = run_verify_suite("division", 11, 30);
  const VerifyReport r2 = run_verify_suite("division", 11, 30);
  CHECK(r1.cases == r2.cases);
  CHECK(r1.ok());

  const Json j = to_json(r1);
  CHECK(j.at("suite") == "division");
  CHECK(j.at("ok") == true);
  CHECK(j.at("cases") == r1.cases);
  CHECK(j.at("failures").empty());
}
