#pragma once

#include <cstdint>
#include <random>

#include "jacobson/algebra.hpp"
#include "jacobson/poly.hpp"
#include "jacobson/series.hpp"
#include "jacobson/y_module.hpp"

namespace jacobson {

/// Seeded source of random algebra data for the verify suites. Coefficients
/// stay in a small integer window so exact rational arithmetic cannot blow
/// up over long runs; every draw is deterministic in the seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long int_in(long lo, long hi);
  Scalar scalar(const FieldSpec& field);
  Scalar nonzero_scalar(const FieldSpec& field);
  Poly poly(const FieldSpec& field, int max_degree);
  Poly nonzero_poly(const FieldSpec& field, int max_degree);
  /// Constant term forced nonzero.
  PPoly ppoly(const FieldSpec& field, int max_degree);
  Monomial monomial(std::uint32_t max_index);
  Element element(const FieldSpec& field, std::uint32_t max_index, int max_terms);
  Element nonzero_element(const FieldSpec& field, std::uint32_t max_index, int max_terms);
  RationalSeries series(const FieldSpec& field);
  YElement y_element(const FieldSpec& field);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace jacobson
