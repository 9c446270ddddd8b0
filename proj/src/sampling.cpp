#include "jacobson/sampling.hpp"

#include <vector>

namespace jacobson {

long Sampler::int_in(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Scalar Sampler::scalar(const FieldSpec& field) {
  return Scalar::from_int(int_in(-5, 5), field);
}

Scalar Sampler::nonzero_scalar(const FieldSpec& field) {
  for (;;) {
    const Scalar k = scalar(field);
    if (!k.is_zero()) return k;
  }
}

Poly Sampler::poly(const FieldSpec& field, int max_degree) {
  const int deg = static_cast<int>(int_in(0, max_degree));
  std::vector<Scalar> coeffs;
  for (int i = 0; i <= deg; ++i) coeffs.push_back(scalar(field));
  return Poly(field, std::move(coeffs));
}

Poly Sampler::nonzero_poly(const FieldSpec& field, int max_degree) {
  for (;;) {
    const Poly p = poly(field, max_degree);
    if (!p.is_zero()) return p;
  }
}

PPoly Sampler::ppoly(const FieldSpec& field, int max_degree) {
  Poly p = poly(field, max_degree);
  if (p.coeff(0).is_zero()) p = p + Poly::constant(nonzero_scalar(field));
  return PPoly::make(p);
}

Monomial Sampler::monomial(std::uint32_t max_index) {
  const auto idx = [this, max_index] {
    return static_cast<std::uint32_t>(int_in(0, static_cast<long>(max_index)));
  };
  switch (int_in(0, 3)) {
    case 0: return Monomial::monD();
    case 1: return Monomial::monB(idx());
    case 2: return Monomial::monC(idx());
    default: return Monomial::monA(idx(), idx());
  }
}

Element Sampler::element(const FieldSpec& field, std::uint32_t max_index, int max_terms) {
  Element out(field);
  const long terms = int_in(0, max_terms);
  for (long t = 0; t < terms; ++t) out.add_term(monomial(max_index), scalar(field));
  return out;
}

Element Sampler::nonzero_element(const FieldSpec& field, std::uint32_t max_index,
                                 int max_terms) {
  for (;;) {
    Element e = element(field, max_index, max_terms);
    if (!e.is_zero()) return e;
  }
}

RationalSeries Sampler::series(const FieldSpec& field) {
  Poly den = poly(field, 2);
  if (den.coeff(0).is_zero()) den = den + Poly::constant(Scalar::one(field));
  return RationalSeries::from_poly(poly(field, 2)) +
         RationalSeries::fraction(poly(field, 2), den);
}

YElement Sampler::y_element(const FieldSpec& field) {
  return YElement(scalar(field), series(field));
}

}  // namespace jacobson
