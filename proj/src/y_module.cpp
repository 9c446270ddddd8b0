#include "jacobson/y_module.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace jacobson {

YElement::YElement(Scalar w_coeff, RationalSeries series)
    : w_coeff_(std::move(w_coeff)), series_(std::move(series)) {
  if (w_coeff_.field() != series_.field()) {
    throw std::invalid_argument("YElement field mismatch");
  }
}

YElement YElement::zero(const FieldSpec& field) {
  return YElement(Scalar::zero(field), RationalSeries::zero(field));
}

YElement YElement::w(const FieldSpec& field) {
  return YElement(Scalar::one(field), RationalSeries::zero(field));
}

YElement YElement::d(const FieldSpec& field) {
  return YElement(Scalar::zero(field),
                  RationalSeries::from_poly(Poly::constant(Scalar::one(field))));
}

YElement YElement::from_rw(const RwElement& m) {
  return YElement(m.w_coeff(), RationalSeries::from_poly(m.d_poly()));
}

std::optional<RwElement> YElement::to_rw() const {
  if (!series_.is_polynomial()) return std::nullopt;
  return RwElement(w_coeff_, series_.poly_part());
}

YElement YElement::operator+(const YElement& other) const {
  return YElement(w_coeff_ + other.w_coeff_, series_ + other.series_);
}

YElement YElement::operator-(const YElement& other) const { return *this + (-other); }

YElement YElement::operator-() const { return YElement(-w_coeff_, -series_); }

YElement YElement::scaled(const Scalar& k) const {
  return YElement(w_coeff_ * k, series_.scaled(k));
}

bool YElement::operator==(const YElement& other) const {
  return w_coeff_ == other.w_coeff_ && series_ == other.series_;
}

YElement y_act(const Element& r, const YElement& y) {
  const FieldSpec& field = y.field();
  if (r.field() != field) throw std::invalid_argument("y_act field mismatch");
  Scalar w_out = Scalar::zero(field);
  RationalSeries s_out = RationalSeries::zero(field);
  for (const auto& [m, k] : r.terms()) {
    switch (m.sector) {
      case Monomial::Sector::D:
        w_out = w_out + k * y.w_coeff();
        break;
      case Monomial::Sector::B: {
        Poly column = Poly::constant(k * y.w_coeff());
        column = column.shifted_up(static_cast<int>(m.i));
        s_out = s_out + RationalSeries::from_poly(column);
        break;
      }
      case Monomial::Sector::C:
        w_out = w_out + k * y.series().coeff(static_cast<int>(m.j));
        break;
      case Monomial::Sector::A: {
        RationalSeries shifted = y.series();
        for (std::uint32_t t = 0; t < m.j; ++t) shifted = shifted.shifted_down();
        for (std::uint32_t t = 0; t < m.i; ++t) shifted = shifted.shifted_up();
        s_out = s_out + shifted.scaled(k);
        break;
      }
    }
  }
  return YElement(std::move(w_out), std::move(s_out));
}

EssentialWitness essential_witness(const YElement& y) {
  const FieldSpec& field = y.field();
  if (y.is_zero()) throw std::invalid_argument("essential_witness: y = 0");

  Element r(field);
  if (!y.w_coeff().is_zero()) {
    r = Element::vertex_w(field);
  } else {
    // the first nonzero stream index is at most deg poly_part + deg den
    const int bound =
        std::max(y.series().poly_part().degree(), 0) + y.series().den().degree();
    int l = -1;
    for (int t = 0; t <= bound; ++t) {
      if (!y.series().coeff(t).is_zero()) {
        l = t;
        break;
      }
    }
    if (l < 0) throw std::logic_error("essential_witness: nonzero series with empty prefix");
    r = Element::monomial(Monomial::monC(static_cast<std::uint32_t>(l)), field);
  }

  const auto image = y_act(r, y).to_rw();
  if (!image || image->is_zero()) {
    throw std::logic_error("essential_witness: image escaped Rw");
  }
  return EssentialWitness{r, *image};
}

YElement extend_hom_from_J(const Scalar& w_val, const RationalSeries& vals) {
  return YElement(w_val, vals);
}

YElement solve_pc_in_y(const PPoly& p, const YElement& y) {
  if (p.field() != y.field()) throw std::invalid_argument("solve_pc_in_y field mismatch");
  const YElement z(y.w_coeff() / p.poly().coeff(0), y.series() * RationalSeries::invert(p));
  if (y_act(gf_embed(p.poly()), z) != y) {
    throw std::logic_error("solve_pc_in_y: p(c)·z = y failed verification");
  }
  return z;
}

Scalar y_coeff(const YElement& y, int idx) {
  if (idx < -1) throw std::invalid_argument("y_coeff: index below -1");
  if (idx == -1) return y.w_coeff();
  return y.series().coeff(idx);
}

}  // namespace jacobson
