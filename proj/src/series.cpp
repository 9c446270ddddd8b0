#include "jacobson/series.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace jacobson {

RationalSeries::RationalSeries(Poly pp, Poly num, Poly den)
    : poly_part_(std::move(pp)), num_(std::move(num)), den_(std::move(den)) {}

RationalSeries RationalSeries::make(const Poly& total, const Poly& den) {
  if (den.coeff(0).is_zero()) {
    throw std::invalid_argument("series denominator must have nonzero constant term");
  }
  auto [pp, rem] = poly_divrem(total, den);
  if (rem.is_zero()) {
    return RationalSeries(std::move(pp), Poly(total.field()),
                          Poly::constant(Scalar::one(total.field())));
  }
  const Poly g = poly_gcd(rem, den);
  Poly num = poly_divrem(rem, g).first;
  Poly d = poly_divrem(den, g).first;
  const Scalar lead_inv = d.leading().inverse();
  return RationalSeries(std::move(pp), num.scaled(lead_inv), d.scaled(lead_inv));
}

Poly RationalSeries::total() const { return poly_part_ * den_ + num_; }

RationalSeries RationalSeries::zero(const FieldSpec& field) {
  return RationalSeries(Poly(field), Poly(field), Poly::constant(Scalar::one(field)));
}

RationalSeries RationalSeries::from_poly(const Poly& p) {
  return RationalSeries(p, Poly(p.field()), Poly::constant(Scalar::one(p.field())));
}

RationalSeries RationalSeries::fraction(const Poly& num, const Poly& den) {
  if (num.field() != den.field()) throw std::invalid_argument("series field mismatch");
  return make(num, den);
}

RationalSeries RationalSeries::invert(const PPoly& p) {
  return make(Poly::constant(Scalar::one(p.field())), p.poly());
}

Scalar RationalSeries::coeff(int n) const {
  if (n < 0) throw std::invalid_argument("series coefficient index must be >= 0");
  Scalar out = poly_part_.coeff(n);
  if (num_.is_zero()) return out;
  // num/den stream via the order-(deg den) linear recurrence.
  const Scalar d0_inv = den_.coeff(0).inverse();
  std::vector<Scalar> s;
  s.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Scalar acc = num_.coeff(k);
    for (int j = 1; j <= den_.degree() && j <= k; ++j) {
      acc = acc - den_.coeff(j) * s[static_cast<size_t>(k - j)];
    }
    s.push_back(acc * d0_inv);
  }
  return out + s.back();
}

RationalSeries RationalSeries::operator+(const RationalSeries& other) const {
  if (field() != other.field()) throw std::invalid_argument("series field mismatch");
  return make(total() * other.den_ + other.total() * den_, den_ * other.den_);
}

RationalSeries RationalSeries::operator-(const RationalSeries& other) const {
  return *this + (-other);
}

RationalSeries RationalSeries::operator*(const RationalSeries& other) const {
  if (field() != other.field()) throw std::invalid_argument("series field mismatch");
  return make(total() * other.total(), den_ * other.den_);
}

RationalSeries RationalSeries::operator-() const {
  return RationalSeries(-poly_part_, -num_, den_);
}

RationalSeries RationalSeries::scaled(const Scalar& k) const {
  if (k.is_zero()) return zero(field());
  return RationalSeries(poly_part_.scaled(k), num_.scaled(k), den_);
}

bool RationalSeries::operator==(const RationalSeries& other) const {
  return poly_part_ == other.poly_part_ && num_ == other.num_ && den_ == other.den_;
}

RationalSeries RationalSeries::shifted_up() const {
  return make(total().shifted_up(1), den_);
}

RationalSeries RationalSeries::shifted_down() const {
  const Poly t = total();
  const Scalar s0 = t.coeff(0) / den_.coeff(0);
  const Poly t2 = t - den_.scaled(s0);
  if (!t2.coeff(0).is_zero()) throw std::logic_error("shifted_down: constant did not cancel");
  std::vector<Scalar> dropped;
  for (int i = 1; i <= t2.degree(); ++i) dropped.push_back(t2.coeff(i));
  return make(Poly(field(), std::move(dropped)), den_);
}

std::string RationalSeries::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (!poly_part_.is_zero()) os << poly_part_.str(var);
  if (!num_.is_zero()) {
    if (!poly_part_.is_zero()) os << " + ";
    os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
  }
  return os.str();
}

}  // namespace jacobson
