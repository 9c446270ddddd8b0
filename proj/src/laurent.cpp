#include "jacobson/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace jacobson {

LaurentPoly LaurentPoly::monomial(const Scalar& k, int deg) {
  LaurentPoly out(k.field());
  out.add_term(deg, k);
  return out;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p) {
  LaurentPoly out(p.field());
  for (int i = 0; i <= p.degree(); ++i) out.add_term(i, p.coeff(i));
  return out;
}

Scalar LaurentPoly::coeff(int deg) const {
  const auto it = terms_.find(deg);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw std::logic_error("min_degree of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw std::logic_error("max_degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int deg, const Scalar& k) {
  if (k.field() != field_) throw std::invalid_argument("laurent coefficient field mismatch");
  if (k.is_zero()) return;
  const auto it = terms_.find(deg);
  if (it == terms_.end()) {
    terms_.emplace(deg, k);
    return;
  }
  it->second = it->second + k;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  if (field_ != other.field_) throw std::invalid_argument("laurent field mismatch");
  LaurentPoly out = *this;
  for (const auto& [deg, k] : other.terms_) out.add_term(deg, k);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return *this + (-other); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(field_);
  for (const auto& [deg, k] : terms_) out.terms_.emplace(deg, -k);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  if (field_ != other.field_) throw std::invalid_argument("laurent field mismatch");
  LaurentPoly out(field_);
  for (const auto& [d1, k1] : terms_) {
    for (const auto& [d2, k2] : other.terms_) out.add_term(d1 + d2, k1 * k2);
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Scalar& k) const {
  LaurentPoly out(field_);
  for (const auto& [deg, c] : terms_) out.add_term(deg, c * k);
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  return field_ == other.field_ && terms_ == other.terms_;
}

std::pair<int, Poly> LaurentPoly::split_monomial() const {
  const int m = min_degree();
  std::vector<Scalar> coeffs(static_cast<size_t>(max_degree() - m + 1), Scalar::zero(field_));
  for (const auto& [deg, k] : terms_) coeffs[static_cast<size_t>(deg - m)] = k;
  return {m, Poly(field_, std::move(coeffs))};
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [deg, c] = *it;
    const bool negative = field_.is_rationals() && c.rational() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const Scalar mag = negative ? -c : c;
    if (deg == 0) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << var;
      if (deg != 1) os << "^" << deg;
    }
    first = false;
  }
  return os.str();
}

PPoly laurent_gcd(const std::vector<LaurentPoly>& items) {
  Poly g = items.empty() ? Poly(FieldSpec::rationals()) : Poly(items.front().field());
  bool any = false;
  for (const LaurentPoly& item : items) {
    if (item.is_zero()) continue;
    const auto [m, p] = item.split_monomial();
    (void)m;
    g = any ? poly_gcd(g, p) : p.monic();
    any = true;
  }
  if (!any) throw std::invalid_argument("laurent_gcd: no nonzero inputs");
  return PPoly::make(g);
}

}  // namespace jacobson
