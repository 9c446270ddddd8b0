#include "jacobson/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace jacobson {

std::string Monomial::str() const {
  std::ostringstream os;
  switch (sector) {
    case Sector::A:
      if (i == 0 && j == 0) return "v";
      if (i > 0) {
        os << "c";
        if (i > 1) os << "^" << i;
        if (j > 0) os << "*";
      }
      if (j > 0) {
        os << "c'";
        if (j > 1) os << "^" << j;
      }
      return os.str();
    case Sector::B:
      if (i > 0) {
        os << "c";
        if (i > 1) os << "^" << i;
        os << "*";
      }
      os << "d";
      return os.str();
    case Sector::C:
      os << "d'";
      if (j > 0) {
        os << "*c'";
        if (j > 1) os << "^" << j;
      }
      return os.str();
    case Sector::D:
      return "w";
  }
  return "";
}

Element Element::monomial(const Monomial& m, const Scalar& k) {
  Element e(k.field());
  e.add_term(m, k);
  return e;
}

Element Element::monomial(const Monomial& m, const FieldSpec& field) {
  return monomial(m, Scalar::one(field));
}

Element Element::one(const FieldSpec& field) {
  Element e(field);
  e.add_term(Monomial::vertex_v(), Scalar::one(field));
  e.add_term(Monomial::vertex_w(), Scalar::one(field));
  return e;
}

Element Element::vertex_v(const FieldSpec& field) {
  return monomial(Monomial::vertex_v(), field);
}

Element Element::vertex_w(const FieldSpec& field) {
  return monomial(Monomial::vertex_w(), field);
}

Element Element::gen_c(const FieldSpec& field) { return monomial(Monomial::monA(1, 0), field); }

Element Element::gen_cstar(const FieldSpec& field) {
  return monomial(Monomial::monA(0, 1), field);
}

Element Element::gen_d(const FieldSpec& field) { return monomial(Monomial::monB(0), field); }

Element Element::gen_dstar(const FieldSpec& field) { return monomial(Monomial::monC(0), field); }

Scalar Element::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& k) {
  if (k.field() != field_) throw std::invalid_argument("element coefficient field mismatch");
  if (k.is_zero()) return;
  const auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, k);
    return;
  }
  it->second = it->second + k;
  if (it->second.is_zero()) terms_.erase(it);
}

Element Element::operator+(const Element& other) const {
  if (field_ != other.field_) throw std::invalid_argument("element field mismatch");
  Element out = *this;
  for (const auto& [m, k] : other.terms_) out.add_term(m, k);
  return out;
}

Element Element::operator-(const Element& other) const { return *this + (-other); }

Element Element::operator-() const {
  Element out(field_);
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, -k);
  return out;
}

Element Element::scaled(const Scalar& k) const {
  Element out(field_);
  for (const auto& [m, c] : terms_) out.add_term(m, c * k);
  return out;
}

Element Element::operator*(const Element& other) const {
  if (field_ != other.field_) throw std::invalid_argument("element field mismatch");
  Element out(field_);
  for (const auto& [m1, k1] : terms_) {
    for (const auto& [m2, k2] : other.terms_) {
      if (m1.right_idempotent_is_v() != m2.left_idempotent_is_v()) continue;
      const Element prod = mono_mul(m1, m2, field_);
      const Scalar k = k1 * k2;
      for (const auto& [m, c] : prod.terms()) out.add_term(m, c * k);
    }
  }
  return out;
}

Element Element::pow(unsigned n) const {
  Element acc = Element::one(field_);
  Element base = *this;
  while (n != 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Element::operator==(const Element& other) const {
  return field_ == other.field_ && terms_ == other.terms_;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  // v and w carrying the same coefficient print as the unit 1_R.
  const Scalar kv = coeff(Monomial::vertex_v());
  const Scalar kw = coeff(Monomial::vertex_w());
  const bool collapse_unit = !kv.is_zero() && kv == kw;
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Scalar& k, const std::string& body) {
    const bool negative = field_.is_rationals() && k.rational() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const Scalar mag = negative ? -k : k;
    if (body.empty()) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << body;
    }
    first = false;
  };
  if (collapse_unit) emit(kv, "");
  for (const auto& [m, k] : terms_) {
    if (collapse_unit && (m == Monomial::vertex_v() || m == Monomial::vertex_w())) continue;
    emit(k, m.str());
  }
  return os.str();
}

Element mono_mul(const Monomial& m1, const Monomial& m2, const FieldSpec& field) {
  using S = Monomial::Sector;
  Element out(field);
  const Scalar one = Scalar::one(field);
  if (m1.right_idempotent_is_v() != m2.left_idempotent_is_v()) return out;
  if (m1.sector == S::A && m2.sector == S::A) {
    if (m1.j <= m2.i) {
      out.add_term(Monomial::monA(m1.i + m2.i - m1.j, m2.j), one);
    } else {
      out.add_term(Monomial::monA(m1.i, m1.j - m2.i + m2.j), one);
    }
  } else if (m1.sector == S::A && m2.sector == S::B) {
    if (m1.j <= m2.i) out.add_term(Monomial::monB(m1.i + m2.i - m1.j), one);
  } else if (m1.sector == S::B && m2.sector == S::C) {
    out.add_term(Monomial::monA(m1.i, m2.j), one);
    out.add_term(Monomial::monA(m1.i + 1, m2.j + 1), -one);
  } else if (m1.sector == S::B && m2.sector == S::D) {
    out.add_term(Monomial::monB(m1.i), one);
  } else if (m1.sector == S::C && m2.sector == S::A) {
    if (m2.i <= m1.j) out.add_term(Monomial::monC(m1.j - m2.i + m2.j), one);
  } else if (m1.sector == S::C && m2.sector == S::B) {
    if (m1.j == m2.i) out.add_term(Monomial::monD(), one);
  } else if (m1.sector == S::D && m2.sector == S::C) {
    out.add_term(Monomial::monC(m2.j), one);
  } else if (m1.sector == S::D && m2.sector == S::D) {
    out.add_term(Monomial::monD(), one);
  }
  return out;
}

Element gf_embed(const Poly& g) {
  Element out(g.field());
  for (int i = 0; i <= g.degree(); ++i) out.add_term(Monomial::monA(static_cast<std::uint32_t>(i), 0), g.coeff(i));
  out.add_term(Monomial::monD(), g.coeff(0));
  return out;
}

Element gf_embed_v(const Poly& g) {
  Element out(g.field());
  for (int i = 0; i <= g.degree(); ++i) out.add_term(Monomial::monA(static_cast<std::uint32_t>(i), 0), g.coeff(i));
  return out;
}

LaurentPoly laurent_image(const Element& e) {
  LaurentPoly out(e.field());
  for (const auto& [m, k] : e.terms()) {
    if (m.sector == Monomial::Sector::A) {
      out.add_term(static_cast<int>(m.i) - static_cast<int>(m.j), k);
    }
  }
  return out;
}

bool socle_membership(const Element& e) { return laurent_image(e).is_zero(); }

Element idempotent_ei(std::uint32_t i, const FieldSpec& field) {
  Element out(field);
  out.add_term(Monomial::monA(i, i), Scalar::one(field));
  out.add_term(Monomial::monA(i + 1, i + 1), -Scalar::one(field));
  return out;
}

SocleDecomposition socle_decompose(const Element& e) {
  if (!socle_membership(e)) throw std::invalid_argument("not in socle");
  SocleDecomposition out{e * Element::vertex_w(e.field()), {}};
  std::uint32_t max_index = 0;
  for (const auto& [m, k] : e.terms()) {
    (void)k;
    max_index = std::max({max_index, m.i, m.j});
  }
  for (std::uint32_t i = 0; i <= max_index; ++i) {
    Element comp = e * idempotent_ei(i, e.field());
    if (!comp.is_zero()) out.components.emplace_back(i, std::move(comp));
  }
  return out;
}

}  // namespace jacobson
