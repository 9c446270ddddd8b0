#include "jacobson/simple_modules.hpp"

#include <stdexcept>
#include <vector>

namespace jacobson {

VfElement::VfElement(const FPoly& f, const Poly& value)
    : f_(f), residue_(poly_divrem(value, f.poly()).second) {
  if (value.field() != f.field()) throw std::invalid_argument("VfElement field mismatch");
}

VfElement VfElement::zero(const FPoly& f) { return VfElement(f, Poly(f.field())); }

VfElement VfElement::cinf(const FPoly& f) {
  return VfElement(f, Poly::constant(Scalar::one(f.field())));
}

VfElement VfElement::operator+(const VfElement& other) const {
  if (f_ != other.f_) throw std::invalid_argument("VfElement divisor mismatch");
  return VfElement(f_, residue_ + other.residue_);
}

VfElement VfElement::operator-(const VfElement& other) const { return *this + (-other); }

VfElement VfElement::operator-() const { return VfElement(f_, -residue_); }

VfElement VfElement::scaled(const Scalar& k) const { return VfElement(f_, residue_.scaled(k)); }

bool VfElement::operator==(const VfElement& other) const {
  return f_ == other.f_ && residue_ == other.residue_;
}

VfElement VfElement::mul_xbar(int e) const {
  if (is_zero()) return *this;
  Poly factor = e >= 0 ? Poly::x(field()) : f_.g();
  unsigned count = static_cast<unsigned>(e >= 0 ? e : -e);
  Poly acc = residue_;
  // square-and-multiply on the reduced factor
  while (count != 0) {
    if (count & 1) acc = poly_divrem(acc * factor, f_.poly()).second;
    factor = poly_divrem(factor * factor, f_.poly()).second;
    count >>= 1;
  }
  return VfElement(f_, acc);
}

VfElement act_vf(const Element& r, const VfElement& m) {
  if (r.field() != m.field()) throw std::invalid_argument("act_vf field mismatch");
  VfElement acc = VfElement::zero(m.f());
  for (const auto& [mono, k] : r.terms()) {
    if (mono.sector != Monomial::Sector::A) continue;
    acc = acc + m.mul_xbar(static_cast<int>(mono.i) - static_cast<int>(mono.j)).scaled(k);
  }
  return acc;
}

bool annihilator_check(const Element& r, const FPoly& f) {
  const bool on_generator = act_vf(r, VfElement::cinf(f)).is_zero();
  bool on_basis = true;
  for (int t = 0; t < f.degree(); ++t) {
    const VfElement basis(f, Poly::x(f.field()).pow(static_cast<unsigned>(t)));
    if (!act_vf(r, basis).is_zero()) {
      on_basis = false;
      break;
    }
  }
  if (on_generator != on_basis) {
    throw std::logic_error("annihilator_check: generator and basis verdicts disagree");
  }
  return on_basis;
}

RwElement::RwElement(Scalar w_coeff, Poly d_poly)
    : w_coeff_(std::move(w_coeff)), d_poly_(std::move(d_poly)) {
  if (w_coeff_.field() != d_poly_.field()) {
    throw std::invalid_argument("RwElement field mismatch");
  }
}

RwElement RwElement::zero(const FieldSpec& field) {
  return RwElement(Scalar::zero(field), Poly(field));
}

RwElement RwElement::w(const FieldSpec& field) {
  return RwElement(Scalar::one(field), Poly(field));
}

RwElement RwElement::d(const FieldSpec& field) {
  return RwElement(Scalar::zero(field), Poly::constant(Scalar::one(field)));
}

RwElement RwElement::operator+(const RwElement& other) const {
  return RwElement(w_coeff_ + other.w_coeff_, d_poly_ + other.d_poly_);
}

RwElement RwElement::operator-(const RwElement& other) const { return *this + (-other); }

RwElement RwElement::operator-() const { return RwElement(-w_coeff_, -d_poly_); }

RwElement RwElement::scaled(const Scalar& k) const {
  return RwElement(w_coeff_ * k, d_poly_.scaled(k));
}

bool RwElement::operator==(const RwElement& other) const {
  return w_coeff_ == other.w_coeff_ && d_poly_ == other.d_poly_;
}

Element RwElement::embed() const {
  Element out(field());
  out.add_term(Monomial::monD(), w_coeff_);
  for (int i = 0; i <= d_poly_.degree(); ++i) {
    out.add_term(Monomial::monB(static_cast<std::uint32_t>(i)), d_poly_.coeff(i));
  }
  return out;
}

std::optional<RwElement> RwElement::extract(const Element& e) {
  Scalar w_coeff = Scalar::zero(e.field());
  std::vector<Scalar> d_coeffs;
  for (const auto& [m, k] : e.terms()) {
    if (m.sector == Monomial::Sector::D) {
      w_coeff = k;
    } else if (m.sector == Monomial::Sector::B) {
      if (d_coeffs.size() <= m.i) d_coeffs.resize(m.i + 1, Scalar::zero(e.field()));
      d_coeffs[m.i] = k;
    } else {
      return std::nullopt;
    }
  }
  return RwElement(w_coeff, Poly(e.field(), std::move(d_coeffs)));
}

RwElement rw_act(const Element& r, const RwElement& m) {
  const auto extracted = RwElement::extract(r * m.embed());
  if (!extracted) throw std::logic_error("rw_act: product left the Rw span");
  return *extracted;
}

std::optional<RwSolution> solve_poly_c_in_rw(const Poly& p, const RwElement& b) {
  if (p.is_zero()) throw std::invalid_argument("solve_poly_c_in_rw: p = 0");
  if (p.field() != b.field()) throw std::invalid_argument("solve_poly_c_in_rw field mismatch");
  const Scalar p0 = p.coeff(0);
  Scalar k = Scalar::zero(p.field());
  int kernel_dim = 0;
  if (p0.is_zero()) {
    if (!b.w_coeff().is_zero()) return std::nullopt;
    kernel_dim = 1;  // p(c)·w = 0: the w-coefficient of x is free, take 0
  } else {
    k = b.w_coeff() / p0;
  }
  const auto [h, rem] = poly_divrem(b.d_poly(), p);
  if (!rem.is_zero()) return std::nullopt;
  return RwSolution{RwElement(k, h), kernel_dim};
}

bool simplicity_probe(const FPoly& f, const FieldSpec& field) {
  if (field.is_rationals() || f.field() != field) {
    throw std::invalid_argument("simplicity_probe needs a prime field matching f");
  }
  const std::uint64_t p = field.prime();
  const int n = f.degree();
  if (n > 3 || p > 7) throw std::invalid_argument("simplicity_probe bounds: deg f <= 3, p <= 7");

  std::uint64_t total = 1;
  for (int t = 0; t < n; ++t) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t rest = code;
    std::vector<Scalar> coeffs;
    for (int t = 0; t < n; ++t) {
      coeffs.push_back(Scalar::from_int(static_cast<long>(rest % p), field));
      rest /= p;
    }
    VfElement m(f, Poly(field, std::move(coeffs)));
    // rows m, x̄m, ..., x̄^(n-1)m must span K^n
    std::vector<std::vector<Scalar>> rows;
    VfElement cur = m;
    for (int t = 0; t < n; ++t) {
      std::vector<Scalar> row;
      for (int s = 0; s < n; ++s) row.push_back(cur.residue().coeff(s));
      rows.push_back(std::move(row));
      cur = cur.mul_xbar(1);
    }
    // Gaussian elimination for the rank
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
      int pivot = -1;
      for (int rrow = rank; rrow < n; ++rrow) {
        if (!rows[rrow][col].is_zero()) {
          pivot = rrow;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(rows[rank], rows[pivot]);
      const Scalar inv = rows[rank][col].inverse();
      for (int s = 0; s < n; ++s) rows[rank][s] = rows[rank][s] * inv;
      for (int rrow = 0; rrow < n; ++rrow) {
        if (rrow == rank || rows[rrow][col].is_zero()) continue;
        const Scalar factor = rows[rrow][col];
        for (int s = 0; s < n; ++s) rows[rrow][s] = rows[rrow][s] - factor * rows[rank][s];
      }
      ++rank;
    }
    if (rank < n) return false;
  }
  return true;
}

}  // namespace jacobson
