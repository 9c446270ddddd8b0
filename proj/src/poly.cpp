#include "jacobson/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace jacobson {

Poly::Poly(const FieldSpec& field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_) {
    if (c.field() != field_) throw std::invalid_argument("poly coefficient field mismatch");
  }
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Scalar& value) {
  return Poly(value.field(), {value});
}

Poly Poly::x(const FieldSpec& field) {
  return Poly(field, {Scalar::zero(field), Scalar::one(field)});
}

Poly Poly::from_ints(const FieldSpec& field, const std::vector<long>& coeffs) {
  std::vector<Scalar> cs;
  cs.reserve(coeffs.size());
  for (long c : coeffs) cs.push_back(Scalar::from_int(c, field));
  return Poly(field, std::move(cs));
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
  return coeffs_[i];
}

const Scalar& Poly::leading() const {
  if (is_zero()) throw std::logic_error("leading() of zero polynomial");
  return coeffs_.back();
}

Poly Poly::operator+(const Poly& other) const {
  if (field_ != other.field_) throw std::invalid_argument("poly field mismatch");
  std::vector<Scalar> out;
  const size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.push_back(coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i)));
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator-() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) out.push_back(-c);
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
  if (field_ != other.field_) throw std::invalid_argument("poly field mismatch");
  if (is_zero() || other.is_zero()) return Poly(field_);
  std::vector<Scalar> out(coeffs_.size() + other.coeffs_.size() - 1, Scalar::zero(field_));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] = out[i + j] + coeffs_[i] * other.coeffs_[j];
    }
  }
  return Poly(field_, std::move(out));
}

bool Poly::operator==(const Poly& other) const {
  return field_ == other.field_ && coeffs_ == other.coeffs_;
}

Poly Poly::scaled(const Scalar& k) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) out.push_back(c * k);
  return Poly(field_, std::move(out));
}

Poly Poly::shifted_up(int k) const {
  if (k < 0) throw std::invalid_argument("shifted_up: negative shift");
  if (is_zero()) return *this;
  std::vector<Scalar> out(static_cast<size_t>(k), Scalar::zero(field_));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Poly Poly::pow(unsigned n) const {
  Poly acc = Poly::constant(Scalar::one(field_));
  Poly base = *this;
  while (n != 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

bool Poly::is_monic() const { return !is_zero() && leading().is_one(); }

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Scalar c = coeff(i);
    if (c.is_zero()) continue;
    bool negative = field_.is_rationals() && c.rational() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    Scalar mag = negative ? -c : c;
    if (i == 0) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.field() != b.field()) throw std::invalid_argument("poly field mismatch");
  const FieldSpec& field = a.field();
  Poly q(field);
  Poly r = a;
  const Scalar lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const Scalar factor = r.leading() * lead_inv;
    Poly term = Poly::constant(factor).shifted_up(shift);
    q = q + term;
    r = r - term * b;
  }
  return {q, r};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a;
  Poly r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = poly_divrem(r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw std::invalid_argument("poly field mismatch");
  const FieldSpec& field = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Scalar::one(field)), s1(field);
  Poly t0(field), t1 = Poly::constant(Scalar::one(field));
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(field), Poly(field), Poly(field)};
  const Scalar scale = r0.leading().inverse();
  return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

namespace {

Poly poly_mod(const Poly& a, const Poly& m) { return poly_divrem(a, m).second; }

Poly poly_powmod(const Poly& base, std::uint64_t exp, const Poly& m) {
  Poly acc = Poly::constant(Scalar::one(base.field()));
  Poly b = poly_mod(base, m);
  while (exp != 0) {
    if (exp & 1) acc = poly_mod(acc * b, m);
    b = poly_mod(b * b, m);
    exp >>= 1;
  }
  return acc;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Rabin test: monic f over F_p of degree n is irreducible iff
/// x^(p^n) = x (mod f) and gcd(x^(p^(n/q)) - x, f) = 1 for primes q | n.
bool irreducible_mod_p(const Poly& f_in) {
  const Poly f = f_in.monic();
  const FieldSpec& field = f.field();
  const std::uint64_t p = field.prime();
  const int n = f.degree();
  if (n == 1) return true;
  const Poly x = Poly::x(field);
  std::vector<Poly> frob;  // frob[k] = x^(p^(k+1)) mod f
  frob.push_back(poly_powmod(x, p, f));
  for (int k = 1; k < n; ++k) frob.push_back(poly_powmod(frob.back(), p, f));
  if (poly_mod(frob[n - 1] - x, f) != Poly(field)) return false;
  for (int q : prime_divisors(n)) {
    const Poly g = poly_gcd(frob[n / q - 1] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

/// Scales a rational polynomial to a primitive integer polynomial.
std::vector<mpz_class> primitive_integer_coeffs(const Poly& f) {
  mpz_class lcm_den(1);
  for (const Scalar& c : f.coeffs()) {
    mpz_class den = c.rational().get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  std::vector<mpz_class> out;
  out.reserve(f.coeffs().size());
  mpz_class content(0);
  for (const Scalar& c : f.coeffs()) {
    mpq_class scaled = c.rational() * mpq_class(lcm_den);
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content != 0) {
    for (mpz_class& c : out) c /= content;
  }
  return out;
}

std::vector<mpz_class> positive_divisors_capped(const mpz_class& n_in) {
  std::vector<mpz_class> out;
  mpz_class n = abs(n_in);
  if (n == 0 || n > 1000000) return out;  // caller treats empty as "gave up"
  for (mpz_class d(1); d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  return out;
}

/// True/False when the rational-root search completes, Unknown when the
/// constant or leading coefficient is too large to enumerate divisors.
Ternary has_rational_root(const std::vector<mpz_class>& f) {
  const mpz_class& a0 = f.front();
  const mpz_class& an = f.back();
  if (a0 == 0) return Ternary::True;  // root 0
  auto eval_at = [&f](const mpq_class& at) {
    mpq_class acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * at + mpq_class(*it);
    return acc;
  };
  const std::vector<mpz_class> ps = positive_divisors_capped(a0);
  const std::vector<mpz_class> qs = positive_divisors_capped(an);
  if (ps.empty() || qs.empty()) return Ternary::Unknown;
  for (const mpz_class& p : ps) {
    for (const mpz_class& q : qs) {
      mpq_class cand(p, q);
      cand.canonicalize();
      if (eval_at(cand) == 0 || eval_at(-cand) == 0) return Ternary::True;
    }
  }
  return Ternary::False;
}

Ternary irreducible_over_q(const Poly& f) {
  const std::vector<mpz_class> zf = primitive_integer_coeffs(f);
  const Ternary root = has_rational_root(zf);
  if (root == Ternary::True) return Ternary::False;  // linear factor splits off
  if (root == Ternary::False && f.degree() <= 3) return Ternary::True;
  // Reduction criterion: irreducible mod p with the degree preserved lifts.
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull, 41ull, 43ull, 47ull, 53ull, 59ull,
                          61ull, 67ull, 71ull, 73ull, 79ull, 83ull, 89ull, 97ull}) {
    if (mpz_class(zf.back() % static_cast<long>(p)) == 0) continue;
    const FieldSpec fp = FieldSpec::prime_field(p);
    std::vector<Scalar> cs;
    cs.reserve(zf.size());
    for (const mpz_class& c : zf) cs.push_back(Scalar::from_mpq(mpq_class(c), fp));
    if (irreducible_mod_p(Poly(fp, std::move(cs)))) return Ternary::True;
  }
  return Ternary::Unknown;
}

}  // namespace

Ternary is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return Ternary::False;
  if (f.degree() == 1) return Ternary::True;
  if (f.field().is_rationals()) return irreducible_over_q(f);
  return irreducible_mod_p(f) ? Ternary::True : Ternary::False;
}

Poly inverse_of_x_mod(const Poly& p) {
  const Scalar p0 = p.coeff(0);
  if (p0.is_zero()) throw std::invalid_argument("x is not invertible: p(0) = 0");
  std::vector<Scalar> shifted(p.coeffs().begin() + (p.is_zero() ? 0 : 1), p.coeffs().end());
  const Scalar scale = -(p0.inverse());
  Poly out(p.field(), std::move(shifted));
  return out.scaled(scale);
}

FPoly FPoly::make(const Poly& f, bool allow_unverified) {
  if (f.degree() < 1) throw std::invalid_argument("divisor must have degree >= 1");
  if (f.coeff(0) != -Scalar::one(f.field())) {
    throw std::invalid_argument("divisor must have constant term -1");
  }
  const Ternary verdict = is_irreducible(f);
  if (verdict != Ternary::True && !allow_unverified) {
    throw std::invalid_argument("divisor is not verified irreducible: " + f.str());
  }
  std::vector<Scalar> gc(f.coeffs().begin() + 1, f.coeffs().end());
  Poly g(f.field(), std::move(gc));
  return FPoly(f, std::move(g), verdict);
}

PPoly PPoly::make(const Poly& p) {
  if (p.coeff(0).is_zero()) {
    throw std::invalid_argument("polynomial must have nonzero constant term");
  }
  return PPoly(p);
}

}  // namespace jacobson
