#include "jacobson/field.hpp"

#include <ostream>
#include <stdexcept>

namespace jacobson {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witness set for the full 64-bit range.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::str() const {
  return is_rationals() ? "q" : "fp:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad field spec: " + text);
    }
    return prime_field(std::stoull(digits));
  }
  throw std::invalid_argument("bad field spec: " + text);
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(0, field); }

Scalar Scalar::one(const FieldSpec& field) { return from_int(1, field); }

Scalar Scalar::from_int(long value, const FieldSpec& field) {
  Scalar s(field);
  if (field.is_rationals()) {
    s.q_ = mpq_class(value);
  } else {
    const auto p = static_cast<long long>(field.prime());
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& value, const FieldSpec& field) {
  if (field.is_rationals()) {
    Scalar s(field);
    s.q_ = value;
    s.q_.canonicalize();
    return s;
  }
  const mpz_class p(static_cast<unsigned long>(field.prime()));
  mpz_class num = value.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes in F_p");
  Scalar s(field);
  s.r_ = num.get_ui();
  Scalar d(field);
  d.r_ = den.get_ui();
  return s / d;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& field) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad scalar literal: " + text);
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return from_mpq(q, field);
}

bool Scalar::is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw std::logic_error("rational(): scalar is not over Q");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rationals()) throw std::logic_error("residue(): scalar is over Q");
  return r_;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& other) const {
  check_same_field(other);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = q_ + other.q_;
  } else {
    const std::uint64_t p = field_.prime();
    std::uint64_t t = r_ + other.r_;
    if (t >= p || t < r_) t -= p;
    s.r_ = t;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
  check_same_field(other);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = q_ * other.q_;
  } else {
    s.r_ = mul_mod(r_, other.r_, field_.prime());
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& other) const { return *this * other.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.prime() - r_;
  }
  return s;
}

bool Scalar::operator==(const Scalar& other) const {
  if (field_ != other.field_) return false;
  return field_.is_rationals() ? q_ == other.q_ : r_ == other.r_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = pow_mod(r_, field_.prime() - 2, field_.prime());
  }
  return s;
}

std::string Scalar::str() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace jacobson
