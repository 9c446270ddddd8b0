#include "jacobson/prufer.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "jacobson/linalg.hpp"

namespace jacobson {

namespace {

std::vector<Scalar> flatten(const MnElement& m) {
  const unsigned d = static_cast<unsigned>(m.f().degree());
  std::vector<Scalar> out(m.n() * d, Scalar::zero(m.field()));
  for (unsigned j = 0; j < m.n(); ++j) {
    for (unsigned i = 0; i < d; ++i) {
      out[j * d + i] = m.coords()[j].coeff(static_cast<int>(i));
    }
  }
  return out;
}

MnElement unflatten(const FPoly& f, unsigned n, const std::vector<Scalar>& v) {
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<Poly> coords;
  for (unsigned j = 0; j < n; ++j) {
    std::vector<Scalar> c(v.begin() + j * d, v.begin() + (j + 1) * d);
    coords.emplace_back(f.field(), std::move(c));
  }
  return MnElement(f, std::move(coords));
}

// Reduced-row-echelon span with incremental insertion; canonical, so two
// spans are equal iff their row lists are equal.
class Span {
 public:
  bool insert(std::vector<Scalar> v) {
    reduce(v);
    std::size_t lead = v.size();
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (!v[t].is_zero()) {
        lead = t;
        break;
      }
    }
    if (lead == v.size()) return false;
    const Scalar inv = v[lead].inverse();
    for (auto& entry : v) entry = entry * inv;
    for (auto& row : rows_) {
      const Scalar factor = row.second[lead];
      if (factor.is_zero()) continue;
      for (std::size_t t = 0; t < v.size(); ++t) {
        row.second[t] = row.second[t] - factor * v[t];
      }
    }
    std::size_t at = 0;
    while (at < rows_.size() && rows_[at].first < lead) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), {lead, std::move(v)});
    return true;
  }

  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }

  bool operator==(const Span& other) const { return rows_ == other.rows_; }

 private:
  void reduce(std::vector<Scalar>& v) const {
    for (const auto& [lead, row] : rows_) {
      const Scalar factor = v[lead];
      if (factor.is_zero()) continue;
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = v[t] - factor * row[t];
    }
  }

  std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_;
};

std::vector<Scalar> mat_vec(const std::vector<std::vector<Scalar>>& columns,
                            const std::vector<Scalar>& v, const FieldSpec& field) {
  std::vector<Scalar> out(v.size(), Scalar::zero(field));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t r = 0; r < v.size(); ++r) out[r] = out[r] + v[k] * columns[k][r];
  }
  return out;
}

MnElement basis_element(const FPoly& f, unsigned n, unsigned flat_index) {
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<Scalar> v(n * d, Scalar::zero(f.field()));
  v[flat_index] = Scalar::one(f.field());
  return unflatten(f, n, v);
}

}  // namespace

MnElement::MnElement(const FPoly& f, unsigned n, const Element& rep) : f_(f) {
  if (n == 0) throw std::invalid_argument("MnElement: n >= 1 required");
  if (rep.field() != f.field()) throw std::invalid_argument("MnElement: field mismatch");
  coords_ = gf_coordinates(rep, f, n).coords;
}

MnElement::MnElement(const FPoly& f, std::vector<Poly> coords)
    : f_(f), coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("MnElement: n >= 1 required");
  for (const Poly& g : coords_) {
    if (g.field() != f.field()) throw std::invalid_argument("MnElement: field mismatch");
    if (g.degree() >= f.degree()) {
      throw std::invalid_argument("MnElement: coordinate degree must stay below deg f");
    }
  }
}

MnElement MnElement::zero(const FPoly& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("MnElement: n >= 1 required");
  return MnElement(f, std::vector<Poly>(n, Poly::zero(f.field())));
}

MnElement MnElement::unit(const FPoly& f, unsigned n) {
  MnElement out = zero(f, n);
  out.coords_[0] = Poly::constant(Scalar::one(f.field()));
  return out;
}

bool MnElement::is_zero() const {
  for (const Poly& g : coords_) {
    if (!g.is_zero()) return false;
  }
  return true;
}

Element MnElement::lift() const {
  const Element fc = gf_embed(f_.poly());
  Element out = Element::zero(field());
  Element power = Element::one(field());
  for (const Poly& g : coords_) {
    out = out + gf_embed(g) * power;
    power = power * fc;
  }
  return out;
}

MnElement MnElement::padded(unsigned target_level) const {
  if (target_level < n()) throw std::invalid_argument("padded: level may only grow");
  std::vector<Poly> coords = coords_;
  coords.resize(target_level, Poly::zero(field()));
  return MnElement(f_, std::move(coords));
}

MnElement MnElement::operator+(const MnElement& other) const {
  if (f_ != other.f_ || n() != other.n()) {
    throw std::invalid_argument("MnElement: mixed levels or divisors");
  }
  std::vector<Poly> coords;
  for (unsigned t = 0; t < n(); ++t) coords.push_back(coords_[t] + other.coords_[t]);
  return MnElement(f_, std::move(coords));
}

MnElement MnElement::operator-(const MnElement& other) const { return *this + (-other); }

MnElement MnElement::operator-() const {
  std::vector<Poly> coords;
  for (const Poly& g : coords_) coords.push_back(-g);
  return MnElement(f_, std::move(coords));
}

MnElement MnElement::scaled(const Scalar& k) const {
  std::vector<Poly> coords;
  for (const Poly& g : coords_) coords.push_back(g.scaled(k));
  return MnElement(f_, std::move(coords));
}

bool MnElement::operator==(const MnElement& other) const {
  return f_ == other.f_ && coords_ == other.coords_;
}

MnElement mn_act(const Element& r, const MnElement& m) {
  return MnElement(m.f(), m.n(), r * m.lift());
}

MnElement psi(const MnElement& m, unsigned target_level) {
  if (target_level < m.n()) throw std::invalid_argument("psi: target level below source");
  std::vector<Poly> coords(target_level - m.n(), Poly::zero(m.field()));
  coords.insert(coords.end(), m.coords().begin(), m.coords().end());
  return MnElement(m.f(), std::move(coords));
}

std::optional<MnElement> solve_linear_in_Mn(const Element& a, const MnElement& b) {
  const unsigned dim = b.n() * static_cast<unsigned>(b.f().degree());
  if (dim > 64) throw std::invalid_argument("solve_linear_in_Mn: dimension above desk bound");
  const FieldSpec& field = b.field();

  // rows[r][k]: r-th coordinate of a acting on the k-th basis vector
  std::vector<std::vector<Scalar>> rows(dim, std::vector<Scalar>(dim, Scalar::zero(field)));
  for (unsigned k = 0; k < dim; ++k) {
    const std::vector<Scalar> col = flatten(mn_act(a, basis_element(b.f(), b.n(), k)));
    for (unsigned r = 0; r < dim; ++r) rows[r][k] = col[r];
  }
  const auto x = solve_dense(std::move(rows), flatten(b), field);
  if (!x) return std::nullopt;
  return unflatten(b.f(), b.n(), *x);
}

std::vector<unsigned> submodule_chain(const FPoly& f, unsigned n) {
  const FieldSpec& field = f.field();
  if (field.is_rationals()) {
    throw std::invalid_argument("submodule_chain: needs a finite coefficient field");
  }
  const unsigned dim = n * static_cast<unsigned>(f.degree());
  std::uint64_t count = 1;
  for (unsigned t = 0; t < dim; ++t) {
    count *= field.prime();
    if (count > 20000) {
      throw std::invalid_argument("submodule_chain: module too large to enumerate");
    }
  }

  std::vector<std::vector<std::vector<Scalar>>> generator_columns;
  for (const Element& gen :
       {Element::vertex_v(field), Element::vertex_w(field), Element::gen_c(field),
        Element::gen_cstar(field), Element::gen_d(field), Element::gen_dstar(field)}) {
    std::vector<std::vector<Scalar>> columns;
    for (unsigned k = 0; k < dim; ++k) {
      columns.push_back(flatten(mn_act(gen, basis_element(f, n, k))));
    }
    generator_columns.push_back(std::move(columns));
  }

  std::vector<Span> found;
  std::vector<unsigned> dims{0};  // R·0
  for (std::uint64_t code = 1; code < count; ++code) {
    std::uint64_t rest = code;
    std::vector<Scalar> start(dim, Scalar::zero(field));
    for (unsigned t = 0; t < dim; ++t) {
      start[t] = Scalar::from_int(static_cast<long>(rest % field.prime()), field);
      rest /= field.prime();
    }
    Span orbit;
    std::vector<std::vector<Scalar>> work{start};
    orbit.insert(start);
    while (!work.empty()) {
      const std::vector<Scalar> v = std::move(work.back());
      work.pop_back();
      for (const auto& columns : generator_columns) {
        std::vector<Scalar> image = mat_vec(columns, v, field);
        if (orbit.insert(image)) work.push_back(std::move(image));
      }
    }
    bool fresh = true;
    for (const Span& s : found) {
      if (s == orbit) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      dims.push_back(orbit.dim());
      found.push_back(std::move(orbit));
    }
  }
  std::sort(dims.begin(), dims.end());
  return dims;
}

UfElement UfElement::zero(const FPoly& f) { return UfElement(MnElement::zero(f, 1)); }

UfElement UfElement::generator(const FPoly& f, unsigned n) {
  return UfElement(MnElement::unit(f, n));
}

UfElement UfElement::from_rep(const MnElement& rep) {
  unsigned strip = 0;
  while (strip < rep.n() && rep.coords()[strip].is_zero()) ++strip;
  if (strip == rep.n()) return zero(rep.f());
  if (strip == 0) return UfElement(rep);
  std::vector<Poly> coords(rep.coords().begin() + strip, rep.coords().end());
  return UfElement(MnElement(rep.f(), std::move(coords)));
}

UfElement uf_normalize(const FPoly& f, unsigned level, const MnElement& rep) {
  if (rep.f() != f || rep.n() != level) {
    throw std::invalid_argument("uf_normalize: representative disagrees with stated level");
  }
  return UfElement::from_rep(rep);
}

UfElement UfElement::operator+(const UfElement& other) const {
  const unsigned level = std::max(rep_.n(), other.rep_.n());
  return from_rep(psi(rep_, level) + psi(other.rep_, level));
}

UfElement UfElement::operator-(const UfElement& other) const { return *this + (-other); }

UfElement UfElement::operator-() const { return UfElement(-rep_); }

UfElement UfElement::scaled(const Scalar& k) const { return from_rep(rep_.scaled(k)); }

bool UfElement::operator==(const UfElement& other) const { return rep_ == other.rep_; }

UfElement uf_act(const Element& r, const UfElement& u) {
  return UfElement::from_rep(mn_act(r, u.rep()));
}

UfElement uf_divide_by_fc(const UfElement& u) {
  if (u.is_zero()) return u;
  return UfElement::from_rep(u.rep().padded(u.level() + 1));
}

UfElement extend_hom_to_Uf(const PPoly& p, const FPoly& f, const UfElement& image) {
  if (image.f() != f) throw std::invalid_argument("extend_hom_to_Uf: divisor mismatch");
  if (p.field() != f.field()) throw std::invalid_argument("extend_hom_to_Uf: field mismatch");

  // p = f^l · p0 with f not dividing p0
  Poly p0 = p.poly();
  unsigned l = 0;
  for (;;) {
    const auto [q, r] = poly_divrem(p0, f.poly());
    if (!r.is_zero()) break;
    p0 = q;
    ++l;
  }

  const unsigned target = image.level() + l;
  const Poly modulus = f.poly().pow(target);
  const XgcdResult x = poly_xgcd(p0, modulus);
  if (x.g != Poly::constant(Scalar::one(f.field()))) {
    throw std::domain_error("extend_hom_to_Uf: p shares a factor with f");
  }
  const Poly beta0 = poly_divrem(x.s, modulus).second;

  const UfElement result =
      UfElement::from_rep(mn_act(gf_embed(beta0), image.rep().padded(target)));
  if (uf_act(gf_embed(p.poly()), result) != image) {
    throw std::logic_error("extend_hom_to_Uf: p(c)·Φ(1) = image failed verification");
  }
  return result;
}

}  // namespace jacobson
