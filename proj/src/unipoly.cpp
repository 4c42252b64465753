#include "planefill/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "planefill/embedding.hpp"

namespace planefill {

namespace {

void require_same_field(const UniPoly& a, const UniPoly& b) {
  if (&a.field() != &b.field()) throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

UniPoly::UniPoly(const Field& field, std::vector<Elem> coeffs) : field_(&field), c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Field& field, Elem c) { return UniPoly(field, {c}); }

UniPoly UniPoly::monomial(const Field& field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, field.zero());
  v[degree] = c;
  return UniPoly(field, std::move(v));
}

UniPoly UniPoly::from_ints(const Field& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return UniPoly(field, std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Elem UniPoly::operator()(Elem x) const {
  Elem acc = field_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  require_same_field(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  require_same_field(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_field(a, b);
  const Field& F = a.field();
  if (a.is_zero() || b.is_zero()) return UniPoly(F);
  std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const Elem ai = a.c_[i];
    if (ai.v == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(ai, b.c_[j]));
  }
  return UniPoly(F, std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly UniPoly::scaled(Elem c) const {
  std::vector<Elem> v(c_);
  for (auto& e : v) e = field_->mul(e, c);
  return UniPoly(*field_, std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Elem c = c_[i];
    if (c.v == 0) continue;
    if (!first) os << "+";
    first = false;
    const bool unit = c == field_->one();
    if (i == 0 || !unit) os << field_->to_string(c);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& F = a.field();
  if (a.degree() < b.degree()) return {UniPoly(F), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Elem inv_lead = F.inv(b.lead());
  std::vector<Elem> q(r.size() - db, F.zero());
  for (std::size_t k = r.size(); k-- > db;) {
    const Elem c = F.mul(r[k], inv_lead);
    q[k - db] = c;
    if (c.v == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, bc[i]));
  }
  r.resize(db);
  return {UniPoly(F, std::move(q)), UniPoly(F, std::move(r))};
}

UniPoly rem(const UniPoly& a, const UniPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return a;
  const Field& F = a.field();
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Elem inv_lead = F.inv(b.lead());
  const bool unit = inv_lead == F.one();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].v == 0) continue;
    const Elem c = unit ? r[k] : F.mul(r[k], inv_lead);
    for (std::size_t i = 0; i < db; ++i) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, bc[i]));
    r[k] = F.zero();
  }
  r.resize(db);
  return UniPoly(F, std::move(r));
}

UniPoly quo(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly monic(const UniPoly& f) {
  if (f.is_zero() || f.lead() == f.field().one()) return f;
  return f.scaled(f.field().inv(f.lead()));
}

UniPoly derivative(const UniPoly& f) {
  const Field& F = f.field();
  if (f.degree() < 1) return UniPoly(F);
  std::vector<Elem> v(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    v[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.characteristic())), f.coeffs()[i]);
  }
  return UniPoly(F, std::move(v));
}

UniPoly gcd_uni(const UniPoly& a, const UniPoly& b) {
  require_same_field(a, b);
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  require_same_field(a, b);
  const Field& F = a.field();
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(F, F.one()), s1(F);
  UniPoly t0(F), t1 = UniPoly::constant(F, F.one());
  while (!r1.is_zero()) {
    auto [qq, rr] = divmod(r0, r1);
    UniPoly s2 = s0 - qq * s1;
    UniPoly t2 = t0 - qq * t1;
    r0 = std::move(r1);
    r1 = std::move(rr);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem c = F.inv(r0.lead());
  return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

UniPoly mul_rem(const UniPoly& a, const UniPoly& b, const UniPoly& mod) { return rem(a * b, mod); }

UniPoly pow_rem(const UniPoly& base, std::uint64_t e, const UniPoly& mod) {
  const Field& F = base.field();
  UniPoly result = rem(UniPoly::constant(F, F.one()), mod);
  UniPoly b = rem(base, mod);
  while (e) {
    if (e & 1) result = mul_rem(result, b, mod);
    e >>= 1;
    if (e) b = mul_rem(b, b, mod);
  }
  return result;
}

UniPoly embed_poly(const UniPoly& f, const Field& target) {
  if (&f.field() == &target) return f;
  const Embedding& emb = embedding(f.field(), target);
  std::vector<Elem> v;
  v.reserve(f.coeffs().size());
  for (Elem c : f.coeffs()) v.push_back(emb(c));
  return UniPoly(target, std::move(v));
}

bool canonical_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

}  // namespace planefill
