#include "planefill/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "planefill/embedding.hpp"

namespace planefill {

namespace {

int index_of(BiVar var) { return var == BiVar::first ? 0 : 1; }

Elem power_of_minus_one(const Field& F, long long e) { return (e % 2 == 0) ? F.one() : F.neg(F.one()); }

// Newton interpolation through (xs[i], ys[i]); returns monomial coefficients.
std::vector<Elem> interpolate(const Field& E, const std::vector<Elem>& xs, std::vector<Elem> ys) {
  const std::size_t n = xs.size();
  // Divided differences in place.
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      ys[i] = E.div(E.sub(ys[i], ys[i - 1]), E.sub(xs[i], xs[i - k]));
    }
  }
  // Horner-style expansion of the Newton form.
  std::vector<Elem> poly(n, E.zero());
  poly[0] = ys[n - 1];
  std::size_t len = 1;
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly <- poly * (x - xs[k]) + ys[k]
    const Elem shift = E.neg(xs[k]);
    for (std::size_t i = len; i > 0; --i) poly[i] = E.add(poly[i - 1], E.mul(poly[i], shift));
    poly[0] = E.add(E.mul(poly[0], shift), ys[k]);
    ++len;
  }
  return poly;
}

void check_resultant_inputs(const BiPoly& g, const BiPoly& h, BiVar var) {
  if (&g.field() != &h.field()) throw std::invalid_argument("resultant of polynomials over different fields");
  if (g.is_zero() || h.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
  if (g.degree_in(var) < 1 || h.degree_in(var) < 1) {
    throw std::invalid_argument("resultant needs positive degree in the eliminated variable");
  }
}

}  // namespace

Elem BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? field_->zero() : it->second;
}

void BiPoly::add_term(int i, int j, Elem c) {
  if (c.v == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second.v == 0) terms_.erase(it);
  }
}

int BiPoly::degree_in(BiVar var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[index_of(var)]);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1]);
  return d;
}

Elem BiPoly::eval(Elem u, Elem v, const Field& at) const {
  Elem acc = at.zero();
  for (const auto& [e, c] : terms_) {
    const Elem t = at.mul(at.mul(embed(c, *field_, at), at.pow(u, static_cast<std::uint64_t>(e[0]))),
                          at.pow(v, static_cast<std::uint64_t>(e[1])));
    acc = at.add(acc, t);
  }
  return acc;
}

std::vector<UniPoly> BiPoly::coefficients_in(BiVar var) const {
  const int k = index_of(var);
  const int d = degree_in(var);
  std::vector<std::vector<Elem>> raw(static_cast<std::size_t>(std::max(d + 1, 0)));
  for (const auto& [e, c] : terms_) {
    auto& slot = raw[e[k]];
    const auto other = static_cast<std::size_t>(e[1 - k]);
    if (slot.size() <= other) slot.resize(other + 1, field_->zero());
    slot[other] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(*field_, std::move(r));
  return out;
}

UniPoly BiPoly::specialize(BiVar var, Elem value) const {
  const int k = index_of(var);
  std::vector<Elem> out;
  for (const auto& [e, c] : terms_) {
    const auto other = static_cast<std::size_t>(e[1 - k]);
    if (out.size() <= other) out.resize(other + 1, field_->zero());
    out[other] = field_->add(out[other], field_->mul(c, field_->pow(value, static_cast<std::uint64_t>(e[k]))));
  }
  return UniPoly(*field_, std::move(out));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("polynomials over different fields");
  BiPoly out(*a.field_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea[0] + eb[0], ea[1] + eb[1], a.field_->mul(ca, cb));
  }
  return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("polynomials over different fields");
  BiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e[0], e[1], c);
  return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("polynomials over different fields");
  BiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e[0], e[1], a.field_->neg(c));
  return out;
}

std::string BiPoly::to_string(const std::string& u, const std::string& v) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << "+";
    first = false;
    const bool unit = c == field_->one();
    const bool bare = e[0] == 0 && e[1] == 0;
    if (!unit || bare) os << field_->to_string(c);
    bool need_star = !unit;
    auto put = [&](const std::string& name, int k) {
      if (k == 0) return;
      if (need_star) os << "*";
      os << name;
      if (k > 1) os << "^" << k;
      need_star = true;
    };
    put(u, e[0]);
    put(v, e[1]);
  }
  return os.str();
}

Elem univariate_resultant(const UniPoly& a_in, int n, const UniPoly& b_in, int m) {
  const Field& F = a_in.field();
  if (a_in.degree() > n || b_in.degree() > m) throw std::invalid_argument("formal degree below actual degree");
  UniPoly a = a_in, b = b_in;
  Elem acc = F.one();
  while (true) {
    if (n == 0) return F.mul(acc, F.pow(a.coeff(0), static_cast<std::uint64_t>(m)));
    if (m == 0) return F.mul(acc, F.pow(b.coeff(0), static_cast<std::uint64_t>(n)));
    const int da = a.degree();
    const int db = b.degree();
    if (da < n && db < m) return F.zero();
    if (db < m) {
      if (b.is_zero()) return F.zero();
      acc = F.mul(acc, F.pow(a.lead(), static_cast<std::uint64_t>(m - db)));
      m = db;
      continue;
    }
    if (da < n) {
      if (a.is_zero()) return F.zero();
      acc = F.mul(acc, power_of_minus_one(F, static_cast<long long>(n) * m + static_cast<long long>(da) * m));
      acc = F.mul(acc, F.pow(b.lead(), static_cast<std::uint64_t>(n - da)));
      n = da;
      continue;
    }
    if (n < m) {
      acc = F.mul(acc, power_of_minus_one(F, static_cast<long long>(n) * m));
      std::swap(a, b);
      std::swap(n, m);
      continue;
    }
    UniPoly r = rem(a, b);
    if (r.is_zero()) return F.zero();
    const int k = r.degree();
    acc = F.mul(acc, power_of_minus_one(F, static_cast<long long>(n) * m));
    acc = F.mul(acc, F.pow(b.lead(), static_cast<std::uint64_t>(n - k)));
    a = std::move(b);
    n = m;
    b = std::move(r);
    m = k;
  }
}

UniPoly resultant(const BiPoly& g, const BiPoly& h, BiVar var) {
  check_resultant_inputs(g, h, var);
  const Field& F = g.field();
  const BiVar keep = var == BiVar::first ? BiVar::second : BiVar::first;
  const int n = g.degree_in(var);
  const int m = h.degree_in(var);
  const long long bound_partial =
      static_cast<long long>(m) * g.degree_in(keep) + static_cast<long long>(n) * h.degree_in(keep);
  const long long bound_total = static_cast<long long>(g.total_degree()) * h.total_degree();
  const long long bound = std::max(0LL, std::min(bound_partial, bound_total));
  const std::uint64_t points = static_cast<std::uint64_t>(bound) + 1;

  unsigned e = 1;
  {
    unsigned __int128 size = F.size();
    while (size < points) {
      size *= F.size();
      ++e;
    }
  }
  const Field& E = make_field_unbounded(F.characteristic(), F.degree() * e);
  const auto gc = g.coefficients_in(var);
  const auto hc = h.coefficients_in(var);
  std::vector<UniPoly> ge, he;
  for (const auto& c : gc) ge.push_back(embed_poly(c, E));
  for (const auto& c : hc) he.push_back(embed_poly(c, E));

  std::vector<Elem> xs(points), ys(points);
  std::vector<Elem> av(static_cast<std::size_t>(n) + 1), bv(static_cast<std::size_t>(m) + 1);
  for (std::uint64_t i = 0; i < points; ++i) {
    const Elem t{i};
    for (int j = 0; j <= n; ++j) av[j] = ge[j](t);
    for (int j = 0; j <= m; ++j) bv[j] = he[j](t);
    xs[i] = t;
    ys[i] = univariate_resultant(UniPoly(E, av), n, UniPoly(E, bv), m);
  }
  const auto coeffs = interpolate(E, xs, std::move(ys));
  std::vector<Elem> out;
  out.reserve(coeffs.size());
  if (&E == &F) {
    out = coeffs;
  } else {
    const Embedding& emb = embedding(F, E);
    for (Elem c : coeffs) {
      const auto back = emb.preimage(c);
      if (!back) throw std::logic_error("interpolated resultant left the coefficient field");
      out.push_back(*back);
    }
  }
  return UniPoly(F, std::move(out));
}

UniPoly resultant_sylvester(const BiPoly& g, const BiPoly& h, BiVar var) {
  check_resultant_inputs(g, h, var);
  const Field& F = g.field();
  const auto gc = g.coefficients_in(var);
  const auto hc = h.coefficients_in(var);
  const int n = static_cast<int>(gc.size()) - 1;
  const int m = static_cast<int>(hc.size()) - 1;
  const int size = n + m;
  std::vector<std::vector<UniPoly>> M(size, std::vector<UniPoly>(size, UniPoly(F)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) M[i][i + j] = gc[n - j];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) M[m + i][i + j] = hc[m - j];
  }
  bool negate = false;
  UniPoly prev = UniPoly::constant(F, F.one());
  for (int k = 0; k + 1 < size; ++k) {
    if (M[k][k].is_zero()) {
      int r = k + 1;
      while (r < size && M[r][k].is_zero()) ++r;
      if (r == size) return UniPoly(F);
      std::swap(M[r], M[k]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        UniPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        auto [qq, rr] = divmod(num, prev);
        if (!rr.is_zero()) throw std::logic_error("Bareiss division was not exact");
        M[i][j] = std::move(qq);
      }
      M[i][k] = UniPoly(F);
    }
    prev = M[k][k];
  }
  UniPoly det = M[size - 1][size - 1];
  if (negate) det = det.scaled(F.neg(F.one()));
  return det;
}

}  // namespace planefill
