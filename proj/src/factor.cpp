#include "planefill/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace planefill {

namespace {

UniPoly one_poly(const Field& F) { return UniPoly::constant(F, F.one()); }

// Coefficients already lie in F_q, so the p-th root of c is c^(q/p).
UniPoly pth_root(const UniPoly& f) {
  const Field& F = f.field();
  const std::uint64_t p = F.characteristic();
  const std::uint64_t root_exp = F.size() / p;
  std::vector<Elem> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    v.push_back(root_exp == 1 ? f.coeffs()[i] : F.pow(f.coeffs()[i], root_exp));
  }
  return UniPoly(F, std::move(v));
}

void squarefree_into(const UniPoly& f, unsigned scale, std::vector<Factor>& out) {
  const Field& F = f.field();
  if (f.degree() < 1) return;
  const UniPoly df = derivative(f);
  if (df.is_zero()) {
    squarefree_into(pth_root(f), scale * static_cast<unsigned>(F.characteristic()), out);
    return;
  }
  UniPoly c = gcd_uni(f, df);
  UniPoly w = quo(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd_uni(w, c);
    UniPoly z = quo(w, y);
    if (z.degree() > 0) out.push_back({monic(z), i * scale});
    ++i;
    w = std::move(y);
    c = quo(c, w);
  }
  if (c.degree() > 0) squarefree_into(pth_root(c), scale * static_cast<unsigned>(F.characteristic()), out);
}

UniPoly random_poly(const Field& F, int below_degree, std::mt19937_64& rng) {
  std::vector<Elem> v(static_cast<std::size_t>(below_degree));
  for (auto& e : v) e = Elem{rng() % F.size()};
  return UniPoly(F, std::move(v));
}

// A polynomial whose gcd with h is a proper factor with probability ~1/2.
UniPoly splitting_candidate(const UniPoly& h, unsigned d, std::mt19937_64& rng) {
  const Field& F = h.field();
  const UniPoly a = random_poly(F, h.degree(), rng);
  if (F.characteristic() == 2) {
    // Absolute trace from F_{2^(m d)} down to F_2.
    const unsigned steps = F.degree() * d;
    UniPoly t = a, acc = a;
    for (unsigned i = 1; i < steps; ++i) {
      t = mul_rem(t, t, h);
      acc += t;
    }
    return acc;
  }
  // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
  UniPoly t = a, acc = a;
  for (unsigned i = 1; i < d; ++i) {
    t = pow_rem(t, F.size(), h);
    acc = mul_rem(acc, t, h);
  }
  UniPoly b = pow_rem(acc, (F.size() - 1) / 2, h);
  return b - one_poly(F);
}

void edf_split(const UniPoly& h, unsigned d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  if (h.degree() <= static_cast<int>(d)) {
    if (h.degree() > 0) out.push_back(monic(h));
    return;
  }
  while (true) {
    const UniPoly g = gcd_uni(splitting_candidate(h, d, rng), h);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      edf_split(g, d, rng, out);
      edf_split(quo(h, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const UniPoly& f) {
  std::vector<Factor> out;
  squarefree_into(monic(f), 1, out);
  return out;
}

std::vector<std::pair<UniPoly, unsigned>> distinct_degree_factorization(const UniPoly& f) {
  const Field& F = f.field();
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly rest = monic(f);
  const UniPoly x = UniPoly::x(F);
  UniPoly h = rem(x, rest);
  unsigned d = 1;
  while (rest.degree() >= 2 * static_cast<int>(d)) {
    h = pow_rem(h, F.size(), rest);
    UniPoly g = gcd_uni(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = quo(rest, g);
      h = rem(h, rest);
    }
    ++d;
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<UniPoly> equal_degree_factorization(const UniPoly& f, unsigned d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<UniPoly> out;
  edf_split(monic(f), d, rng, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Factor> factor_uni(const UniPoly& f, std::uint64_t seed) {
  if (f.degree() < 1) throw std::invalid_argument("factor_uni needs a polynomial of positive degree");
  std::mt19937_64 rng(seed);
  std::vector<Factor> out;
  for (const auto& part : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree_factorization(part.poly)) {
      std::vector<UniPoly> pieces;
      edf_split(block, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return canonical_less(a.poly, b.poly);
  });
  return out;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible needs a polynomial of positive degree");
  const UniPoly g = monic(f);
  const unsigned n = static_cast<unsigned>(g.degree());
  if (n == 1) return true;
  const Field& F = g.field();
  const UniPoly x = UniPoly::x(F);
  // frob[k] = x^(q^k) mod g
  std::vector<UniPoly> frob{rem(x, g)};
  for (unsigned k = 1; k <= n; ++k) frob.push_back(pow_rem(frob.back(), F.size(), g));
  if (!(frob[n] - rem(x, g)).is_zero()) return false;
  unsigned m = n;
  for (unsigned l = 2; l <= m; ++l) {
    if (m % l != 0) continue;
    while (m % l == 0) m /= l;
    if (gcd_uni(frob[n / l] - x, g).degree() != 0) return false;
  }
  return true;
}

std::vector<Elem> roots_in_field(const UniPoly& f, const Field& F, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const UniPoly g = embed_poly(monic(f), F);
  if (g.degree() < 1) return {};
  const UniPoly x = UniPoly::x(F);
  const UniPoly lin = gcd_uni(pow_rem(x, F.size(), g) - x, g);
  std::vector<Elem> roots;
  for (const auto& l : equal_degree_factorization(lin, 1, seed)) roots.push_back(F.neg(l.coeff(0)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Elem> roots_in_extension(const UniPoly& f, unsigned s, std::uint64_t seed) {
  return roots_in_extension(f, s, seed, field_cardinality_cap());
}

std::vector<Elem> roots_in_extension(const UniPoly& f, unsigned s, std::uint64_t seed, std::uint64_t cap) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  if (s == 0) throw std::invalid_argument("extension degree must be positive");
  const Field& base = f.field();
  const Field& big = make_field(base.characteristic(), base.degree() * s, cap);
  std::vector<Elem> roots;
  if (f.degree() < 1) return roots;
  for (const auto& fac : factor_uni(f, seed)) {
    const unsigned d = static_cast<unsigned>(fac.poly.degree());
    if (s % d != 0) continue;
    for (const auto& l : equal_degree_factorization(embed_poly(fac.poly, big), 1, seed)) {
      roots.push_back(big.neg(l.coeff(0)));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace planefill
