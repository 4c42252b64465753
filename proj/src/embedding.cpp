#include "planefill/embedding.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <stdexcept>

#include "planefill/factor.hpp"

namespace planefill {

namespace {

constexpr std::uint64_t kTableSourceLimit = 1ull << 16;

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::vector<Elem> modulus_roots(const Field& source, const Field& target) {
  std::vector<Elem> mod;
  for (auto c : source.modulus()) mod.push_back(Elem{c});
  return roots_in_field(UniPoly(target, std::move(mod)), target);
}

}  // namespace

Embedding::Embedding(const Field& source, const Field& target) : source_(&source), target_(&target) {
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0) {
    throw std::invalid_argument("F_" + source.name() + " does not embed in F_" + target.name());
  }
  Elem theta = target.zero();
  if (source.degree() > 1) {
    const auto roots = modulus_roots(source, target);
    if (roots.empty()) throw std::logic_error("modulus has no root in target field");
    theta = roots.front();
  }
  init(theta);
}

Embedding::Embedding(const Field& source, const Field& target, Elem image_of_generator)
    : source_(&source), target_(&target) {
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0) {
    throw std::invalid_argument("F_" + source.name() + " does not embed in F_" + target.name());
  }
  init(source.degree() > 1 ? image_of_generator : target.zero());
}

void Embedding::init(Elem theta) {
  const Field& source = *source_;
  const Field& target = *target_;
  const unsigned m = source.degree();
  const std::uint64_t p = source.characteristic();
  Elem pw = target.one();
  for (unsigned i = 0; i < m; ++i) {
    powers_.push_back(pw);
    pw = target.mul(pw, theta);
  }
  if (m > 1 && source.size() <= kTableSourceLimit) {
    table_.resize(source.size());
    for (std::uint64_t a = 0; a < source.size(); ++a) {
      const auto c = source.coeffs(Elem{a});
      Elem acc = target.zero();
      for (unsigned i = 0; i < m; ++i) {
        if (c[i]) acc = target.add(acc, target.mul(Elem{c[i]}, powers_[i]));
      }
      table_[a] = acc;
    }
  }

  // Select m independent coordinates of the basis images and invert that block.
  const unsigned big = target.degree();
  std::vector<std::vector<std::uint64_t>> cols;  // cols[i] = coords of theta^i
  for (unsigned i = 0; i < m; ++i) cols.push_back(target.coeffs(powers_[i]));
  std::vector<std::vector<std::uint64_t>> echelon;  // reduced rows (length m)
  std::vector<unsigned> lead;
  for (unsigned r = 0; r < big && pivots_.size() < m; ++r) {
    std::vector<std::uint64_t> row(m);
    for (unsigned i = 0; i < m; ++i) row[i] = cols[i][r];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const std::uint64_t c = row[lead[k]];
      if (!c) continue;
      for (unsigned i = 0; i < m; ++i) row[i] = (row[i] + (p - c) * echelon[k][i]) % p;
    }
    unsigned piv = m;
    for (unsigned i = 0; i < m; ++i) {
      if (row[i]) {
        piv = i;
        break;
      }
    }
    if (piv == m) continue;
    const std::uint64_t s = inv_mod(row[piv], p);
    for (auto& x : row) x = x * s % p;
    for (auto& e : echelon) {
      const std::uint64_t c = e[piv];
      if (!c) continue;
      for (unsigned i = 0; i < m; ++i) e[i] = (e[i] + (p - c) * row[i]) % p;
    }
    echelon.push_back(std::move(row));
    lead.push_back(piv);
    pivots_.push_back(r);
  }
  if (pivots_.size() != m) throw std::logic_error("embedding basis is degenerate");
  // Invert the m x m block A[j][i] = cols[i][pivots_[j]] by Gauss-Jordan.
  std::vector<std::vector<std::uint64_t>> a(m, std::vector<std::uint64_t>(2 * m, 0));
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned i = 0; i < m; ++i) a[j][i] = cols[i][pivots_[j]];
    a[j][m + j] = 1;
  }
  for (unsigned col = 0; col < m; ++col) {
    unsigned r = col;
    while (a[r][col] == 0) ++r;
    std::swap(a[r], a[col]);
    const std::uint64_t s = inv_mod(a[col][col], p);
    for (auto& x : a[col]) x = x * s % p;
    for (unsigned rr = 0; rr < m; ++rr) {
      if (rr == col || a[rr][col] == 0) continue;
      const std::uint64_t c = a[rr][col];
      for (unsigned i = 0; i < 2 * m; ++i) a[rr][i] = (a[rr][i] + (p - c) * a[col][i]) % p;
    }
  }
  block_inverse_.assign(m, std::vector<std::uint64_t>(m));
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned i = 0; i < m; ++i) block_inverse_[j][i] = a[j][m + i];
  }
}

Elem Embedding::operator()(Elem a) const {
  if (source_->degree() == 1) return a;
  if (!table_.empty()) return table_[a.v];
  const auto c = source_->coeffs(a);
  Elem acc = target_->zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) acc = target_->add(acc, target_->mul(Elem{c[i]}, powers_[i]));
  }
  return acc;
}

std::optional<Elem> Embedding::preimage(Elem b) const {
  const std::uint64_t p = source_->characteristic();
  const unsigned m = source_->degree();
  const auto v = target_->coeffs(b);
  std::vector<std::uint64_t> c(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    std::uint64_t acc = 0;
    for (unsigned j = 0; j < m; ++j) acc = (acc + block_inverse_[i][j] * v[pivots_[j]]) % p;
    c[i] = acc;
  }
  const Elem a = source_->from_coeffs(c);
  if ((*this)(a) != b) return std::nullopt;
  return a;
}

const Embedding& embedding(const Field& source, const Field& target) {
  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({&source, &target});
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<Embedding>(source, target);
  std::lock_guard lock(mu);
  auto& slot = cache[{&source, &target}];
  if (!slot) slot = std::move(built);
  return *slot;
}

Elem embed(Elem a, const Field& source, const Field& target) {
  if (&source == &target) return a;
  return embedding(source, target)(a);
}

const Embedding& embedding_over(const Field& base, const Field& source, const Field& target) {
  if (base.degree() == 1 || &base == &source) return embedding(source, target);
  if (&source == &target) return embedding(source, target);
  static std::mutex mu;
  static std::map<std::tuple<const Field*, const Field*, const Field*>, std::unique_ptr<Embedding>> cache;
  const auto key = std::make_tuple(&base, &source, &target);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  const Embedding& into_source = embedding(base, source);
  const Elem wanted = embedding(base, target)(base.generator());
  // Image of t_base in the source, written as a polynomial in t_source.
  const auto expr = source.coeffs(into_source(base.generator()));
  std::unique_ptr<Embedding> built;
  for (Elem psi : modulus_roots(source, target)) {
    Elem acc = target.zero(), pw = target.one();
    for (auto c : expr) {
      if (c) acc = target.add(acc, target.mul(Elem{c}, pw));
      pw = target.mul(pw, psi);
    }
    if (acc == wanted) {
      built = std::make_unique<Embedding>(source, target, psi);
      break;
    }
  }
  if (!built) throw std::logic_error("no base-compatible embedding");
  std::lock_guard lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::move(built);
  return *slot;
}

}  // namespace planefill
