#include "planefill/goodk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "planefill/factor.hpp"

namespace planefill {

namespace {

Elem bad_k_of(const Field& F, Elem x, int r) {
  const auto top = static_cast<std::uint64_t>(r) * r + r + 1;
  const Elem num = F.sub(F.one(), F.pow(x, top));
  return F.div(num, F.pow(x, static_cast<std::uint64_t>(r) + 1));
}

void check_r(int r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
}

}  // namespace

std::vector<Elem> bad_k_values(const Field& F, int r) {
  check_r(r);
  std::set<Elem> out;
  for (std::uint64_t x = 1; x < F.size(); ++x) out.insert(bad_k_of(F, Elem{x}, r));
  return {out.begin(), out.end()};
}

std::vector<Elem> good_k_values(const Field& F, int r) {
  const auto bad = bad_k_values(F, r);
  std::vector<Elem> out;
  std::size_t j = 0;
  for (std::uint64_t k = 0; k < F.size(); ++k) {
    if (j < bad.size() && bad[j].v == k) {
      ++j;
      continue;
    }
    out.push_back(Elem{k});
  }
  return out;
}

std::uint64_t good_k_count(const Field& F, int r) { return F.size() - bad_k_values(F, r).size(); }

bool exceeds_minus_56_sqrt(std::int64_t L, std::uint64_t q) {
  if (L >= 0) return true;
  // -L <= 56 sqrt(q)  <=>  L^2 <= 3136 q, both sides nonnegative
  const auto a = static_cast<unsigned __int128>(-static_cast<__int128>(L));
  return a * a <= static_cast<unsigned __int128>(3136) * q;
}

bool theorem_bound_holds(std::uint64_t count, std::uint64_t q) {
  const std::int64_t L = 6 * static_cast<std::int64_t>(count) - static_cast<std::int64_t>(q) + 6;
  return exceeds_minus_56_sqrt(L, q);
}

bool edge_bound_holds(std::uint64_t edges, std::uint64_t q) {
  const std::int64_t L = 2 * static_cast<std::int64_t>(edges) - static_cast<std::int64_t>(q) + 12;
  return exceeds_minus_56_sqrt(L, q);
}

BoundVerdict good_k_lower_bound(std::uint64_t q) {
  const auto [p, m] = prime_power(q);
  if (p == 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  const Field& F = make_field(p, m);
  BoundVerdict v;
  v.q = q;
  v.good = good_k_count(F, 2);
  v.bound = static_cast<double>(q) / 6.0 - 1.0 - 28.0 / 3.0 * std::sqrt(static_cast<double>(q));
  v.holds = theorem_bound_holds(v.good, q);
  return v;
}

BiPoly pair_polynomial(const Field& F) {
  BiPoly P(F);
  const Elem one = F.one();
  // x^3 y^3 (x^3 + x^2 y + x y^2 + y^3)
  P.add_term(6, 3, one);
  P.add_term(5, 4, one);
  P.add_term(4, 5, one);
  P.add_term(3, 6, one);
  P.add_term(2, 0, one);
  P.add_term(1, 1, one);
  P.add_term(0, 2, one);
  return P;
}

std::size_t KGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adjacency) d = std::max(d, a.size());
  return d;
}

bool KGraph::has_edge(Elem x, Elem y) const {
  if (x.v == 0 || x.v >= adjacency.size()) return false;
  const auto& a = adjacency[x.v];
  return std::binary_search(a.begin(), a.end(), y);
}

KGraph build_pair_graph(const Field& F) {
  KGraph G;
  G.field = &F;
  const std::uint64_t q = F.size();
  G.adjacency.resize(q);
  const BiPoly P = pair_polynomial(F);
  for (std::uint64_t x = 1; x < q; ++x) {
    const UniPoly s = P.specialize(BiVar::first, Elem{x});
    for (Elem y : roots_in_field(s, F)) {
      if (y.v == 0 || y.v == x) continue;
      G.adjacency[x].push_back(y);
    }
  }
  std::uint64_t directed = 0;
  for (const auto& a : G.adjacency) directed += a.size();
  G.edges = directed / 2;

  std::vector<std::uint64_t> parent(q);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::uint64_t x = 1; x < q; ++x) {
    for (Elem y : G.adjacency[x]) {
      const auto a = find(x), b = find(y.v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> slot(q, SIZE_MAX);
  for (std::uint64_t x = 1; x < q; ++x) {
    const auto root = find(x);
    if (slot[root] == SIZE_MAX) {
      slot[root] = G.components.size();
      G.components.emplace_back();
    }
    G.components[slot[root]].push_back(Elem{x});
  }
  for (const auto& c : G.components) {
    if (G.histogram.size() <= c.size()) G.histogram.resize(c.size() + 1, 0);
    ++G.histogram[c.size()];
  }
  return G;
}

ClaimReport verify_claims(const KGraph& G) {
  if (G.field == nullptr) throw std::invalid_argument("empty graph");
  const Field& F = *G.field;
  const std::uint64_t q = F.size();
  ClaimReport r;
  r.q = q;

  r.components_complete = true;
  for (const auto& c : G.components) {
    for (std::size_t i = 0; i < c.size() && r.components_complete; ++i) {
      if (G.adjacency[c[i].v].size() != c.size() - 1) r.components_complete = false;
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!G.has_edge(c[i], c[j])) {
          r.components_complete = false;
          break;
        }
      }
    }
  }
  r.clique_size_at_most_6 = G.max_component() <= 6;
  r.claim_a = r.components_complete && r.clique_size_at_most_6;
  r.claim_b = edge_bound_holds(G.edges, q);

  std::uint64_t sum_m = 0, sum_im = 0, sum_i1m = 0, sum_pairs = 0;
  for (std::size_t i = 1; i < G.histogram.size(); ++i) {
    const std::uint64_t m = G.histogram[i];
    sum_m += m;
    sum_im += i * m;
    sum_i1m += (i - 1) * m;
    sum_pairs += i * (i - 1) / 2 * m;
  }
  r.partition_identity = sum_im == q - 1;
  r.counting_identity = q - sum_m == 1 + sum_i1m;
  r.claim_c = r.partition_identity && r.counting_identity;
  r.claim_d = G.edges == sum_pairs;
  r.chain_step = 3 * sum_i1m >= G.edges;
  r.degree_at_most_6 = G.max_degree() <= 6;

  const auto bad = bad_k_values(F, 2);
  std::set<Elem> seen;
  bool ok = bad.size() == G.components.size();
  for (const auto& c : G.components) {
    const Elem k = bad_k_of(F, c.front(), 2);
    for (Elem x : c) ok = ok && bad_k_of(F, x, 2) == k;
    ok = ok && seen.insert(k).second;
  }
  r.components_match_bad_k = ok;
  return r;
}

std::string goodk_csv_header() { return "q,bad,good,m1,m2,m3,m4,m5,m6,m7,edges,theorem_bound,edge_bound"; }

std::string goodk_csv_row(const KGraph& G) {
  const Field& F = *G.field;
  const std::uint64_t q = F.size();
  const std::uint64_t bad = bad_k_values(F, 2).size();
  std::string row = std::to_string(q) + "," + std::to_string(bad) + "," + std::to_string(q - bad);
  for (std::size_t i = 1; i <= 7; ++i) row += "," + std::to_string(i < G.histogram.size() ? G.histogram[i] : 0);
  row += "," + std::to_string(G.edges);
  row += std::string(",") + (theorem_bound_holds(q - bad, q) ? "true" : "false");
  row += std::string(",") + (edge_bound_holds(G.edges, q) ? "true" : "false");
  return row;
}

}  // namespace planefill
