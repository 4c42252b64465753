#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planefill/bipoly.hpp"
#include "planefill/field.hpp"

namespace planefill {

/// {(1 - x^{r^2+r+1}) / x^{r+1} : x in F_q*}, sorted by packed value.
std::vector<Elem> bad_k_values(const Field& F, int r);
/// Complement of bad_k_values in F_q, sorted.
std::vector<Elem> good_k_values(const Field& F, int r);
std::uint64_t good_k_count(const Field& F, int r);

/// Exact test of L >= -56 sqrt(q) for an integer L.
bool exceeds_minus_56_sqrt(std::int64_t L, std::uint64_t q);

/// count >= q/6 - 1 - (28/3) sqrt(q), i.e. 6 count - q + 6 >= -56 sqrt(q).
bool theorem_bound_holds(std::uint64_t count, std::uint64_t q);
/// edges >= q/2 - 6 - 28 sqrt(q), i.e. 2 edges - q + 12 >= -56 sqrt(q).
bool edge_bound_holds(std::uint64_t edges, std::uint64_t q);

struct BoundVerdict {
  std::uint64_t q = 0;
  std::uint64_t good = 0;
  double bound = 0;  // q/6 - 1 - (28/3) sqrt(q), for display only
  bool holds = false;
};

/// good_k_count(F_q, 2) against the lower bound, decided exactly.
BoundVerdict good_k_lower_bound(std::uint64_t q);

/// x^3 y^3 (x + y)(x^2 + y^2) + x^2 + x y + y^2.
BiPoly pair_polynomial(const Field& F);

/// Graph on F_q* joining x != y when (x, y) lies on the pair curve.
struct KGraph {
  const Field* field = nullptr;
  /// adjacency[x.v] lists neighbours in increasing order; index 0 unused.
  std::vector<std::vector<Elem>> adjacency;
  /// Connected components, members sorted, ordered by smallest member.
  std::vector<std::vector<Elem>> components;
  /// histogram[i] = number of components with i vertices.
  std::vector<std::uint64_t> histogram;
  std::uint64_t edges = 0;

  std::size_t max_component() const { return histogram.empty() ? 0 : histogram.size() - 1; }
  std::size_t max_degree() const;
  bool has_edge(Elem x, Elem y) const;
};

KGraph build_pair_graph(const Field& F);

struct ClaimReport {
  std::uint64_t q = 0;
  bool components_complete = false;  // every component is a clique
  bool clique_size_at_most_6 = false;
  bool claim_a = false;              // both of the above
  bool claim_b = false;              // edge bound
  bool partition_identity = false;   // sum i m_i = q - 1
  bool counting_identity = false;    // q - sum m_i = 1 + sum (i-1) m_i
  bool claim_c = false;              // both identities
  bool claim_d = false;              // #E = sum i(i-1)/2 m_i
  bool chain_step = false;           // 1 + sum (i-1) m_i >= 1 + #E / 3
  bool degree_at_most_6 = false;
  /// each component has one bad k, distinct components distinct k, and the
  /// number of components equals the number of bad k values
  bool components_match_bad_k = false;
};

/// Sums run over every component size present, including sizes above 6.
ClaimReport verify_claims(const KGraph& G);

/// CSV header and one row: q, bad, good, m_1..m_7, edges, theorem bound,
/// edge bound.
std::string goodk_csv_header();
std::string goodk_csv_row(const KGraph& G);

}  // namespace planefill
