#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planefill/curves.hpp"
#include "planefill/triform.hpp"
#include "planefill/unipoly.hpp"

namespace planefill {

enum class Method { enumeration, exact };

std::string to_string(Method m);

struct SingularPoint {
  unsigned residue_degree = 1;
  const Field* field = nullptr;  // canonical F_{q^s}, s = residue_degree
  std::array<Elem, 3> coords{};  // normalized
  unsigned orbit = 0;
};

struct SingularReport {
  std::string curve;
  const Field* base = nullptr;
  Method method = Method::exact;
  unsigned bound = 0;  // enumeration bound S; 0 for exact reports
  /// Sorted by (residue degree, coords). Orbit ids number the orbits in the
  /// order of their first member.
  std::vector<SingularPoint> points;

  bool smooth() const { return points.empty(); }
  std::size_t orbit_count() const;
  /// Points of residue degree <= s, orbit ids renumbered.
  SingularReport truncated(unsigned s) const;
  /// Stable record: curve, method, bound, and per point its residue degree,
  /// the modulus of F_{q^s} and packed coordinates.
  std::string to_json() const;
};

/// Residue-degree cap for the exact solver. Initialised from
/// PLANEFILL_RESIDUE_CAP when set, otherwise 64.
unsigned residue_degree_cap();
void set_residue_degree_cap(unsigned cap);

struct SolverOptions {
  unsigned residue_cap = residue_degree_cap();
  std::uint64_t seed = 0;
};

/// The family's criterion polynomial over F_q: x^{r^2+r+1} + k x^{r+1} - 1
/// (ck, ckr), x^7 + k x^5 + 1 (dk, even q), t^3 - (c t^2 + b t + a)
/// (tallini). Throws std::invalid_argument for custom specs and odd-q dk.
UniPoly base_point_criterion(const CurveSpec& spec);

/// True iff the criterion polynomial has no F_q-root.
bool smooth_at_base_points(const CurveSpec& spec);

/// Gradient scan of P^2(F_{q^s}) for s = 1..S. Only points of residue
/// degree exactly s are recorded at level s.
SingularReport singular_points_up_to(const TriForm& f, unsigned S);

/// Complete singular locus by elimination. Throws DegenerateLocus when the
/// system is not zero-dimensional, CapExceeded when a point's residue degree
/// would exceed the cap.
SingularReport exact_singular_locus(const TriForm& f, const SolverOptions& opt = {});

/// Exact locus restricted to residue degree <= max_residue_degree. Factors
/// that can only contribute higher-degree points are skipped unlifted.
SingularReport exact_singular_locus_up_to(const TriForm& f, unsigned max_residue_degree,
                                          const SolverOptions& opt = {});

/// Same decision as exact_singular_locus(f).smooth(), but stops at the
/// first genuine singular factor and never builds residue extensions.
bool is_smooth(const TriForm& f, const SolverOptions& opt = {});

/// First F_q-line (a, b, c), normalized and in enumeration order, on which f
/// vanishes identically.
std::optional<std::array<Elem, 3>> has_linear_component(const TriForm& f);

struct Fq2Verdict {
  int degree = 0;
  bool in_range = false;  // degree <= q + 4
  bool no_singular_fq_point = false;
  bool no_linear_component = false;
  bool no_singular_fq2_point = false;
  /// False only when the curve is in range, both hypotheses hold and the
  /// conclusion fails.
  bool consistent = true;
};

/// Throws std::invalid_argument when f is not plane-filling.
Fq2Verdict check_fq2_implication(const TriForm& f);

}  // namespace planefill
