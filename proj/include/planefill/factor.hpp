#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "planefill/unipoly.hpp"

namespace planefill {

struct Factor {
  UniPoly poly;  // monic irreducible
  unsigned multiplicity;
};

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with their multiplicities. Handles f' = 0 by p-th root
/// descent.
std::vector<Factor> squarefree_decomposition(const UniPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<UniPoly, unsigned>> distinct_degree_factorization(const UniPoly& f);

/// Splits a monic squarefree polynomial all of whose irreducible factors
/// have degree d. Randomised (Cantor-Zassenhaus); `seed` fixes the stream.
std::vector<UniPoly> equal_degree_factorization(const UniPoly& f, unsigned d, std::uint64_t seed);

/// Complete factorization of f (deg f >= 1) into monic irreducibles with
/// multiplicities, sorted by canonical_less. The leading coefficient of f is
/// dropped: the product of the factors is monic(f).
std::vector<Factor> factor_uni(const UniPoly& f, std::uint64_t seed = 0);

/// Rabin test, no full factorization.
bool is_irreducible(const UniPoly& f);

/// Roots of f lying in F (f's field must embed in F), sorted, without
/// multiplicity. Throws std::invalid_argument for the zero polynomial.
std::vector<Elem> roots_in_field(const UniPoly& f, const Field& F, std::uint64_t seed = 0);

/// Roots of f in F_{q^s}, q = |field of f|. Factors f over F_q and roots each
/// irreducible factor of degree dividing s inside the extension.
/// `cap` bounds q^s (CapExceeded otherwise).
std::vector<Elem> roots_in_extension(const UniPoly& f, unsigned s, std::uint64_t seed = 0);
std::vector<Elem> roots_in_extension(const UniPoly& f, unsigned s, std::uint64_t seed, std::uint64_t cap);

}  // namespace planefill
