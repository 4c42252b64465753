#pragma once

#include <optional>
#include <vector>

#include "planefill/field.hpp"

namespace planefill {

/// Fixed field homomorphism F_{p^m} -> F_{p^{ms}}. The image of t is the
/// smallest (by packed value) root of the source modulus in the target, so
/// the map is reproducible and identical across calls.
class Embedding {
 public:
  Embedding(const Field& source, const Field& target);
  /// Embedding sending t to the given root of the source modulus.
  Embedding(const Field& source, const Field& target, Elem image_of_generator);

  const Field& source() const { return *source_; }
  const Field& target() const { return *target_; }

  Elem operator()(Elem a) const;
  /// Preimage of b, or nullopt when b is not in the image.
  std::optional<Elem> preimage(Elem b) const;

 private:
  void init(Elem theta);

  const Field* source_;
  const Field* target_;
  std::vector<Elem> powers_;  // images of t^i, i < m
  std::vector<Elem> table_;   // full image table for small sources
  // preimage: pivot coordinates of the target and the inverse of the
  // corresponding square block of the basis matrix, over F_p.
  std::vector<unsigned> pivots_;
  std::vector<std::vector<std::uint64_t>> block_inverse_;
};

/// Cached embedding between two fields of the same characteristic. Throws
/// std::invalid_argument when the source degree does not divide the target's.
const Embedding& embedding(const Field& source, const Field& target);

Elem embed(Elem a, const Field& source, const Field& target);

/// Embedding source -> target that commutes with the default embeddings of
/// `base` into both, i.e. an F_base-algebra map. Needed whenever points are
/// moved between extensions of a non-prime base field.
const Embedding& embedding_over(const Field& base, const Field& source, const Field& target);

}  // namespace planefill
