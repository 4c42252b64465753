#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "planefill/triform.hpp"

namespace planefill {

enum class Family { tallini, ck, dk, ckr, custom };

/// Symbolic description of one member of a plane-filling family over F_q.
///
///   tallini(a,b,c): (a x + b y + c z) g1 + y g2 + z g3           degree q+2
///   ck(k):          x^2 g1 + y^2 g2 + (z^2 + k x^2) g3           degree q+3
///   dk(k):          x^2 g1 + y^2 g2 + (z^2 + k x y) g3           degree q+3
///   ckr(k,r):       x^r g1 + y^r g2 + (z^r + k x^r) g3           degree q+r+1
///   custom:         Q1 g1 + Q2 g2 + Q3 g3
///
/// with g1 = x^q y - x y^q, g2 = y^q z - y z^q, g3 = z^q x - z x^q.
struct CurveSpec {
  const Field* field = nullptr;
  Family family = Family::ck;
  Elem a{}, b{}, c{};  // tallini
  Elem k{};            // ck, dk, ckr
  int r = 2;           // ckr (ck is ckr with r = 2)
  std::array<std::optional<TriForm>, 3> custom;

  static CurveSpec tallini(const Field& F, Elem a, Elem b, Elem c);
  static CurveSpec ck(const Field& F, Elem k);
  static CurveSpec dk(const Field& F, Elem k);
  static CurveSpec ckr(const Field& F, Elem k, int r);
  static CurveSpec from_forms(const Field& F, TriForm q1, TriForm q2, TriForm q3);

  /// Parses "tallini:a,b,c", "ck:k", "dk:k", "ckr:k,r" or "custom:<path>".
  /// Parameters are packed field elements (0..q-1). The custom file holds
  /// three serialized forms separated by lines containing only "--".
  static CurveSpec parse(const Field& F, const std::string& text);

  /// Inverse of parse for the built-in families; "custom" for custom specs.
  std::string to_string() const;
};

/// The three degree-(q+1) binomials x^q y - x y^q, y^q z - y z^q, z^q x - z x^q.
std::array<TriForm, 3> filling_generators(const Field& F);

/// Fully expanded defining form. Throws std::invalid_argument for malformed
/// specs (r < 2, parameters outside F_q, custom forms of unequal degree).
TriForm build_curve(const CurveSpec& spec);

/// Point of P^2 with the leftmost nonzero coordinate equal to 1.
struct ProjPoint {
  const Field* field = nullptr;
  std::array<Elem, 3> coords{};

  /// Scales so the leftmost nonzero coordinate is 1; rejects (0,0,0).
  static ProjPoint normalized(const Field& F, std::array<Elem, 3> coords);

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.field == b.field && a.coords == b.coords;
  }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords < b.coords; }
};

/// All q^2+q+1 points in the order [1:a:b], [0:1:c], [0:0:1] with a, b, c
/// running through F in enumeration order. Respects the cardinality cap.
std::vector<ProjPoint> enumerate_proj_points(const Field& F);

/// True iff f vanishes at every point of P^2(F).
bool is_plane_filling(const TriForm& f, const Field& F);

}  // namespace planefill
