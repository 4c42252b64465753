#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "planefill/field.hpp"

namespace planefill {

/// Dense univariate polynomial over a Field, lowest degree first. The
/// coefficient vector never carries trailing zeros; the zero polynomial has
/// an empty vector and degree -1.
class UniPoly {
 public:
  explicit UniPoly(const Field& field) : field_(&field) {}
  UniPoly(const Field& field, std::vector<Elem> coeffs);

  static UniPoly constant(const Field& field, Elem c);
  static UniPoly monomial(const Field& field, Elem c, std::size_t degree);
  static UniPoly x(const Field& field) { return monomial(field, field.one(), 1); }
  /// Builds from small integers (reduced mod p), lowest degree first.
  static UniPoly from_ints(const Field& field, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_->one(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
  Elem lead() const { return c_.empty() ? field_->zero() : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Elem operator()(Elem x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  UniPoly scaled(Elem c) const;
  /// "x^2+3*x+1" style rendering with coefficients in Field::to_string form.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  const Field* field_;
  std::vector<Elem> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly rem(const UniPoly& a, const UniPoly& b);
UniPoly quo(const UniPoly& a, const UniPoly& b);
UniPoly monic(const UniPoly& f);
UniPoly derivative(const UniPoly& f);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd_uni(const UniPoly& a, const UniPoly& b);
/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
struct ExtGcd {
  UniPoly g, s, t;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);
UniPoly mul_rem(const UniPoly& a, const UniPoly& b, const UniPoly& mod);
UniPoly pow_rem(const UniPoly& base, std::uint64_t e, const UniPoly& mod);

/// Applies a field homomorphism coefficient-wise into `target`.
UniPoly embed_poly(const UniPoly& f, const Field& target);

/// Strict weak order used for canonical output: degree, then coefficient
/// vectors compared from the constant term up by packed value.
bool canonical_less(const UniPoly& a, const UniPoly& b);

}  // namespace planefill
