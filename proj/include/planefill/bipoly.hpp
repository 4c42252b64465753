#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "planefill/unipoly.hpp"

namespace planefill {

enum class BiVar { first, second };

/// Sparse polynomial in two variables (u, v) over a Field. No zero
/// coefficients are stored.
class BiPoly {
 public:
  using Exponents = std::array<int, 2>;

  explicit BiPoly(const Field& field) : field_(&field) {}

  const Field& field() const { return *field_; }
  const std::map<Exponents, Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Elem coeff(int i, int j) const;
  void add_term(int i, int j, Elem c);

  int degree_in(BiVar var) const;
  int total_degree() const;

  /// Value at (u, v); the point may lie in an extension of field().
  Elem eval(Elem u, Elem v, const Field& at) const;
  Elem eval(Elem u, Elem v) const { return eval(u, v, *field_); }

  /// Coefficients with respect to `var`, as polynomials in the other variable:
  /// result[j] multiplies var^j.
  std::vector<UniPoly> coefficients_in(BiVar var) const;
  /// Substitutes a value for `var`, leaving a polynomial in the other one.
  UniPoly specialize(BiVar var, Elem value) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.field_ == b.field_ && a.terms_ == b.terms_; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);

  std::string to_string(const std::string& u = "u", const std::string& v = "v") const;

 private:
  const Field* field_;
  std::map<Exponents, Elem> terms_;
};

/// Resultant eliminating `var`, as a polynomial in the remaining variable.
/// Computed by evaluation at enough points of an extension field, univariate
/// resultants there, and interpolation back to the coefficient field.
/// Throws std::invalid_argument when either input is zero or has degree 0 in
/// `var`.
UniPoly resultant(const BiPoly& g, const BiPoly& h, BiVar var);

/// Same resultant as the determinant of the Sylvester matrix, by
/// fraction-free (Bareiss) elimination over the polynomial ring.
UniPoly resultant_sylvester(const BiPoly& g, const BiPoly& h, BiVar var);

/// Univariate resultant with formal degrees n >= deg a and m >= deg b (the
/// Sylvester determinant of size n + m built with leading zero rows).
Elem univariate_resultant(const UniPoly& a, int n, const UniPoly& b, int m);

}  // namespace planefill
