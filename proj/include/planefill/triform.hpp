#pragma once

#include <array>
#include <map>
#include <string>

#include "planefill/bipoly.hpp"

namespace planefill {

enum class Var { x = 0, y = 1, z = 2 };

/// Homogeneous polynomial in x, y, z over a Field, stored sparsely. Every
/// stored monomial has the same total degree; the zero form has degree -1.
class TriForm {
 public:
  using Monomial = std::array<int, 3>;

  explicit TriForm(const Field& field) : field_(&field) {}

  static TriForm monomial(const Field& field, Elem c, int i, int j, int l);
  static TriForm variable(const Field& field, Var v);

  const Field& field() const { return *field_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Elem>& terms() const { return terms_; }
  Elem coeff(const Monomial& m) const;
  /// Adds c * x^i y^j z^l. Throws std::invalid_argument when the degree does
  /// not match the form's degree.
  void add_term(const Monomial& m, Elem c);

  /// Value at a point with coordinates in `at`, an extension of field().
  Elem eval(const std::array<Elem, 3>& point, const Field& at) const;
  Elem eval(const std::array<Elem, 3>& point) const { return eval(point, *field_); }

  TriForm scaled(Elem c) const;

  friend TriForm operator+(const TriForm& a, const TriForm& b);
  friend TriForm operator-(const TriForm& a, const TriForm& b);
  friend TriForm operator*(const TriForm& a, const TriForm& b);
  friend bool operator==(const TriForm& a, const TriForm& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Human-readable rendering, highest monomials first.
  std::string to_string() const;

  /// One "coef,i,j,l" line per monomial in ascending exponent order, each
  /// terminated by '\n'. coef is the packed element value.
  std::string serialize() const;
  /// Inverse of serialize; blank lines and lines starting with '#' are
  /// skipped. Throws std::invalid_argument on malformed input.
  static TriForm parse(const Field& field, const std::string& text);

 private:
  const Field* field_;
  int degree_ = -1;
  std::map<Monomial, Elem> terms_;
};

/// Formal partial derivative (exponent multiplier reduced mod p).
TriForm partial(const TriForm& f, Var var);

/// Restriction of f to the line a*x + b*y + c*z = 0, as a binary form in the
/// two remaining free variables. If b != 0 the line is y = -(a*x + c*z)/b with
/// free variables (x, z); otherwise if a != 0 it is x = -c*z/a with free
/// (y, z); otherwise z = 0 with free (x, y).
BiPoly restrict_to_line(const TriForm& f, const std::array<Elem, 3>& line);

/// Sets `var` to 1; the remaining two variables keep their x, y, z order.
BiPoly dehomogenize(const TriForm& f, Var var);

}  // namespace planefill
