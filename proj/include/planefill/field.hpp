#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "planefill/errors.hpp"

namespace planefill {

/// An element of F_{p^m}, packed as sum(a_i * p^i) over its coefficient
/// vector (a_0, ..., a_{m-1}) with respect to the field's modulus. The packed
/// value doubles as the element's position in the enumeration order.
struct Elem {
  std::uint64_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Cardinality limit applied by make_field(p, m). Initialised from the
/// PLANEFILL_FIELD_CAP environment variable when set, otherwise 2^20.
std::uint64_t field_cardinality_cap();
void set_field_cardinality_cap(std::uint64_t cap);

/// The finite field F_{p^m}. Instances are interned: the same (p, m) always
/// yields the same object, so `&F == &G` is field identity. Immutable after
/// construction and safe to share between threads.
///
/// Extensions are always built directly over the prime field with the
/// lexicographically smallest monic irreducible modulus, comparing
/// coefficient vectors constant term first.
class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint64_t size() const { return q_; }
  bool is_prime_field() const { return m_ == 1; }

  /// Monic modulus, lowest coefficient first (m+1 entries). Empty for m = 1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  /// "p^m", or just "p" for prime fields.
  std::string name() const;
  /// Human-readable modulus, e.g. "t^2+1".
  std::string modulus_string() const;

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  /// Class of t (the adjoined root); equals from_int(0) when m = 1.
  Elem generator() const;
  Elem from_int(std::int64_t n) const;
  Elem from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(Elem a) const;
  bool contains(Elem a) const { return a.v < q_; }

  Elem add(Elem a, Elem b) const {
    switch (kind_) {
      case Kind::Prime: {
        const std::uint64_t s = a.v + b.v;
        return {s >= p_ ? s - p_ : s};
      }
      case Kind::Table:
        if (p_ == 2) return {a.v ^ b.v};
        return table_add(a, b);
      default:
        return generic_add(a, b);
    }
  }
  Elem neg(Elem a) const {
    if (a.v == 0 || p_ == 2) return a;
    switch (kind_) {
      case Kind::Prime:
        return {p_ - a.v};
      case Kind::Table: {
        std::uint64_t l = log_[a.v] + half_order_;
        return {exp_[l]};
      }
      default:
        return generic_neg(a);
    }
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    switch (kind_) {
      case Kind::Prime:
        if (p_ < (1ull << 32)) return {(a.v * b.v) % p_};
        return {static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v) * b.v) % p_)};
      case Kind::Table:
        if (a.v == 0 || b.v == 0) return {0};
        return {exp_[log_[a.v] + log_[b.v]]};
      default:
        return generic_mul(a, b);
    }
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(base_q^j) where base_q = p^d for some d dividing m.
  Elem frobenius(Elem a, std::uint64_t base_q, unsigned j = 1) const;

  /// Elements in enumeration order: packed value 0, 1, ..., q-1.
  std::vector<Elem> elements() const;

  /// Multiplicative generator (smallest by packed value). Table fields only
  /// cache it; for others it is searched on demand.
  Elem primitive_element() const;

  /// Coefficient-list rendering "[a0,a1,...]" or plain integer for prime fields.
  std::string to_string(Elem a) const;

 private:
  friend const Field& make_field_unbounded(std::uint64_t p, unsigned m);
  Field(std::uint64_t p, unsigned m);

  enum class Kind : std::uint8_t { Prime, Table, Generic };

  Elem table_add(Elem a, Elem b) const {
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const std::uint32_t la = log_[a.v];
    const std::uint32_t lb = log_[b.v];
    std::uint32_t d = la >= lb ? la - lb : la + static_cast<std::uint32_t>(q_ - 1) - lb;
    const std::uint32_t z = zech_[d];
    if (z == kNoLog) return {0};
    return {exp_[lb + z]};
  }
  Elem generic_add(Elem a, Elem b) const;
  Elem generic_neg(Elem a) const;
  Elem generic_mul(Elem a, Elem b) const;
  Elem generic_inv(Elem a) const;
  void build_tables();

  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  Kind kind_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> ppow_;  // p^i for i < m
  std::uint64_t half_order_ = 0;     // (q-1)/2 for odd q
  std::vector<std::uint32_t> log_;   // log_[0] unused
  std::vector<std::uint32_t> exp_;   // length 2(q-1)
  std::vector<std::uint32_t> zech_;  // log(1 + g^d), kNoLog when zero
  Elem primitive_{0};
};

/// F_{p^m} subject to the cardinality cap. Throws std::invalid_argument when
/// p is not prime or m == 0, CapExceeded when p^m exceeds the cap.
const Field& make_field(std::uint64_t p, unsigned m);
const Field& make_field(std::uint64_t p, unsigned m, std::uint64_t cap);
/// As make_field, limited only by 64-bit representability (p^m < 2^63).
/// Used for residue extensions inside the exact solver.
const Field& make_field_unbounded(std::uint64_t p, unsigned m);

/// Parses "p^m", "p" or a prime power such as "9".
const Field& parse_field(const std::string& spec);

bool is_prime(std::uint64_t n);
/// If n = p^m for a prime p, returns (p, m); otherwise (0, 0).
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

/// Rabin irreducibility test for a monic polynomial over F_p given by its
/// coefficients (lowest first). Used for modulus selection.
bool is_irreducible_mod_p(std::span<const std::uint64_t> monic, std::uint64_t p);

}  // namespace planefill
