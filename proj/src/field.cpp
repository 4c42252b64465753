#include "planefill/field.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace planefill {

namespace {

constexpr std::uint64_t kTableLimit = 1ull << 20;
constexpr unsigned kMaxDigits = 64;

std::uint64_t initial_cap() {
  if (const char* env = std::getenv("PLANEFILL_FIELD_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1ull << 20;
}

std::atomic<std::uint64_t>& cap_storage() {
  static std::atomic<std::uint64_t> cap{initial_cap()};
  return cap;
}

// Dense polynomials over F_p, lowest coefficient first, used only for
// modulus selection and generic inversion.
using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod_int(std::uint64_t a, std::uint64_t p) {
  __int128 t = 0, nt = 1;
  __int128 r = p, nr = a % p;
  while (nr != 0) {
    const __int128 quo = r / nr;
    std::swap(t, nt);
    nt -= quo * t;
    std::swap(r, nr);
    nr -= quo * r;
  }
  if (r != 1) throw std::domain_error("inverse of zero");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

ModPoly poly_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv_lead = invmod_int(b.back(), p);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::uint64_t c = mulmod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

ModPoly poly_mul_rem(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return poly_rem(std::move(r), m, p);
}

ModPoly poly_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f by k successive p-th powers.
ModPoly frobenius_power_of_x(const ModPoly& f, std::uint64_t p, unsigned k) {
  ModPoly h = poly_rem(ModPoly{0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) {
    ModPoly base = h;
    ModPoly acc{1};
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = poly_mul_rem(acc, base, f, p);
      e >>= 1;
      if (e) base = poly_mul_rem(base, base, f, p);
    }
    h = std::move(acc);
  }
  return h;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

ModPoly smallest_irreducible(std::uint64_t p, unsigned m) {
  // Odometer over (a_0, ..., a_{m-1}) with a_0 most significant.
  ModPoly f(m + 1, 0);
  f[m] = 1;
  while (true) {
    if (is_irreducible_mod_p(f, p)) return f;
    int i = static_cast<int>(m) - 1;
    while (i >= 0) {
      if (++f[i] < p) break;
      f[i] = 0;
      --i;
    }
    if (i < 0) throw std::logic_error("no irreducible polynomial found");
  }
}

}  // namespace

std::uint64_t field_cardinality_cap() { return cap_storage().load(); }
void set_field_cardinality_cap(std::uint64_t cap) { cap_storage().store(cap); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {n, 1};
  unsigned m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return {0, 0};
  return {p, m};
}

bool is_irreducible_mod_p(std::span<const std::uint64_t> monic, std::uint64_t p) {
  ModPoly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  if (f[0] == 0) return false;
  const ModPoly x{0, 1};
  auto minus_x = [&](ModPoly h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  if (!minus_x(frobenius_power_of_x(f, p, n)).empty()) return false;
  for (std::uint64_t l : prime_factors(n)) {
    ModPoly g = poly_gcd(f, minus_x(frobenius_power_of_x(f, p, n / static_cast<unsigned>(l))), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field::Field(std::uint64_t p, unsigned m) : p_(p), m_(m), q_(1), kind_(Kind::Generic) {
  for (unsigned i = 0; i < m; ++i) {
    ppow_.push_back(q_);
    q_ *= p;
  }
  if (q_ % 2 == 1) half_order_ = (q_ - 1) / 2;
  if (m == 1) {
    kind_ = Kind::Prime;
    return;
  }
  modulus_ = smallest_irreducible(p, m);
  if (q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  primitive_ = primitive_element();
  const std::uint64_t order = q_ - 1;
  log_.assign(q_, kNoLog);
  exp_.assign(2 * order, 0);
  Elem cur = one();
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur.v);
    exp_[i + order] = static_cast<std::uint32_t>(cur.v);
    log_[cur.v] = static_cast<std::uint32_t>(i);
    cur = generic_mul(cur, primitive_);
  }
  zech_.assign(order, kNoLog);
  for (std::uint64_t d = 0; d < order; ++d) {
    const Elem s = generic_add(Elem{exp_[d]}, one());
    zech_[d] = s.v == 0 ? kNoLog : log_[s.v];
  }
  kind_ = Kind::Table;
}

std::string Field::name() const {
  if (m_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(m_);
}

std::string Field::modulus_string() const {
  if (m_ == 1) return "";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(m_); i >= 0; --i) {
    const std::uint64_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Elem Field::generator() const {
  if (m_ == 1) throw std::logic_error("prime field has no adjoined generator");
  return {p_};
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return {static_cast<std::uint64_t>(r)};
}

Elem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > m_) throw std::invalid_argument("too many coefficients for field " + name());
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += (coeffs[i] % p_) * ppow_[i];
  return {v};
}

std::vector<std::uint64_t> Field::coeffs(Elem a) const {
  std::vector<std::uint64_t> out(m_);
  std::uint64_t v = a.v;
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

Elem Field::generic_add(Elem a, Elem b) const {
  if (p_ == 2) return {a.v ^ b.v};
  std::uint64_t x = a.v, y = b.v, out = 0;
  for (unsigned i = 0; i < m_ && (x | y); ++i) {
    std::uint64_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * ppow_[i];
    x /= p_;
    y /= p_;
  }
  return {out};
}

Elem Field::generic_neg(Elem a) const {
  std::uint64_t x = a.v, out = 0;
  for (unsigned i = 0; i < m_ && x; ++i) {
    const std::uint64_t d = x % p_;
    if (d) out += (p_ - d) * ppow_[i];
    x /= p_;
  }
  return {out};
}

Elem Field::generic_mul(Elem a, Elem b) const {
  if (m_ == 1) return {mulmod(a.v, b.v, p_)};
  std::array<std::uint64_t, kMaxDigits> da{}, db{};
  std::array<std::uint64_t, 2 * kMaxDigits> prod{};
  unsigned na = 0, nb = 0;
  for (std::uint64_t x = a.v; x; x /= p_) da[na++] = x % p_;
  for (std::uint64_t x = b.v; x; x /= p_) db[nb++] = x % p_;
  if (na == 0 || nb == 0) return {0};
  for (unsigned i = 0; i < na; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < nb; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (int k = static_cast<int>(na + nb) - 2; k >= static_cast<int>(m_); --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    const std::uint64_t nc = p_ - c;
    for (unsigned i = 0; i < m_; ++i) {
      if (modulus_[i]) prod[k - m_ + i] = (prod[k - m_ + i] + nc * modulus_[i]) % p_;
    }
    prod[k] = 0;
  }
  std::uint64_t v = 0;
  for (unsigned i = 0; i < m_; ++i) v += prod[i] * ppow_[i];
  return {v};
}

Elem Field::generic_inv(Elem a) const {
  // Extended Euclid on (modulus, a(t)) tracking the cofactor of a.
  ModPoly r0(modulus_.begin(), modulus_.end());
  ModPoly r1 = coeffs(a);
  trim(r1);
  ModPoly s0{}, s1{1};
  while (!r1.empty()) {
    // (r0, s0) <- (r0 - quo*r1, s0 - quo*s1), then swap.
    ModPoly quo(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    ModPoly rem = r0;
    const std::uint64_t inv_lead = invmod_int(r1.back(), p_);
    while (!rem.empty() && rem.size() >= r1.size()) {
      const std::uint64_t c = mulmod(rem.back(), inv_lead, p_);
      const std::size_t shift = rem.size() - r1.size();
      quo[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        rem[shift + i] = (rem[shift + i] + p_ - mulmod(c, r1[i], p_)) % p_;
      }
      trim(rem);
    }
    ModPoly qs(quo.size() + s1.size(), 0);
    for (std::size_t i = 0; i < quo.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + mulmod(quo[i], s1[j], p_)) % p_;
    }
    ModPoly ns(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const std::uint64_t x = i < s0.size() ? s0[i] : 0;
      const std::uint64_t y = i < qs.size() ? qs[i] : 0;
      ns[i] = (x + p_ - y) % p_;
    }
    trim(ns);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  // r0 is a nonzero constant.
  const std::uint64_t c = invmod_int(r0[0], p_);
  for (auto& x : s0) x = mulmod(x, c, p_);
  s0.resize(m_, 0);
  return from_coeffs(s0);
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw std::domain_error("division by zero in F_" + name());
  switch (kind_) {
    case Kind::Prime:
      return {invmod_int(a.v, p_)};
    case Kind::Table:
      return {exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
    default:
      return generic_inv(a);
  }
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (a.v == 0) return e == 0 ? one() : zero();
  const std::uint64_t order = q_ - 1;
  e %= order;
  if (kind_ == Kind::Table) {
    const auto l = static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a.v]) * e) % order);
    return {exp_[l]};
  }
  Elem r = one();
  Elem base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

Elem Field::frobenius(Elem a, std::uint64_t base_q, unsigned j) const {
  const auto [bp, bm] = prime_power(base_q);
  if (bp != p_ || m_ % bm != 0) {
    throw std::invalid_argument("F_" + std::to_string(base_q) + " is not a subfield of F_" + name());
  }
  for (unsigned i = 0; i < j; ++i) a = pow(a, base_q);
  return a;
}

std::vector<Elem> Field::elements() const {
  if (q_ > field_cardinality_cap()) throw CapExceeded("enumerating F_" + name() + " exceeds the cardinality cap");
  std::vector<Elem> out(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out[i] = Elem{i};
  return out;
}

Elem Field::primitive_element() const {
  if (kind_ == Kind::Table) return primitive_;
  if (q_ > kTableLimit && m_ > 1) throw std::logic_error("primitive element search limited to small fields");
  if (q_ == 2) return one();
  const auto factors = prime_factors(q_ - 1);
  for (std::uint64_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (std::uint64_t l : factors) {
      // Square-and-multiply with generic_mul; tables may not exist yet.
      Elem r = one(), base{g};
      std::uint64_t e = (q_ - 1) / l;
      while (e) {
        if (e & 1) r = generic_mul(r, base);
        e >>= 1;
        if (e) base = generic_mul(base, base);
      }
      if (r == one()) {
        ok = false;
        break;
      }
    }
    if (ok) return Elem{g};
  }
  throw std::logic_error("no primitive element");
}

std::string Field::to_string(Elem a) const {
  if (m_ == 1) return std::to_string(a.v);
  std::string s = "[";
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

const Field& make_field_unbounded(std::uint64_t p, unsigned m) {
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p >= (1ull << 32)) throw std::invalid_argument("characteristic too large");
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q >= (static_cast<unsigned __int128>(1) << 63)) {
      throw CapExceeded("F_" + std::to_string(p) + "^" + std::to_string(m) + " is not representable");
    }
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, m}];
  if (!slot) slot.reset(new Field(p, m));
  return *slot;
}

const Field& make_field(std::uint64_t p, unsigned m, std::uint64_t cap) {
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > cap) {
      throw CapExceeded("F_" + std::to_string(p) + "^" + std::to_string(m) + " exceeds the cardinality cap " +
                        std::to_string(cap));
    }
  }
  return make_field_unbounded(p, m);
}

const Field& make_field(std::uint64_t p, unsigned m) { return make_field(p, m, field_cardinality_cap()); }

const Field& parse_field(const std::string& spec) {
  const auto caret = spec.find('^');
  try {
    if (caret != std::string::npos) {
      const auto p = std::stoull(spec.substr(0, caret));
      const auto m = std::stoul(spec.substr(caret + 1));
      return make_field(p, static_cast<unsigned>(m));
    }
    std::size_t used = 0;
    const auto q = std::stoull(spec, &used);
    if (used != spec.size()) throw std::invalid_argument("");
    const auto [p, m] = prime_power(q);
    if (p == 0) throw std::invalid_argument(spec + " is not a prime power");
    return make_field(p, m);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("invalid field spec '" + spec + "' (expected p^m or a prime power)");
  }
}

}  // namespace planefill
