#include "planefill/smoothness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "planefill/embedding.hpp"
#include "planefill/factor.hpp"

namespace planefill {

namespace {

std::atomic<unsigned> g_residue_cap{0};

unsigned env_residue_cap() {
  if (const char* s = std::getenv("PLANEFILL_RESIDUE_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 64;
}

const Field& extension(const Field& base, unsigned s) {
  const unsigned long long deg = static_cast<unsigned long long>(base.degree()) * s;
  if (deg > 62) throw CapExceeded("F_" + base.name() + " extension of degree " + std::to_string(s) + " not representable");
  try {
    return make_field_unbounded(base.characteristic(), static_cast<unsigned>(deg));
  } catch (const std::invalid_argument&) {
    throw CapExceeded("F_" + base.name() + " extension of degree " + std::to_string(s) + " not representable");
  }
}

std::array<TriForm, 4> vanishing_system(const TriForm& f) {
  return {f, partial(f, Var::x), partial(f, Var::y), partial(f, Var::z)};
}

bool all_vanish(const std::array<TriForm, 4>& sys, const std::array<Elem, 3>& pt, const Field& at) {
  for (const auto& g : sys) {
    if (g.eval(pt, at).v != 0) return false;
  }
  return true;
}

std::array<Elem, 3> normalize(const Field& F, std::array<Elem, 3> c) { return ProjPoint::normalized(F, c).coords; }

std::array<Elem, 3> frobenius_point(const Field& F, std::uint64_t q, const std::array<Elem, 3>& c) {
  return {F.frobenius(c[0], q), F.frobenius(c[1], q), F.frobenius(c[2], q)};
}

// Smallest s dividing t such that every coordinate is fixed by x -> x^(q^s).
unsigned residue_degree_of(const Field& M, std::uint64_t q, unsigned t, const std::array<Elem, 3>& c) {
  for (unsigned s = 1; s < t; ++s) {
    if (t % s != 0) continue;
    bool fixed = true;
    for (Elem e : c) {
      if (M.frobenius(e, q, s) != e) {
        fixed = false;
        break;
      }
    }
    if (fixed) return s;
  }
  return t;
}

// Point given in M = F_{q^t}; rewritten over the canonical F_{q^s}.
SingularPoint canonical_point(const Field& base, const Field& M, unsigned t, std::array<Elem, 3> c) {
  c = normalize(M, c);
  const unsigned s = residue_degree_of(M, base.size(), t, c);
  SingularPoint pt;
  pt.residue_degree = s;
  if (s == t) {
    pt.field = &M;
    pt.coords = c;
    return pt;
  }
  const Field& S = extension(base, s);
  const Embedding& emb = embedding_over(base, S, M);
  pt.field = &S;
  for (int i = 0; i < 3; ++i) {
    const auto pre = emb.preimage(c[i]);
    if (!pre) throw std::logic_error("coordinate outside its residue field");
    pt.coords[i] = *pre;
  }
  return pt;
}

bool point_less(const SingularPoint& a, const SingularPoint& b) {
  if (a.residue_degree != b.residue_degree) return a.residue_degree < b.residue_degree;
  return a.coords < b.coords;
}

void assign_orbits(std::vector<SingularPoint>& pts, std::uint64_t q) {
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const SingularPoint& a, const SingularPoint& b) {
                          return a.residue_degree == b.residue_degree && a.coords == b.coords;
                        }),
            pts.end());
  std::vector<bool> done(pts.size(), false);
  unsigned next = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (done[i]) continue;
    const Field& F = *pts[i].field;
    auto c = pts[i].coords;
    do {
      SingularPoint key = pts[i];
      key.coords = c;
      auto it = std::lower_bound(pts.begin(), pts.end(), key, point_less);
      if (it != pts.end() && it->residue_degree == key.residue_degree && it->coords == c) {
        const auto j = static_cast<std::size_t>(it - pts.begin());
        done[j] = true;
        pts[j].orbit = next;
      }
      c = frobenius_point(F, q, c);
    } while (c != pts[i].coords);
    ++next;
  }
}

// Horner evaluation of a polynomial over F_q at a point of an extension.
Elem eval_at(const UniPoly& c, Elem x0, const Field& L) {
  const Field& F = c.field();
  const Embedding* emb = &F == &L ? nullptr : &embedding(F, L);
  Elem acc = L.zero();
  for (auto it = c.coeffs().rbegin(); it != c.coeffs().rend(); ++it) {
    acc = L.add(L.mul(acc, x0), emb ? (*emb)(*it) : *it);
  }
  return acc;
}

// ---- chart z = 1: polynomials in (x, y), y eliminated ----

std::vector<BiPoly> affine_chart(const std::array<TriForm, 4>& sys) {
  std::vector<BiPoly> out;
  // partials first so that the first resultant is of two partials
  for (int i : {1, 2, 3, 0}) {
    BiPoly p = dehomogenize(sys[i], Var::z);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

UniPoly as_poly_in_x(const BiPoly& p) {
  auto cs = p.coefficients_in(BiVar::second);
  return cs.empty() ? UniPoly(p.field()) : cs[0];
}

UniPoly eliminant(const std::vector<BiPoly>& polys) {
  const Field& F = polys.front().field();
  UniPoly E(F);
  bool have = false;
  auto absorb = [&](const UniPoly& r) {
    if (r.is_zero()) return;
    E = have ? gcd_uni(E, r) : monic(r);
    have = true;
  };
  std::vector<const BiPoly*> in_y;
  for (const auto& p : polys) {
    if (p.degree_in(BiVar::second) == 0) {
      absorb(as_poly_in_x(p));
    } else {
      in_y.push_back(&p);
    }
  }
  for (std::size_t i = 0; i < in_y.size(); ++i) {
    for (std::size_t j = i + 1; j < in_y.size(); ++j) {
      if (have && E.degree() == 0) return E;
      absorb(resultant(*in_y[i], *in_y[j], BiVar::second));
    }
  }
  if (!have) throw DegenerateLocus("no nonzero eliminant: singular locus is not zero-dimensional");
  return E;
}

// Arithmetic in K[y], K = F_q[x]/(g), g irreducible.
using KPoly = std::vector<UniPoly>;

void ktrim(KPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly kreduce(const BiPoly& p, const UniPoly& g) {
  KPoly out;
  for (const auto& c : p.coefficients_in(BiVar::second)) out.push_back(rem(c, g));
  ktrim(out);
  return out;
}

void krem(KPoly& a, const KPoly& b, const UniPoly& g) {
  const UniPoly inv = rem(ext_gcd(b.back(), g).s, g);
  while (a.size() >= b.size()) {
    const UniPoly c = mul_rem(a.back(), inv, g);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= mul_rem(c, b[i], g);
    a.back() = UniPoly(g.field());
    ktrim(a);
  }
}

// Degree in y of the gcd over K of the chart polynomials.
int common_root_degree(const std::vector<BiPoly>& polys, const UniPoly& g) {
  KPoly acc;
  bool have = false;
  for (const auto& p : polys) {
    KPoly b = kreduce(p, g);
    if (b.empty()) continue;
    if (!have) {
      acc = std::move(b);
      have = true;
    } else {
      while (!b.empty()) {
        krem(acc, b, g);
        std::swap(acc, b);
      }
    }
    if (acc.size() == 1) return 0;
  }
  if (!have) throw DegenerateLocus("a vertical line is singular: locus is not zero-dimensional");
  return static_cast<int>(acc.size()) - 1;
}

// ---- chart z = 0, y = 1 ----

UniPoly line_at_infinity_gcd(const std::array<TriForm, 4>& sys) {
  const Field& F = sys[0].field();
  UniPoly G(F);
  bool have = false;
  for (const auto& g : sys) {
    const UniPoly u = dehomogenize(g, Var::y).specialize(BiVar::second, F.zero());
    if (u.is_zero()) continue;
    G = have ? gcd_uni(G, u) : monic(u);
    have = true;
  }
  if (!have) throw DegenerateLocus("the line z = 0 is singular: locus is not zero-dimensional");
  return G;
}

bool within(unsigned degree, unsigned bound) { return bound == 0 || degree <= bound; }

void check_cap(unsigned degree, const SolverOptions& opt) {
  if (degree > opt.residue_cap) {
    throw CapExceeded("singular point of residue degree " + std::to_string(degree) + " exceeds the cap " +
                      std::to_string(opt.residue_cap));
  }
}

// Roots in L of an irreducible factor defined over a subfield, via embedding `emb` (or identity).
std::vector<Elem> split_roots(const UniPoly& h, const Field& L, const Embedding* emb, std::uint64_t seed) {
  std::vector<Elem> v;
  for (Elem c : h.coeffs()) v.push_back(emb ? (*emb)(c) : c);
  std::vector<Elem> roots;
  for (const auto& l : equal_degree_factorization(UniPoly(L, std::move(v)), 1, seed)) roots.push_back(L.neg(l.coeff(0)));
  return roots;
}

}  // namespace

std::string to_string(Method m) { return m == Method::exact ? "exact" : "enumeration"; }

unsigned residue_degree_cap() {
  unsigned v = g_residue_cap.load();
  if (v == 0) {
    v = env_residue_cap();
    g_residue_cap.store(v);
  }
  return v;
}

void set_residue_degree_cap(unsigned cap) {
  if (cap == 0) throw std::invalid_argument("residue-degree cap must be positive");
  g_residue_cap.store(cap);
}

std::size_t SingularReport::orbit_count() const {
  std::set<unsigned> ids;
  for (const auto& p : points) ids.insert(p.orbit);
  return ids.size();
}

SingularReport SingularReport::truncated(unsigned s) const {
  SingularReport out = *this;
  out.points.clear();
  std::map<unsigned, unsigned> renumber;
  for (const auto& p : points) {
    if (p.residue_degree > s) continue;
    auto [it, fresh] = renumber.try_emplace(p.orbit, static_cast<unsigned>(renumber.size()));
    out.points.push_back(p);
    out.points.back().orbit = it->second;
  }
  return out;
}

std::string SingularReport::to_json() const {
  nlohmann::ordered_json j;
  j["curve"] = curve;
  j["field"] = base ? base->name() : "";
  j["method"] = planefill::to_string(method);
  j["bound"] = bound;
  j["smooth"] = smooth();
  j["orbits"] = orbit_count();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : points) {
    nlohmann::ordered_json e;
    e["residue_degree"] = p.residue_degree;
    e["field"] = p.field->name();
    e["modulus"] = p.field->is_prime_field() ? "" : p.field->modulus_string();
    auto cs = nlohmann::ordered_json::array();
    for (Elem c : p.coords) cs.push_back(p.field->coeffs(c));
    e["coords"] = cs;
    e["orbit"] = p.orbit;
    arr.push_back(e);
  }
  j["points"] = arr;
  return j.dump(2);
}

UniPoly base_point_criterion(const CurveSpec& spec) {
  if (spec.field == nullptr) throw std::invalid_argument("curve spec without a field");
  const Field& F = *spec.field;
  switch (spec.family) {
    case Family::tallini: {
      // t^3 - c t^2 - b t - a
      return UniPoly(F, {F.neg(spec.a), F.neg(spec.b), F.neg(spec.c), F.one()});
    }
    case Family::ck:
    case Family::ckr: {
      const int r = spec.family == Family::ck ? 2 : spec.r;
      if (r < 2) throw std::invalid_argument("ckr needs r >= 2");
      const auto top = static_cast<std::size_t>(r * r + r + 1);
      UniPoly f = UniPoly::monomial(F, F.one(), top) + UniPoly::monomial(F, spec.k, static_cast<std::size_t>(r + 1));
      return f - UniPoly::constant(F, F.one());
    }
    case Family::dk:
      if (F.characteristic() != 2) throw std::invalid_argument("the dk criterion is stated for even q only");
      return UniPoly::monomial(F, F.one(), 7) + UniPoly::monomial(F, spec.k, 5) + UniPoly::constant(F, F.one());
    case Family::custom:
      break;
  }
  throw std::invalid_argument("custom curves have no closed-form criterion");
}

bool smooth_at_base_points(const CurveSpec& spec) {
  const UniPoly c = base_point_criterion(spec);
  return roots_in_field(c, c.field()).empty();
}

SingularReport singular_points_up_to(const TriForm& f, unsigned S) {
  if (S == 0) throw std::invalid_argument("enumeration bound must be positive");
  if (f.is_zero()) throw std::invalid_argument("zero form");
  const Field& F = f.field();
  const std::uint64_t q = F.size();
  // fail fast before any work when the top level is over the cap
  make_field(F.characteristic(), F.degree() * S);
  const auto sys = vanishing_system(f);
  // f_x is tested first since it fails most often.
  const std::array<int, 4> order{1, 2, 3, 0};

  SingularReport rep;
  rep.base = &F;
  rep.method = Method::enumeration;
  rep.bound = S;
  for (unsigned s = 1; s <= S; ++s) {
    const Field& E = make_field(F.characteristic(), F.degree() * s);
    struct Term {
      Elem c;
      TriForm::Monomial m;
    };
    std::array<std::vector<Term>, 4> compiled;
    const Embedding* emb = &E == &F ? nullptr : &embedding(F, E);
    for (int i = 0; i < 4; ++i) {
      for (const auto& [m, c] : sys[i].terms()) compiled[i].push_back({emb ? (*emb)(c) : c, m});
    }
    const int d = f.degree();
    std::array<std::vector<Elem>, 3> pw;
    for (auto& v : pw) v.assign(static_cast<std::size_t>(d) + 1, E.one());
    auto powers = [&](int var, Elem a) {
      auto& v = pw[var];
      for (int k = 1; k <= d; ++k) v[k] = E.mul(v[k - 1], a);
    };
    auto singular_here = [&]() {
      for (int i : order) {
        Elem acc = E.zero();
        for (const auto& t : compiled[i]) {
          acc = E.add(acc, E.mul(t.c, E.mul(pw[0][t.m[0]], E.mul(pw[1][t.m[1]], pw[2][t.m[2]]))));
        }
        if (acc.v != 0) return false;
      }
      return true;
    };
    auto record = [&](std::array<Elem, 3> c) {
      if (residue_degree_of(E, q, s, c) != s) return;
      rep.points.push_back({s, &E, c, 0});
    };
    const std::uint64_t Q = E.size();
    powers(0, E.one());
    for (std::uint64_t a = 0; a < Q; ++a) {
      powers(1, Elem{a});
      for (std::uint64_t b = 0; b < Q; ++b) {
        powers(2, Elem{b});
        if (singular_here()) record({E.one(), Elem{a}, Elem{b}});
      }
    }
    powers(0, E.zero());
    powers(1, E.one());
    for (std::uint64_t c = 0; c < Q; ++c) {
      powers(2, Elem{c});
      if (singular_here()) record({E.zero(), E.one(), Elem{c}});
    }
    powers(1, E.zero());
    powers(2, E.one());
    if (singular_here()) record({E.zero(), E.zero(), E.one()});
  }
  assign_orbits(rep.points, q);
  return rep;
}

namespace {

// Shared driver. With `decide_only` it returns at the first genuine factor
// (report contents are then meaningless apart from `smooth`).
SingularReport solve(const TriForm& f, const SolverOptions& opt, unsigned max_degree, bool decide_only) {
  if (f.is_zero()) throw std::invalid_argument("zero form");
  const Field& F = f.field();
  const std::uint64_t q = F.size();
  const auto sys = vanishing_system(f);
  SingularReport rep;
  rep.base = &F;
  rep.method = Method::exact;
  rep.bound = max_degree;
  SingularPoint flag;
  flag.field = &F;

  auto add_candidate = [&](const Field& M, unsigned t, const std::array<Elem, 3>& c) {
    if (!all_vanish(sys, c, M)) return;
    rep.points.push_back(canonical_point(F, M, t, c));
  };

  // chart z = 1
  const auto polys = affine_chart(sys);
  if (polys.empty()) throw DegenerateLocus("every polynomial of the system vanishes on z = 1");
  const UniPoly E = eliminant(polys);
  if (E.degree() >= 1) {
    for (const auto& fac : factor_uni(E, opt.seed)) {
      const UniPoly& g = fac.poly;
      const auto d = static_cast<unsigned>(g.degree());
      if (!within(d, max_degree)) continue;
      if (common_root_degree(polys, g) == 0) continue;  // spurious factor
      if (decide_only) {
        rep.points.push_back(flag);
        return rep;
      }
      check_cap(d, opt);
      const Field& L = extension(F, d);
      for (Elem x0 : split_roots(g, L, &F == &L ? nullptr : &embedding(F, L), opt.seed)) {
        UniPoly G(L);
        bool have = false;
        for (const auto& p : polys) {
          std::vector<Elem> v;
          for (const auto& c : p.coefficients_in(BiVar::second)) v.push_back(eval_at(c, x0, L));
          UniPoly u(L, std::move(v));
          if (u.is_zero()) continue;
          G = have ? gcd_uni(G, u) : monic(u);
          have = true;
        }
        if (!have) throw DegenerateLocus("a vertical line is singular: locus is not zero-dimensional");
        if (G.degree() < 1) continue;
        for (const auto& h : factor_uni(G, opt.seed)) {
          const unsigned t = d * static_cast<unsigned>(h.poly.degree());
          if (!within(t, max_degree)) continue;
          check_cap(t, opt);
          const Field& M = extension(F, t);
          const Embedding* lm = &L == &M ? nullptr : &embedding_over(F, L, M);
          const Elem x0m = lm ? (*lm)(x0) : x0;
          for (Elem y0 : split_roots(h.poly, M, lm, opt.seed)) add_candidate(M, t, {x0m, y0, M.one()});
        }
      }
    }
  }

  // chart z = 0, y = 1
  const UniPoly G = line_at_infinity_gcd(sys);
  if (G.degree() >= 1) {
    for (const auto& fac : factor_uni(G, opt.seed)) {
      const auto e = static_cast<unsigned>(fac.poly.degree());
      if (!within(e, max_degree)) continue;
      if (decide_only) {
        rep.points.push_back(flag);
        return rep;
      }
      check_cap(e, opt);
      const Field& M = extension(F, e);
      for (Elem x0 : split_roots(fac.poly, M, &F == &M ? nullptr : &embedding(F, M), opt.seed)) {
        add_candidate(M, e, {x0, M.one(), M.zero()});
      }
    }
  }

  // [1:0:0]
  if (all_vanish(sys, {F.one(), F.zero(), F.zero()}, F)) {
    if (decide_only) {
      rep.points.push_back(flag);
      return rep;
    }
    rep.points.push_back({1, &F, {F.one(), F.zero(), F.zero()}, 0});
  }
  assign_orbits(rep.points, q);
  return rep;
}

}  // namespace

SingularReport exact_singular_locus(const TriForm& f, const SolverOptions& opt) { return solve(f, opt, 0, false); }

SingularReport exact_singular_locus_up_to(const TriForm& f, unsigned max_residue_degree, const SolverOptions& opt) {
  if (max_residue_degree == 0) throw std::invalid_argument("residue-degree bound must be positive");
  return solve(f, opt, max_residue_degree, false);
}

bool is_smooth(const TriForm& f, const SolverOptions& opt) { return solve(f, opt, 0, true).smooth(); }

std::optional<std::array<Elem, 3>> has_linear_component(const TriForm& f) {
  const Field& F = f.field();
  if (f.is_zero()) throw std::invalid_argument("zero form");
  for (const auto& line : enumerate_proj_points(F)) {
    if (restrict_to_line(f, line.coords).is_zero()) return line.coords;
  }
  return std::nullopt;
}

Fq2Verdict check_fq2_implication(const TriForm& f) {
  const Field& F = f.field();
  if (!is_plane_filling(f, F)) throw std::invalid_argument("check_fq2_implication needs a plane-filling curve");
  Fq2Verdict v;
  v.degree = f.degree();
  v.in_range = static_cast<std::uint64_t>(v.degree) <= F.size() + 4;
  const SingularReport two = singular_points_up_to(f, 2);
  v.no_singular_fq_point = two.truncated(1).smooth();
  v.no_linear_component = !has_linear_component(f).has_value();
  v.no_singular_fq2_point = two.smooth();
  v.consistent = !(v.in_range && v.no_singular_fq_point && v.no_linear_component && !v.no_singular_fq2_point);
  return v;
}

}  // namespace planefill
