#include <gtest/gtest.h>

#include <json.hpp>
#include <random>
#include <set>

#include "oracles.hpp"
#include "planefill/embedding.hpp"
#include "planefill/factor.hpp"
#include "planefill/smoothness.hpp"

using namespace planefill;

namespace {

const Field& fq(std::uint64_t q) {
  const auto [p, m] = prime_power(q);
  return make_field(p, m);
}

using Key = std::pair<unsigned, std::array<Elem, 3>>;

std::set<Key> keys(const SingularReport& r) {
  std::set<Key> s;
  for (const auto& p : r.points) s.insert({p.residue_degree, p.coords});
  return s;
}

void expect_report_invariants(const TriForm& f, const SingularReport& rep) {
  const Field& F = f.field();
  const std::uint64_t q = F.size();
  const std::array<TriForm, 4> sys{f, partial(f, Var::x), partial(f, Var::y), partial(f, Var::z)};
  std::map<unsigned, std::vector<const SingularPoint*>> orbits;
  const auto all = keys(rep);
  for (const auto& p : rep.points) {
    const Field& S = *p.field;
    EXPECT_EQ(S.size(), [&] {
      std::uint64_t v = 1;
      for (unsigned i = 0; i < p.residue_degree; ++i) v *= q;
      return v;
    }());
    for (const auto& g : sys) EXPECT_EQ(g.eval(p.coords, S).v, 0u);
    EXPECT_EQ(ProjPoint::normalized(S, p.coords).coords, p.coords);
    const std::array<Elem, 3> fr{S.frobenius(p.coords[0], q), S.frobenius(p.coords[1], q),
                                 S.frobenius(p.coords[2], q)};
    EXPECT_TRUE(all.count({p.residue_degree, fr})) << "Frobenius image missing";
    orbits[p.orbit].push_back(&p);
  }
  for (const auto& [id, members] : orbits) {
    for (const auto* m : members) EXPECT_EQ(m->residue_degree, members.front()->residue_degree);
    EXPECT_EQ(members.size(), members.front()->residue_degree);
  }
}

}  // namespace

TEST(Criterion, Examples) {
  EXPECT_TRUE(smooth_at_base_points(CurveSpec::ckr(fq(11), Elem{9}, 5)));
  EXPECT_FALSE(smooth_at_base_points(CurveSpec::ckr(fq(5), Elem{0}, 7)));
  EXPECT_FALSE(smooth_at_base_points(CurveSpec::ck(fq(3), Elem{0})));
  EXPECT_THROW(base_point_criterion(CurveSpec::dk(fq(5), Elem{1})), std::invalid_argument);
  const Field& F3 = fq(3);
  const auto custom = CurveSpec::from_forms(F3, TriForm::variable(F3, Var::x), TriForm::variable(F3, Var::y),
                                            TriForm::variable(F3, Var::z));
  EXPECT_THROW(smooth_at_base_points(custom), std::invalid_argument);
  EXPECT_EQ(base_point_criterion(CurveSpec::ckr(fq(11), Elem{9}, 5)).degree(), 31);
  EXPECT_EQ(base_point_criterion(CurveSpec::dk(fq(4), Elem{1})).degree(), 7);
  EXPECT_EQ(base_point_criterion(CurveSpec::tallini(F3, Elem{1}, Elem{1}, Elem{0})).degree(), 3);
}

TEST(Criterion, MatchesRootSearch) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const Field& F = fq(q);
    const auto [p, m] = prime_power(q);
    const oracle::NaiveField N(p, m);
    for (unsigned r = 2; r <= 5; ++r) {
      for (std::uint64_t k = 0; k < q; ++k) {
        bool root = false;
        for (std::uint64_t x = 0; x < q; ++x) {
          const auto v = N.sub(N.add(N.pow(x, r * r + r + 1), N.mul(k, N.pow(x, r + 1))), 1);
          root = root || v == 0;
        }
        ASSERT_EQ(smooth_at_base_points(CurveSpec::ckr(F, Elem{k}, static_cast<int>(r))), !root)
            << "q=" << q << " r=" << r << " k=" << k;
      }
    }
  }
}

TEST(Criterion, EquivalentToNoSingularFqPoint) {
  // C_k has no singular F_q-point exactly when the criterion has no root
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
    const auto [p, m] = prime_power(q);
    const oracle::NaiveField N(p, m);
    const Field& F = fq(q);
    for (std::uint64_t k = 0; k < q; ++k) {
      const bool none = oracle::ckr_singular_fq_points(N, k, 2).empty();
      ASSERT_EQ(smooth_at_base_points(CurveSpec::ck(F, Elem{k})), none) << "q=" << q << " k=" << k;
    }
  }
}

TEST(Enumeration, Examples) {
  const auto r11 = singular_points_up_to(build_curve(CurveSpec::ckr(fq(11), Elem{9}, 5)), 2);
  ASSERT_EQ(r11.points.size(), 2u);
  EXPECT_EQ(r11.orbit_count(), 1u);
  for (const auto& p : r11.points) EXPECT_EQ(p.residue_degree, 2u);
  EXPECT_TRUE(r11.truncated(1).smooth());

  const auto r5 = singular_points_up_to(build_curve(CurveSpec::ckr(fq(5), Elem{1}, 7)), 2);
  ASSERT_EQ(r5.points.size(), 4u);
  EXPECT_EQ(r5.orbit_count(), 2u);
  for (const auto& p : r5.points) EXPECT_EQ(p.residue_degree, 2u);
  EXPECT_EQ(r5.method, Method::enumeration);
  EXPECT_EQ(r5.bound, 2u);
}

TEST(Enumeration, FqScanMatchesBruteForce) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto [p, m] = prime_power(q);
    const oracle::NaiveField N(p, m);
    const Field& F = fq(q);
    for (unsigned r = 2; r <= 4; ++r) {
      for (std::uint64_t k = 0; k < q; ++k) {
        const auto rep = singular_points_up_to(build_curve(CurveSpec::ckr(F, Elem{k}, static_cast<int>(r))), 1);
        std::set<std::array<std::uint64_t, 3>> got, want;
        for (const auto& pt : rep.points) got.insert({pt.coords[0].v, pt.coords[1].v, pt.coords[2].v});
        for (const auto& pt : oracle::ckr_singular_fq_points(N, k, r)) want.insert(pt);
        ASSERT_EQ(got, want) << "q=" << q << " r=" << r << " k=" << k;
      }
    }
  }
}

TEST(Exact, Examples) {
  const TriForm c11 = build_curve(CurveSpec::ckr(fq(11), Elem{9}, 5));
  const auto ex = exact_singular_locus(c11);
  ASSERT_EQ(ex.points.size(), 2u);
  EXPECT_EQ(ex.orbit_count(), 1u);
  EXPECT_EQ(keys(ex), keys(singular_points_up_to(c11, 2)));
  expect_report_invariants(c11, ex);

  EXPECT_TRUE(exact_singular_locus(build_curve(CurveSpec::ck(fq(3), Elem{2}))).smooth());

  const Field& F5 = fq(5);
  const TriForm conic = TriForm::monomial(F5, F5.one(), 2, 0, 0) + TriForm::monomial(F5, F5.one(), 0, 1, 1);
  EXPECT_TRUE(exact_singular_locus(conic).smooth());
  // nodal cubic y^2 z - x^3 - x^2 z: one node at [0:0:1]
  const TriForm nodal = TriForm::monomial(F5, F5.one(), 0, 2, 1) - TriForm::monomial(F5, F5.one(), 3, 0, 0) -
                        TriForm::monomial(F5, F5.one(), 2, 0, 1);
  const auto n = exact_singular_locus(nodal);
  ASSERT_EQ(n.points.size(), 1u);
  EXPECT_EQ(n.points[0].coords, (std::array<Elem, 3>{Elem{0}, Elem{0}, Elem{1}}));
}

TEST(Exact, AgreesWithEnumerationUpToDegree3) {
  std::vector<TriForm> curves;
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field& F = fq(q);
    for (Elem k : F.elements()) {
      curves.push_back(build_curve(CurveSpec::ck(F, k)));
      curves.push_back(build_curve(CurveSpec::ckr(F, k, 3)));
      if (q % 2 == 0) curves.push_back(build_curve(CurveSpec::dk(F, k)));
    }
  }
  for (const auto& f : curves) {
    const auto ex = exact_singular_locus_up_to(f, 3);
    const auto en = singular_points_up_to(f, 3);
    ASSERT_EQ(keys(ex), keys(en)) << f.to_string();
    expect_report_invariants(f, ex);
    for (std::size_t i = 0; i < ex.points.size(); ++i) EXPECT_EQ(ex.points[i].orbit, en.points[i].orbit);
  }
}

TEST(Exact, FullLocusInvariants) {
  for (std::uint64_t q : {3, 4, 5, 7}) {
    const Field& F = fq(q);
    for (Elem k : F.elements()) {
      const TriForm f = build_curve(CurveSpec::ck(F, k));
      const auto rep = exact_singular_locus(f);
      expect_report_invariants(f, rep);
      EXPECT_EQ(rep.smooth(), is_smooth(f)) << f.to_string();
      EXPECT_EQ(keys(rep.truncated(2)), keys(singular_points_up_to(f, 2)));
    }
  }
}

TEST(Exact, SeedDoesNotChangeResult) {
  const TriForm f = build_curve(CurveSpec::ckr(fq(5), Elem{1}, 7));
  const auto a = exact_singular_locus(f, {64, 0});
  const auto b = exact_singular_locus(f, {64, 12345});
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(Exact, Errors) {
  const Field& F3 = fq(3);
  const TriForm x = TriForm::variable(F3, Var::x), y = TriForm::variable(F3, Var::y);
  EXPECT_THROW(exact_singular_locus(x * x * y), DegenerateLocus);
  EXPECT_THROW(is_smooth(x * x * y), DegenerateLocus);
  const TriForm c11 = build_curve(CurveSpec::ckr(fq(11), Elem{9}, 5));
  EXPECT_THROW(exact_singular_locus(c11, {1, 0}), CapExceeded);
  EXPECT_NO_THROW(exact_singular_locus(c11, {2, 0}));
}

TEST(Smoothness, IsSmoothExamples) {
  const Field& F3 = fq(3);
  EXPECT_TRUE(is_smooth(build_curve(CurveSpec::tallini(F3, Elem{1}, Elem{1}, Elem{0}))));
  for (std::uint64_t q : {2, 4, 8}) {
    const Field& F = fq(q);
    for (Elem k : F.elements()) EXPECT_FALSE(is_smooth(build_curve(CurveSpec::ck(F, k)))) << "q=" << q;
  }
  const Field& F5 = fq(5);
  for (Elem k : F5.elements()) EXPECT_FALSE(is_smooth(build_curve(CurveSpec::ckr(F5, k, 7))));
}

TEST(Smoothness, LinearComponent) {
  const Field& F5 = fq(5);
  const TriForm g = build_curve(CurveSpec::ck(F5, Elem{1}));
  const auto line = has_linear_component(TriForm::variable(F5, Var::x) * g);
  ASSERT_TRUE(line.has_value());
  EXPECT_EQ(*line, (std::array<Elem, 3>{Elem{1}, Elem{0}, Elem{0}}));
  for (std::uint64_t q : {3, 5, 7, 9}) {
    const Field& F = fq(q);
    for (Elem k : F.elements()) EXPECT_FALSE(has_linear_component(build_curve(CurveSpec::ck(F, k))).has_value());
  }
}

TEST(Smoothness, CkRestrictedToLine) {
  // on y = a x + b z the coefficient of x^{q+1} z^2 is 2 a^2 b
  for (std::uint64_t q : {5, 7, 9}) {
    const Field& F = fq(q);
    for (Elem k : F.elements()) {
      const TriForm f = build_curve(CurveSpec::ck(F, k));
      for (Elem a : F.elements()) {
        for (Elem b : F.elements()) {
          const BiPoly h = restrict_to_line(f, {a, F.neg(F.one()), b});
          const Elem want = F.mul(F.from_int(2), F.mul(F.mul(a, a), b));
          ASSERT_EQ(h.coeff(static_cast<int>(q) + 1, 2), want);
        }
      }
    }
  }
}

TEST(Smoothness, Fq2Implication) {
  const Field& F5 = fq(5);
  for (Elem k : F5.elements()) {
    const CurveSpec spec = CurveSpec::ck(F5, k);
    const auto v = check_fq2_implication(build_curve(spec));
    EXPECT_EQ(v.degree, 8);
    EXPECT_TRUE(v.in_range);
    EXPECT_TRUE(v.consistent);
    EXPECT_EQ(v.no_singular_fq_point, smooth_at_base_points(spec));
  }
  const auto out = check_fq2_implication(build_curve(CurveSpec::ckr(fq(11), Elem{9}, 5)));
  EXPECT_FALSE(out.in_range);
  EXPECT_TRUE(out.no_singular_fq_point);
  EXPECT_TRUE(out.no_linear_component);
  EXPECT_FALSE(out.no_singular_fq2_point);
  EXPECT_TRUE(out.consistent);
  EXPECT_THROW(check_fq2_implication(TriForm::variable(F5, Var::x)), std::invalid_argument);
}

TEST(Report, Json) {
  const auto rep = exact_singular_locus(build_curve(CurveSpec::ckr(fq(11), Elem{9}, 5)));
  const auto j = nlohmann::json::parse(rep.to_json());
  EXPECT_EQ(j["method"], "exact");
  EXPECT_EQ(j["smooth"], false);
  EXPECT_EQ(j["orbits"], 1);
  ASSERT_EQ(j["points"].size(), 2u);
  EXPECT_EQ(j["points"][0]["residue_degree"], 2);
}
