#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "planefill/embedding.hpp"
#include "planefill/field.hpp"

using namespace planefill;

namespace {

const std::vector<std::pair<std::uint64_t, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {2, 6}, {3, 4}};

}  // namespace

TEST(Field, ModulusExamples) {
  EXPECT_EQ(make_field(2, 2).modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(make_field(3, 2).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_TRUE(make_field(7, 1).modulus().empty());
  EXPECT_TRUE(make_field(7, 1).is_prime_field());
}

TEST(Field, ModulusMatchesBruteForceSelection) {
  for (auto [p, m] : kSmallFields) {
    if (m == 1) continue;
    const Field& F = make_field(p, m);
    const auto expected = oracle::smallest_irreducible(p, m);
    EXPECT_EQ(F.modulus(), expected) << "p=" << p << " m=" << m;
    EXPECT_TRUE(is_irreducible_mod_p(F.modulus(), p));
    EXPECT_EQ(F.size(), oracle::NaiveField(p, m).q);
  }
}

TEST(Field, Interned) {
  EXPECT_EQ(&make_field(3, 2), &make_field(3, 2));
  EXPECT_EQ(&parse_field("3^2"), &make_field(3, 2));
  EXPECT_EQ(&parse_field("9"), &make_field(3, 2));
  EXPECT_EQ(&parse_field("7"), &make_field(7, 1));
}

TEST(Field, Errors) {
  EXPECT_THROW(make_field(4, 1), std::invalid_argument);
  EXPECT_THROW(make_field(3, 0), std::invalid_argument);
  EXPECT_THROW(make_field(2, 30), CapExceeded);
  EXPECT_THROW(parse_field("6"), std::invalid_argument);
  EXPECT_THROW(parse_field("x"), std::invalid_argument);
  EXPECT_THROW(make_field(5, 1).inv(Elem{0}), std::domain_error);
  EXPECT_NO_THROW(make_field(2, 30, 1ull << 31));
}

TEST(Field, ArithmeticExamples) {
  const Field& F7 = make_field(7, 1);
  EXPECT_EQ(F7.inv(Elem{3}), Elem{5});
  const Field& F4 = make_field(2, 2);
  const Elem t = F4.generator();
  EXPECT_EQ(F4.mul(t, F4.add(t, F4.one())), F4.one());
  const Field& F9 = make_field(3, 2);
  const Elem u = F9.generator();
  EXPECT_EQ(F9.pow(u, 3), F9.neg(u));
}

TEST(Field, AgreesWithNaiveArithmeticExhaustively) {
  for (auto [p, m] : kSmallFields) {
    const Field& F = make_field(p, m);
    const oracle::NaiveField N(p, m);
    for (std::uint64_t a = 0; a < F.size(); ++a) {
      for (std::uint64_t b = 0; b < F.size(); ++b) {
        ASSERT_EQ(F.add(Elem{a}, Elem{b}).v, N.add(a, b));
        ASSERT_EQ(F.sub(Elem{a}, Elem{b}).v, N.sub(a, b));
        ASSERT_EQ(F.mul(Elem{a}, Elem{b}).v, N.mul(a, b));
      }
      if (a != 0) ASSERT_EQ(F.inv(Elem{a}).v, N.inv(a));
    }
  }
}

TEST(Field, AxiomsOnAllTriples) {
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}, {5, 1}, {2, 3}, {7, 1}}) {
    const Field& F = make_field(p, m);
    const auto E = F.elements();
    for (Elem a : E) {
      for (Elem b : E) {
        ASSERT_EQ(F.add(a, b), F.add(b, a));
        ASSERT_EQ(F.mul(a, b), F.mul(b, a));
        for (Elem c : E) {
          ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
      ASSERT_EQ(F.add(a, F.neg(a)), F.zero());
      if (a.v) ASSERT_EQ(F.mul(a, F.inv(a)), F.one());
    }
  }
}

TEST(Field, FermatAndCyclicGroupUpTo81) {
  for (std::uint64_t q = 2; q <= 81; ++q) {
    const auto [p, m] = prime_power(q);
    if (p == 0) continue;
    const Field& F = make_field(p, m);
    for (Elem a : F.elements()) ASSERT_EQ(F.pow(a, q), a) << "q=" << q;
    bool found = false;
    for (Elem g : F.elements()) {
      if (g.v == 0) continue;
      // exact order q-1: g^((q-1)/l) != 1 for each prime l | q-1
      bool generator = true;
      std::uint64_t n = q - 1;
      for (std::uint64_t l = 2; l <= n; ++l) {
        if (n % l) continue;
        while (n % l == 0) n /= l;
        if (F.pow(g, (q - 1) / l) == F.one()) generator = false;
      }
      if (generator) {
        found = true;
        break;
      }
    }
    EXPECT_TRUE(found) << "q=" << q;
  }
}

TEST(Field, Enumeration) {
  const Field& F2 = make_field(2, 1);
  EXPECT_EQ(F2.elements(), (std::vector<Elem>{Elem{0}, Elem{1}}));
  const Field& F4 = make_field(2, 2);
  const auto e4 = F4.elements();
  EXPECT_EQ(std::set<Elem>(e4.begin(), e4.end()).size(), 4u);
  const Field& F9 = make_field(3, 2);
  int subfield = 0;
  for (Elem a : F9.elements()) {
    const bool no_t = F9.coeffs(a)[1] == 0;
    EXPECT_EQ(no_t, F9.pow(a, 3) == a);
    subfield += no_t;
  }
  EXPECT_EQ(subfield, 3);
}

TEST(Field, Frobenius) {
  const Field& F9 = make_field(3, 2);
  EXPECT_EQ(F9.frobenius(F9.generator(), 3, 1), F9.neg(F9.generator()));
  const Field& F3 = make_field(3, 1);
  for (Elem a : F3.elements()) EXPECT_EQ(F3.frobenius(a, 3, 1), a);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 4}, {5, 2}}) {
    const Field& F = make_field(p, m);
    const std::uint64_t q = p;
    for (Elem a : F.elements()) {
      ASSERT_EQ(F.frobenius(F.frobenius(a, q, 1), q, 1), F.frobenius(a, q, 2));
      ASSERT_EQ(F.frobenius(a, q, 1), F.pow(a, q));
      ASSERT_EQ(F.frobenius(a, q, 0), a);
    }
  }
}

TEST(Field, GenericRepresentationMatchesTables) {
  // 2^24 is above the table limit; compare against a product computed in a
  // subfield embedded into it.
  const Field& big = make_field(2, 24, 1ull << 25);
  const Field& small = make_field(2, 8);
  const Embedding& e = embedding(small, big);
  for (std::uint64_t a = 1; a < 256; a += 7) {
    for (std::uint64_t b = 1; b < 256; b += 11) {
      ASSERT_EQ(e(small.mul(Elem{a}, Elem{b})), big.mul(e(Elem{a}), e(Elem{b})));
      ASSERT_EQ(e(small.add(Elem{a}, Elem{b})), big.add(e(Elem{a}), e(Elem{b})));
    }
    ASSERT_EQ(big.mul(e(Elem{a}), big.inv(e(Elem{a}))), big.one());
  }
  const Field& odd = make_field(3, 15, 1ull << 24);
  const Elem g = odd.generator();
  EXPECT_EQ(odd.pow(g, odd.size() - 1), odd.one());
  EXPECT_EQ(odd.mul(odd.inv(g), g), odd.one());
}

TEST(Embedding, HomomorphismAndFixedField) {
  const Field& F4 = make_field(2, 2);
  const Field& F16 = make_field(2, 4);
  const Embedding& e = embedding(F4, F16);
  EXPECT_EQ(e(F4.zero()), F16.zero());
  EXPECT_EQ(e(F4.one()), F16.one());
  for (Elem a : F4.elements()) {
    for (Elem b : F4.elements()) {
      EXPECT_EQ(e(F4.add(a, b)), F16.add(e(a), e(b)));
      EXPECT_EQ(e(F4.mul(a, b)), F16.mul(e(a), e(b)));
    }
    EXPECT_EQ(F16.frobenius(e(a), 4, 1), e(a));
  }
  // frobenius-fixedness identifies exactly the image
  std::set<Elem> image;
  for (Elem a : F4.elements()) image.insert(e(a));
  for (Elem b : F16.elements()) {
    EXPECT_EQ(F16.frobenius(b, 4, 1) == b, image.count(b) == 1);
    EXPECT_EQ(e.preimage(b).has_value(), image.count(b) == 1);
    if (auto a = e.preimage(b)) EXPECT_EQ(e(*a), b);
  }
  EXPECT_THROW(embedding(make_field(2, 3), F16), std::invalid_argument);
  EXPECT_EQ(&embedding(F4, F16), &e);
}

TEST(Embedding, CompatibleOverBase) {
  // F_4 -> F_16 -> F_256 must restrict to the default F_4 -> F_256.
  const Field& F4 = make_field(2, 2);
  const Field& F16 = make_field(2, 4);
  const Field& F256 = make_field(2, 8);
  const Embedding& mid = embedding_over(F4, F16, F256);
  for (Elem a : F4.elements()) {
    EXPECT_EQ(mid(embedding(F4, F16)(a)), embedding(F4, F256)(a));
  }
  const Field& F9 = make_field(3, 2);
  const Field& F81 = make_field(3, 4);
  const Field& F3_8 = make_field(3, 8);
  const Embedding& m2 = embedding_over(F9, F81, F3_8);
  for (Elem a : F9.elements()) EXPECT_EQ(m2(embedding(F9, F81)(a)), embedding(F9, F3_8)(a));
}
