#include <gtest/gtest.h>

#include <numeric>

#include "borwein/analysis.hpp"
#include "borwein/errors.hpp"
#include "borwein/qseries.hpp"
#include "oracle.hpp"

using namespace borwein;

namespace {

LaurentPoly Q(const char* s) { return parse_laurent(s, VarSet{Var::q}); }

}  // namespace

TEST(Dissect, Examples) {
  const auto d = dissect(Q("1 - q - q^2 + q^3"), 3);
  ASSERT_EQ(d.components.size(), 3u);
  EXPECT_EQ(d.components[0], Q("1 + q"));
  EXPECT_EQ(d.components[1], Q("-1"));
  EXPECT_EQ(d.components[2], Q("-1"));
  const auto f = Q("q^-4 + 3*q^7 - q^2");
  EXPECT_EQ(dissect(f, 1).components[0], f);
  EXPECT_EQ(dissect(Q("q^-1"), 3).components[2], Q("q^-1"));
}

TEST(Dissect, Recombines) {
  const auto f = expand(conj3_spec(2, 2, 2, 2, 2, 2), 4).slice(3);
  for (int M : {1, 2, 3, 5, 7}) EXPECT_EQ(dissect(f, M).recombine(), f);
}

TEST(Borwein, Tridissect) {
  auto b = tridissect_borwein(Q("1 - q - q^2 + q^3"));
  EXPECT_EQ(b.A, Q("1 + q"));
  EXPECT_EQ(b.B, Q("1"));
  EXPECT_EQ(b.C, Q("1"));
  b = tridissect_borwein(Q("1"));
  EXPECT_EQ(b.A, Q("1"));
  EXPECT_TRUE(b.B.is_zero());
  EXPECT_TRUE(b.C.is_zero());
}

TEST(Borwein, PlainProductsSatisfyCondition) {
  for (int n = 0; n <= 15; ++n) EXPECT_TRUE(check_borwein(expand(conj1_spec(0, n), 0).slice(0)).empty()) << n;
  EXPECT_TRUE(check_borwein(Q("1 + q^3")).empty());
  const auto v = check_borwein(Q("q"));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].M, 1);
  EXPECT_EQ(v[0].coeff, 1);
  EXPECT_EQ(v[0].expected, Sign::nonpos);
}

TEST(Pattern, Examples) {
  EXPECT_TRUE(check_pattern(Q("1 - q - q^2 + q^3"), 1).empty());
  EXPECT_TRUE(check_pattern(Q("1 + q - q^2 - q^3 + q^4"), 2).empty());
  EXPECT_EQ(check_pattern(Q("q^2"), 2).size(), 1u);
  EXPECT_EQ(SignPattern::for_K(2).render(), "++--+");
  EXPECT_EQ(SignPattern::for_K(3).render(), "++----+");
  EXPECT_EQ(SignPattern::for_K(1).render(), "+--");
}

TEST(Pattern, KOneIsBorwein) {
  for (int k = 0; k <= 6; ++k) {
    const auto f = expand(conj1_spec(1, 2), 6).slice(k);
    EXPECT_EQ(check_pattern(f, 1, k).size(), check_borwein(f, k).size());
  }
}

TEST(Iks, OddPatterns) {
  EXPECT_EQ(SignPattern::iks_odd(1, 3).render(), SignPattern::for_K(1).render());
  EXPECT_THROW(SignPattern::iks_odd(2, 6), BadParameters);
  EXPECT_TRUE(check_iks_odd(expand(iks_spec(2, 5, 6), 0).slice(0), 2, 5).empty());
}

TEST(Iks, EvenK) {
  EXPECT_TRUE(check_iks_even(Q("1 - q - q^3 + q^4")).empty());
  EXPECT_TRUE(check_iks_even(Q("1")).empty());
  EXPECT_EQ(check_iks_even(Q("q")).size(), 1u);
  for (int K = 2; K <= 8; K += 2)
    for (int a = 1; 2 * a < K; ++a) {
      if (std::gcd(a, K) != 1) continue;
      for (int n = 1; n <= 8; ++n) EXPECT_TRUE(check_iks_even(expand(iks_spec(a, K, n), 0).slice(0)).empty());
    }
}

TEST(Reversal, HoldsSmall) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 4; ++n) {
      const auto s = conj1_spec(m, n);
      const auto e = expand(s, s.p_degree());
      for (std::int64_t k = 0; k <= s.p_degree(); ++k) {
        const auto b = tridissect_borwein(e.slice(k));
        EXPECT_TRUE(reversal_holds(b.B, b.C, n)) << m << " " << n << " " << k;
      }
    }
  EXPECT_FALSE(reversal_holds(Q("1"), Q("q"), 1));
}

TEST(Threshold, TableEntries) {
  EXPECT_EQ(find_threshold(1, 5, 25).N, 2);
  EXPECT_EQ(find_threshold(2, 15, 25).N, 23);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(find_threshold(1, k, 10).N, 0);
  EXPECT_EQ(threshold_from_passes({true, false, true, true}), 2);
  EXPECT_EQ(threshold_from_passes({true, true}), 0);
  EXPECT_FALSE(threshold_from_passes({true, false}));
}

TEST(Threshold, RowAgreesWithSingle) {
  const auto row = find_threshold_row(1, 8, 12, 1, Family::conj1, 2);
  ASSERT_EQ(row.size(), 9u);
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(row[k].N, find_threshold(1, k, 12).N) << k;
}

TEST(Threshold, SlicePassesOracle) {
  for (int n = 0; n <= 4; ++n) {
    const auto got = slice_passes(Family::conj1, 1, n, 8, 1);
    const auto ref = oracle::product(conj1_spec(1, n).factors);
    for (int k = 0; k <= 8; ++k) {
      const auto s = oracle::slice(ref, k);
      EXPECT_EQ(got[k], n == 0 || (!s.is_zero() && check_pattern(s, 1, k).empty()));
    }
  }
}

TEST(Counterexamples, Reproduced) {
  const auto r = reproduce_counterexamples();
  EXPECT_TRUE(r.refinement_reproduced());
  EXPECT_TRUE(r.pattern_reproduced());
  EXPECT_TRUE(r.control_violations.empty());
  for (const auto& v : r.refinement_violations) EXPECT_EQ(v.k, 40);
}

TEST(Counterexamples, SanityWithoutLongFactor) {
  auto fs = qpochhammer_spec(0, 1, 3, 1);
  for (auto f : qpochhammer_spec(1, 1, 3, 1)) fs.push_back(f);
  for (auto f : qpochhammer_spec(1, 2, 3, 1)) fs.push_back(f);
  fs.push_back({0, 2});
  const auto e = expand(ProductSpec{{"custom", {}}, fs}, 2);
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(check_borwein(e.slice(k), k).empty()) << k;
}
