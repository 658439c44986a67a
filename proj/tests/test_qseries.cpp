#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "borwein/errors.hpp"
#include "borwein/qseries.hpp"
#include "oracle.hpp"

using namespace borwein;

namespace {

LaurentPoly Q(const char* s) { return parse_laurent(s, VarSet{Var::q}); }

}  // namespace

TEST(Pochhammer, Unrolling) {
  EXPECT_EQ(qpochhammer_spec(0, 1, 3, 2), (std::vector<BinomialFactor>{{0, 1}, {0, 4}}));
  EXPECT_EQ(qpochhammer_spec(1, -1, -3, 2), (std::vector<BinomialFactor>{{1, -1}, {1, -4}}));
  EXPECT_TRUE(qpochhammer_spec(2, 5, 7, 0).empty());
  EXPECT_THROW(qpochhammer_spec(0, 1, 1, -1), BadParameters);
}

TEST(Specs, Conj1) {
  EXPECT_TRUE(conj1_spec(3, 0).factors.empty());
  EXPECT_EQ(expand(conj1_spec(3, 0), 4).slice(0), Q("1"));
  const auto s = conj1_spec(2, 3);
  EXPECT_EQ(s.factors.size(), 2u * 3 + 2 * 4 * 3);
  EXPECT_EQ(s.p_degree(), 2 * 2 * 3 * 2 * 3 / 2);
  EXPECT_EQ(s.provenance.family, "conj1");
}

TEST(Specs, Conj3Reductions) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) EXPECT_TRUE(conj3_spec(m, m, n, n, n, 1).same_factors(conj1_spec(m, n)));
  for (int K = 1; K <= 5; ++K) {
    ProductSpec pair{{}, qpochhammer_spec(0, K, 2 * K + 1, 4)};
    const auto more = qpochhammer_spec(0, K + 1, 2 * K + 1, 4);
    pair.factors.insert(pair.factors.end(), more.begin(), more.end());
    EXPECT_TRUE(conj3_spec(0, 0, 4, 2, 3, K).same_factors(pair));
  }
  const auto s = conj3_spec(1, 1, 1, 1, 1, 2);
  ASSERT_EQ(s.factors.size(), 6u);
  std::vector<int> qs;
  for (const auto& f : s.factors) qs.push_back(f.q_exp);
  std::sort(qs.begin(), qs.end());
  EXPECT_EQ(qs, (std::vector<int>{-3, -2, 2, 2, 3, 3}));
  EXPECT_EQ(conj3_spec(3, 2, 4, 5, 6, 3).factors.size(), 2u * 4 + 3 * 2 * 5 + 2 * 2 * 6);
  EXPECT_THROW(conj3_spec(1, 1, 1, 1, 1, 0), BadParameters);
  EXPECT_THROW(conj3_spec(-1, 1, 1, 1, 1, 2), BadParameters);
  EXPECT_TRUE(conj2_spec(2, 1, 3, 2, 1).same_factors(conj3_spec(2, 1, 3, 2, 1, 1)));
}

TEST(Specs, Iks) {
  EXPECT_EQ(full_product(iks_spec(2, 5, 1)).with_vars(VarSet{Var::q}),
            Q("1 - q^2 - q^3 + q^5"));
  EXPECT_THROW(iks_spec(2, 4, 1), BadParameters);
  EXPECT_THROW(iks_spec(3, 5, 1), BadParameters);
}

TEST(Specs, GeneralMatchesConj3Diagonal) {
  for (int K = 1; K <= 4; ++K)
    for (int m = 0; m <= 2; ++m)
      EXPECT_TRUE(general_spec(m, 3, K, K).same_factors(conj3_spec(m, m, 3, 3, 3, K)));
}

TEST(Expand, MatchesOracle) {
  const std::vector<ProductSpec> specs{conj1_spec(1, 2), conj1_spec(2, 2), conj3_spec(2, 3, 2, 1, 2, 2),
                                       conj3_spec(0, 1, 3, 0, 2, 4), iks_spec(3, 8, 4)};
  for (const auto& s : specs) {
    const auto ref = oracle::product(s.factors);
    const auto e = expand(s, s.p_degree());
    for (std::int64_t k = 0; k <= s.p_degree(); ++k) EXPECT_EQ(e.slice(k), oracle::slice(ref, k));
    EXPECT_EQ(full_product(s), oracle::to_poly(ref));
  }
}

TEST(Expand, TruncationSound) {
  for (const auto& s : {conj1_spec(2, 3), conj3_spec(3, 2, 2, 2, 3, 3)}) {
    const auto full = expand(s, s.p_degree());
    for (std::int64_t kmax : {0, 1, 4, 7}) {
      const auto t = expand(s, kmax);
      EXPECT_EQ(t, expand_reference(s, kmax));
      for (std::int64_t k = 0; k <= kmax; ++k) EXPECT_EQ(t.slice(k), full.slice(k));
    }
  }
}

TEST(Expand, OrderIndependent) {
  auto s = conj1_spec(2, 3);
  const auto base = expand(s, 10);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 5; ++it) {
    std::shuffle(s.factors.begin(), s.factors.end(), rng);
    EXPECT_EQ(expand(s, 10), base);
    EXPECT_EQ(expand_reference(s, 10), base);
  }
}

TEST(Expand, DegreeBound) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const auto s = conj1_spec(m, n);
      const auto d = s.p_degree();
      EXPECT_EQ(d, std::int64_t(m) * (m + 1) * 2 * n);
      const auto e = expand(s, d + 3);
      EXPECT_FALSE(e.slice(d).is_zero());
      for (std::int64_t k = d + 1; k <= d + 3; ++k) EXPECT_TRUE(e.slice(k).is_zero());
    }
}

TEST(Expand, Basics) {
  EXPECT_EQ(expand(conj1_spec(0, 1), 0).slice(0), Q("1 - q - q^2 + q^3"));
  const auto e = expand(conj1_spec(1, 2), 4);
  EXPECT_EQ(e.kmax(), 4);
  EXPECT_THROW(e.slice(5), std::out_of_range);
  EXPECT_THROW(expand(conj1_spec(1, 1), -1), BadParameters);
  ProductSpec neg{{"custom", {}}, {{-1, 2}}};
  EXPECT_THROW(expand(neg, 2), BadParameters);
}
