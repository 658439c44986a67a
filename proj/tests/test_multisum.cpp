#include <gtest/gtest.h>

#include <set>

#include "borwein/analysis.hpp"
#include "borwein/errors.hpp"
#include "borwein/multisum.hpp"
#include "borwein/qseries.hpp"
#include "oracle.hpp"

using namespace borwein;

namespace {

LaurentPoly Q(const char* s) { return parse_laurent(s, VarSet{Var::q}); }

}  // namespace

TEST(Partitions, SmallCases) {
  EXPECT_EQ(enumerate_partitions(1, 1, 0), (std::vector<PartitionSeq>{{{0}}}));
  EXPECT_EQ(enumerate_partitions(1, 1, 1), (std::vector<PartitionSeq>{{{-1}}}));
  EXPECT_EQ(enumerate_partitions(1, 1, 2), (std::vector<PartitionSeq>{{{1}}}));
  EXPECT_EQ(enumerate_partitions(1, 1, std::nullopt).size(), 3u);
}

TEST(Partitions, StarsAndBars) {
  std::size_t total = 0;
  for (int r = 0; r < 3; ++r) total += enumerate_partitions(5, 6, r).size();
  EXPECT_EQ(total, 6188u);
  const auto all = enumerate_partitions(5, 6, std::nullopt);
  EXPECT_EQ(all.size(), 6188u);
  std::set<std::vector<std::int32_t>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_TRUE(all[i].is_non_increasing());
    seen.insert(all[i].parts);
    if (i) EXPECT_LT(all[i - 1].parts, all[i].parts);
  }
  EXPECT_EQ(seen.size(), all.size());
}

TEST(QBinomial, Examples) {
  EXPECT_EQ(q_binomial(2, 1), Q("1 + q"));
  EXPECT_EQ(q_binomial(4, 2), Q("1 + q + 2*q^2 + q^3 + q^4"));
  EXPECT_TRUE(q_binomial(3, -1).is_zero());
  EXPECT_TRUE(q_binomial(3, 4).is_zero());
}

TEST(QBinomial, MatchesPartitionCount) {
  for (int mm = 0; mm <= 12; ++mm)
    for (int j = 0; j <= mm; ++j) {
      const auto b = q_binomial(mm, j);
      EXPECT_EQ(b, oracle::univariate(oracle::gaussian_by_partitions(mm, j)));
      EXPECT_EQ(b, q_binomial(mm, mm - j));
      const auto r = b.range(Var::q);
      ASSERT_TRUE(r);
      EXPECT_EQ(r->max, j * (mm - j));
    }
}

TEST(Andrews, SmallCases) {
  auto abc = andrews_ABC(1);
  EXPECT_EQ(abc.A, Q("1 + q"));
  EXPECT_EQ(abc.B, Q("1"));
  EXPECT_EQ(abc.C, Q("1"));
  abc = andrews_ABC(0);
  EXPECT_EQ(abc.A, Q("1"));
  EXPECT_TRUE(abc.B.is_zero());
  EXPECT_TRUE(abc.C.is_zero());
}

TEST(Andrews, MatchesOracleProduct) {
  for (int n = 0; n <= 10; ++n) {
    const auto f = oracle::slice(oracle::product(conj1_spec(0, n).factors), 0);
    const auto b = tridissect_borwein(f);
    const auto abc = andrews_ABC(n);
    EXPECT_EQ(abc.A, b.A) << n;
    EXPECT_EQ(abc.B, b.B) << n;
    EXPECT_EQ(abc.C, b.C) << n;
  }
}

TEST(ResidueSums, SingleTerms) {
  const auto t0 = theorem_term({0, 1, 0}, {{0}});
  EXPECT_TRUE(t0.equals({Q("1 + q"), Q("1")}));
  const auto t1 = theorem_term({0, 1, 1}, {{-1}});
  EXPECT_TRUE(t1.equals({Q("-1"), Q("1")}));
  const auto t2 = theorem_term({0, 1, 2}, {{1}});
  EXPECT_TRUE(t2.equals({Q("-1"), Q("1")}));
  EXPECT_EQ(MultisumParams({0, 1, 1}).prefactor_sign(), -1);
  EXPECT_EQ(MultisumParams({0, 1, 2}).prefactor_sign(), -1);
  EXPECT_EQ(MultisumParams({0, 1, 0}).prefactor_sign(), 1);
  EXPECT_THROW(theorem_term_factored({0, 1, 0}, {{1}}), NonIntegralExponent);
}

TEST(ResidueSums, MZeroIsAndrews) {
  for (int n = 0; n <= 4; ++n) {
    const auto abc = andrews_ABC(n);
    const LaurentPoly want[3] = {abc.A, abc.B, abc.C};
    for (int l = 0; l < 3; ++l)
      EXPECT_EQ(theorem_multisum({0, n, l}).with_vars(VarSet{Var::q}), want[l]) << n << " " << l;
  }
}

TEST(ResidueSums, MatchesOracleDissection) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= (m == 1 ? 3 : 2); ++n) {
      const auto f = oracle::to_poly(oracle::product(conj1_spec(m, n).factors));
      const auto parts = dissect_components(f);
      for (int l = 0; l < 3; ++l) {
        const auto F = theorem_multisum({m, n, l});
        EXPECT_EQ(F, parts[l]) << m << " " << n << " " << l;
        const auto r = F.range(Var::p);
        ASSERT_TRUE(r);
        EXPECT_GE(r->min, 0);
        EXPECT_EQ(r->max, 2 * m * (m + 1) * n);
      }
    }
}

TEST(ResidueSums, ParallelAndUnreducedAgree) {
  const MultisumParams prm{1, 3, 1};
  const auto base = theorem_multisum(prm);
  EXPECT_EQ(theorem_multisum(prm, {2, true}), base);
  EXPECT_EQ(theorem_multisum(prm, {1, false}), base);
}

TEST(Kaneko, Examples) {
  const VarSet zqt{Var::z, Var::q, Var::t};
  EXPECT_EQ(kaneko_product_lhs(1, 1), parse_laurent("1 - z - z^-1*q + q", zqt));
  EXPECT_EQ(kaneko_product_lhs(3, 0), LaurentPoly::constant(1, zqt));
  EXPECT_EQ(kaneko_product_lhs(2, 1),
            parse_laurent("1 - z", zqt) * parse_laurent("1 - z^-1*q", zqt) *
                parse_laurent("1 - z*t^-1", zqt) * parse_laurent("1 - z^-1*q*t", zqt));
  EXPECT_EQ(kaneko_sum_rhs(1, 1), parse_laurent("1 - z - z^-1*q + q", zqt));
  EXPECT_EQ(kaneko_sum_rhs(1, 0), LaurentPoly::constant(1, zqt));
  for (int nv = 1; nv <= 3; ++nv)
    for (int N = 0; N <= 2; ++N) EXPECT_EQ(kaneko_sum_rhs(nv, N), kaneko_product_lhs(nv, N));
}

TEST(General, MatchesProduct) {
  EXPECT_EQ(general_multisum(1, 2, 1, 1), full_product(general_spec(1, 2, 1, 1)));
  EXPECT_EQ(general_multisum(1, 2, 1, 2), full_product(general_spec(1, 2, 1, 2)));
  EXPECT_EQ(general_multisum(1, 1, 2, 2), full_product(general_spec(1, 1, 2, 2)));
}

TEST(Dense, BinomialDivision) {
  auto d = DenseBivariate::from_laurent(parse_laurent("1 - p*q^2", VarSet{Var::p, Var::q}), Var::p, Var::q);
  d.mul_binomials({{1, 0}, {0, 3}, {2, 1}});
  EXPECT_TRUE(d.try_div_binomial(0, 3));
  EXPECT_TRUE(d.try_div_binomial(1, 2));
  const auto before = d.to_laurent(Var::p, Var::q);
  EXPECT_FALSE(d.try_div_binomial(3, 1));
  EXPECT_EQ(d.to_laurent(Var::p, Var::q), before);
  const auto want = parse_laurent("1 - p", VarSet{Var::p, Var::q}) * parse_laurent("1 - p^2*q", VarSet{Var::p, Var::q});
  EXPECT_EQ(before, want);
}
