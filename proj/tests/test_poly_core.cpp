#include <gtest/gtest.h>

#include <random>

#include "borwein/errors.hpp"
#include "borwein/json_io.hpp"
#include "borwein/laurent_poly.hpp"
#include "borwein/modular.hpp"

using namespace borwein;

namespace {

const VarSet kQ{Var::q};
const VarSet kPQ{Var::p, Var::q};

LaurentPoly P(const char* s, VarSet v = kQ) { return parse_laurent(s, v); }

LaurentPoly random_poly(std::mt19937_64& rng, VarSet vars, int terms) {
  std::uniform_int_distribution<int> e(-4, 4), c(-9, 9);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Term t;
    for (Var v : vars.list()) exp_of(t.exps, v) = e(rng);
    t.coeff = c(rng);
    ts.push_back(t);
  }
  return LaurentPoly::from_terms(vars, ts);
}

}  // namespace

TEST(Laurent, AddExamples) {
  EXPECT_EQ(P("1 - q") + P("q"), P("1"));
  EXPECT_EQ(LaurentPoly(kQ) + P("1 - q^2"), P("1 - q^2"));
  EXPECT_EQ(P("q^-1") + P("q^-1"), P("2*q^-1"));
  EXPECT_TRUE((P("1 - q") + P("q - 1")).is_zero());
}

TEST(Laurent, MulExamples) {
  EXPECT_EQ(P("1 - q") * P("1 + q"), P("1 - q^2"));
  EXPECT_EQ(P("1 - q") * P("1 - q^2"), P("1 - q - q^2 + q^3"));
  EXPECT_EQ(P("q^-2") * P("q^2"), P("1"));
}

TEST(Laurent, TruncatedMul) {
  const auto a = parse_laurent("1 + p", kPQ);
  EXPECT_EQ(mul_truncated(a, a, Var::p, 1), parse_laurent("1 + 2*p", kPQ));
}

TEST(Laurent, ExactDivExamples) {
  EXPECT_EQ(exact_div(P("1 - q^2"), P("1 - q")), P("1 + q"));
  const VarSet t{Var::t};
  EXPECT_EQ(exact_div(parse_laurent("1 - t^3", t), parse_laurent("1 - t", t)),
            parse_laurent("1 + t + t^2", t));
  const auto q4 = P("1 - q") * P("1 - q^2") * P("1 - q^3") * P("1 - q^4");
  const auto q2 = P("1 - q") * P("1 - q^2");
  EXPECT_EQ(exact_div(q4, q2 * q2), P("1 + q + 2*q^2 + q^3 + q^4"));
}

TEST(Laurent, ExactDivRejects) {
  EXPECT_THROW(exact_div(P("1 + q^2"), P("1 - q")), NotDivisible);
  try {
    exact_div(P("q^3 + 1"), P("q - 1"));
    FAIL();
  } catch (const NotDivisible& e) {
    EXPECT_FALSE(e.leading_term().empty());
  }
}

TEST(Laurent, EvalModExamples) {
  EXPECT_EQ(eval_mod(P("1 - q"), {{Var::q, 2}}, 101), 100u);
  EXPECT_EQ(eval_mod(P("q^-1"), {{Var::q, 2}}, 5), 3u);
  EXPECT_THROW(eval_mod(P("q^-1"), {{Var::q, 5}}, 5), NonInvertiblePoint);
}

TEST(Laurent, SubstitutePower) {
  EXPECT_EQ(substitute_power(P("1 + q"), Var::q, 3), P("1 + q^3"));
  EXPECT_EQ(substitute_power(P("1 + q"), Var::q, -1), P("1 + q^-1"));
}

TEST(Laurent, CoefficientExtraction) {
  const auto f = parse_laurent("1 + p*q - 3*p*q^-2 + p^2", kPQ);
  EXPECT_EQ(coefficient(f, Var::p, 1), P("q - 3*q^-2"));
  EXPECT_TRUE(coefficient(f, Var::p, 5).is_zero());
}

TEST(Laurent, CanonicalOrder) {
  const auto f = parse_laurent("q + p + 1 + p*q", kPQ);
  ASSERT_EQ(f.size(), 4u);
  for (std::size_t i = 1; i < f.size(); ++i) EXPECT_GT(f.terms()[i - 1].exps, f.terms()[i].exps);
  EXPECT_EQ(to_string(P("q^2 - 1 - q")), "-1 - q + q^2");
}

TEST(Laurent, RingAxiomsRandom) {
  std::mt19937_64 rng(7);
  const VarSet vars{Var::p, Var::q, Var::z};
  for (int it = 0; it < 40; ++it) {
    const auto a = random_poly(rng, vars, 6), b = random_poly(rng, vars, 5),
               c = random_poly(rng, vars, 4);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Laurent, ExactDivCancelsRandom) {
  std::mt19937_64 rng(11);
  const VarSet vars{Var::q, Var::t};
  for (int it = 0; it < 30; ++it) {
    const auto a = random_poly(rng, vars, 5), b = random_poly(rng, vars, 3);
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_div(a * b, b), a);
  }
}

TEST(Laurent, EvalModHomomorphism) {
  std::mt19937_64 rng(13);
  const VarSet vars{Var::p, Var::q};
  const std::uint64_t prime = kDefaultPrime;
  ModField F(prime);
  for (int it = 0; it < 30; ++it) {
    const auto a = random_poly(rng, vars, 6), b = random_poly(rng, vars, 6);
    const std::map<Var, std::int64_t> pt{{Var::p, std::int64_t(rng() >> 3)},
                                         {Var::q, std::int64_t(rng() >> 3)}};
    const auto ea = eval_mod(a, pt, prime), eb = eval_mod(b, pt, prime);
    EXPECT_EQ(eval_mod(a + b, pt, prime), F.add(ea, eb));
    EXPECT_EQ(eval_mod(a * b, pt, prime), F.mul(ea, eb));
  }
}

TEST(Laurent, BigCoefficients) {
  auto f = P("1 + q");
  LaurentPoly g = LaurentPoly::constant(1, kQ);
  for (int i = 0; i < 80; ++i) g *= f;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 80, 40);
  EXPECT_EQ(g.coeff(Var::q, 40), c);
}

TEST(Laurent, ParseRoundTrip) {
  for (const char* s : {"0", "1", "-1 - q + q^2", "2*p*q^-1", "q^(-3)", "3q"}) {
    const auto f = parse_laurent(s, kPQ);
    EXPECT_EQ(parse_laurent(to_string(f), kPQ), f) << s;
  }
  EXPECT_THROW(parse_laurent("1 + + q"), ParseError);
}

TEST(Json, LaurentRoundTrip) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 20; ++it) {
    const auto f = random_poly(rng, VarSet{Var::p, Var::q, Var::t}, 7);
    EXPECT_EQ(laurent_from_json(to_json(f)), f);
  }
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
  const auto g = LaurentPoly::constant(big, kQ);
  EXPECT_EQ(laurent_from_json(Json::parse(to_json(g).dump())), g);
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(laurent_from_json(Json::parse(R"({"vars":["x"],"terms":[]})")), ParseError);
  EXPECT_THROW(laurent_from_json(Json::parse(R"({"vars":["q"],"terms":[[[1],"abc"]]})")),
               ParseError);
}

TEST(Modular, Field) {
  EXPECT_TRUE(is_prime(kDefaultPrime));
  EXPECT_FALSE(is_prime(kDefaultPrime + 2));
  ModField F(kDefaultPrime);
  const auto w = F.cube_root_of_unity();
  ASSERT_TRUE(w);
  EXPECT_NE(*w, 1u);
  EXPECT_EQ(F.pow(*w, 3), 1u);
  EXPECT_EQ(F.mul(F.inv(12345), 12345), 1u);
  EXPECT_EQ(F.pow_signed(2, -1), F.inv(2));
}
