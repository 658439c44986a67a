#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "borwein/laurent_poly.hpp"
#include "borwein/qseries.hpp"

// Naive reference computations sharing no code with the library kernels.
namespace oracle {

using Bivariate = std::map<std::pair<std::int64_t, std::int64_t>, mpz_class>;

inline Bivariate product(const std::vector<borwein::BinomialFactor>& fs) {
  Bivariate acc{{{0, 0}, 1}};
  for (const auto& f : fs) {
    Bivariate next = acc;
    for (const auto& [e, c] : acc) next[{e.first + f.p_exp, e.second + f.q_exp}] -= c;
    acc.clear();
    for (auto& [e, c] : next)
      if (c != 0) acc.emplace(e, c);
  }
  return acc;
}

inline borwein::LaurentPoly to_poly(const Bivariate& b) {
  using namespace borwein;
  std::vector<Term> terms;
  for (const auto& [e, c] : b) {
    Term t;
    exp_of(t.exps, Var::p) = static_cast<std::int32_t>(e.first);
    exp_of(t.exps, Var::q) = static_cast<std::int32_t>(e.second);
    t.coeff = c;
    terms.push_back(t);
  }
  return LaurentPoly::from_terms(VarSet{Var::p, Var::q}, std::move(terms));
}

// p^k slice as a polynomial in q.
inline borwein::LaurentPoly slice(const Bivariate& b, std::int64_t k) {
  using namespace borwein;
  std::vector<Term> terms;
  for (const auto& [e, c] : b) {
    if (e.first != k) continue;
    Term t;
    exp_of(t.exps, Var::q) = static_cast<std::int32_t>(e.second);
    t.coeff = c;
    terms.push_back(t);
  }
  return LaurentPoly::from_terms(VarSet{Var::q}, std::move(terms));
}

// Coefficient of q^w in [mm, j] counts partitions of w into at most j parts,
// each at most mm - j.
inline std::vector<mpz_class> gaussian_by_partitions(int mm, int j) {
  if (j < 0 || j > mm) return {};
  const int rows = j, cols = mm - j;
  std::vector<mpz_class> out(static_cast<std::size_t>(rows * cols + 1));
  auto rec = [&](auto&& self, int left, int cap, int weight) -> void {
    out[static_cast<std::size_t>(weight)] += 1;
    if (left == 0) return;
    for (int v = 1; v <= cap; ++v) self(self, left - 1, v, weight + v);
  };
  rec(rec, rows, cols, 0);
  return out;
}

inline borwein::LaurentPoly univariate(const std::vector<mpz_class>& c, std::int32_t offset = 0) {
  using namespace borwein;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Term t;
    exp_of(t.exps, Var::q) = offset + static_cast<std::int32_t>(i);
    t.coeff = c[i];
    terms.push_back(t);
  }
  return LaurentPoly::from_terms(VarSet{Var::q}, std::move(terms));
}

}  // namespace oracle
