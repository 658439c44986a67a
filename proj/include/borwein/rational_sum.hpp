#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "borwein/dense_poly.hpp"
#include "borwein/laurent_poly.hpp"

namespace borwein {

// The binomial (1 - X^a Y^b) with a, b >= 0, not both zero.
struct Binomial2 {
  std::int32_t a = 0;
  std::int32_t b = 0;

  auto operator<=>(const Binomial2&) const = default;
};

// sign * X^ex Y^ey * prod(num) / prod(den), with num and den multisets of
// binomials.
struct FactoredTerm {
  int sign = 1;
  std::int32_t ex = 0;
  std::int32_t ey = 0;
  std::vector<Binomial2> num;
  std::vector<Binomial2> den;
};

// Removes binomials common to num and den.
void cancel_common(FactoredTerm& t);

// The term's numerator (with sign and monomial) and denominator as
// polynomials in (x, y).
LaurentPoly expand_numerator(const FactoredTerm& t, Var x, Var y);
LaurentPoly expand_denominator(const FactoredTerm& t, Var x, Var y);

struct SumOptions {
  int jobs = 1;
  // Try to divide partial sums by their pending denominator factors after
  // every merge. Keeps intermediate supports small.
  bool reduce_partials = true;
};

// Exact sum of rational terms, known to be a Laurent polynomial.
//
// Terms are combined pairwise in a fixed binary tree over their index order.
// Each node keeps a numerator polynomial over a denominator that is a
// multiset of binomials; merging two nodes brings both numerators over the
// least common multiple of their denominators, so no polynomial division is
// needed until factors are cancelled. Whatever denominator remains at the
// root is removed by exact division; a remainder throws NotPolynomial.
DenseBivariate sum_factored_terms(const std::vector<FactoredTerm>& terms,
                                  const SumOptions& opts = {});

}  // namespace borwein
