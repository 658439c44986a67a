#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "borwein/laurent_poly.hpp"
#include "borwein/rational_sum.hpp"

namespace borwein {

// Non-increasing integer sequence lambda_1 >= ... >= lambda_L. Parts may be
// negative.
struct PartitionSeq {
  std::vector<std::int32_t> parts;

  std::size_t length() const { return parts.size(); }
  // |lambda|, the sum of the parts.
  std::int64_t weight() const;
  bool is_non_increasing() const;

  bool operator==(const PartitionSeq&) const = default;
};

// Visits every non-increasing sequence of length L with parts in [-n, n],
// in increasing lexicographic order. With `residue` set, only sequences
// with |lambda| = -residue (mod 3) are visited.
void for_each_partition(int L, int n, std::optional<int> residue,
                        const std::function<void(const PartitionSeq&)>& visit);

std::vector<PartitionSeq> enumerate_partitions(int L, int n, std::optional<int> residue);

// Gaussian binomial [mm, j] in q via the Pascal-type recurrence
// [mm, j] = [mm-1, j] + q^{mm-j} [mm-1, j-1]. Zero unless 0 <= j <= mm.
LaurentPoly q_binomial(std::int64_t mm, std::int64_t j);

struct AndrewsABC {
  LaurentPoly A, B, C;
};

// The single-sum expressions for A_n, B_n, C_n:
//   A_n = sum_l (-1)^l q^{l(9l+1)/2} [2n, n+3l]
//   B_n = sum_l (-1)^l q^{l(9l-5)/2} [2n, n+3l-1]
//   C_n = sum_l (-1)^l q^{l(9l+7)/2} [2n, n+3l+1]
AndrewsABC andrews_ABC(std::int64_t n);

struct RationalTerm {
  LaurentPoly num;
  LaurentPoly den;

  // a/b == c/d  iff  a*d == c*b
  bool equals(const RationalTerm& o) const;
};

// Parameters of one residue component F^l_{m,n}(p, q).
struct MultisumParams {
  std::int64_t m = 0;
  std::int64_t n = 0;
  int l = 0;

  int length() const { return static_cast<int>(2 * m + 1); }
  // (-1)^{binom(l+1, 2)}
  int prefactor_sign() const;
  std::int64_t prefactor_p_exp() const { return m * (m + 1) * n; }
  std::int64_t prefactor_q_exp() const { return -m * n * n; }
  // |lambda| = -l (mod 3)
  bool admissible(const PartitionSeq& lam) const;
};

// binom(x+1, 2) = x(x+1)/2 for any integer x.
std::int64_t binom2_shifted(std::int64_t x);

// The summand of the Kaneko-type expansion
//   prod_{i<j} (1 - Y^{B d} X^{j-i}) (X^{j-i+1}; Y^B)_d / ((1 - X^{j-i}) (Y^B X^{j-i-1}; Y^B)_d)
//   * prod_i (Y^B X^{i-1}; Y^B)_{2N} / ((Y^B X^{i-1}; Y^B)_{N-l_i} (Y^B X^{L-i}; Y^B)_{N+l_i})
//   * (-1)^{|lambda|} Y^{B sum binom(l_i+1, 2)} X^{sum (i-1) l_i}
// with d = l_i - l_j, for a non-increasing lambda with parts in [-N, N].
// The z-dependence (-z^{-1})^{|lambda|} is left to the caller (only its
// sign is included above).
FactoredTerm lemma_term(int L, std::int64_t N, std::int32_t B, const PartitionSeq& lam);

// Summand of F^l_{m,n} for an admissible lambda, without the global
// prefactor. Throws NonIntegralExponent if |lambda| + l is not divisible by 3.
FactoredTerm theorem_term_factored(const MultisumParams& params, const PartitionSeq& lam);
RationalTerm theorem_term(const MultisumParams& params, const PartitionSeq& lam);

// F^l_{m,n}(p, q) evaluated as the (2m+1)-fold sum and reduced exactly.
LaurentPoly theorem_multisum(const MultisumParams& params, const SumOptions& opts = {});

// prod_{i=1}^{n_vars} (z t^{1-i}, z^{-1} q t^{i-1}; q)_N in (z, q, t).
LaurentPoly kaneko_product_lhs(int n_vars, std::int64_t N);

// The sum side of the same identity, grouped by powers of z.
LaurentPoly kaneko_sum_rhs(int n_vars, std::int64_t N, const SumOptions& opts = {});

// Multisum for prod_{j=0}^m (p^j q^a, p^j q^{B-a}; q^B)_n
//                * prod_{j=1}^m (p^j q^-a, p^j q^{a-B}; q^-B)_n,  B = 2K+1,
// from the specialization (n_vars, N, z, q, t) -> (2m+1, n, p^m q^a, q^B, p),
// with prefactor p^{m(m+1)n} q^{-B m n^2}.
LaurentPoly general_multisum(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t K,
                             const SumOptions& opts = {});

// (F^0, F^1, F^2) read off a polynomial F(p, q) by splitting q-exponents
// mod 3: F = F^0(p, q^3) - q F^1(p, q^3) - q^2 F^2(p, q^3).
std::array<LaurentPoly, 3> dissect_components(const LaurentPoly& F);

}  // namespace borwein
