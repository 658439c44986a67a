#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "borwein/laurent_poly.hpp"

namespace borwein {

// The factor (1 - p^p_exp q^q_exp).
struct BinomialFactor {
  std::int32_t p_exp = 0;
  std::int32_t q_exp = 0;

  auto operator<=>(const BinomialFactor&) const = default;
};

// Which construction produced a ProductSpec, and with what parameters.
struct Provenance {
  std::string family;  // "conj1", "conj2", "conj3", "iks", "general", "custom"
  std::map<std::string, std::int64_t> params;

  bool operator==(const Provenance&) const = default;
};

struct ProductSpec {
  Provenance provenance;
  std::vector<BinomialFactor> factors;

  // Total p-degree: sum of the p exponents.
  std::int64_t p_degree() const;
  // Equality of factor multisets, ignoring order and provenance.
  bool same_factors(const ProductSpec& other) const;
};

// Coefficients of p^0 .. p^kmax of an expanded product, each a Laurent
// polynomial in q.
class PGradedSeries {
 public:
  PGradedSeries() = default;
  PGradedSeries(std::int64_t kmax, std::vector<LaurentPoly> slices);

  std::int64_t kmax() const { return kmax_; }
  // Throws std::out_of_range for k outside [0, kmax].
  const LaurentPoly& slice(std::int64_t k) const;
  const std::vector<LaurentPoly>& slices() const { return slices_; }

  // sum_k p^k slice(k)
  LaurentPoly to_laurent() const;

  bool operator==(const PGradedSeries&) const = default;

 private:
  std::int64_t kmax_ = 0;
  std::vector<LaurentPoly> slices_;
};

// (p^a_pexp q^a_qexp ; q^base_qexp)_n as n binomial factors.
std::vector<BinomialFactor> qpochhammer_spec(std::int32_t a_pexp, std::int32_t a_qexp,
                                             std::int32_t base_qexp, std::int64_t n);

// (q, q^2; q^3)_n prod_{j=1}^m (p^j q, p^j q^2; q^3)_n (p^j q^-1, p^j q^-2; q^-3)_n
ProductSpec conj1_spec(std::int64_t m, std::int64_t n);

// (q^K, q^{K+1}; q^{2K+1})_{n1} prod_{j<=m1} (p^j q^K, p^j q^{K+1}; q^{2K+1})_{n2}
//   prod_{j<=m2} (p^j q^-K, p^j q^{-K-1}; q^{-2K-1})_{n3}
ProductSpec conj3_spec(std::int64_t m1, std::int64_t m2, std::int64_t n1, std::int64_t n2,
                       std::int64_t n3, std::int64_t K);

// The K = 1 family of conj3_spec.
ProductSpec conj2_spec(std::int64_t m1, std::int64_t m2, std::int64_t n1, std::int64_t n2,
                       std::int64_t n3);

// (q^a, q^{K-a}; q^K)_n. Requires gcd(a, K) = 1 and 2a < K.
ProductSpec iks_spec(std::int64_t a, std::int64_t K, std::int64_t n);

// prod_{j=0}^m (p^j q^a, p^j q^{B-a}; q^B)_n prod_{j=1}^m (p^j q^-a, p^j q^{a-B}; q^-B)_n
// with B = 2K+1. a = K reproduces conj3_spec on the diagonal.
ProductSpec general_spec(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t K);

// Exact coefficients of p^0 .. p^kmax. Factors are applied in ascending
// p-exponent order and any factor with p-exponent above kmax is skipped.
PGradedSeries expand(const ProductSpec& spec, std::int64_t kmax);

// Same result through generic sparse LaurentPoly::mul_truncated, in the
// listed factor order. Slow; kept as an independent route for testing.
PGradedSeries expand_reference(const ProductSpec& spec, std::int64_t kmax);

// The untruncated product as a polynomial in (p, q).
LaurentPoly full_product(const ProductSpec& spec);

}  // namespace borwein
