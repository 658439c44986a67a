#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "borwein/laurent_poly.hpp"
#include "borwein/qseries.hpp"

namespace borwein {

// Residue-class split f = sum_r q^r D_r(q^M). Residues of negative
// exponents are the non-negative remainder, so q^-1 lands in D_{M-1}.
struct Dissection {
  std::int64_t modulus = 1;
  std::vector<LaurentPoly> components;

  LaurentPoly recombine() const;
};

Dissection dissect(const LaurentPoly& f, std::int64_t M);

// f = A(q^3) - q B(q^3) - q^2 C(q^3).
struct BorweinParts {
  LaurentPoly A, B, C;
};

BorweinParts tridissect_borwein(const LaurentPoly& f);

enum class Sign { nonneg, nonpos };

std::string to_string(Sign s);

// A coefficient c of q^M in the p^k slice that breaks its expected sign.
struct Violation {
  std::int64_t k = 0;
  std::int64_t M = 0;
  mpz_class coeff;
  Sign expected = Sign::nonneg;

  bool operator==(const Violation& o) const {
    return k == o.k && M == o.M && coeff == o.coeff && expected == o.expected;
  }
};

// Residues modulo `modulus` whose coefficients must be >= 0; all others
// must be <= 0.
class SignPattern {
 public:
  SignPattern(std::int64_t modulus, std::set<std::int64_t> plus_residues);

  // Residues {0, +-1, ..., +-l} mod 2K+1 with l = floor((2K+1)/4).
  static SignPattern for_K(std::int64_t K);
  // IKS classes for odd K: r = +-a j with j even is "+", j odd is "-".
  static SignPattern iks_odd(std::int64_t a, std::int64_t K);

  std::int64_t modulus() const { return modulus_; }
  const std::set<std::int64_t>& plus_residues() const { return plus_; }
  Sign expected(std::int64_t exponent) const;
  // "++--+" read in residue order 0..modulus-1.
  std::string render() const;

 private:
  std::int64_t modulus_;
  std::set<std::int64_t> plus_;
};

// Violations of the Borwein +-- condition: A, B, C must have non-negative
// coefficients. M is reported as the exponent in f. `k` tags the slice.
std::vector<Violation> check_borwein(const LaurentPoly& f, std::int64_t k = 0);

std::vector<Violation> check_pattern(const LaurentPoly& f, const SignPattern& pattern,
                                     std::int64_t k = 0);
std::vector<Violation> check_pattern(const LaurentPoly& f, std::int64_t K, std::int64_t k = 0);

// Requires gcd(a, K) = 1, a < K/2 and K odd.
std::vector<Violation> check_iks_odd(const LaurentPoly& f, std::int64_t a, std::int64_t K,
                                     std::int64_t k = 0);

// (-1)^M a_M >= 0 for every coefficient.
std::vector<Violation> check_iks_even(const LaurentPoly& f, std::int64_t k = 0);

// q^{n^2-1} B(q^{-1}) == C.
bool reversal_holds(const LaurentPoly& B, const LaurentPoly& C, std::int64_t n);

enum class Family { conj1, conj3_diagonal };

// The product scanned by find_threshold at size n.
ProductSpec threshold_spec(Family family, std::int64_t m, std::int64_t n, std::int64_t K);

// For one product size n: whether slice k qualifies, k = 0..kmax. At n = 0
// every slice qualifies; for n >= 1 the slice must be nonzero (k within the
// degree bound) and pass check_pattern.
std::vector<bool> slice_passes(Family family, std::int64_t m, std::int64_t n,
                               std::int64_t kmax, std::int64_t K);

struct ThresholdResult {
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t K = 1;
  std::int64_t n_scan_max = 0;
  std::optional<std::int64_t> N;
  std::vector<bool> passes;  // passes[n] for n = 0..n_scan_max
};

// Least n0 such that passes[n] holds for all n0 <= n < passes.size().
std::optional<std::int64_t> threshold_from_passes(const std::vector<bool>& passes);

ThresholdResult find_threshold(std::int64_t m, std::int64_t k, std::int64_t n_scan_max,
                               std::int64_t K = 1, Family family = Family::conj1);

// One ThresholdResult per k in [0, kmax], sharing a single expansion per n.
// Expansions are spread over `jobs` threads.
std::vector<ThresholdResult> find_threshold_row(std::int64_t m, std::int64_t kmax,
                                                std::int64_t n_scan_max, std::int64_t K = 1,
                                                Family family = Family::conj1, int jobs = 1);

struct StabilityStep {
  std::int64_t n = 0;
  mpz_class coeff;
};

struct CounterexampleReport {
  // (q, q^2; q^3)_1 (pq, pq^2; q^3)_40, slice p^40, Borwein condition.
  std::vector<Violation> refinement_violations;
  // conj3 with m1 = 4, m2 = 0, K = 3: coefficient of p^18 q^26 as n1 = n2 grows.
  std::vector<StabilityStep> pattern_steps;
  std::optional<mpz_class> stable_coeff;
  Sign predicted = Sign::nonneg;
  // Control: conj1 with m = 1, n = 10 has no violations for k <= 4.
  std::vector<Violation> control_violations;

  bool refinement_reproduced() const { return !refinement_violations.empty(); }
  bool pattern_reproduced() const {
    return stable_coeff && *stable_coeff == 1 && predicted == Sign::nonpos;
  }
};

// Scans n1 = n2 = n_start, n_start+1, ... until the p^18 q^26 coefficient is
// unchanged over three consecutive n, or n_limit is reached.
CounterexampleReport reproduce_counterexamples(std::int64_t n_start = 10,
                                               std::int64_t n_limit = 60);

}  // namespace borwein
