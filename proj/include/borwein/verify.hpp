#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borwein/modular.hpp"
#include "borwein/rational_sum.hpp"

namespace borwein {

struct VerificationReport {
  std::string identity;  // andrews, kaneko, theorem, general
  std::string mode;      // exact, modular
  std::map<std::string, std::int64_t> params;
  bool pass = true;
  // First disagreement, empty on success.
  std::map<std::string, std::string> witness;
  std::int64_t checks = 0;
  std::int64_t discarded = 0;
};

// Values of one side of an identity at a point, or nullopt when the point
// makes a denominator vanish.
using SideEvaluator =
    std::function<std::optional<std::uint64_t>(const ModField&, const std::vector<std::uint64_t>&)>;

// Evaluates lhs and rhs at `trials` random points of (F_p^*)^n_vars. Points
// where either side is undefined are discarded and redrawn; DegenerateSampling
// is thrown once more than 90% of at least 10 draws were discarded.
VerificationReport verify_identity_modular(int n_vars, const SideEvaluator& lhs,
                                           const SideEvaluator& rhs, std::int64_t trials,
                                           std::uint64_t prime, std::uint64_t seed);

// Deliberate sign flip of one summand, for testing that a wrong sum is caught.
struct Perturbation {
  // Position in increasing lex order among the summands that are summed.
  std::uint64_t index = 0;
};

// Sum over non-increasing lambda in [-N, N]^L of the Kaneko-type summand
// with X, Y^B and an extra factor u^{lambda_i} per part, split by |lambda|
// mod 3. Returns nullopt at points where a denominator vanishes.
struct LemmaSums {
  std::uint64_t by_residue[3] = {0, 0, 0};
  std::uint64_t total = 0;
};
std::optional<LemmaSums> evaluate_lemma_sum(const ModField& F, int L, std::int64_t N,
                                            std::uint64_t X, std::uint64_t YB, std::uint64_t u,
                                            std::optional<Perturbation> flip = std::nullopt,
                                            int flip_residue = -1);

struct ModularOptions {
  std::int64_t trials = 20;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  std::optional<Perturbation> perturb;
};

// F^l_{m,n} against the residue components of the conj1 product. The prime
// must be 1 mod 3.
VerificationReport verify_theorem_modular(std::int64_t m, std::int64_t n, int l,
                                          const ModularOptions& opts);
VerificationReport verify_kaneko_modular(int n_vars, std::int64_t N, const ModularOptions& opts);
VerificationReport verify_general_modular(std::int64_t m, std::int64_t n, std::int64_t a,
                                          std::int64_t K, const ModularOptions& opts);

VerificationReport verify_andrews_exact(std::int64_t n_max);
// All three residue components unless `l` picks one.
VerificationReport verify_theorem_exact(std::int64_t m, std::int64_t n, std::optional<int> l = std::nullopt,
                                        const SumOptions& opts = {});
VerificationReport verify_kaneko_exact(int n_vars, std::int64_t N, const SumOptions& opts = {});
VerificationReport verify_general_exact(std::int64_t m, std::int64_t n, std::int64_t a,
                                        std::int64_t K, const SumOptions& opts = {});

}  // namespace borwein
