#include "borwein/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "borwein/errors.hpp"
#include "borwein/parallel.hpp"

namespace borwein {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void sort_violations(std::vector<Violation>& v) {
  std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
    return a.k != b.k ? a.k < b.k : a.M < b.M;
  });
}

bool breaks(const mpz_class& c, Sign s) {
  return s == Sign::nonneg ? sgn(c) < 0 : sgn(c) > 0;
}

void require_q_only(const LaurentPoly& f, const char* who) {
  for (const auto& t : f.terms()) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (i != static_cast<int>(Var::q) && t.exps[i] != 0) {
        throw BadParameters(std::string(who) + ": expected a polynomial in q alone");
      }
    }
  }
}

}  // namespace

LaurentPoly Dissection::recombine() const {
  LaurentPoly out(VarSet{Var::q});
  for (std::int64_t r = 0; r < modulus; ++r) {
    const LaurentPoly& d = components[static_cast<std::size_t>(r)];
    LaurentPoly lifted = substitute_power(d, Var::q, static_cast<std::int32_t>(modulus));
    Exponents e{};
    exp_of(e, Var::q) = static_cast<std::int32_t>(r);
    out += lifted.shifted(e);
  }
  return out;
}

Dissection dissect(const LaurentPoly& f, std::int64_t M) {
  if (M < 1) throw BadParameters("dissect: modulus must be positive");
  require_q_only(f, "dissect");
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(M));
  for (const auto& t : f.terms()) {
    const std::int64_t e = exp_of(t.exps, Var::q);
    const std::int64_t r = floor_mod(e, M);
    Term c = t;
    exp_of(c.exps, Var::q) = static_cast<std::int32_t>((e - r) / M);
    parts[static_cast<std::size_t>(r)].push_back(std::move(c));
  }
  Dissection d{M, {}};
  d.components.reserve(parts.size());
  for (auto& p : parts) d.components.push_back(LaurentPoly::from_terms(VarSet{Var::q}, std::move(p)));
  return d;
}

BorweinParts tridissect_borwein(const LaurentPoly& f) {
  Dissection d = dissect(f, 3);
  return {std::move(d.components[0]), -d.components[1], -d.components[2]};
}

std::string to_string(Sign s) { return s == Sign::nonneg ? "nonneg" : "nonpos"; }

SignPattern::SignPattern(std::int64_t modulus, std::set<std::int64_t> plus_residues)
    : modulus_(modulus), plus_(std::move(plus_residues)) {
  if (modulus < 1) throw BadParameters("SignPattern: modulus must be positive");
  for (auto r : plus_) {
    if (r < 0 || r >= modulus) throw BadParameters("SignPattern: residue out of range");
  }
}

SignPattern SignPattern::for_K(std::int64_t K) {
  if (K < 1) throw BadParameters("SignPattern: K must be positive");
  const std::int64_t mod = 2 * K + 1;
  const std::int64_t l = mod / 4;
  std::set<std::int64_t> plus{0};
  for (std::int64_t i = 1; i <= l; ++i) {
    plus.insert(i);
    plus.insert(mod - i);
  }
  return SignPattern(mod, std::move(plus));
}

SignPattern SignPattern::iks_odd(std::int64_t a, std::int64_t K) {
  if (a < 1 || K < 1 || std::gcd(a, K) != 1 || 2 * a >= K) {
    throw BadParameters("iks: need gcd(a, K) = 1 and 0 < a < K/2");
  }
  if (K % 2 == 0) throw BadParameters("iks: odd-K pattern requested for even K");
  std::set<std::int64_t> plus;
  for (std::int64_t j = 0; 2 * j < K; j += 2) {
    plus.insert(floor_mod(a * j, K));
    plus.insert(floor_mod(-a * j, K));
  }
  return SignPattern(K, std::move(plus));
}

Sign SignPattern::expected(std::int64_t exponent) const {
  return plus_.count(floor_mod(exponent, modulus_)) ? Sign::nonneg : Sign::nonpos;
}

std::string SignPattern::render() const {
  std::string s;
  for (std::int64_t r = 0; r < modulus_; ++r) s += plus_.count(r) ? '+' : '-';
  return s;
}

std::vector<Violation> check_borwein(const LaurentPoly& f, std::int64_t k) {
  const BorweinParts parts = tridissect_borwein(f);
  std::vector<Violation> out;
  const std::array<const LaurentPoly*, 3> comps = {&parts.A, &parts.B, &parts.C};
  for (std::int64_t r = 0; r < 3; ++r) {
    for (const auto& t : comps[r]->terms()) {
      if (sgn(t.coeff) >= 0) continue;
      const std::int64_t M = 3 * std::int64_t{exp_of(t.exps, Var::q)} + r;
      // Report the coefficient of q^M in f itself.
      out.push_back({k, M, r == 0 ? t.coeff : mpz_class(-t.coeff),
                     r == 0 ? Sign::nonneg : Sign::nonpos});
    }
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> check_pattern(const LaurentPoly& f, const SignPattern& pattern,
                                     std::int64_t k) {
  require_q_only(f, "check_pattern");
  std::vector<Violation> out;
  for (const auto& t : f.terms()) {
    const std::int64_t M = exp_of(t.exps, Var::q);
    const Sign s = pattern.expected(M);
    if (breaks(t.coeff, s)) out.push_back({k, M, t.coeff, s});
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> check_pattern(const LaurentPoly& f, std::int64_t K, std::int64_t k) {
  return check_pattern(f, SignPattern::for_K(K), k);
}

std::vector<Violation> check_iks_odd(const LaurentPoly& f, std::int64_t a, std::int64_t K,
                                     std::int64_t k) {
  return check_pattern(f, SignPattern::iks_odd(a, K), k);
}

std::vector<Violation> check_iks_even(const LaurentPoly& f, std::int64_t k) {
  return check_pattern(f, SignPattern(2, {0}), k);
}

bool reversal_holds(const LaurentPoly& B, const LaurentPoly& C, std::int64_t n) {
  Exponents e{};
  exp_of(e, Var::q) = static_cast<std::int32_t>(n * n - 1);
  return substitute_power(B, Var::q, -1).shifted(e) == C;
}

ProductSpec threshold_spec(Family family, std::int64_t m, std::int64_t n, std::int64_t K) {
  if (family == Family::conj1) {
    if (K != 1) throw BadParameters("conj1 threshold scans use K = 1");
    return conj1_spec(m, n);
  }
  return conj3_spec(m, m, n, n, n, K);
}

std::vector<bool> slice_passes(Family family, std::int64_t m, std::int64_t n,
                               std::int64_t kmax, std::int64_t K) {
  const PGradedSeries series = expand(threshold_spec(family, m, n, K), kmax);
  const SignPattern pattern = SignPattern::for_K(K);
  std::vector<bool> out;
  out.reserve(static_cast<std::size_t>(kmax + 1));
  for (std::int64_t k = 0; k <= kmax; ++k) {
    const LaurentPoly& f = series.slice(k);
    out.push_back(n == 0 || (!f.is_zero() && check_pattern(f, pattern, k).empty()));
  }
  return out;
}

std::optional<std::int64_t> threshold_from_passes(const std::vector<bool>& passes) {
  if (passes.empty() || !passes.back()) return std::nullopt;
  auto n0 = static_cast<std::int64_t>(passes.size()) - 1;
  while (n0 > 0 && passes[static_cast<std::size_t>(n0 - 1)]) --n0;
  return n0;
}

ThresholdResult find_threshold(std::int64_t m, std::int64_t k, std::int64_t n_scan_max,
                               std::int64_t K, Family family) {
  if (k < 0) throw BadParameters("find_threshold: k must be non-negative");
  auto row = find_threshold_row(m, k, n_scan_max, K, family, 1);
  return row.back();
}

std::vector<ThresholdResult> find_threshold_row(std::int64_t m, std::int64_t kmax,
                                                std::int64_t n_scan_max, std::int64_t K,
                                                Family family, int jobs) {
  if (n_scan_max < 1) throw BadParameters("find_threshold: n_scan_max must be at least 1");
  if (m < 0 || kmax < 0) throw BadParameters("find_threshold: m and k must be non-negative");
  std::vector<std::vector<bool>> by_n(static_cast<std::size_t>(n_scan_max + 1));
  parallel_for(by_n.size(), jobs, [&](std::size_t n) {
    by_n[n] = slice_passes(family, m, static_cast<std::int64_t>(n), kmax, K);
  });
  std::vector<ThresholdResult> out;
  for (std::int64_t k = 0; k <= kmax; ++k) {
    ThresholdResult r{m, k, K, n_scan_max, std::nullopt, {}};
    for (const auto& row : by_n) r.passes.push_back(row[static_cast<std::size_t>(k)]);
    r.N = threshold_from_passes(r.passes);
    out.push_back(std::move(r));
  }
  return out;
}

CounterexampleReport reproduce_counterexamples(std::int64_t n_start, std::int64_t n_limit) {
  CounterexampleReport rep;

  // Andrews' refinement at n1 = 1, n2 = 40: (q,q^2;q^3)_1 (pq,pq^2;q^3)_40.
  const PGradedSeries refinement = expand(conj2_spec(1, 0, 1, 40, 0), 40);
  rep.refinement_violations = check_borwein(refinement.slice(40), 40);

  constexpr std::int64_t kSlice = 18, kExp = 26, kK = 3;
  rep.predicted = SignPattern::for_K(kK).expected(kExp);
  for (std::int64_t n = n_start; n <= n_limit; ++n) {
    const PGradedSeries s = expand(conj3_spec(4, 0, n, n, 0, kK), kSlice);
    rep.pattern_steps.push_back({n, s.slice(kSlice).coeff(Var::q, kExp)});
    const auto& st = rep.pattern_steps;
    if (st.size() >= 3 && st[st.size() - 1].coeff == st[st.size() - 2].coeff &&
        st[st.size() - 2].coeff == st[st.size() - 3].coeff) {
      rep.stable_coeff = st.back().coeff;
      break;
    }
  }

  const PGradedSeries control = expand(conj1_spec(1, 10), 4);
  for (std::int64_t k = 0; k <= 4; ++k) {
    auto v = check_borwein(control.slice(k), k);
    rep.control_violations.insert(rep.control_violations.end(), v.begin(), v.end());
  }
  return rep;
}

}  // namespace borwein
