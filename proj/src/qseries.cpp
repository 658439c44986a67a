#include "borwein/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "borwein/dense_poly.hpp"
#include "borwein/errors.hpp"

namespace borwein {

namespace {

void require_nonneg(std::int64_t v, const char* name) {
  if (v < 0) throw BadParameters(std::string(name) + " must be non-negative");
}

std::int32_t narrow(std::int64_t v) {
  if (v > INT32_MAX || v < INT32_MIN) throw BadParameters("exponent out of range");
  return static_cast<std::int32_t>(v);
}

void append(std::vector<BinomialFactor>& out, const std::vector<BinomialFactor>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

LaurentPoly binomial_poly(const BinomialFactor& f) {
  Exponents e{};
  exp_of(e, Var::p) = f.p_exp;
  exp_of(e, Var::q) = f.q_exp;
  return LaurentPoly::constant(1, VarSet{Var::p, Var::q}) -
         LaurentPoly::monomial(1, e, VarSet{Var::p, Var::q});
}

}  // namespace

std::int64_t ProductSpec::p_degree() const {
  std::int64_t d = 0;
  for (const auto& f : factors) d += f.p_exp;
  return d;
}

bool ProductSpec::same_factors(const ProductSpec& other) const {
  auto a = factors;
  auto b = other.factors;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

PGradedSeries::PGradedSeries(std::int64_t kmax, std::vector<LaurentPoly> slices)
    : kmax_(kmax), slices_(std::move(slices)) {
  if (kmax < 0 || slices_.size() != static_cast<std::size_t>(kmax + 1)) {
    throw std::invalid_argument("PGradedSeries: need exactly kmax+1 slices");
  }
}

const LaurentPoly& PGradedSeries::slice(std::int64_t k) const {
  if (k < 0 || k > kmax_) throw std::out_of_range("PGradedSeries: slice index out of range");
  return slices_[static_cast<std::size_t>(k)];
}

LaurentPoly PGradedSeries::to_laurent() const {
  LaurentPoly out(VarSet{Var::p, Var::q});
  for (std::int64_t k = 0; k <= kmax_; ++k) {
    Exponents e{};
    exp_of(e, Var::p) = static_cast<std::int32_t>(k);
    out += slices_[static_cast<std::size_t>(k)].shifted(e);
  }
  return out;
}

std::vector<BinomialFactor> qpochhammer_spec(std::int32_t a_pexp, std::int32_t a_qexp,
                                             std::int32_t base_qexp, std::int64_t n) {
  require_nonneg(n, "n");
  std::vector<BinomialFactor> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    out.push_back({a_pexp, narrow(a_qexp + j * std::int64_t{base_qexp})});
  }
  return out;
}

ProductSpec conj1_spec(std::int64_t m, std::int64_t n) {
  require_nonneg(m, "m");
  require_nonneg(n, "n");
  ProductSpec s{{"conj1", {{"m", m}, {"n", n}}}, {}};
  append(s.factors, qpochhammer_spec(0, 1, 3, n));
  append(s.factors, qpochhammer_spec(0, 2, 3, n));
  for (std::int64_t j = 1; j <= m; ++j) {
    const auto pj = narrow(j);
    append(s.factors, qpochhammer_spec(pj, 1, 3, n));
    append(s.factors, qpochhammer_spec(pj, 2, 3, n));
    append(s.factors, qpochhammer_spec(pj, -1, -3, n));
    append(s.factors, qpochhammer_spec(pj, -2, -3, n));
  }
  return s;
}

ProductSpec conj3_spec(std::int64_t m1, std::int64_t m2, std::int64_t n1, std::int64_t n2,
                       std::int64_t n3, std::int64_t K) {
  for (auto [v, name] : {std::pair{m1, "m1"}, {m2, "m2"}, {n1, "n1"}, {n2, "n2"}, {n3, "n3"}}) {
    require_nonneg(v, name);
  }
  if (K < 1) throw BadParameters("K must be a positive integer");
  const auto k = narrow(K), base = narrow(2 * K + 1);
  ProductSpec s{{"conj3",
                 {{"m1", m1}, {"m2", m2}, {"n1", n1}, {"n2", n2}, {"n3", n3}, {"K", K}}},
                {}};
  append(s.factors, qpochhammer_spec(0, k, base, n1));
  append(s.factors, qpochhammer_spec(0, k + 1, base, n1));
  for (std::int64_t j = 1; j <= m1; ++j) {
    append(s.factors, qpochhammer_spec(narrow(j), k, base, n2));
    append(s.factors, qpochhammer_spec(narrow(j), k + 1, base, n2));
  }
  for (std::int64_t j = 1; j <= m2; ++j) {
    append(s.factors, qpochhammer_spec(narrow(j), -k, -base, n3));
    append(s.factors, qpochhammer_spec(narrow(j), -k - 1, -base, n3));
  }
  return s;
}

ProductSpec conj2_spec(std::int64_t m1, std::int64_t m2, std::int64_t n1, std::int64_t n2,
                       std::int64_t n3) {
  ProductSpec s = conj3_spec(m1, m2, n1, n2, n3, 1);
  s.provenance.family = "conj2";
  s.provenance.params.erase("K");
  return s;
}

ProductSpec iks_spec(std::int64_t a, std::int64_t K, std::int64_t n) {
  if (a < 1 || K < 1) throw BadParameters("iks: a and K must be positive");
  if (std::gcd(a, K) != 1) throw BadParameters("iks: a and K must be coprime");
  if (2 * a >= K) throw BadParameters("iks: need a < K/2");
  require_nonneg(n, "n");
  ProductSpec s{{"iks", {{"a", a}, {"K", K}, {"n", n}}}, {}};
  append(s.factors, qpochhammer_spec(0, narrow(a), narrow(K), n));
  append(s.factors, qpochhammer_spec(0, narrow(K - a), narrow(K), n));
  return s;
}

ProductSpec general_spec(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t K) {
  require_nonneg(m, "m");
  require_nonneg(n, "n");
  if (K < 1 || a < 1) throw BadParameters("general: a and K must be positive");
  const auto base = narrow(2 * K + 1);
  const auto qa = narrow(a);
  ProductSpec s{{"general", {{"m", m}, {"n", n}, {"a", a}, {"K", K}}}, {}};
  for (std::int64_t j = 0; j <= m; ++j) {
    append(s.factors, qpochhammer_spec(narrow(j), qa, base, n));
    append(s.factors, qpochhammer_spec(narrow(j), base - qa, base, n));
  }
  for (std::int64_t j = 1; j <= m; ++j) {
    append(s.factors, qpochhammer_spec(narrow(j), -qa, -base, n));
    append(s.factors, qpochhammer_spec(narrow(j), qa - base, -base, n));
  }
  return s;
}

PGradedSeries expand(const ProductSpec& spec, std::int64_t kmax) {
  require_nonneg(kmax, "kmax");
  std::vector<BinomialFactor> factors = spec.factors;
  for (const auto& f : factors) {
    if (f.p_exp < 0) throw BadParameters("expand: negative p-exponents cannot be truncated");
  }
  std::stable_sort(factors.begin(), factors.end());

  std::vector<DenseUnivariate> slices(static_cast<std::size_t>(kmax + 1));
  slices[0] = DenseUnivariate::constant(1);
  std::int64_t top = 0;  // slices above `top` are zero
  for (const auto& f : factors) {
    if (f.p_exp > kmax) break;
    if (f.p_exp == 0) {
      for (std::int64_t k = 0; k <= top; ++k) slices[std::size_t(k)].mul_binomial(f.q_exp);
      continue;
    }
    const std::int64_t new_top = std::min(kmax, top + f.p_exp);
    for (std::int64_t k = new_top; k >= f.p_exp; --k) {
      if (k - f.p_exp > top) continue;
      slices[std::size_t(k)].sub_shifted(slices[std::size_t(k - f.p_exp)], f.q_exp);
    }
    top = new_top;
  }

  std::vector<LaurentPoly> out;
  out.reserve(slices.size());
  for (auto& s : slices) {
    s.trim();
    out.push_back(s.to_laurent(Var::q));
  }
  return PGradedSeries(kmax, std::move(out));
}

PGradedSeries expand_reference(const ProductSpec& spec, std::int64_t kmax) {
  require_nonneg(kmax, "kmax");
  LaurentPoly acc = LaurentPoly::constant(1, VarSet{Var::p, Var::q});
  for (const auto& f : spec.factors) acc = mul_truncated(acc, binomial_poly(f), Var::p, kmax);
  std::vector<LaurentPoly> out;
  for (std::int64_t k = 0; k <= kmax; ++k) {
    out.push_back(coefficient(acc, Var::p, static_cast<std::int32_t>(k)).with_vars(VarSet{Var::q}));
  }
  return PGradedSeries(kmax, std::move(out));
}

LaurentPoly full_product(const ProductSpec& spec) {
  const bool graded = std::all_of(spec.factors.begin(), spec.factors.end(),
                                  [](const BinomialFactor& f) { return f.p_exp >= 0; });
  if (graded) return expand(spec, spec.p_degree()).to_laurent().with_vars(VarSet{Var::p, Var::q});
  LaurentPoly acc = LaurentPoly::constant(1, VarSet{Var::p, Var::q});
  for (const auto& f : spec.factors) acc *= binomial_poly(f);
  return acc;
}

}  // namespace borwein
