#include "borwein/multisum.hpp"

#include <algorithm>
#include <map>

#include "borwein/errors.hpp"

namespace borwein {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int32_t narrow(std::int64_t v) {
  if (v > INT32_MAX || v < INT32_MIN) throw BadParameters("exponent out of range");
  return static_cast<std::int32_t>(v);
}

void visit_from(int pos, int n, std::int32_t upper, PartitionSeq& cur,
                const std::optional<int>& residue, std::int64_t weight,
                const std::function<void(const PartitionSeq&)>& visit) {
  if (pos == static_cast<int>(cur.parts.size())) {
    if (!residue || floor_mod(weight + *residue, 3) == 0) visit(cur);
    return;
  }
  for (std::int32_t v = -n; v <= upper; ++v) {
    cur.parts[pos] = v;
    visit_from(pos + 1, n, v, cur, residue, weight + v, visit);
  }
}

// Dense coefficient lists of [mm, j] for j = 0..mm.
std::vector<std::vector<mpz_class>> q_binomial_row(std::int64_t mm) {
  std::vector<std::vector<mpz_class>> row{{1}};
  for (std::int64_t r = 1; r <= mm; ++r) {
    std::vector<std::vector<mpz_class>> next(static_cast<std::size_t>(r + 1));
    for (std::int64_t j = 0; j <= r; ++j) {
      auto& out = next[static_cast<std::size_t>(j)];
      out.assign(static_cast<std::size_t>(j * (r - j) + 1), 0);
      if (j < r) {  // [r-1, j]
        const auto& a = row[static_cast<std::size_t>(j)];
        for (std::size_t e = 0; e < a.size(); ++e) out[e] += a[e];
      }
      if (j > 0) {  // q^{r-j} [r-1, j-1]
        const auto& b = row[static_cast<std::size_t>(j - 1)];
        for (std::size_t e = 0; e < b.size(); ++e) out[e + static_cast<std::size_t>(r - j)] += b[e];
      }
    }
    row = std::move(next);
  }
  return row;
}

LaurentPoly dense_to_q(const std::vector<mpz_class>& c, std::int64_t shift = 0) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (sgn(c[e]) == 0) continue;
    Term t;
    exp_of(t.exps, Var::q) = narrow(static_cast<std::int64_t>(e) + shift);
    t.coeff = c[e];
    terms.push_back(std::move(t));
  }
  return LaurentPoly::from_terms(VarSet{Var::q}, std::move(terms));
}

// (c X^e Y^{B s0}; Y^B)_r as binomials (1 - X^e Y^{B(s0+s)}), s < r.
void push_pochhammer(std::vector<Binomial2>& out, std::int32_t e, std::int32_t B,
                     std::int64_t s0, std::int64_t r) {
  for (std::int64_t s = 0; s < r; ++s) out.push_back({e, narrow(B * (s0 + s))});
}

LaurentPoly to_laurent_shifted(const DenseBivariate& d, Var x, Var y, int sign,
                               std::int64_t ex, std::int64_t ey) {
  Exponents e{};
  exp_of(e, x) = narrow(ex);
  exp_of(e, y) = narrow(ey);
  return d.to_laurent(x, y).shifted(e, sign).with_vars(VarSet{x, y});
}

}  // namespace

std::int64_t PartitionSeq::weight() const {
  std::int64_t w = 0;
  for (auto v : parts) w += v;
  return w;
}

bool PartitionSeq::is_non_increasing() const {
  return std::is_sorted(parts.rbegin(), parts.rend());
}

void for_each_partition(int L, int n, std::optional<int> residue,
                        const std::function<void(const PartitionSeq&)>& visit) {
  if (L < 1) throw BadParameters("partitions: length must be positive");
  if (n < 0) throw BadParameters("partitions: bound must be non-negative");
  PartitionSeq cur{std::vector<std::int32_t>(static_cast<std::size_t>(L))};
  visit_from(0, n, n, cur, residue, 0, visit);
}

std::vector<PartitionSeq> enumerate_partitions(int L, int n, std::optional<int> residue) {
  std::vector<PartitionSeq> out;
  for_each_partition(L, n, residue, [&](const PartitionSeq& p) { out.push_back(p); });
  return out;
}

LaurentPoly q_binomial(std::int64_t mm, std::int64_t j) {
  if (mm < 0) throw BadParameters("q_binomial: mm must be non-negative");
  if (j < 0 || j > mm) return LaurentPoly(VarSet{Var::q});
  return dense_to_q(q_binomial_row(mm)[static_cast<std::size_t>(j)]);
}

AndrewsABC andrews_ABC(std::int64_t n) {
  if (n < 0) throw BadParameters("andrews_ABC: n must be non-negative");
  const auto row = q_binomial_row(2 * n);
  auto single_sum = [&](std::int64_t offset, std::int64_t linear) {
    LaurentPoly acc(VarSet{Var::q});
    for (std::int64_t lam = -n; lam <= n; ++lam) {
      const std::int64_t j = n + 3 * lam + offset;
      if (j < 0 || j > 2 * n) continue;
      const std::int64_t e = lam * (9 * lam + linear) / 2;
      LaurentPoly term = dense_to_q(row[static_cast<std::size_t>(j)], e);
      if (lam % 2 != 0) term = -term;
      acc += term;
    }
    return acc;
  };
  return {single_sum(0, 1), single_sum(-1, -5), single_sum(1, 7)};
}

bool RationalTerm::equals(const RationalTerm& o) const { return num * o.den == o.num * den; }

int MultisumParams::prefactor_sign() const {
  const std::int64_t e = std::int64_t{l} * (l + 1) / 2;
  return e % 2 == 0 ? 1 : -1;
}

bool MultisumParams::admissible(const PartitionSeq& lam) const {
  if (static_cast<int>(lam.length()) != length() || !lam.is_non_increasing()) return false;
  for (auto v : lam.parts) {
    if (v > n || v < -n) return false;
  }
  return floor_mod(lam.weight() + l, 3) == 0;
}

std::int64_t binom2_shifted(std::int64_t x) { return x * (x + 1) / 2; }

FactoredTerm lemma_term(int L, std::int64_t N, std::int32_t B, const PartitionSeq& lam) {
  if (static_cast<int>(lam.length()) != L || !lam.is_non_increasing()) {
    throw BadParameters("lemma_term: lambda must be non-increasing of the right length");
  }
  for (auto v : lam.parts) {
    if (v > N || v < -N) throw BadParameters("lemma_term: part out of [-N, N]");
  }
  FactoredTerm t;
  std::int64_t ex = 0, ey = 0;
  for (int i = 1; i <= L; ++i) {
    const std::int64_t li = lam.parts[static_cast<std::size_t>(i - 1)];
    ex += (i - 1) * li;
    ey += B * binom2_shifted(li);
    for (int j = i + 1; j <= L; ++j) {
      const std::int32_t d = j - i;
      const std::int64_t delta = li - lam.parts[static_cast<std::size_t>(j - 1)];
      t.num.push_back({d, narrow(B * delta)});
      push_pochhammer(t.num, d + 1, B, 0, delta);
      t.den.push_back({d, 0});
      push_pochhammer(t.den, d - 1, B, 1, delta);
    }
    push_pochhammer(t.num, i - 1, B, 1, 2 * N);
    push_pochhammer(t.den, i - 1, B, 1, N - li);
    push_pochhammer(t.den, L - i, B, 1, N + li);
  }
  t.sign = lam.weight() % 2 == 0 ? 1 : -1;
  t.ex = narrow(ex);
  t.ey = narrow(ey);
  return t;
}

FactoredTerm theorem_term_factored(const MultisumParams& params, const PartitionSeq& lam) {
  const std::int64_t w = lam.weight();
  if (floor_mod(w + params.l, 3) != 0) {
    throw NonIntegralExponent("theorem_term: |lambda| + l is not divisible by 3");
  }
  FactoredTerm t = lemma_term(params.length(), params.n, 1, lam);
  t.ex = narrow(t.ex - params.m * w);
  t.ey = narrow(t.ey - (w + params.l) / 3);
  return t;
}

RationalTerm theorem_term(const MultisumParams& params, const PartitionSeq& lam) {
  const FactoredTerm t = theorem_term_factored(params, lam);
  return {expand_numerator(t, Var::p, Var::q), expand_denominator(t, Var::p, Var::q)};
}

LaurentPoly theorem_multisum(const MultisumParams& params, const SumOptions& opts) {
  if (params.m < 0 || params.n < 0) throw BadParameters("theorem: m, n must be non-negative");
  if (params.l < 0 || params.l > 2) throw BadParameters("theorem: l must be 0, 1 or 2");
  std::vector<FactoredTerm> terms;
  for_each_partition(params.length(), static_cast<int>(params.n), params.l,
                     [&](const PartitionSeq& lam) {
                       terms.push_back(theorem_term_factored(params, lam));
                     });
  const DenseBivariate sum = sum_factored_terms(terms, opts);
  return to_laurent_shifted(sum, Var::p, Var::q, params.prefactor_sign(),
                            params.prefactor_p_exp(), params.prefactor_q_exp());
}

LaurentPoly kaneko_product_lhs(int n_vars, std::int64_t N) {
  if (n_vars < 1 || N < 0) throw BadParameters("kaneko: need n_vars >= 1 and N >= 0");
  const VarSet vars{Var::z, Var::q, Var::t};
  LaurentPoly acc = LaurentPoly::constant(1, vars);
  for (int i = 1; i <= n_vars; ++i) {
    for (std::int64_t s = 0; s < N; ++s) {
      Exponents a{}, b{};
      exp_of(a, Var::z) = 1;
      exp_of(a, Var::t) = 1 - i;
      exp_of(a, Var::q) = narrow(s);
      exp_of(b, Var::z) = -1;
      exp_of(b, Var::t) = i - 1;
      exp_of(b, Var::q) = narrow(s + 1);
      acc *= LaurentPoly::constant(1, vars) - LaurentPoly::monomial(1, a, vars);
      acc *= LaurentPoly::constant(1, vars) - LaurentPoly::monomial(1, b, vars);
    }
  }
  return acc;
}

LaurentPoly kaneko_sum_rhs(int n_vars, std::int64_t N, const SumOptions& opts) {
  if (n_vars < 1 || N < 0) throw BadParameters("kaneko: need n_vars >= 1 and N >= 0");
  std::map<std::int64_t, std::vector<FactoredTerm>> by_weight;
  for_each_partition(n_vars, static_cast<int>(N), std::nullopt, [&](const PartitionSeq& lam) {
    by_weight[lam.weight()].push_back(lemma_term(n_vars, N, 1, lam));
  });
  LaurentPoly out(VarSet{Var::z, Var::q, Var::t});
  for (const auto& [w, terms] : by_weight) {
    const DenseBivariate group = sum_factored_terms(terms, opts);
    Exponents e{};
    exp_of(e, Var::z) = narrow(-w);
    out += group.to_laurent(Var::t, Var::q).shifted(e);
  }
  return out;
}

LaurentPoly general_multisum(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t K,
                             const SumOptions& opts) {
  if (m < 0 || n < 0) throw BadParameters("general: m, n must be non-negative");
  if (a < 1 || K < 1) throw BadParameters("general: a, K must be positive");
  const auto B = narrow(2 * K + 1);
  const int L = static_cast<int>(2 * m + 1);
  std::vector<FactoredTerm> terms;
  for_each_partition(L, static_cast<int>(n), std::nullopt, [&](const PartitionSeq& lam) {
    FactoredTerm t = lemma_term(L, n, B, lam);
    const std::int64_t w = lam.weight();
    t.ex = narrow(t.ex - m * w);
    t.ey = narrow(t.ey - a * w);
    terms.push_back(std::move(t));
  });
  const DenseBivariate sum = sum_factored_terms(terms, opts);
  return to_laurent_shifted(sum, Var::p, Var::q, 1, m * (m + 1) * n, -B * m * n * n);
}

std::array<LaurentPoly, 3> dissect_components(const LaurentPoly& F) {
  std::array<std::vector<Term>, 3> parts;
  for (const auto& t : F.terms()) {
    const std::int64_t e = exp_of(t.exps, Var::q);
    const std::int64_t r = floor_mod(e, 3);
    Term c = t;
    exp_of(c.exps, Var::q) = narrow((e - r) / 3);
    if (r != 0) c.coeff = -c.coeff;
    parts[static_cast<std::size_t>(r)].push_back(std::move(c));
  }
  const VarSet vars{Var::p, Var::q};
  return {LaurentPoly::from_terms(vars, std::move(parts[0])),
          LaurentPoly::from_terms(vars, std::move(parts[1])),
          LaurentPoly::from_terms(vars, std::move(parts[2]))};
}

}  // namespace borwein
