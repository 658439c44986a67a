#include "borwein/verify.hpp"

#include <random>

#include "borwein/analysis.hpp"
#include "borwein/errors.hpp"
#include "borwein/multisum.hpp"
#include "borwein/qseries.hpp"

namespace borwein {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_prime(std::uint64_t prime) {
  if (prime <= (1ULL << 60) || prime >= (1ULL << 63) || !is_prime(prime)) {
    throw BadParameters("modular verification needs a prime in (2^60, 2^63)");
  }
}

// prod (1 - X^alpha Y^beta) over the spec's factors.
std::uint64_t eval_spec(const ModField& F, const ProductSpec& spec, std::uint64_t x,
                        std::uint64_t y) {
  std::uint64_t acc = 1;
  for (const auto& f : spec.factors) {
    const std::uint64_t mono = F.mul(F.pow_signed(x, f.p_exp), F.pow_signed(y, f.q_exp));
    acc = F.mul(acc, F.sub(1, mono));
  }
  return acc;
}

std::string first_difference(const LaurentPoly& got, const LaurentPoly& want) {
  const LaurentPoly d = got - want;
  return d.is_zero() ? std::string() : to_string(d.terms().front());
}

class LemmaEnumerator {
 public:
  LemmaEnumerator(const ModField& F, int L, std::int64_t N,
                  std::vector<std::vector<std::uint64_t>> T,
                  std::vector<std::vector<std::uint64_t>> R, std::optional<Perturbation> flip,
                  int flip_residue)
      : F_(F), L_(L), N_(N), T_(std::move(T)), R_(std::move(R)), flip_(flip),
        flip_residue_(flip_residue), lam_(static_cast<std::size_t>(L)) {}

  LemmaSums run() {
    visit(0, N_, 1, 0);
    return sums_;
  }

 private:
  void visit(int i, std::int64_t upper, std::uint64_t acc, std::int64_t weight) {
    if (i == L_) {
      const auto r = static_cast<int>(floor_mod(weight, 3));
      if (flip_ && (flip_residue_ < 0 || flip_residue_ == r)) {
        if (seen_++ == flip_->index) acc = F_.neg(acc);
      }
      sums_.by_residue[r] = F_.add(sums_.by_residue[r], acc);
      sums_.total = F_.add(sums_.total, acc);
      return;
    }
    for (std::int64_t v = -N_; v <= upper; ++v) {
      std::uint64_t val = F_.mul(acc, T_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v + N_)]);
      for (int j = 0; j < i; ++j) {
        const auto delta = lam_[static_cast<std::size_t>(j)] - v;
        val = F_.mul(val, R_[static_cast<std::size_t>(i - j)][static_cast<std::size_t>(delta)]);
      }
      lam_[static_cast<std::size_t>(i)] = v;
      visit(i + 1, v, val, weight + v);
    }
  }

  const ModField& F_;
  int L_;
  std::int64_t N_;
  std::vector<std::vector<std::uint64_t>> T_, R_;
  std::optional<Perturbation> flip_;
  int flip_residue_;
  std::vector<std::int64_t> lam_;
  std::uint64_t seen_ = 0;
  LemmaSums sums_;
};

VerificationReport run_modular(const std::string& identity,
                               std::map<std::string, std::int64_t> params, int n_vars,
                               const SideEvaluator& lhs, const SideEvaluator& rhs,
                               const ModularOptions& opts) {
  VerificationReport rep =
      verify_identity_modular(n_vars, lhs, rhs, opts.trials, opts.prime, opts.seed);
  rep.identity = identity;
  rep.params = std::move(params);
  rep.params["trials"] = opts.trials;
  return rep;
}

VerificationReport exact_report(std::string identity, std::map<std::string, std::int64_t> params) {
  VerificationReport rep;
  rep.identity = std::move(identity);
  rep.mode = "exact";
  rep.params = std::move(params);
  return rep;
}

}  // namespace

VerificationReport verify_identity_modular(int n_vars, const SideEvaluator& lhs,
                                           const SideEvaluator& rhs, std::int64_t trials,
                                           std::uint64_t prime, std::uint64_t seed) {
  require_prime(prime);
  if (trials < 1) throw BadParameters("trials must be at least 1");
  const ModField F(prime);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> draw(1, prime - 1);
  VerificationReport rep;
  rep.mode = "modular";
  std::int64_t draws = 0;
  std::vector<std::uint64_t> point(static_cast<std::size_t>(n_vars));
  while (rep.checks < trials) {
    for (auto& v : point) v = draw(rng);
    ++draws;
    const auto a = lhs(F, point);
    const auto b = a ? rhs(F, point) : std::nullopt;
    if (!a || !b) {
      ++rep.discarded;
      if (draws >= 10 && rep.discarded * 10 > draws * 9) {
        throw DegenerateSampling("more than 90% of sample points hit a zero denominator");
      }
      continue;
    }
    ++rep.checks;
    if (*a != *b) {
      rep.pass = false;
      std::string pt;
      for (std::size_t i = 0; i < point.size(); ++i) {
        pt += (i ? "," : "") + std::to_string(point[i]);
      }
      rep.witness = {{"point", pt}, {"lhs", std::to_string(*a)}, {"rhs", std::to_string(*b)},
                     {"trial", std::to_string(rep.checks)}};
      return rep;
    }
  }
  return rep;
}

std::optional<LemmaSums> evaluate_lemma_sum(const ModField& F, int L, std::int64_t N,
                                            std::uint64_t X, std::uint64_t YB, std::uint64_t u,
                                            std::optional<Perturbation> flip, int flip_residue) {
  if (L < 1 || N < 0) throw BadParameters("lemma sum: need L >= 1 and N >= 0");
  if (X == 0 || YB == 0 || u == 0) return std::nullopt;
  const auto width = static_cast<std::size_t>(2 * N + 1);
  std::vector<std::uint64_t> xp(static_cast<std::size_t>(L + 1)), yp(width + 1);
  xp[0] = yp[0] = 1;
  for (std::size_t a = 1; a < xp.size(); ++a) xp[a] = F.mul(xp[a - 1], X);
  for (std::size_t s = 1; s < yp.size(); ++s) yp[s] = F.mul(yp[s - 1], YB);

  // P[a][r] = prod_{s<r} (1 - X^a YB^s), Q[a][r] = prod_{s<r} (1 - X^a YB^{s+1}).
  std::vector<std::vector<std::uint64_t>> P(xp.size(), std::vector<std::uint64_t>(width, 1));
  auto Q = P;
  for (std::size_t a = 0; a < xp.size(); ++a) {
    for (std::size_t r = 1; r < width; ++r) {
      P[a][r] = F.mul(P[a][r - 1], F.sub(1, F.mul(xp[a], yp[r - 1])));
      Q[a][r] = F.mul(Q[a][r - 1], F.sub(1, F.mul(xp[a], yp[r])));
    }
    if (Q[a][width - 1] == 0) return std::nullopt;
  }
  const std::size_t top = width - 1;

  std::vector<std::vector<std::uint64_t>> R(static_cast<std::size_t>(L));
  for (int d = 1; d < L; ++d) {
    const std::uint64_t base = F.sub(1, xp[static_cast<std::size_t>(d)]);
    if (base == 0) return std::nullopt;
    auto& row = R[static_cast<std::size_t>(d)];
    row.resize(width);
    for (std::size_t delta = 0; delta < width; ++delta) {
      const std::uint64_t num =
          F.mul(F.sub(1, F.mul(xp[static_cast<std::size_t>(d)], yp[delta])),
                P[static_cast<std::size_t>(d + 1)][delta]);
      const std::uint64_t den = F.mul(base, Q[static_cast<std::size_t>(d - 1)][delta]);
      row[delta] = F.mul(num, F.inv(den));
    }
  }

  std::vector<std::vector<std::uint64_t>> T(static_cast<std::size_t>(L),
                                            std::vector<std::uint64_t>(width));
  const std::uint64_t u_inv = F.inv(u), x_inv = F.inv(X);
  for (int i = 1; i <= L; ++i) {
    const auto lo = static_cast<std::size_t>(i - 1), hi = static_cast<std::size_t>(L - i);
    const std::uint64_t xi = i == 1 ? 1 : xp[lo];
    const std::uint64_t xi_inv = i == 1 ? 1 : F.pow(x_inv, lo);
    for (std::int64_t lam = -N; lam <= N; ++lam) {
      const auto c = static_cast<std::uint64_t>(lam * (lam + 1) / 2);
      std::uint64_t v = F.pow(YB, c);
      const auto al = static_cast<std::uint64_t>(lam < 0 ? -lam : lam);
      v = F.mul(v, F.pow(lam < 0 ? xi_inv : xi, al));
      v = F.mul(v, F.pow(lam < 0 ? u_inv : u, al));
      if (lam % 2 != 0) v = F.neg(v);
      const std::uint64_t den = F.mul(Q[lo][static_cast<std::size_t>(N - lam)],
                                      Q[hi][static_cast<std::size_t>(N + lam)]);
      v = F.mul(F.mul(v, Q[lo][top]), F.inv(den));
      T[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(lam + N)] = v;
    }
  }
  return LemmaEnumerator(F, L, N, std::move(T), std::move(R), flip, flip_residue).run();
}

VerificationReport verify_theorem_modular(std::int64_t m, std::int64_t n, int l,
                                          const ModularOptions& opts) {
  if (m < 0 || n < 0) throw BadParameters("theorem: m, n must be non-negative");
  if (l < 0 || l > 2) throw BadParameters("theorem: l must be 0, 1 or 2");
  if (opts.prime % 3 != 1) {
    throw BadParameters("theorem modular mode needs a prime congruent to 1 mod 3");
  }
  require_prime(opts.prime);
  const ProductSpec spec = conj1_spec(m, n);
  const MultisumParams params{m, n, l};
  const std::uint64_t omega = *ModField(opts.prime).cube_root_of_unity();
  const int residue = (3 - l) % 3;

  // Point (p, x) with q = x^3; F^l(p, x^3) is read off from F(p, w^j x).
  auto lhs = [&](const ModField& F, const std::vector<std::uint64_t>& pt)
      -> std::optional<std::uint64_t> {
    const std::uint64_t p = pt[0], x = pt[1];
    std::uint64_t acc = 0, wj = 1;
    const std::uint64_t w_inv_l = F.pow(F.inv(omega), static_cast<std::uint64_t>(l));
    std::uint64_t twist = 1;
    for (int j = 0; j < 3; ++j) {
      acc = F.add(acc, F.mul(twist, eval_spec(F, spec, p, F.mul(wj, x))));
      wj = F.mul(wj, omega);
      twist = F.mul(twist, w_inv_l);
    }
    std::uint64_t den = F.mul(3, F.pow(x, static_cast<std::uint64_t>(l)));
    if (l != 0) den = F.neg(den);
    return F.mul(acc, F.inv(den));
  };
  auto rhs = [&](const ModField& F, const std::vector<std::uint64_t>& pt)
      -> std::optional<std::uint64_t> {
    const std::uint64_t p = pt[0], x = pt[1];
    const std::uint64_t y = F.mul(x, F.mul(x, x));
    const std::uint64_t u = F.inv(F.mul(F.pow(p, static_cast<std::uint64_t>(m)), x));
    const auto sums = evaluate_lemma_sum(F, params.length(), n, p, y, u, opts.perturb, residue);
    if (!sums) return std::nullopt;
    std::uint64_t v = sums->by_residue[residue];
    v = F.mul(v, F.pow(p, static_cast<std::uint64_t>(params.prefactor_p_exp())));
    v = F.mul(v, F.pow_signed(y, params.prefactor_q_exp()));
    v = F.mul(v, F.pow_signed(x, -l));
    return params.prefactor_sign() < 0 ? F.neg(v) : v;
  };
  return run_modular("theorem", {{"m", m}, {"n", n}, {"l", l}}, 2, lhs, rhs, opts);
}

VerificationReport verify_kaneko_modular(int n_vars, std::int64_t N, const ModularOptions& opts) {
  if (n_vars < 1 || N < 0) throw BadParameters("kaneko: need n_vars >= 1 and N >= 0");
  auto lhs = [&](const ModField& F, const std::vector<std::uint64_t>& pt)
      -> std::optional<std::uint64_t> {
    const std::uint64_t z = pt[0], q = pt[1], t = pt[2];
    const std::uint64_t z_inv = F.inv(z), t_inv = F.inv(t);
    std::uint64_t acc = 1;
    for (int i = 1; i <= n_vars; ++i) {
      const std::uint64_t ti = F.pow(t, static_cast<std::uint64_t>(i - 1));
      const std::uint64_t ti_inv = F.pow(t_inv, static_cast<std::uint64_t>(i - 1));
      std::uint64_t qs = 1;
      for (std::int64_t s = 0; s < N; ++s) {
        acc = F.mul(acc, F.sub(1, F.mul(F.mul(z, ti_inv), qs)));
        qs = F.mul(qs, q);
        acc = F.mul(acc, F.sub(1, F.mul(F.mul(z_inv, ti), qs)));
      }
    }
    return acc;
  };
  auto rhs = [&](const ModField& F, const std::vector<std::uint64_t>& pt)
      -> std::optional<std::uint64_t> {
    const auto sums = evaluate_lemma_sum(F, n_vars, N, pt[2], pt[1], F.inv(pt[0]), opts.perturb);
    if (!sums) return std::nullopt;
    return sums->total;
  };
  return run_modular("kaneko", {{"nvars", n_vars}, {"N", N}}, 3, lhs, rhs, opts);
}

VerificationReport verify_general_modular(std::int64_t m, std::int64_t n, std::int64_t a,
                                          std::int64_t K, const ModularOptions& opts) {
  const ProductSpec spec = general_spec(m, n, a, K);
  const std::int64_t B = 2 * K + 1;
  auto lhs = [&](const ModField& F, const std::vector<std::uint64_t>& pt)
      -> std::optional<std::uint64_t> { return eval_spec(F, spec, pt[0], pt[1]); };
  auto rhs = [&](const ModField& F, const std::vector<std::uint64_t>& pt)
      -> std::optional<std::uint64_t> {
    const std::uint64_t p = pt[0], q = pt[1];
    const std::uint64_t u = F.inv(F.mul(F.pow(p, static_cast<std::uint64_t>(m)),
                                        F.pow(q, static_cast<std::uint64_t>(a))));
    const auto sums = evaluate_lemma_sum(F, static_cast<int>(2 * m + 1), n, p,
                                         F.pow(q, static_cast<std::uint64_t>(B)), u, opts.perturb);
    if (!sums) return std::nullopt;
    std::uint64_t v = F.mul(sums->total, F.pow(p, static_cast<std::uint64_t>(m * (m + 1) * n)));
    return F.mul(v, F.pow_signed(q, -B * m * n * n));
  };
  return run_modular("general", {{"m", m}, {"n", n}, {"a", a}, {"K", K}}, 2, lhs, rhs, opts);
}

VerificationReport verify_andrews_exact(std::int64_t n_max) {
  if (n_max < 0) throw BadParameters("andrews: n-max must be non-negative");
  VerificationReport rep = exact_report("andrews", {{"n_max", n_max}});
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const AndrewsABC abc = andrews_ABC(n);
    const BorweinParts parts = tridissect_borwein(expand(conj1_spec(0, n), 0).slice(0));
    const std::pair<const char*, std::pair<const LaurentPoly*, const LaurentPoly*>> cmp[] = {
        {"A", {&abc.A, &parts.A}}, {"B", {&abc.B, &parts.B}}, {"C", {&abc.C, &parts.C}}};
    for (const auto& [name, pr] : cmp) {
      ++rep.checks;
      if (*pr.first != *pr.second) {
        rep.pass = false;
        rep.witness = {{"n", std::to_string(n)}, {"component", name},
                       {"difference", first_difference(*pr.first, *pr.second)}};
        return rep;
      }
    }
  }
  return rep;
}

VerificationReport verify_theorem_exact(std::int64_t m, std::int64_t n, std::optional<int> only,
                                        const SumOptions& opts) {
  if (only && (*only < 0 || *only > 2)) throw BadParameters("theorem: l must be 0, 1 or 2");
  VerificationReport rep = exact_report("theorem", {{"m", m}, {"n", n}});
  if (only) rep.params["l"] = *only;
  const auto comps = dissect_components(full_product(conj1_spec(m, n)));
  for (int l = 0; l < 3; ++l) {
    if (only && l != *only) continue;
    const LaurentPoly F = theorem_multisum({m, n, l}, opts);
    ++rep.checks;
    if (F != comps[static_cast<std::size_t>(l)]) {
      rep.pass = false;
      rep.witness = {{"l", std::to_string(l)},
                     {"difference", first_difference(F, comps[static_cast<std::size_t>(l)])}};
      return rep;
    }
  }
  return rep;
}

VerificationReport verify_kaneko_exact(int n_vars, std::int64_t N, const SumOptions& opts) {
  VerificationReport rep = exact_report("kaneko", {{"nvars", n_vars}, {"N", N}});
  const LaurentPoly lhs = kaneko_product_lhs(n_vars, N);
  const LaurentPoly rhs = kaneko_sum_rhs(n_vars, N, opts);
  rep.checks = 1;
  if (lhs != rhs) {
    rep.pass = false;
    rep.witness = {{"difference", first_difference(rhs, lhs)}};
  }
  return rep;
}

VerificationReport verify_general_exact(std::int64_t m, std::int64_t n, std::int64_t a,
                                        std::int64_t K, const SumOptions& opts) {
  VerificationReport rep = exact_report("general", {{"m", m}, {"n", n}, {"a", a}, {"K", K}});
  const LaurentPoly lhs = full_product(general_spec(m, n, a, K));
  const LaurentPoly rhs = general_multisum(m, n, a, K, opts);
  rep.checks = 1;
  if (lhs != rhs) {
    rep.pass = false;
    rep.witness = {{"difference", first_difference(rhs, lhs)}};
  }
  return rep;
}

}  // namespace borwein
