#include "borwein/rational_sum.hpp"

#include <algorithm>
#include <future>
#include <iterator>
#include <string>

#include "borwein/errors.hpp"

namespace borwein {

namespace {

using Denominator = std::map<Binomial2, int>;

struct Node {
  DenseBivariate num;
  Denominator den;
};

LaurentPoly binomial_poly(const Binomial2& f, Var x, Var y) {
  Exponents e{};
  exp_of(e, x) = f.a;
  exp_of(e, y) = f.b;
  return LaurentPoly::constant(1, VarSet{x, y}) - LaurentPoly::monomial(1, e, VarSet{x, y});
}

void reduce(Node& node) {
  if (node.num.is_zero()) {
    node.den.clear();
    return;
  }
  for (auto it = node.den.begin(); it != node.den.end();) {
    while (it->second > 0 && node.num.try_div_binomial(it->first.a, it->first.b)) --it->second;
    it = it->second == 0 ? node.den.erase(it) : std::next(it);
  }
}

Node leaf(FactoredTerm t) {
  cancel_common(t);
  Node node;
  node.num = DenseBivariate::monomial(t.sign, t.ex, t.ey);
  std::vector<std::pair<std::int32_t, std::int32_t>> fs;
  for (const auto& f : t.num) fs.emplace_back(f.a, f.b);
  node.num.mul_binomials(fs);
  for (const auto& f : t.den) ++node.den[f];
  return node;
}

void raise_to(Node& node, const Denominator& target) {
  std::vector<std::pair<std::int32_t, std::int32_t>> fs;
  for (const auto& [f, count] : target) {
    auto it = node.den.find(f);
    const int have = it == node.den.end() ? 0 : it->second;
    for (int i = have; i < count; ++i) fs.emplace_back(f.a, f.b);
  }
  node.num.mul_binomials(fs);
  node.den = target;
}

Node merge(Node a, Node b, const SumOptions& opts) {
  if (b.num.is_zero()) return a;
  if (a.num.is_zero()) return b;
  Denominator lcm = a.den;
  for (const auto& [f, count] : b.den) {
    int& c = lcm[f];
    c = std::max(c, count);
  }
  raise_to(a, lcm);
  raise_to(b, lcm);
  a.num += b.num;
  a.num.trim();
  if (opts.reduce_partials) reduce(a);
  return a;
}

Node sum_range(const std::vector<FactoredTerm>& terms, std::size_t lo, std::size_t hi,
               int parallel_depth, const SumOptions& opts) {
  if (hi - lo == 1) return leaf(terms[lo]);
  const std::size_t mid = lo + (hi - lo) / 2;
  if (parallel_depth > 0) {
    auto left = std::async(std::launch::async, [&] {
      return sum_range(terms, lo, mid, parallel_depth - 1, opts);
    });
    Node right = sum_range(terms, mid, hi, parallel_depth - 1, opts);
    return merge(left.get(), std::move(right), opts);
  }
  Node left = sum_range(terms, lo, mid, 0, opts);
  Node right = sum_range(terms, mid, hi, 0, opts);
  return merge(std::move(left), std::move(right), opts);
}

}  // namespace

void cancel_common(FactoredTerm& t) {
  std::sort(t.num.begin(), t.num.end());
  std::sort(t.den.begin(), t.den.end());
  std::vector<Binomial2> num, den;
  std::set_difference(t.num.begin(), t.num.end(), t.den.begin(), t.den.end(),
                      std::back_inserter(num));
  std::set_difference(t.den.begin(), t.den.end(), t.num.begin(), t.num.end(),
                      std::back_inserter(den));
  t.num = std::move(num);
  t.den = std::move(den);
}

LaurentPoly expand_numerator(const FactoredTerm& t, Var x, Var y) {
  Exponents e{};
  exp_of(e, x) = t.ex;
  exp_of(e, y) = t.ey;
  LaurentPoly f = LaurentPoly::monomial(t.sign, e, VarSet{x, y});
  for (const auto& b : t.num) f *= binomial_poly(b, x, y);
  return f;
}

LaurentPoly expand_denominator(const FactoredTerm& t, Var x, Var y) {
  LaurentPoly f = LaurentPoly::constant(1, VarSet{x, y});
  for (const auto& b : t.den) f *= binomial_poly(b, x, y);
  return f;
}

DenseBivariate sum_factored_terms(const std::vector<FactoredTerm>& terms,
                                  const SumOptions& opts) {
  if (terms.empty()) return DenseBivariate{};
  int depth = 0;
  while ((1 << depth) < opts.jobs) ++depth;
  Node root = sum_range(terms, 0, terms.size(), depth, opts);
  reduce(root);
  if (!root.den.empty()) {
    std::string left;
    for (const auto& [f, c] : root.den) {
      left += " (1-X^" + std::to_string(f.a) + "*Y^" + std::to_string(f.b) + ")^" +
              std::to_string(c);
    }
    throw NotPolynomial("rational sum does not reduce to a polynomial; leftover:" + left);
  }
  root.num.trim();
  return std::move(root.num);
}

}  // namespace borwein
