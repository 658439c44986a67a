#include "borwein/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>

#include "borwein/errors.hpp"
#include "borwein/modular.hpp"

namespace borwein {

namespace {

constexpr std::array<char, kMaxVars> kNames = {'p', 'q', 'z', 't'};

bool term_greater(const Term& a, const Term& b) { return a.exps > b.exps; }

// Sort descending, merge equal exponents, drop zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].exps == terms[i].exps) {
      terms[i].coeff += terms[j].coeff;
      ++j;
    }
    if (sgn(terms[i].coeff) != 0) {
      if (out != i) terms[out] = std::move(terms[i]);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists, b scaled by sign.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exps > b[j].exps)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exps > a[i].exps) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      mpz_class c = sign < 0 ? mpz_class(a[i].coeff - b[j].coeff)
                             : mpz_class(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back(Term{a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents sub_exps(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] - b[i];
  return r;
}

Exponents min_exps(const LaurentPoly& f) {
  Exponents m{};
  if (f.is_zero()) return m;
  m = f.terms().front().exps;
  for (const auto& t : f.terms()) {
    for (int i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.exps[i]);
  }
  return m;
}

Exponents negate(const Exponents& e) {
  Exponents r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = -e[i];
  return r;
}

}  // namespace

char var_name(Var v) { return kNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(char c) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (kNames[i] == c) return static_cast<Var>(i);
  }
  return std::nullopt;
}

std::vector<Var> VarSet::list() const {
  std::vector<Var> out;
  for (int i = 0; i < kMaxVars; ++i) {
    if (contains(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
  }
  return out;
}

int VarSet::size() const { return static_cast<int>(list().size()); }

LaurentPoly LaurentPoly::constant(const mpz_class& c, VarSet vars) {
  LaurentPoly f(vars);
  if (sgn(c) != 0) f.terms_.push_back(Term{Exponents{}, c});
  return f;
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, const Exponents& e, VarSet vars) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (e[i] != 0) vars.insert(static_cast<Var>(i));
  }
  LaurentPoly f(vars);
  if (sgn(c) != 0) f.terms_.push_back(Term{e, c});
  return f;
}

LaurentPoly LaurentPoly::power(Var v, std::int32_t e, const mpz_class& c) {
  Exponents x{};
  exp_of(x, v) = e;
  return monomial(c, x, VarSet{v});
}

LaurentPoly LaurentPoly::from_terms(VarSet vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.exps[i] != 0) vars.insert(static_cast<Var>(i));
    }
  }
  canonicalize(terms);
  LaurentPoly f(vars);
  f.terms_ = std::move(terms);
  return f;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exponents{});
}

mpz_class LaurentPoly::coeff(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& x) { return t.exps > x; });
  if (it != terms_.end() && it->exps == e) return it->coeff;
  return 0;
}

mpz_class LaurentPoly::coeff(Var v, std::int32_t e) const {
  Exponents x{};
  exp_of(x, v) = e;
  return coeff(x);
}

std::optional<ExponentRange> LaurentPoly::range(Var v) const {
  if (terms_.empty()) return std::nullopt;
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : terms_) {
    lo = std::min<std::int64_t>(lo, exp_of(t.exps, v));
    hi = std::max<std::int64_t>(hi, exp_of(t.exps, v));
  }
  return ExponentRange{v, lo, hi};
}

LaurentPoly LaurentPoly::with_vars(VarSet extra) const {
  LaurentPoly f = *this;
  f.vars_ = vars_ | extra;
  return f;
}

LaurentPoly LaurentPoly::shifted(const Exponents& e, const mpz_class& c) const {
  LaurentPoly f(vars_);
  if (sgn(c) == 0) return f;
  for (int i = 0; i < kMaxVars; ++i) {
    if (e[i] != 0) f.vars_.insert(static_cast<Var>(i));
  }
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back(Term{add_exps(t.exps, e), t.coeff * c});
  // A monomial shift preserves the lex order; a negative scale keeps it too.
  return f;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f = *this;
  for (auto& t : f.terms_) t.coeff = -t.coeff;
  return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, +1);
  vars_ = vars_ | o.vars_;
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, -1);
  vars_ = vars_ | o.vars_;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = mul(*this, o);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  return mul_truncated(a, b, Var::p, std::numeric_limits<std::int64_t>::max());
}

LaurentPoly mul_truncated(const LaurentPoly& a, const LaurentPoly& b, Var v,
                          std::int64_t max_deg) {
  const VarSet vars = a.vars() | b.vars();
  if (a.is_zero() || b.is_zero()) return LaurentPoly(vars);
  // Multiplying by a single term keeps the order; no sort needed.
  if (b.size() == 1 || a.size() == 1) {
    const LaurentPoly& mono = b.size() == 1 ? b : a;
    const LaurentPoly& other = b.size() == 1 ? a : b;
    const Term& m = mono.terms().front();
    std::vector<Term> out;
    out.reserve(other.size());
    for (const auto& t : other.terms()) {
      const Exponents e = add_exps(t.exps, m.exps);
      if (exp_of(e, v) > max_deg) continue;
      out.push_back(Term{e, t.coeff * m.coeff});
    }
    return LaurentPoly::from_terms(vars, std::move(out));
  }
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      const std::int64_t d = std::int64_t{exp_of(x.exps, v)} + exp_of(y.exps, v);
      if (d > max_deg) continue;
      out.push_back(Term{add_exps(x.exps, y.exps), x.coeff * y.coeff});
    }
  }
  return LaurentPoly::from_terms(vars, std::move(out));
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw BadParameters("exact_div: division by the zero polynomial");
  const VarSet vars = num.vars() | den.vars();
  if (num.is_zero()) return LaurentPoly(vars);

  const Exponents num_shift = negate(min_exps(num));
  const Exponents den_shift = negate(min_exps(den));
  const LaurentPoly n0 = num.shifted(num_shift);
  const LaurentPoly d0 = den.shifted(den_shift);
  const Term& lead = d0.terms().front();

  std::map<Exponents, mpz_class, std::greater<>> rem;
  for (const auto& t : n0.terms()) rem.emplace(t.exps, t.coeff);

  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    bool ok = mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t()) != 0;
    for (int i = 0; ok && i < kMaxVars; ++i) ok = it->first[i] >= lead.exps[i];
    if (!ok) {
      Term lt{sub_exps(it->first, num_shift), it->second};
      throw NotDivisible("exact_div: nonzero remainder", to_string(lt));
    }
    const Exponents qe = sub_exps(it->first, lead.exps);
    const mpz_class qc = it->second / lead.coeff;
    for (const auto& t : d0.terms()) {
      const Exponents e = add_exps(qe, t.exps);
      auto [pos, inserted] = rem.try_emplace(e, 0);
      pos->second -= qc * t.coeff;
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
    quotient.push_back(Term{qe, qc});
  }
  const LaurentPoly q = LaurentPoly::from_terms(vars, std::move(quotient));
  return q.shifted(sub_exps(den_shift, num_shift));
}

LaurentPoly substitute_power(const LaurentPoly& f, Var v, std::int32_t d) {
  if (d == 0) throw BadParameters("substitute_power: exponent multiplier must be nonzero");
  std::vector<Term> out = f.terms();
  for (auto& t : out) {
    const std::int64_t e = std::int64_t{exp_of(t.exps, v)} * d;
    if (e > std::numeric_limits<std::int32_t>::max() ||
        e < std::numeric_limits<std::int32_t>::min()) {
      throw std::overflow_error("substitute_power: exponent overflow");
    }
    exp_of(t.exps, v) = static_cast<std::int32_t>(e);
  }
  return LaurentPoly::from_terms(f.vars(), std::move(out));
}

LaurentPoly coefficient(const LaurentPoly& f, Var v, std::int32_t k) {
  VarSet vars = f.vars();
  vars.erase(v);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (exp_of(t.exps, v) != k) continue;
    Term c = t;
    exp_of(c.exps, v) = 0;
    out.push_back(std::move(c));
  }
  return LaurentPoly::from_terms(vars, std::move(out));
}

std::uint64_t eval_mod(const LaurentPoly& f, const std::map<Var, std::int64_t>& point,
                       std::uint64_t prime) {
  const ModField field(prime);
  std::array<std::uint64_t, kMaxVars> value{};
  std::array<bool, kMaxVars> used{};
  for (const auto& t : f.terms()) {
    for (int i = 0; i < kMaxVars; ++i) used[i] = used[i] || t.exps[i] != 0;
  }
  for (int i = 0; i < kMaxVars; ++i) {
    if (!used[i]) continue;
    const auto it = point.find(static_cast<Var>(i));
    if (it == point.end()) {
      throw BadParameters(std::string("eval_mod: no value for variable ") + kNames[i]);
    }
    value[i] = field.reduce(it->second);
    if (value[i] == 0) {
      throw NonInvertiblePoint(std::string("eval_mod: variable ") + kNames[i] +
                               " is zero mod the prime");
    }
  }
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = mpz_fdiv_ui(t.coeff.get_mpz_t(), prime);
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.exps[i] != 0) v = field.mul(v, field.pow_signed(value[i], t.exps[i]));
    }
    acc = field.add(acc, v);
  }
  return acc;
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  bool has_var = false;
  for (int i = 0; i < kMaxVars; ++i) has_var = has_var || t.exps[i] != 0;
  if (!has_var) {
    os << t.coeff.get_str();
    return os.str();
  }
  if (t.coeff == -1) {
    os << '-';
  } else if (t.coeff != 1) {
    os << t.coeff.get_str() << '*';
  }
  bool first = true;
  for (int i = 0; i < kMaxVars; ++i) {
    if (t.exps[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << kNames[i];
    if (t.exps[i] != 1) os << '^' << t.exps[i];
  }
  return os.str();
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::string s = to_string(*it);
    if (out.empty()) {
      out = s;
    } else if (s.front() == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    terms.push_back(term(sign));
    for (skip(); pos_ < s_.size(); skip()) {
      const char c = take();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return terms;
  }

 private:
  Term term(int sign) {
    Term t{Exponents{}, sign};
    bool any = false;
    for (;;) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= mpz_class(digits());
      } else if (auto v = var_from_name(c)) {
        take();
        std::int64_t e = 1;
        skip();
        if (peek() == '^') {
          take();
          skip();
          const bool paren = peek() == '(';
          if (paren) take();
          skip();
          int esign = 1;
          if (peek() == '-' || peek() == '+') esign = take() == '-' ? -1 : 1;
          e = esign * std::stoll(digits());
          skip();
          if (paren && take() != ')') fail("expected ')'");
        }
        exp_of(t.exps, *v) += static_cast<std::int32_t>(e);
      } else {
        break;
      }
      any = true;
      skip();
      if (peek() == '*') take();
    }
    if (!any) fail("expected a term");
    return t;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse_laurent: " + msg + " at offset " + std::to_string(pos_) +
                     " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, VarSet vars) {
  return LaurentPoly::from_terms(vars, Parser(text).parse());
}

}  // namespace borwein
