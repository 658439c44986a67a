#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace borwein {

// The four indeterminates that occur anywhere in the library. Their
// enumeration order is the lexicographic monomial order.
enum class Var : std::uint8_t { p = 0, q = 1, z = 2, t = 3 };

inline constexpr int kMaxVars = 4;

char var_name(Var v);
std::optional<Var> var_from_name(char c);

// Ordered subset of {p, q, z, t}.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<Var> vs) {
    for (Var v : vs) bits_ |= bit(v);
  }

  static constexpr VarSet from_bits(std::uint8_t bits) {
    VarSet s;
    s.bits_ = bits & 0x0f;
    return s;
  }

  constexpr bool contains(Var v) const { return (bits_ & bit(v)) != 0; }
  constexpr void insert(Var v) { bits_ |= bit(v); }
  constexpr void erase(Var v) { bits_ &= static_cast<std::uint8_t>(~bit(v)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr VarSet operator|(VarSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr bool operator==(const VarSet&) const = default;

  std::vector<Var> list() const;
  int size() const;

 private:
  static constexpr std::uint8_t bit(Var v) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(v));
  }
  std::uint8_t bits_ = 0;
};

// Exponent vector indexed by Var; slots of absent variables hold 0, which
// makes every polynomial implicitly live in Z[p^±1, q^±1, z^±1, t^±1].
using Exponents = std::array<std::int32_t, kMaxVars>;

inline std::int32_t& exp_of(Exponents& e, Var v) { return e[static_cast<int>(v)]; }
inline std::int32_t exp_of(const Exponents& e, Var v) { return e[static_cast<int>(v)]; }

struct Term {
  Exponents exps{};
  mpz_class coeff;

  bool operator==(const Term& o) const { return exps == o.exps && coeff == o.coeff; }
};

struct ExponentRange {
  Var var;
  std::int64_t min;
  std::int64_t max;
};

// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
//
// Terms are kept sorted by exponent vector in descending lexicographic
// order on (p, q, z, t) and no stored coefficient is zero, so two values are
// equal iff their term lists are equal.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(VarSet vars) : vars_(vars) {}

  static LaurentPoly constant(const mpz_class& c, VarSet vars = {});
  static LaurentPoly monomial(const mpz_class& c, const Exponents& e, VarSet vars);
  // c * v^e
  static LaurentPoly power(Var v, std::int32_t e, const mpz_class& c = 1);
  // Accepts unsorted terms with repeats and zeros.
  static LaurentPoly from_terms(VarSet vars, std::vector<Term> terms);

  VarSet vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  mpz_class coeff(const Exponents& e) const;
  // Coefficient of q^e for a polynomial in q alone (other exponents zero).
  mpz_class coeff(Var v, std::int32_t e) const;

  // Empty for the zero polynomial.
  std::optional<ExponentRange> range(Var v) const;

  // Same polynomial, variable set enlarged.
  LaurentPoly with_vars(VarSet extra) const;

  // Multiply by c * x^e.
  LaurentPoly shifted(const Exponents& e, const mpz_class& c = 1) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Mathematical equality; the declared variable sets are not compared.
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

 private:
  VarSet vars_;
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

// mul(a, b) with every term of v-degree above max_deg dropped.
LaurentPoly mul_truncated(const LaurentPoly& a, const LaurentPoly& b, Var v,
                          std::int64_t max_deg);

// Exact quotient num / den. Both operands are first multiplied by monomials
// clearing negative exponents, then reduced by leading-term elimination in
// lex order. Throws NotDivisible when a remainder survives.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

// v -> v^d on every term. d must be nonzero.
LaurentPoly substitute_power(const LaurentPoly& f, Var v, std::int32_t d);

// Coefficient of v^k, returned with v removed from the variable set.
LaurentPoly coefficient(const LaurentPoly& f, Var v, std::int32_t k);

// Value of f at `point` in Z/prime. Every variable of f must be assigned an
// integer that is invertible mod prime, else NonInvertiblePoint.
std::uint64_t eval_mod(const LaurentPoly& f, const std::map<Var, std::int64_t>& point,
                       std::uint64_t prime);

// Human-readable form in ascending order, e.g. "1 - q - q^2 + q^3".
std::string to_string(const LaurentPoly& f);
std::string to_string(const Term& t);

// Inverse of to_string; also accepts "2*p*q^-1", "q^(-3)", "3q".
LaurentPoly parse_laurent(std::string_view text, VarSet vars = {});

}  // namespace borwein
