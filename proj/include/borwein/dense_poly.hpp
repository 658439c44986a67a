#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "borwein/laurent_poly.hpp"

namespace borwein {

// Dense Laurent polynomial in one variable: coefficient i belongs to
// exponent offset() + i. Used by the product expander, where every update is
// "subtract a shifted copy".
class DenseUnivariate {
 public:
  DenseUnivariate() = default;
  static DenseUnivariate constant(long c);

  bool is_zero() const;
  std::int64_t offset() const { return offset_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  // *this -= x^shift * src
  void sub_shifted(const DenseUnivariate& src, std::int64_t shift);
  // *this *= (1 - x^shift)
  void mul_binomial(std::int64_t shift);

  void trim();
  LaurentPoly to_laurent(Var v) const;

 private:
  // Index range [first, last) holding the nonzero coefficients.
  std::pair<std::size_t, std::size_t> support() const;
  void ensure_range(std::int64_t lo, std::int64_t hi);

  std::int64_t offset_ = 0;
  std::vector<mpz_class> c_;
};

// Dense Laurent polynomial in two variables X, Y over a rectangular box.
// The rational-sum engine multiplies and divides these by binomials
// (1 - X^a Y^b) with a, b >= 0 and (a, b) != (0, 0).
class DenseBivariate {
 public:
  DenseBivariate() = default;
  // sign * X^ex * Y^ey
  static DenseBivariate monomial(long sign, std::int32_t ex, std::int32_t ey);
  static DenseBivariate from_laurent(const LaurentPoly& f, Var x, Var y);

  bool is_zero() const;
  std::int32_t x0() const { return x0_; }
  std::int32_t y0() const { return y0_; }
  std::int32_t nx() const { return nx_; }
  std::int32_t ny() const { return ny_; }
  std::size_t cells() const { return c_.size(); }
  const mpz_class& at(std::int32_t ex, std::int32_t ey) const;

  void mul_binomial(std::int32_t a, std::int32_t b);
  // Product with (1 - X^a Y^b) for every (a, b) listed, in one resize.
  void mul_binomials(const std::vector<std::pair<std::int32_t, std::int32_t>>& fs);
  // Exact division by (1 - X^a Y^b). On failure the value is left unchanged
  // and false is returned.
  bool try_div_binomial(std::int32_t a, std::int32_t b);

  DenseBivariate& operator+=(const DenseBivariate& o);
  void negate();

  // Drop zero rows and columns at the borders.
  void trim();
  LaurentPoly to_laurent(Var x, Var y) const;

 private:
  mpz_class& cell(std::int32_t i, std::int32_t j) { return c_[std::size_t(i) * ny_ + j]; }
  const mpz_class& cell(std::int32_t i, std::int32_t j) const {
    return c_[std::size_t(i) * ny_ + j];
  }
  void reshape(std::int32_t x0, std::int32_t y0, std::int32_t nx, std::int32_t ny);
  bool line_sums_vanish(std::int32_t a, std::int32_t b) const;

  std::int32_t x0_ = 0, y0_ = 0;
  std::int32_t nx_ = 0, ny_ = 0;
  std::vector<mpz_class> c_;
};

}  // namespace borwein
