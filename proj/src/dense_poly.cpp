#include "borwein/dense_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace borwein {

namespace {

const mpz_class& zero_mpz() {
  static const mpz_class z = 0;
  return z;
}

}  // namespace

// ---- DenseUnivariate ------------------------------------------------------

DenseUnivariate DenseUnivariate::constant(long c) {
  DenseUnivariate d;
  if (c != 0) d.c_.emplace_back(c);
  return d;
}

bool DenseUnivariate::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& v) { return sgn(v) == 0; });
}

void DenseUnivariate::ensure_range(std::int64_t lo, std::int64_t hi) {
  if (c_.empty()) {
    offset_ = lo;
    c_.resize(static_cast<std::size_t>(hi - lo + 1));
    return;
  }
  const std::int64_t cur_hi = offset_ + static_cast<std::int64_t>(c_.size()) - 1;
  // Grow with slack so repeated small extensions stay amortized O(1); the
  // extra zero cells are trimmed at the end.
  const auto slack = static_cast<std::int64_t>(c_.size() / 4);
  if (lo < offset_) lo -= slack;
  if (hi > cur_hi) hi += slack;
  if (lo < offset_) {
    std::vector<mpz_class> grown(static_cast<std::size_t>(cur_hi - lo + 1));
    std::move(c_.begin(), c_.end(), grown.begin() + (offset_ - lo));
    c_ = std::move(grown);
    offset_ = lo;
  }
  if (hi > cur_hi) c_.resize(static_cast<std::size_t>(hi - offset_ + 1));
}

std::pair<std::size_t, std::size_t> DenseUnivariate::support() const {
  std::size_t lo = 0, hi = c_.size();
  while (lo < hi && sgn(c_[lo]) == 0) ++lo;
  while (hi > lo && sgn(c_[hi - 1]) == 0) --hi;
  return {lo, hi};
}

void DenseUnivariate::sub_shifted(const DenseUnivariate& src, std::int64_t shift) {
  if (&src == this) throw std::logic_error("sub_shifted: aliasing source");
  const auto [first, last] = src.support();
  if (first == last) return;
  const std::int64_t lo = src.offset_ + static_cast<std::int64_t>(first) + shift;
  const std::int64_t hi = lo + static_cast<std::int64_t>(last - first) - 1;
  ensure_range(lo, hi);
  mpz_class* dst = c_.data() + (lo - offset_);
  const mpz_class* from = src.c_.data() + first;
  for (std::size_t i = 0; i < last - first; ++i) {
    if (sgn(from[i]) == 0) continue;
    mpz_sub(dst[i].get_mpz_t(), dst[i].get_mpz_t(), from[i].get_mpz_t());
  }
}

void DenseUnivariate::mul_binomial(std::int64_t shift) {
  const auto [first, last] = support();
  if (first == last) return;
  if (shift == 0) {
    c_.clear();
    return;
  }
  const std::int64_t lo = offset_ + static_cast<std::int64_t>(first);
  const std::int64_t hi = offset_ + static_cast<std::int64_t>(last) - 1;
  if (shift > 0) {
    ensure_range(lo, hi + shift);
    const auto base = static_cast<std::size_t>(lo - offset_);
    const auto top = static_cast<std::size_t>(hi + shift - offset_);
    for (std::size_t i = top; i >= base + static_cast<std::size_t>(shift); --i) {
      const mpz_class& s = c_[i - static_cast<std::size_t>(shift)];
      if (sgn(s) != 0) mpz_sub(c_[i].get_mpz_t(), c_[i].get_mpz_t(), s.get_mpz_t());
    }
  } else {
    const auto s = static_cast<std::size_t>(-shift);
    ensure_range(lo + shift, hi);
    const auto base = static_cast<std::size_t>(lo + shift - offset_);
    const auto top = static_cast<std::size_t>(hi - offset_);
    for (std::size_t i = base; i + s <= top; ++i) {
      const mpz_class& v = c_[i + s];
      if (sgn(v) != 0) mpz_sub(c_[i].get_mpz_t(), c_[i].get_mpz_t(), v.get_mpz_t());
    }
  }
}

void DenseUnivariate::trim() {
  std::size_t lo = 0;
  while (lo < c_.size() && sgn(c_[lo]) == 0) ++lo;
  if (lo == c_.size()) {
    c_.clear();
    offset_ = 0;
    return;
  }
  std::size_t hi = c_.size();
  while (sgn(c_[hi - 1]) == 0) --hi;
  c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(hi), c_.end());
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lo));
  offset_ += static_cast<std::int64_t>(lo);
}

LaurentPoly DenseUnivariate::to_laurent(Var v) const {
  std::vector<Term> terms;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    Term t;
    exp_of(t.exps, v) = static_cast<std::int32_t>(offset_ + static_cast<std::int64_t>(i));
    t.coeff = c_[i];
    terms.push_back(std::move(t));
  }
  return LaurentPoly::from_terms(VarSet{v}, std::move(terms));
}

// ---- DenseBivariate -------------------------------------------------------

DenseBivariate DenseBivariate::monomial(long sign, std::int32_t ex, std::int32_t ey) {
  DenseBivariate d;
  if (sign == 0) return d;
  d.x0_ = ex;
  d.y0_ = ey;
  d.nx_ = d.ny_ = 1;
  d.c_.emplace_back(sign);
  return d;
}

DenseBivariate DenseBivariate::from_laurent(const LaurentPoly& f, Var x, Var y) {
  DenseBivariate d;
  const auto rx = f.range(x);
  const auto ry = f.range(y);
  if (!rx) return d;
  d.reshape(static_cast<std::int32_t>(rx->min), static_cast<std::int32_t>(ry->min),
            static_cast<std::int32_t>(rx->max - rx->min + 1),
            static_cast<std::int32_t>(ry->max - ry->min + 1));
  for (const auto& t : f.terms()) {
    for (int i = 0; i < kMaxVars; ++i) {
      const auto v = static_cast<Var>(i);
      if (v != x && v != y && t.exps[i] != 0) {
        throw std::invalid_argument("DenseBivariate: polynomial has a third variable");
      }
    }
    d.cell(exp_of(t.exps, x) - d.x0_, exp_of(t.exps, y) - d.y0_) = t.coeff;
  }
  return d;
}

bool DenseBivariate::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& v) { return sgn(v) == 0; });
}

const mpz_class& DenseBivariate::at(std::int32_t ex, std::int32_t ey) const {
  const std::int32_t i = ex - x0_, j = ey - y0_;
  if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return zero_mpz();
  return cell(i, j);
}

void DenseBivariate::reshape(std::int32_t x0, std::int32_t y0, std::int32_t nx,
                             std::int32_t ny) {
  std::vector<mpz_class> next(std::size_t(nx) * std::size_t(ny));
  // Copy the overlap of the old and new boxes.
  const std::int32_t ilo = std::max(x0, x0_), ihi = std::min(x0 + nx, x0_ + nx_);
  const std::int32_t jlo = std::max(y0, y0_), jhi = std::min(y0 + ny, y0_ + ny_);
  for (std::int32_t ex = ilo; ex < ihi; ++ex) {
    for (std::int32_t ey = jlo; ey < jhi; ++ey) {
      next[std::size_t(ex - x0) * ny + (ey - y0)] = std::move(cell(ex - x0_, ey - y0_));
    }
  }
  c_ = std::move(next);
  x0_ = x0;
  y0_ = y0;
  nx_ = nx;
  ny_ = ny;
}

void DenseBivariate::mul_binomial(std::int32_t a, std::int32_t b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0)) {
    throw std::invalid_argument("mul_binomial: exponents must be non-negative, not both zero");
  }
  if (c_.empty()) return;
  reshape(x0_, y0_, nx_ + a, ny_ + b);
  for (std::int32_t i = nx_ - 1; i >= a; --i) {
    mpz_class* row = &cell(i, 0);
    const mpz_class* src = &cell(i - a, 0);
    for (std::int32_t j = ny_ - 1; j >= b; --j) {
      const mpz_class& s = src[j - b];
      if (sgn(s) != 0) mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), s.get_mpz_t());
    }
  }
}

bool DenseBivariate::try_div_binomial(std::int32_t a, std::int32_t b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0)) {
    throw std::invalid_argument("try_div_binomial: bad exponents");
  }
  if (is_zero()) return true;
  if (a >= nx_ || b >= ny_) return false;
  if (!line_sums_vanish(a, b)) return false;
  // Power-series quotient over the whole box, in increasing lex order.
  for (std::int32_t i = a; i < nx_; ++i) {
    mpz_class* row = &cell(i, 0);
    const mpz_class* src = &cell(i - a, 0);
    for (std::int32_t j = b; j < ny_; ++j) {
      const mpz_class& s = src[j - b];
      if (sgn(s) != 0) mpz_add(row[j].get_mpz_t(), row[j].get_mpz_t(), s.get_mpz_t());
    }
  }
  // Divisible iff the quotient vanishes outside [0, nx-a) x [0, ny-b).
  bool ok = true;
  for (std::int32_t i = 0; ok && i < nx_; ++i) {
    const std::int32_t jstart = i >= nx_ - a ? 0 : ny_ - b;
    for (std::int32_t j = jstart; j < ny_; ++j) {
      if (sgn(cell(i, j)) != 0) {
        ok = false;
        break;
      }
    }
  }
  if (!ok) {
    for (std::int32_t i = nx_ - 1; i >= a; --i) {
      mpz_class* row = &cell(i, 0);
      const mpz_class* src = &cell(i - a, 0);
      for (std::int32_t j = ny_ - 1; j >= b; --j) {
        const mpz_class& s = src[j - b];
        if (sgn(s) != 0) mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), s.get_mpz_t());
      }
    }
    return false;
  }
  reshape(x0_, y0_, nx_ - a, ny_ - b);
  trim();
  return true;
}

namespace {

// Low 64 bits of v as a two's-complement value.
std::uint64_t low_bits(const mpz_class& v) {
  const mpz_srcptr z = v.get_mpz_t();
  if (z->_mp_size == 0) return 0;
  const auto lo = static_cast<std::uint64_t>(z->_mp_d[0]);
  return z->_mp_size > 0 ? lo : 0 - lo;
}

}  // namespace

// Modulo (1 - X^a Y^b) every monomial on a line of direction (a, b) is
// identified, so divisibility forces each line's coefficient sum to vanish.
// Sums are taken mod 2^64: a necessary condition only.
bool DenseBivariate::line_sums_vanish(std::int32_t a, std::int32_t b) const {
  std::vector<std::uint64_t> sums;
  std::size_t width = 0;
  std::int64_t shift = 0;
  if (a == 0) {
    width = std::size_t(b);
    sums.assign(std::size_t(nx_) * width, 0);
  } else {
    shift = std::int64_t{b} * ((nx_ - 1) / a);
    width = std::size_t(ny_ + shift);
    sums.assign(std::size_t(a) * width, 0);
  }
  for (std::int32_t i = 0; i < nx_; ++i) {
    const mpz_class* row = &cell(i, 0);
    std::uint64_t* line;
    if (a == 0) {
      line = &sums[std::size_t(i) * width];
      for (std::int32_t j = 0; j < ny_; ++j) line[j % b] += low_bits(row[j]);
    } else {
      line = &sums[std::size_t(i % a) * width + std::size_t(shift - std::int64_t{b} * (i / a))];
      for (std::int32_t j = 0; j < ny_; ++j) line[j] += low_bits(row[j]);
    }
  }
  return std::all_of(sums.begin(), sums.end(), [](std::uint64_t v) { return v == 0; });
}

void DenseBivariate::mul_binomials(const std::vector<std::pair<std::int32_t, std::int32_t>>& fs) {
  if (c_.empty() || fs.empty()) return;
  std::int32_t ta = 0, tb = 0;
  for (const auto& [a, b] : fs) {
    if (a < 0 || b < 0 || (a == 0 && b == 0)) {
      throw std::invalid_argument("mul_binomial: exponents must be non-negative, not both zero");
    }
    ta += a;
    tb += b;
  }
  std::int32_t ux = nx_, uy = ny_;
  reshape(x0_, y0_, nx_ + ta, ny_ + tb);
  for (const auto& [a, b] : fs) {
    ux += a;
    uy += b;
    for (std::int32_t i = ux - 1; i >= a; --i) {
      mpz_class* row = &cell(i, 0);
      const mpz_class* src = &cell(i - a, 0);
      for (std::int32_t j = uy - 1; j >= b; --j) {
        const mpz_class& s = src[j - b];
        if (sgn(s) != 0) mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), s.get_mpz_t());
      }
    }
  }
}

DenseBivariate& DenseBivariate::operator+=(const DenseBivariate& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    *this = o;
    return *this;
  }
  const std::int32_t x0 = std::min(x0_, o.x0_), y0 = std::min(y0_, o.y0_);
  const std::int32_t x1 = std::max(x0_ + nx_, o.x0_ + o.nx_);
  const std::int32_t y1 = std::max(y0_ + ny_, o.y0_ + o.ny_);
  if (x0 != x0_ || y0 != y0_ || x1 != x0_ + nx_ || y1 != y0_ + ny_) {
    reshape(x0, y0, x1 - x0, y1 - y0);
  }
  for (std::int32_t i = 0; i < o.nx_; ++i) {
    mpz_class* row = &cell(o.x0_ + i - x0_, o.y0_ - y0_);
    const mpz_class* src = &o.cell(i, 0);
    for (std::int32_t j = 0; j < o.ny_; ++j) {
      if (sgn(src[j]) != 0) mpz_add(row[j].get_mpz_t(), row[j].get_mpz_t(), src[j].get_mpz_t());
    }
  }
  return *this;
}

void DenseBivariate::negate() {
  for (auto& v : c_) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
}

void DenseBivariate::trim() {
  std::int32_t ilo = nx_, ihi = -1, jlo = ny_, jhi = -1;
  for (std::int32_t i = 0; i < nx_; ++i) {
    for (std::int32_t j = 0; j < ny_; ++j) {
      if (sgn(cell(i, j)) == 0) continue;
      ilo = std::min(ilo, i);
      ihi = std::max(ihi, i);
      jlo = std::min(jlo, j);
      jhi = std::max(jhi, j);
    }
  }
  if (ihi < 0) {
    c_.clear();
    x0_ = y0_ = nx_ = ny_ = 0;
    return;
  }
  if (ilo == 0 && jlo == 0 && ihi == nx_ - 1 && jhi == ny_ - 1) return;
  reshape(x0_ + ilo, y0_ + jlo, ihi - ilo + 1, jhi - jlo + 1);
}

LaurentPoly DenseBivariate::to_laurent(Var x, Var y) const {
  std::vector<Term> terms;
  for (std::int32_t i = 0; i < nx_; ++i) {
    for (std::int32_t j = 0; j < ny_; ++j) {
      if (sgn(cell(i, j)) == 0) continue;
      Term t;
      exp_of(t.exps, x) = x0_ + i;
      exp_of(t.exps, y) = y0_ + j;
      t.coeff = cell(i, j);
      terms.push_back(std::move(t));
    }
  }
  return LaurentPoly::from_terms(VarSet{x, y}, std::move(terms));
}

}  // namespace borwein
