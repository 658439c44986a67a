#include "borwein/modular.hpp"

#include <gmp.h>

#include <stdexcept>

namespace borwein {

bool is_prime(std::uint64_t n) {
  mpz_t z;
  mpz_init_set_ui(z, n);
  const int r = mpz_probab_prime_p(z, 40);
  mpz_clear(z);
  return r != 0;
}

ModField::ModField(std::uint64_t prime) : p_(prime) {
  if (prime < 2 || prime >= (1ULL << 63)) {
    throw std::invalid_argument("modulus must lie in [2, 2^63)");
  }
}

std::uint64_t ModField::pow(std::uint64_t base, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  base %= p_;
  while (e != 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t ModField::pow_signed(std::uint64_t base, std::int64_t e) const {
  if (e >= 0) return pow(base, static_cast<std::uint64_t>(e));
  return pow(inv(base), static_cast<std::uint64_t>(-e));
}

std::uint64_t ModField::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("zero has no inverse");
  return pow(a, p_ - 2);
}

std::uint64_t ModField::reduce(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::optional<std::uint64_t> ModField::cube_root_of_unity() const {
  if (p_ % 3 != 1) return std::nullopt;
  for (std::uint64_t g = 2; g < p_; ++g) {
    const std::uint64_t w = pow(g, (p_ - 1) / 3);
    if (w != 1) return w;
  }
  return std::nullopt;
}

}  // namespace borwein
