#pragma once

#include <cstdint>
#include <optional>

namespace borwein {

// 2^62 - 57. Prime, and congruent to 1 mod 3 so it has primitive cube roots
// of unity (needed to extract residue classes of q-exponents modularly).
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

bool is_prime(std::uint64_t n);

// Arithmetic in Z/p for a prime p < 2^63.
class ModField {
 public:
  explicit ModField(std::uint64_t prime);

  std::uint64_t prime() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;
  // base^e for signed e; base must be nonzero when e < 0.
  std::uint64_t pow_signed(std::uint64_t base, std::int64_t e) const;
  // Throws std::domain_error on zero.
  std::uint64_t inv(std::uint64_t a) const;

  std::uint64_t reduce(std::int64_t v) const;

  // A primitive cube root of unity, if p = 1 mod 3.
  std::optional<std::uint64_t> cube_root_of_unity() const;

 private:
  std::uint64_t p_;
};

}  // namespace borwein
