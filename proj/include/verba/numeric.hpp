#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace verba {

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Prime factorisation as (prime, multiplicity) pairs in increasing order.
[[nodiscard]] std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Number of prime divisors of n counted with multiplicity; nu(1) = 0.
[[nodiscard]] unsigned nu(std::uint64_t n);

/// The prime p when n = p^k with k >= 1.
[[nodiscard]] std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

/// log_p(n) for an exact power of p.
[[nodiscard]] unsigned exact_log(std::uint64_t n, std::uint64_t p);

[[nodiscard]] std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept;

/// Non-negative residue of a mod m.
[[nodiscard]] inline std::int64_t mod(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
[[nodiscard]] std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
[[nodiscard]] std::uint64_t multiplicative_order(std::int64_t a, std::int64_t m);

}  // namespace verba
