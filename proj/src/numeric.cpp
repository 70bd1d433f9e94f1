#include "verba/numeric.hpp"

#include <numeric>

#include "verba/error.hpp"

namespace verba {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k) out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

unsigned nu(std::uint64_t n) {
  unsigned total = 0;
  for (auto [p, k] : factorize(n)) total += k;
  return total;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front().first;
}

unsigned exact_log(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n > 1) {
    if (n % p) throw Error(ErrorKind::InvalidArgument, "not an exact prime power");
    n /= p;
    ++k;
  }
  return k;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error(ErrorKind::InvalidArgument, "value is not invertible");
  return mod(old_s, m);
}

std::uint64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (std::gcd(mod(a, m), m) != 1) throw Error(ErrorKind::InvalidArgument, "not a unit");
  std::uint64_t k = 1;
  std::int64_t x = mod(a, m);
  while (x != 1 % m) {
    x = mod(x * a, m);
    ++k;
  }
  return k;
}

}  // namespace verba
