#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace noncyc {

constexpr bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    std::size_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

/// (p, k) with n = p^k, k >= 1, or nullopt when n is not a prime power.
inline std::optional<std::pair<std::size_t, std::size_t>> as_prime_power(std::size_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

constexpr std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Largest power of p dividing n.
constexpr std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

constexpr std::size_t powmod(std::size_t b, std::size_t e, std::size_t m) {
  std::size_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace noncyc
