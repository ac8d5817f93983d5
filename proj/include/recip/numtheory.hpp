#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "recip/core.hpp"

namespace recip {

/// A value in {+1, -1}.
enum class Sign : int { negative = -1, positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::positive : Sign::negative;
}

/// (-1)^e
constexpr Sign minus_one_pow(std::uint64_t e) noexcept {
  return e % 2 == 0 ? Sign::positive : Sign::negative;
}

/// Converts an integer known to be +-1; anything else is a consistency error.
inline Sign sign_of_unit(const Integer& v) {
  if (v == 1) return Sign::positive;
  if (v == -1) return Sign::negative;
  throw consistency_error("expected +1 or -1, got " + v.str());
}

/// Deterministic primality for all 64-bit n: trial division below 1000,
/// then strong-pseudoprime tests to the first twelve prime bases, which
/// has no composite survivors below 2^64.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < 1000 && d * d <= n; ++d)
    if (n % d == 0) return n == d;
  if (n < 1000 * 1000) return true;

  using u128 = unsigned __int128;
  const auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
  };
  const auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= n;
    while (e != 0) {
      if (e & 1U) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1U;
    }
    return r;
  };

  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : bases) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// An odd prime p >= 3, checked at construction.
class OddPrime {
 public:
  explicit OddPrime(std::uint64_t p) : p_(p) {
    if (p < 3 || !is_prime(p))
      throw precondition_error(std::to_string(p) + " is not an odd prime");
  }

  std::uint64_t value() const noexcept { return p_; }
  Modulus modulus() const { return Modulus(Integer(p_)); }

  friend auto operator<=>(const OddPrime&, const OddPrime&) = default;

 private:
  std::uint64_t p_;
};

/// a^e mod n by square-and-multiply; result in [0, n).
inline Integer mod_pow(const Integer& a, std::uint64_t e, const Modulus& n) {
  Integer base = n.reduce(a);
  Integer result = n.reduce(1);
  while (e != 0) {
    if (e & 1U) result = n.reduce(result * base);
    base = n.reduce(base * base);
    e >>= 1U;
  }
  return result;
}

namespace detail {

inline void require_coprime(const Integer& a, const OddPrime& p) {
  if (p.modulus().reduce(a) == 0)
    throw precondition_error("Legendre symbol (a/p) is undefined when p divides a");
}

}  // namespace detail

/// (a/p) by Euler's criterion: a^((p-1)/2) mod p is 1 or p - 1.
inline Sign legendre_euler(const Integer& a, const OddPrime& p) {
  detail::require_coprime(a, p);
  const Integer r = mod_pow(a, (p.value() - 1) / 2, p.modulus());
  if (r == 1) return Sign::positive;
  if (r == Integer(p.value() - 1)) return Sign::negative;
  throw consistency_error("Euler's criterion produced " + r.str() + " mod " +
                          std::to_string(p.value()));
}

/// (a/p) straight from the definition: search for x with x^2 = a mod p.
inline Sign legendre_bruteforce(const Integer& a, const OddPrime& p) {
  detail::require_coprime(a, p);
  const std::uint64_t pv = p.value();
  const auto target = p.modulus().reduce(a).convert_to<std::uint64_t>();
  for (std::uint64_t x = 1; x < pv; ++x)
    if (static_cast<unsigned __int128>(x) * x % pv == target) return Sign::positive;
  return Sign::negative;
}

}  // namespace recip
