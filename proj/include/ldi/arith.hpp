#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ldi {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

}  // namespace checked

/// Least non-negative residue of a modulo m (m > 0).
constexpr Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Balanced residue in (-m/2, m/2].
constexpr Int balanced_mod(Int a, Int m) {
  Int r = mod(a, m);
  return 2 * r > m ? r - m : r;
}

constexpr bool is_prime(Int p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (Int d = 5; d * d <= p; d += 6)
    if (p % d == 0 || p % (d + 2) == 0) return false;
  return true;
}

inline void require_prime(Int p, const char* what = "modulus") {
  if (!is_prime(p))
    throw std::invalid_argument(std::string(what) + " must be prime, got " + std::to_string(p));
}

/// Inverse of a modulo prime p. Throws if a ≡ 0.
inline Int inverse_mod(Int a, Int p) {
  Int r0 = p, r1 = mod(a, p);
  if (r1 == 0) throw std::domain_error("zero has no inverse mod " + std::to_string(p));
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return mod(t0, p);
}

inline Int mul_mod(Int a, Int b, Int p) {
  return static_cast<Int>((static_cast<__int128>(mod(a, p)) * mod(b, p)) % p);
}

inline BigInt ipow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline Int next_prime_above(Int v) {
  Int p = v < 2 ? 2 : v + 1;
  while (!is_prime(p)) ++p;
  return p;
}

inline Int next_prime_above(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<Int>::max() / 2))
    throw overflow_error("prime search beyond 64-bit range");
  return next_prime_above(static_cast<Int>(v));
}

}  // namespace ldi
