#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lspec {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s >= m || s < a) s -= m;
  return s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 pow_mod(u64 base, u64 exp, u64 m);
/// Inverse modulo m; requires gcd(a, m) = 1.
u64 inv_mod(u64 a, u64 m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);
u64 next_prime(u64 n);

/// a mod m as a residue in [0, m).
u64 reduce(const Integer& a, u64 m);

/// Plain sieve of Eratosthenes.
std::vector<u64> primes_up_to(u64 n);

/// Visits all primes in [lo, hi] in increasing order, one segment at a time.
/// The callback receives the primes of a single segment.
void for_each_prime_segment(u64 lo, u64 hi, u64 segment_size,
                            const std::function<void(const std::vector<u64>&)>& visit);

/// Number of primes up to n.
u64 prime_pi(u64 n);

}  // namespace lspec
