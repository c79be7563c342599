#include "lspec/arith.hpp"

#include <algorithm>
#include <cmath>

#include "lspec/error.hpp"

namespace lspec {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 m) {
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(ErrorKind::NotCoprime, "no inverse modulo " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime(u64 n) {
  if (n <= 2) return 2;
  u64 c = n | 1;
  while (!is_prime(c)) c += 2;
  return c;
}

u64 reduce(const Integer& a, u64 m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

void for_each_prime_segment(u64 lo, u64 hi, u64 segment_size,
                            const std::function<void(const std::vector<u64>&)>& visit) {
  if (hi < 2 || lo > hi) return;
  lo = std::max<u64>(lo, 2);
  segment_size = std::max<u64>(segment_size, 1024);
  const auto base = primes_up_to(static_cast<u64>(std::sqrt(static_cast<long double>(hi))) + 1);
  std::vector<bool> composite;
  std::vector<u64> segment_primes;
  for (u64 start = lo; start <= hi; start += segment_size) {
    const u64 end = std::min(hi, start + segment_size - 1);
    composite.assign(end - start + 1, false);
    for (u64 p : base) {
      if (p * p > end) break;
      u64 first = std::max(p * p, (start + p - 1) / p * p);
      for (u64 j = first; j <= end; j += p) composite[j - start] = true;
    }
    segment_primes.clear();
    for (u64 i = start; i <= end; ++i) {
      if (!composite[i - start]) segment_primes.push_back(i);
    }
    visit(segment_primes);
    if (end == hi) break;
  }
}

u64 prime_pi(u64 n) {
  u64 count = 0;
  for_each_prime_segment(2, n, 1u << 20, [&](const std::vector<u64>& ps) { count += ps.size(); });
  return count;
}

}  // namespace lspec
