#include "ssk3/common.hpp"

#include <algorithm>
#include <numeric>

namespace ssk3 {

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    i64 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::invalid_argument("inv_mod: argument not invertible");
  if (t < 0) t += static_cast<i64>(m);
  return static_cast<u64>(t);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

u64 brent_rho(u64 n) {
  // n is odd, composite, and not a prime power handled upstream.
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int steps = 0;
    while (d == 1) {
      x = (mul_mod(x, x, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      q = mul_mod(q, diff, n);
      if (++steps % 64 == 0) {
        d = std::gcd(q, n);
        if (d != 1) break;
      }
    }
    if (d == 1) d = std::gcd(q, n);
    if (d != 1 && d != n) return d;
    // retry with a fresh polynomial offset on failure or full cycle
  }
}

void factor_rec(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = brent_rho(n);
  factor_rec(d, primes);
  factor_rec(n / d, primes);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<u64> primes;
  for (u64 p = 2; p <= 997 && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

u64 mult_order_mod(u64 a, u64 n) {
  if (n == 0) throw std::invalid_argument("mult_order_mod: modulus must be positive");
  if (n == 1) return 1;
  a %= n;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("mult_order_mod: argument not a unit");
  u64 x = a, k = 1;
  while (x != 1) {
    x = mul_mod(x, a, n);
    if (++k > n) throw std::logic_error("mult_order_mod: order search overran the group");
  }
  return k;
}

u64 checked_pow(u64 base, unsigned exp, u64 limit) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) throw std::overflow_error("checked_pow: result exceeds limit");
    r *= base;
  }
  return r;
}

}  // namespace ssk3
