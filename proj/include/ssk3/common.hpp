#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ssk3 {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// A construction-time or postcondition consistency check failed.
class SelfCheckError : public std::runtime_error {
 public:
  explicit SelfCheckError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested object exists only over a proper extension of the
/// configured working field.
class UnrepresentableError : public std::runtime_error {
 public:
  explicit UnrepresentableError(const std::string& what) : std::runtime_error(what) {}
};

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 inv_mod(u64 a, u64 m);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

/// Prime factorization, ascending. Trial division plus Brent's rho.
std::vector<std::pair<u64, int>> factorize(u64 n);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
u64 mult_order_mod(u64 a, u64 n);

/// base^exp, throwing std::overflow_error if the result would exceed limit.
u64 checked_pow(u64 base, unsigned exp, u64 limit);

}  // namespace ssk3
