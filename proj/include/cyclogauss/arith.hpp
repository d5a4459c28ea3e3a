#pragma once

// Exact integer helpers shared by every module: modular arithmetic on 64-bit
// words, primality, factorization and small-number utilities.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclogauss {

using BigInt = boost::multiprecision::cpp_int;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Prime factorization as (prime, exponent) pairs, primes ascending.
using Factorization = std::vector<std::pair<u64, unsigned>>;

namespace arith {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

Factorization factorize(u64 n);

/// All positive divisors of the factored number, ascending.
std::vector<u64> divisors(const Factorization& fac);

u64 euler_phi(const Factorization& fac);

/// p^e if it stays strictly below 2^63.
std::optional<u64> checked_pow(u64 p, unsigned e);

/// Writes n as p^w with p prime, w >= 1.
std::optional<std::pair<u64, unsigned>> as_prime_power(u64 n);

/// floor(sqrt(n)).
u64 isqrt(u64 n);

/// Sum of base-b digits of n.
u64 digit_sum(u64 n, u64 b);

/// Least nonnegative residue of a mod m for signed a.
inline u64 mod_floor(i64 a, u64 m) {
  const i128 r = static_cast<i128>(a) % static_cast<i128>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i128>(m) : r);
}

std::optional<u64> mod_inverse(u64 a, u64 m);

/// Exact BigInt -> i64 narrowing; nullopt when out of range.
std::optional<i64> to_i64(const BigInt& v);

}  // namespace arith
}  // namespace cyclogauss
