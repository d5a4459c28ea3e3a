#include "cyclogauss/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cyclogauss/error.hpp"

namespace cyclogauss {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::CompositeP: return "CompositeP";
    case Errc::Overflow: return "Overflow";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotDivisor: return "NotDivisor";
    case Errc::NotRational: return "NotRational";
    case Errc::MismatchedN: return "MismatchedN";
    case Errc::NotAP: return "NotAP";
    case Errc::NotSquareQ: return "NotSquareQ";
    case Errc::MidValueMismatch: return "MidValueMismatch";
    case Errc::AsymmetricClasses: return "AsymmetricClasses";
    case Errc::BadDiscriminant: return "BadDiscriminant";
    case Errc::NotIndex2: return "NotIndex2";
    case Errc::NoDecomposition: return "NoDecomposition";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::BaseNotTwoValued: return "BaseNotTwoValued";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

namespace arith {

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 sp : kSmall) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are sufficient for every n < 2^64.
  for (u64 a : kSmall) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Brent's variant of Pollard rho; n must be odd and composite.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

Factorization factorize(u64 n) {
  Factorization out;
  if (n <= 1) return out;
  std::vector<u64> primes;
  for (u64 d = 2; d < 1024 && d * d <= n; ++d) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 pr : primes) {
    if (!out.empty() && out.back().first == pr) {
      ++out.back().second;
    } else {
      out.emplace_back(pr, 1);
    }
  }
  return out;
}

std::vector<u64> divisors(const Factorization& fac) {
  std::vector<u64> out{1};
  for (auto [pr, e] : fac) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= pr;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(const Factorization& fac) {
  u64 phi = 1;
  for (auto [pr, e] : fac) {
    phi *= pr - 1;
    for (unsigned i = 1; i < e; ++i) phi *= pr;
  }
  return phi;
}

std::optional<u64> checked_pow(u64 p, unsigned e) {
  constexpr u64 kLimit = u64{1} << 63;
  u64 v = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (p != 0 && v > (kLimit - 1) / p) return std::nullopt;
    v *= p;
  }
  if (v >= kLimit) return std::nullopt;
  return v;
}

std::optional<std::pair<u64, unsigned>> as_prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  const auto fac = factorize(n);
  if (fac.size() != 1) return std::nullopt;
  return fac.front();
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 digit_sum(u64 n, u64 b) {
  u64 s = 0;
  while (n > 0) {
    s += n % b;
    n /= b;
  }
  return s;
}

std::optional<u64> mod_inverse(u64 a, u64 m) {
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 quot = old_r / r;
    std::swap(old_r, r);
    r -= quot * old_r;
    std::swap(old_s, s);
    s -= quot * old_s;
  }
  if (old_r != 1) return std::nullopt;
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

std::optional<i64> to_i64(const BigInt& v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) return std::nullopt;
  return v.convert_to<i64>();
}

}  // namespace arith
}  // namespace cyclogauss
