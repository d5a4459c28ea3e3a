#include "cyclogauss/conditions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/error.hpp"
#include "cyclogauss/field.hpp"

namespace cyclogauss {
namespace {

// num / den as a nonnegative integer, if it is one.
bool exact_quotient(const BigInt& num, const BigInt& den, BigInt& out, bool allow_negative = false) {
  if (den == 0 || num % den != 0) return false;
  out = num / den;
  return allow_negative || out >= 0;
}

}  // namespace

SizeResult sizes_three_valued(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& q, u64 N) {
  SizeResult res;
  if (N == 0 || (q - 1) % N != 0 || a1 == a2 || a2 == a3 || a1 == a3) return res;
  const BigInt& Q = q;
  const BigInt K = (q - 1) / N;
  const BigInt n1 = -(a2 * a3 * (Q - 1) + K * (Q - K + a2 + a3));
  const BigInt d1 = K * (a1 - a2) * (a3 - a1);
  const BigInt n2 = -(a1 * a3 * (Q - 1) + K * (Q - K + a1 + a3));
  const BigInt d2 = K * (a1 - a2) * (a2 - a3);
  const BigInt n3 = -(a1 * a2 * (Q - 1) + K * (Q - K + a1 + a2));
  const BigInt d3 = K * (a2 - a3) * (a3 - a1);
  res.sizes.resize(3);
  res.integral = exact_quotient(n1, d1, res.sizes[0]) && exact_quotient(n2, d2, res.sizes[1]) &&
                 exact_quotient(n3, d3, res.sizes[2]);
  return res;
}

SizeResult sizes_ap(const BigInt& a2, const BigInt& t, const BigInt& q, u64 N) {
  SizeResult res;
  if (t <= 0 || N == 0 || (q - 1) % N != 0) return res;
  const BigInt n = N;
  const BigInt K = (q - 1) / N;
  const BigInt t2 = t * t;
  res.sizes.resize(4);
  res.integral = exact_quotient(n * (a2 * a2 + a2 * t + K) + 2 * a2 - K + t + 1, 2 * t2, res.sizes[0]) &&
                 exact_quotient(n * (a2 * a2 - a2 * t + K) + 2 * a2 - K - t + 1, 2 * t2, res.sizes[1]) &&
                 exact_quotient(n * (t2 - a2 * a2 - K) - 1 - 2 * a2 + K, t2, res.sizes[2]) &&
                 exact_quotient(a2 * n + 1, t, res.sizes[3], true);
  return res;
}

Necessary check_necessary(u64 q, u64 N, u64 t, u64 u, u64 v, u64 r, u64 s) {
  Necessary out;
  const BigInt g = BigInt(v) * s - BigInt(u) * r;
  const BigInt T = t;
  BigInt c = (T * g + 1) % N;
  out.congruence = c == 0;
  out.parseval = BigInt(N - 1) * q + T * T * g * g == BigInt(N) * T * T * (BigInt(u) * u * r + BigInt(v) * v * s);
  return out;
}

TxEnumeration enumerate_tx(u64 u, u64 v, u64 r, u64 s, const TxOptions& opts) {
  TxEnumeration out;
  const u64 R1 = u * (u + 1) * r + v * (v - 1) * s;
  const u64 R2 = u * (u - 1) * r + v * (v + 1) * s;
  const u64 m = opts.m;
  auto allowed = [&](u64 c, bool& one_used) {
    if (m < 2 || c % m == 0) return true;
    if (c % m == 1 && !one_used) {
      one_used = true;
      return true;
    }
    return false;
  };

  u64 xmax = 1;
  while ((xmax + 1) * xmax <= std::max(R1, R2)) ++xmax;

  TxSolution current;
  // x runs downward; t_x costs (x(x-1), x(x+1)) and t_{-x} costs (x(x+1), x(x-1)).
  std::function<void(u64, u64, u64, bool)> rec = [&](u64 x, u64 rem1, u64 rem2, bool one_used) {
    if (out.truncated) return;
    if (x == 1) {
      if (rem1 % 2 != 0 || rem2 % 2 != 0) return;
      const u64 t1 = rem2 / 2, tm1 = rem1 / 2;
      bool used = one_used;
      if (!allowed(t1, used) || !allowed(tm1, used)) return;
      TxSolution sol = current;
      if (t1) sol[1] = t1;
      if (tm1) sol[-1] = tm1;
      if (out.solutions.size() >= opts.max_solutions) {
        out.truncated = true;
        return;
      }
      out.solutions.push_back(std::move(sol));
      return;
    }
    const u64 lo = x * (x - 1), hi = x * (x + 1);
    const i64 xi = static_cast<i64>(x);
    for (u64 cp = 0; cp * lo <= rem1 && cp * hi <= rem2; ++cp) {
      bool used_p = one_used;
      if (!allowed(cp, used_p)) continue;
      const u64 r1 = rem1 - cp * lo, r2 = rem2 - cp * hi;
      for (u64 cn = 0; cn * hi <= r1 && cn * lo <= r2; ++cn) {
        bool used_n = used_p;
        if (!allowed(cn, used_n)) continue;
        if (cp) current[xi] = cp;
        if (cn) current[-xi] = cn;
        rec(x - 1, r1 - cn * hi, r2 - cn * lo, used_n);
        current.erase(xi);
        current.erase(-xi);
        if (out.truncated) return;
      }
    }
  };
  rec(xmax, R1, R2, false);
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

std::string_view to_string(SufficiencyCase c) {
  switch (c) {
    case SufficiencyCase::None: return "none";
    case SufficiencyCase::Cor32a: return "Cor3.2-a";
    case SufficiencyCase::Cor32b: return "Cor3.2-b";
    case SufficiencyCase::Thm33_1: return "Thm3.3-1";
    case SufficiencyCase::Thm33_2: return "Thm3.3-2";
    case SufficiencyCase::Thm33_3: return "Thm3.3-3";
    case SufficiencyCase::Thm33_4: return "Thm3.3-4";
    case SufficiencyCase::Thm33_5: return "Thm3.3-5";
    case SufficiencyCase::Thm33_6: return "Thm3.3-6";
  }
  return "none";
}

std::vector<SufficiencyCase> matching_cases(u64 N, u64 m, u64 u, u64 v, u64 r, u64 s) {
  std::vector<SufficiencyCase> out;
  if (u == 1 && v == 1 && r == 1 && s + 1 < N) out.push_back(SufficiencyCase::Cor32a);
  if (u == 1 && v == 1 && s == 1 && r + 1 < N) out.push_back(SufficiencyCase::Cor32b);
  if (m < 2) return out;
  if (u == 1 && s == 1 && v * (v + 1) < 2 * m && r + 1 < N) out.push_back(SufficiencyCase::Thm33_1);
  if (u == 1 && s == 1 && v * (v + 1) == 2 * m && r + v * v < N) out.push_back(SufficiencyCase::Thm33_2);
  if (v == 1 && r == 1 && u * (u + 1) < 2 * m && s + 1 < N) out.push_back(SufficiencyCase::Thm33_3);
  if (v == 1 && r == 1 && u * (u + 1) == 2 * m && s + u * u < N) out.push_back(SufficiencyCase::Thm33_4);
  if (u == 1 && v == 1 && s == m && r + m < N) out.push_back(SufficiencyCase::Thm33_5);
  if (u == 1 && v == 1 && r == m && s + m < N) out.push_back(SufficiencyCase::Thm33_6);
  return out;
}

ConditionReport check_sufficient(u64 p, unsigned f, u64 N) {
  if (!arith::is_prime(p)) throw Error(Errc::CompositeP, std::to_string(p) + " is not prime");
  const auto q = arith::checked_pow(p, f);
  if (!q) throw Error(Errc::Overflow, "p^f must be below 2^63");
  if (N < 3) throw Error(Errc::InvalidArgument, "N must be > 2");
  if ((*q - 1) % N != 0) throw Error(Errc::NotDivisor, std::to_string(N) + " does not divide q-1");

  ConditionReport rep;
  rep.p = p;
  rep.f = f;
  rep.q = *q;
  rep.N = N;
  rep.k = (*q - 1) / N;
  const auto st = stickelberger_t(p, f, N);
  rep.theta = static_cast<unsigned>(st.theta);
  rep.t_exact = st.exact;
  rep.t = *arith::checked_pow(p, rep.theta);
  rep.m = m_value(p, N);
  const u64 t_mod = rep.t % N;
  const u64 m = rep.m;

  std::set<std::tuple<u64, u64, u64, u64>> shapes;
  auto consider = [&](u64 u, u64 v, u64 r, u64 s) {
    if (r == 0 || s == 0 || r >= N || s >= N || std::gcd(u, v) != 1) return;
    // Cheap congruence screen before the exact test.
    const u64 g = arith::mod_floor(static_cast<i64>(v * s) - static_cast<i64>(u * r), N);
    if (arith::mulmod(t_mod, g, N) != N - 1) return;
    shapes.emplace(u, v, r, s);
  };
  const u64 vmax = std::max<u64>(2 * m, 1);
  for (u64 r = 1; r < N; ++r) {
    for (u64 v = 1; v <= vmax; ++v) consider(1, v, r, 1);
    for (u64 u = 1; u <= vmax; ++u) consider(u, 1, 1, r);
    consider(1, 1, r, 1);
    consider(1, 1, 1, r);
    consider(1, 1, r, m);
    consider(1, 1, m, r);
  }

  for (auto [u, v, r, s] : shapes) {
    if (check_necessary(rep.q, N, rep.t, u, v, r, s) != Necessary{true, true}) continue;
    Candidate c;
    c.u = u;
    c.v = v;
    c.r = r;
    c.s = s;
    c.cases = matching_cases(N, m, u, v, r, s);
    const i128 g = static_cast<i128>(v) * s - static_cast<i128>(u) * r;
    const i128 num = -static_cast<i128>(rep.t) * g - 1;
    if (num % N != 0) throw std::logic_error("y is not integral");
    c.y = static_cast<i64>(num / static_cast<i128>(N));
    if (!c.cases.empty()) {
      c.tx = enumerate_tx(u, v, r, s, TxOptions{m >= 2 ? m : 0, 1000});
      for (const auto& sol : c.tx.solutions) {
        std::vector<i64> vals{c.y};
        for (const auto& [x, count] : sol) vals.push_back(c.y + static_cast<i64>(rep.t) * x);
        std::sort(vals.begin(), vals.end());
        c.value_sets.push_back(std::move(vals));
      }
      if (!rep.witness) {
        rep.witness = rep.candidates.size();
        rep.sufficiency_case = c.cases.front();
      }
    }
    rep.candidates.push_back(std::move(c));
  }
  return rep;
}

}  // namespace cyclogauss
