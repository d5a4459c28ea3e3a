#include "cyclogauss/cyclotomy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclogauss/error.hpp"

namespace cyclogauss {
namespace {

void require_divisor(const FieldSpec& field, u64 N) {
  if (N < 2) throw Error(Errc::InvalidArgument, "N must be > 1");
  if ((field.q - 1) % N != 0) {
    throw Error(Errc::NotDivisor, std::to_string(N) + " does not divide q-1 = " + std::to_string(field.q - 1));
  }
}

bool is_flat_index(const FieldSpec& field, u64 N) { return ((field.q - 1) / (field.p - 1)) % N == 0; }

PeriodSpectrum empty_spectrum(const FieldSpec& field, u64 N) {
  PeriodSpectrum s;
  s.field = field;
  s.N = N;
  s.k = (field.q - 1) / N;
  return s;
}

// Fills rational / eta from the stored counts and checks the two moment identities.
void finish(PeriodSpectrum& s) {
  const u64 p = s.field.p;
  s.eta = IntVec::Zero(static_cast<Eigen::Index>(s.N));
  if (s.flat) {
    s.rational = true;
    for (u64 a = 0; a < s.N; ++a) {
      const i64 n0 = static_cast<i64>(s.zero_counts[a]);
      s.eta[static_cast<Eigen::Index>(a)] = (static_cast<i64>(p) * n0 - static_cast<i64>(s.k)) / static_cast<i64>(p - 1);
    }
  } else {
    s.rational = true;
    for (u64 a = 0; a < s.N && s.rational; ++a) {
      const u64* row = s.histogram.data() + a * p;
      for (u64 j = 2; j < p; ++j) {
        if (row[j] != row[1]) {
          s.rational = false;
          break;
        }
      }
      s.eta[static_cast<Eigen::Index>(a)] = static_cast<i64>(row[0]) - static_cast<i64>(p > 1 ? row[1] : 0);
    }
    if (!s.rational) {
      s.eta.setZero();
      return;
    }
  }
  const i64 sum = s.eta.sum();
  i128 sq = 0;
  for (Eigen::Index a = 0; a < s.eta.size(); ++a) sq += static_cast<i128>(s.eta[a]) * s.eta[a];
  if (sum != -1 || sq != static_cast<i128>(s.field.q - s.k)) {
    throw std::logic_error("Gauss period moment identities violated");
  }
}

}  // namespace

u64 PeriodSpectrum::count(u64 a, u64 j) const {
  if (flat) {
    if (j == 0) return zero_counts[a];
    return (k - zero_counts[a]) / (field.p - 1);
  }
  return histogram[a * field.p + j];
}

PeriodSpectrum gauss_periods(const FieldSpec& field, u64 N) {
  require_divisor(field, N);
  if (is_flat_index(field, N)) return std::move(gauss_periods_many(field, {N}).front());

  PeriodSpectrum s = empty_spectrum(field, N);
  if (static_cast<u128>(N) * field.p > kMaxHistogram) {
    throw Error(Errc::Overflow, "trace histogram N*p too large");
  }
  s.histogram.assign(N * field.p, 0);
  TraceSeq ts(field);
  u64 a = 0;
  for (u64 i = 0; i + 1 < field.q; ++i) {
    ++s.histogram[a * field.p + ts.next()];
    if (++a == N) a = 0;
  }
  finish(s);
  return s;
}

std::vector<PeriodSpectrum> gauss_periods_many(const FieldSpec& field, const std::vector<u64>& Ns) {
  std::vector<PeriodSpectrum> out;
  out.reserve(Ns.size());
  std::vector<std::size_t> flat_slots;
  for (std::size_t n = 0; n < Ns.size(); ++n) {
    require_divisor(field, Ns[n]);
    if (is_flat_index(field, Ns[n])) {
      out.push_back(empty_spectrum(field, Ns[n]));
      out.back().flat = true;
      out.back().zero_counts.assign(Ns[n], 0);
      flat_slots.push_back(n);
    } else {
      out.push_back(gauss_periods(field, Ns[n]));
    }
  }
  if (flat_slots.empty()) return out;

  // Each zero trace at exponent i lands in coset i mod N for every flat N.
  TraceSeq ts(field);
  std::vector<u64> residue(flat_slots.size(), 0);
  std::vector<u64> moduli;
  std::vector<u64*> counts;
  for (std::size_t n : flat_slots) {
    moduli.push_back(Ns[n]);
    counts.push_back(out[n].zero_counts.data());
  }
  u64 last = 0;
  for (u64 i = 0; i + 1 < field.q; ++i) {
    if (ts.next() != 0) continue;
    const u64 step = i - last;
    last = i;
    for (std::size_t n = 0; n < moduli.size(); ++n) {
      residue[n] = (residue[n] + step) % moduli[n];
      ++counts[n][residue[n]];
    }
  }
  for (std::size_t n : flat_slots) finish(out[n]);
  return out;
}

ValueDecomposition decompose(const PeriodSpectrum& spec) {
  if (!spec.rational) throw Error(Errc::NotRational, "spectrum is not rational");
  ValueDecomposition d;
  d.N = spec.N;
  std::map<i64, std::vector<u64>> by_value;
  for (u64 a = 0; a < spec.N; ++a) by_value[spec.eta[static_cast<Eigen::Index>(a)]].push_back(a);
  for (auto& [value, idx] : by_value) {
    d.values.push_back(value);
    d.multiplicities.push_back(idx.size());
    d.index_sets.push_back(std::move(idx));
  }
  d.three_valued = d.values.size() == 3;
  if (d.three_valued) {
    const i64 lo = d.values[1] - d.values[0];
    const i64 hi = d.values[2] - d.values[1];
    d.t = std::gcd(lo, hi);
    d.u = lo / d.t;
    d.v = hi / d.t;
    d.r = d.multiplicities[0];
    d.s = d.multiplicities[2];
    d.ap = d.u == 1 && d.v == 1;
  }
  return d;
}

std::vector<std::pair<i64, u64>> value_multiset(const PeriodSpectrum& spec) {
  std::map<i64, u64> counts;
  for (Eigen::Index a = 0; a < spec.eta.size(); ++a) ++counts[spec.eta[a]];
  return {counts.begin(), counts.end()};
}

BigInt StickelbergerT::value() const {
  BigInt t = 1;
  for (u64 i = 0; i < theta; ++i) t *= p;
  return t;
}

StickelbergerT stickelberger_t(u64 p, unsigned f, u64 N) {
  if (N < 2) throw Error(Errc::InvalidArgument, "N must be > 1");
  const u64 fp = mult_order(p, N);
  if (f % fp != 0) {
    throw Error(Errc::NotDivisor, std::to_string(N) + " does not divide " + std::to_string(p) + "^" + std::to_string(f) + "-1");
  }
  // The base-p digits of j*k' are the period of the p-adic expansion of j/N.
  u64 best = ~u64{0};
  for (const auto& orbit : p_orbits(p, N)) {
    const u64 j = orbit.front();
    if (j == 0) continue;
    u64 sum = 0, x = j;
    for (u64 i = 0; i < fp; ++i) {
      sum += static_cast<u64>(static_cast<u128>(p) * x / N);
      x = arith::mulmod(x, p, N);
    }
    best = std::min(best, sum);
  }
  StickelbergerT out;
  out.p = p;
  out.f_prime = fp;
  out.min_digit_sum = best;
  const u128 num = static_cast<u128>(f / fp) * best;
  out.theta = static_cast<u64>(num / (p - 1));
  out.exact = num % (p - 1) == 0;
  return out;
}

u64 m_value(u64 p, u64 N) {
  if (N < 2) throw Error(Errc::InvalidArgument, "N must be > 1");
  if (std::gcd(p, N) != 1) throw Error(Errc::NotCoprime, "p divides N");
  u64 m = 0;
  for (u64 n : arith::divisors(arith::factorize(N))) {
    if (n > 1) m = std::gcd(m, mult_order(p, n));
  }
  return m;
}

std::vector<std::vector<u64>> p_orbits(u64 p, u64 N) {
  std::vector<char> seen(N, 0);
  std::vector<std::vector<u64>> out;
  for (u64 a = 0; a < N; ++a) {
    if (seen[a]) continue;
    std::vector<u64> orbit;
    for (u64 x = a; !seen[x]; x = arith::mulmod(x, p, N)) {
      seen[x] = 1;
      orbit.push_back(x);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace cyclogauss
