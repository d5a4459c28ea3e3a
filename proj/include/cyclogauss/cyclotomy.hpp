#pragma once

// Gauss periods eta_a = sum over the coset C_a = gamma^a <gamma^N> of the
// canonical additive character, computed exactly from trace histograms.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "cyclogauss/arith.hpp"
#include "cyclogauss/field.hpp"

namespace cyclogauss {

using IntVec = Eigen::Matrix<i64, Eigen::Dynamic, 1>;

struct PeriodSpectrum {
  FieldSpec field;
  u64 N = 0;
  u64 k = 0;
  bool rational = false;
  /// eta[a] for a in Z_N; only meaningful when rational.
  IntVec eta;

  /// n_j(a) = #{x in C_a : Tr(x) = j}.
  u64 count(u64 a, u64 j) const;

  /// True when C_0 contains GF(p)^*, so only trace-zero counts are stored.
  bool flat = false;
  std::vector<u64> zero_counts;  // flat storage, length N
  std::vector<u64> histogram;    // otherwise N x p, row-major
};

/// Largest N * p histogram gauss_periods will allocate.
inline constexpr u64 kMaxHistogram = u64{1} << 27;

PeriodSpectrum gauss_periods(const FieldSpec& field, u64 N);

/// One trace pass shared by several indices N over the same field.
std::vector<PeriodSpectrum> gauss_periods_many(const FieldSpec& field, const std::vector<u64>& Ns);

struct ValueDecomposition {
  u64 N = 0;
  /// Distinct eta values, ascending.
  std::vector<i64> values;
  /// index_sets[i] = {a : eta_a = values[i]}, each ascending.
  std::vector<std::vector<u64>> index_sets;
  std::vector<u64> multiplicities;
  bool three_valued = false;
  bool ap = false;
  // Normalized parameters of a three-valued spectrum:
  // values[0] - values[1] = -t*u, values[2] - values[1] = t*v, gcd(u, v) = 1.
  i64 t = 0, u = 0, v = 0;
  u64 r = 0, s = 0;
};

ValueDecomposition decompose(const PeriodSpectrum& spec);

/// Value multiset as ascending (value, multiplicity) pairs.
std::vector<std::pair<i64, u64>> value_multiset(const PeriodSpectrum& spec);

struct StickelbergerT {
  u64 p = 0;
  /// floor(d * S / (p - 1)) with S the least digit sum.
  u64 theta = 0;
  /// Whether d * S is divisible by p - 1, i.e. the valuation is integral.
  bool exact = true;
  u64 f_prime = 0;
  u64 min_digit_sum = 0;

  BigInt value() const;
};

/// Largest power of p dividing every Gauss sum of order dividing N over GF(p^f).
StickelbergerT stickelberger_t(u64 p, unsigned f, u64 N);

/// gcd of ord_n(p) over the divisors n > 1 of N.
u64 m_value(u64 p, u64 N);

/// Orbits of a -> p*a on Z_N, each listed from its least element.
std::vector<std::vector<u64>> p_orbits(u64 p, u64 N);

}  // namespace cyclogauss
