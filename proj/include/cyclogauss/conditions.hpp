#pragma once

// Numerical conditions on three-valued spectra: closed-form class sizes, the
// two necessary congruences, the t_x Diophantine system and the sufficiency
// cases built on it.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclogauss/arith.hpp"

namespace cyclogauss {

/// Result of a closed-form size computation. integral == false means at least
/// one formula value is not a nonnegative integer, so the inputs cannot come
/// from a spectrum.
struct SizeResult {
  bool integral = false;
  std::vector<BigInt> sizes;
};

/// (|I1|, |I2|, |I3|) from three distinct values and (q, N).
SizeResult sizes_three_valued(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& q, u64 N);

/// Arithmetic-progression sizes (|I1|, |I3|, |I2|, |I1| - |I3|) for values
/// a2 - t, a2, a2 + t. The last entry may be negative.
SizeResult sizes_ap(const BigInt& a2, const BigInt& t, const BigInt& q, u64 N);

struct Necessary {
  bool congruence = false;  // t(-ur+vs) == -1 mod N
  bool parseval = false;    // (N-1)q + t^2(-ur+vs)^2 == N t^2 (u^2 r + v^2 s)
  bool operator==(const Necessary&) const = default;
};

Necessary check_necessary(u64 q, u64 N, u64 t, u64 u, u64 v, u64 r, u64 s);

/// Sparse nonnegative solution x -> t_x (zero entries omitted).
using TxSolution = std::map<i64, u64>;

struct TxOptions {
  /// When >= 2, keep only solutions where at most one t_x is nonzero mod m and that one is 1 mod m.
  u64 m = 0;
  std::size_t max_solutions = 100000;
};

struct TxEnumeration {
  std::vector<TxSolution> solutions;
  bool truncated = false;
};

/// All nonnegative solutions of
///   sum x(x-1) t_x + sum x(x+1) t_{-x} = u(u+1) r + v(v-1) s
///   sum x(x+1) t_x + sum x(x-1) t_{-x} = u(u-1) r + v(v+1) s
/// over x >= 1, in lexicographic order of the map representation.
TxEnumeration enumerate_tx(u64 u, u64 v, u64 r, u64 s, const TxOptions& opts = {});

enum class SufficiencyCase { None, Cor32a, Cor32b, Thm33_1, Thm33_2, Thm33_3, Thm33_4, Thm33_5, Thm33_6 };

std::string_view to_string(SufficiencyCase c);

struct Candidate {
  u64 u = 0, v = 0, r = 0, s = 0;
  std::vector<SufficiencyCase> cases;
  /// y = (-t(-ur+vs) - 1)/N, exact.
  i64 y = 0;
  TxEnumeration tx;
  /// Ascending {y + t*x} for each solution's support (plus x = 0).
  std::vector<std::vector<i64>> value_sets;
};

struct ConditionReport {
  u64 p = 0, f = 0, q = 0, N = 0, k = 0;
  u64 t = 0;
  unsigned theta = 0;
  bool t_exact = true;
  u64 m = 0;
  /// Every (u, v, r, s) of the searched shapes satisfying both necessary conditions.
  std::vector<Candidate> candidates;
  /// First sufficiency case found, and the index of its candidate.
  SufficiencyCase sufficiency_case = SufficiencyCase::None;
  std::optional<std::size_t> witness;
};

/// Searches (u, v, r, s) of the shapes u = s = 1, v = r = 1, or u = v = 1 with
/// r or s in {1, m}, and matches them against the known sufficiency cases.
ConditionReport check_sufficient(u64 p, unsigned f, u64 N);

/// Cases of the corollary and theorem satisfied by (u, v, r, s) for given N, m.
std::vector<SufficiencyCase> matching_cases(u64 N, u64 m, u64 u, u64 v, u64 r, u64 s);

}  // namespace cyclogauss
