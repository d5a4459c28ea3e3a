#pragma once

// Circulant weighing matrices from arithmetic-progression spectra, and
// certification of three-class translation schemes on F_q built from unions of
// cyclotomic classes.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/field.hpp"

namespace cyclogauss {

struct SignedSupport {
  u64 N = 0;
  std::vector<int> entries;  // each in {-1, 0, 1}
};

/// D = I_1 - I_3 (+1 on the low-value set, -1 on the high-value set).
SignedSupport build_cw(const ValueDecomposition& dec, u64 q);

struct CwCheck {
  bool ok = false;
  i64 weight = 0;
  /// First nonzero off-peak lag and its value when !ok.
  u64 bad_lag = 0;
  i64 bad_value = 0;
};

CwCheck verify_cw(const SignedSupport& D);

enum class SchemeMethod { Thm26, DualCount, BruteForce };
enum class SelfDual { Yes, Undetermined };

std::string_view to_string(SchemeMethod m);
std::string_view to_string(SelfDual s);

using Partition3 = std::array<std::vector<u64>, 3>;
/// p[i][j][k] for relations 0..3; relation 0 is the diagonal.
using IntersectionNumbers = std::array<std::array<std::array<BigInt, 4>, 4>, 4>;

struct SchemeWitness {
  int i = 0, j = 0;
  /// Two cosets a1, a2 inside the same relation class with different counts.
  u64 a1 = 0, a2 = 0;
  u64 count1 = 0, count2 = 0;
};

struct SchemeCertificate {
  u64 q = 0, N = 0;
  Partition3 partition;
  bool scheme = false;
  SchemeMethod method = SchemeMethod::DualCount;
  std::optional<IntersectionNumbers> intersection_numbers;
  std::optional<SchemeWitness> witness;
  SelfDual self_dual = SelfDual::Undetermined;
  /// P equals Q after reordering the nontrivial dual classes.
  bool formally_self_dual = false;
  /// Number of distinct character tuples, trivial character included.
  std::size_t dual_classes = 0;
  bool theorem_fast_path = false;
  std::optional<bool> brute_force_verdict;
  /// 4 x 4 character table (rows: dual classes, trivial first; columns: relations).
  std::vector<std::array<i64, 4>> eigenmatrix;
  std::array<u64, 4> dual_multiplicities{};
};

struct SchemeOptions {
  /// Brute-force confirmation runs when q is at most this.
  u64 brute_force_limit = 1'000'000;
};

SchemeCertificate verify_scheme(const PeriodSpectrum& spec, const Partition3& partition, const SchemeOptions& opts = {});
SchemeCertificate verify_scheme(const FieldSpec& field, u64 N, const Partition3& partition, const SchemeOptions& opts = {});

/// True when -1 lies in the index-N subgroup.
bool minus_one_in_c0(u64 p, u64 q, u64 N);

using IntMatrix = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic>;

/// (N+1) x (N+1) first eigenmatrix of the cyclotomic scheme of class N.
IntMatrix cyclotomic_eigenmatrix(const PeriodSpectrum& spec);

}  // namespace cyclogauss
