#pragma once

// Exhaustive sweeps: the Table-1 style field/index scan with JSONL persistence,
// and the corollary scan over (N, h) for self-complementary AP spectra.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclogauss/arith.hpp"
#include "cyclogauss/families.hpp"

namespace cyclogauss {

enum class RecordStatus { ThreeValued, TwoValued, Other, NonRational };

std::string_view to_string(RecordStatus s);
std::optional<RecordStatus> record_status_from_string(std::string_view s);

struct SearchRecord {
  u64 p = 0;
  unsigned f = 0;
  u64 N = 0;
  u64 q = 0;
  u64 k = 0;
  /// (value, multiplicity), values ascending; empty for nonrational spectra.
  std::vector<std::pair<i64, u64>> values;
  std::optional<bool> ap, as, cw;
  std::optional<i64> t;
  RecordStatus status = RecordStatus::Other;
  /// "thm2.6", "dual_count", "brute_force", or "asymmetric" when the classes are not symmetric.
  std::string as_method;
  std::vector<FamilyId> families;
  std::string timestamp;

  bool same_result(const SearchRecord& o) const;
};

struct Table1Limits {
  u64 p_max = 300;          // p < p_max
  u64 q_max = (u64{1} << 25) - 1;  // q <= q_max
  u64 n_min = 4;
  u64 n_max = 1000;
  /// Keep only N with N | (q-1)/(p-1), i.e. (p-1) | k.
  bool require_divisibility = true;
};

struct WorkUnit {
  u64 p = 0;
  unsigned f = 0;
  bool operator==(const WorkUnit&) const = default;
  auto operator<=>(const WorkUnit&) const = default;
};

/// All (p, f) with p prime below p_max and p^f <= q_max, in (p, f) order.
std::vector<WorkUnit> table1_units(const Table1Limits& limits);

/// Admissible indices N for one field under the limits, ascending.
std::vector<u64> table1_indices(const Table1Limits& limits, u64 p, unsigned f);

struct SearchOptions {
  /// 0 picks the hardware concurrency; CYCLOGAUSS_JOBS overrides either.
  unsigned jobs = 0;
  std::ostream* log = nullptr;
  u64 as_brute_force_limit = 1'000'000;
  /// Stop after committing this many units (used to exercise resume).
  std::optional<std::size_t> max_units;
  bool timestamps = true;
};

unsigned resolve_jobs(unsigned requested);

/// Computes the records of a single field.
std::vector<SearchRecord> search_unit(const Table1Limits& limits, const WorkUnit& unit, const SearchOptions& opts = {});

/// Runs the sweep in memory. Units are computed in parallel and delivered to
/// the sinks in (p, f) order; unit_done fires after a unit's records.
void table1_search(const Table1Limits& limits, const SearchOptions& opts,
                   const std::function<void(const SearchRecord&)>& sink,
                   const std::function<void(const WorkUnit&)>& unit_done = {},
                   const std::vector<WorkUnit>& skip = {});

struct SweepSummary {
  std::size_t units_total = 0;
  std::size_t units_skipped = 0;
  std::size_t units_run = 0;
  std::size_t records_written = 0;
  std::size_t duplicates_dropped = 0;
  bool complete = false;
};

/// Persistent sweep: appends JSONL records to `results`, tracks the committed
/// frontier in `cursor` ({"last_p", "last_f"}), and resumes from both.
SweepSummary table1_sweep(const Table1Limits& limits, const SearchOptions& opts, const std::filesystem::path& results,
                          const std::filesystem::path& cursor);

/// Reads a results file; a torn final line is ignored.
std::vector<SearchRecord> load_records(const std::filesystem::path& results);

struct CorollaryHit {
  u64 p = 0;
  unsigned f = 0;
  u64 N = 0;
  u64 theta = 0;
  /// Loop variable h = r + s and the sign that satisfied the congruence.
  u64 h = 0;
  int sign = 1;
  bool operator==(const CorollaryHit&) const = default;
  auto operator<=>(const CorollaryHit&) const = default;
};

/// All (p, f, N, theta) with N < n_max passing the three-step corollary test,
/// outside the known families, with the least h that fired.
std::vector<CorollaryHit> corollary_search(u64 n_max);

}  // namespace cyclogauss
