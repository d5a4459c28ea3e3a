#include "cyclogauss/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "cyclogauss/conditions.hpp"
#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/error.hpp"
#include "cyclogauss/field.hpp"
#include "cyclogauss/group_ring.hpp"
#include "cyclogauss/serialize.hpp"
#include "cyclogauss/structures.hpp"

namespace cyclogauss {
namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

using Key = std::tuple<u64, unsigned, u64>;

Key key_of(const SearchRecord& r) { return {r.p, r.f, r.N}; }

void note(std::ostream* log, const std::string& line) {
  static std::mutex mu;
  if (!log) return;
  std::lock_guard lock(mu);
  *log << line << '\n';
}

SearchRecord classify(const PeriodSpectrum& spec, const SearchOptions& opts) {
  SearchRecord rec;
  rec.p = spec.field.p;
  rec.f = spec.field.f;
  rec.N = spec.N;
  rec.q = spec.field.q;
  rec.k = spec.k;
  if (!spec.rational) {
    rec.status = RecordStatus::NonRational;
    return rec;
  }
  rec.values = value_multiset(spec);
  if (rec.values.size() == 2) {
    rec.status = RecordStatus::TwoValued;
    return rec;
  }
  if (rec.values.size() != 3) {
    rec.status = RecordStatus::Other;
    return rec;
  }
  rec.status = RecordStatus::ThreeValued;
  const auto dec = decompose(spec);
  rec.ap = dec.ap;
  rec.t = dec.t;
  const auto nec = check_necessary(rec.q, rec.N, static_cast<u64>(dec.t), static_cast<u64>(dec.u),
                                   static_cast<u64>(dec.v), dec.r, dec.s);
  if (!nec.congruence || !nec.parseval) throw std::logic_error("three-valued spectrum violates the necessary conditions");
  if (!check_lemma21(dec, rec.q, rec.k)) throw std::logic_error("three-valued spectrum violates the convolution identity");

  const Partition3 part{dec.index_sets[0], dec.index_sets[1], dec.index_sets[2]};
  try {
    const auto cert = verify_scheme(spec, part, SchemeOptions{opts.as_brute_force_limit});
    rec.as = cert.scheme;
    rec.as_method = std::string(to_string(cert.method));
  } catch (const Error& e) {
    if (e.code() != Errc::AsymmetricClasses) throw;
    rec.as_method = "asymmetric";
  }

  rec.cw = false;
  if (dec.ap) {
    try {
      const auto check = verify_cw(build_cw(dec, rec.q));
      if (!check.ok) throw std::logic_error("build_cw produced a matrix that fails verification");
      rec.cw = true;
    } catch (const Error&) {
    }
  }
  return rec;
}

std::optional<WorkUnit> read_cursor(const std::filesystem::path& cursor) {
  std::ifstream in(cursor);
  if (!in) return std::nullopt;
  const auto j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("last_p")) throw Error(Errc::Io, "unreadable cursor file " + cursor.string());
  return WorkUnit{j.at("last_p").get<u64>(), j.at("last_f").get<unsigned>()};
}

void write_cursor(const std::filesystem::path& cursor, const WorkUnit& unit) {
  const auto tmp = std::filesystem::path(cursor.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(Errc::Io, "cannot write " + tmp.string());
    out << canonical_dump(Json{{"last_p", unit.p}, {"last_f", unit.f}}) << '\n';
  }
  std::filesystem::rename(tmp, cursor);
}

// Drops a partially written final line so appends start on a fresh line.
void trim_torn_tail(const std::filesystem::path& results) {
  if (!std::filesystem::exists(results)) return;
  std::ifstream in(results, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty() || content.back() == '\n') return;
  const auto cut = content.rfind('\n');
  in.close();
  std::filesystem::resize_file(results, cut == std::string::npos ? 0 : cut + 1);
}

}  // namespace

std::string_view to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::ThreeValued: return "three_valued";
    case RecordStatus::TwoValued: return "two_valued";
    case RecordStatus::Other: return "other";
    case RecordStatus::NonRational: return "nonrational";
  }
  return "other";
}

std::optional<RecordStatus> record_status_from_string(std::string_view s) {
  for (auto st : {RecordStatus::ThreeValued, RecordStatus::TwoValued, RecordStatus::Other, RecordStatus::NonRational})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

bool SearchRecord::same_result(const SearchRecord& o) const {
  return std::tie(p, f, N, q, k, values, ap, as, cw, t, status, as_method, families) ==
         std::tie(o.p, o.f, o.N, o.q, o.k, o.values, o.ap, o.as, o.cw, o.t, o.status, o.as_method, o.families);
}

std::vector<WorkUnit> table1_units(const Table1Limits& limits) {
  std::vector<WorkUnit> units;
  for (u64 p = 2; p < limits.p_max; ++p) {
    if (!arith::is_prime(p)) continue;
    u64 q = p;
    for (unsigned f = 1; q <= limits.q_max; ++f) {
      units.push_back({p, f});
      if (q > limits.q_max / p) break;
      q *= p;
    }
  }
  return units;
}

std::vector<u64> table1_indices(const Table1Limits& limits, u64 p, unsigned f) {
  const auto q = arith::checked_pow(p, f);
  if (!q) throw Error(Errc::Overflow, "p^f must be below 2^63");
  std::vector<u64> out;
  for (u64 N : arith::divisors(arith::factorize(*q - 1))) {
    if (N < limits.n_min || N > limits.n_max) continue;
    if (limits.require_divisibility && ((*q - 1) / N) % (p - 1) != 0) continue;
    out.push_back(N);
  }
  return out;
}

unsigned resolve_jobs(unsigned requested) {
  if (const char* env = std::getenv("CYCLOGAUSS_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SearchRecord> search_unit(const Table1Limits& limits, const WorkUnit& unit, const SearchOptions& opts) {
  std::vector<SearchRecord> out;
  const auto Ns = table1_indices(limits, unit.p, unit.f);
  if (Ns.empty()) return out;
  const auto field = make_field(unit.p, unit.f);
  std::vector<PeriodSpectrum> specs;
  try {
    specs = gauss_periods_many(field, Ns);
  } catch (const Error& e) {
    note(opts.log, "unit p=" + std::to_string(unit.p) + " f=" + std::to_string(unit.f) + ": " + e.what());
    return out;
  }
  const std::string stamp = opts.timestamps ? utc_now() : std::string();
  for (const auto& spec : specs) {
    try {
      auto rec = classify(spec, opts);
      rec.families = family_tags(unit.p, unit.f, spec.N);
      rec.timestamp = stamp;
      if (rec.status == RecordStatus::NonRational) {
        note(opts.log, "nonrational p=" + std::to_string(unit.p) + " f=" + std::to_string(unit.f) +
                           " N=" + std::to_string(spec.N));
      }
      out.push_back(std::move(rec));
    } catch (const Error& e) {
      note(opts.log, "p=" + std::to_string(unit.p) + " f=" + std::to_string(unit.f) + " N=" + std::to_string(spec.N) +
                         ": " + e.what());
    }
  }
  return out;
}

void table1_search(const Table1Limits& limits, const SearchOptions& opts,
                   const std::function<void(const SearchRecord&)>& sink,
                   const std::function<void(const WorkUnit&)>& unit_done, const std::vector<WorkUnit>& skip) {
  if (limits.p_max < 3 || limits.q_max < 2 || limits.n_min > limits.n_max) {
    throw Error(Errc::InvalidArgument, "search limits are empty");
  }
  std::vector<WorkUnit> units;
  const std::set<WorkUnit> skipped(skip.begin(), skip.end());
  for (const auto& u : table1_units(limits))
    if (!skipped.count(u)) units.push_back(u);
  const std::size_t total = std::min(units.size(), opts.max_units.value_or(units.size()));

  std::vector<std::optional<std::vector<SearchRecord>>> done(total);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total || stop) return;
      std::vector<SearchRecord> recs;
      try {
        recs = search_unit(limits, units[i], opts);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        cv.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      done[i] = std::move(recs);
      cv.notify_all();
    }
  };
  const unsigned jobs = std::min<std::size_t>(resolve_jobs(opts.jobs), std::max<std::size_t>(total, 1));
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);

  std::exception_ptr sink_failure;
  for (std::size_t i = 0; i < total; ++i) {
    std::vector<SearchRecord> recs;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[i].has_value() || failure; });
      if (!done[i]) break;
      recs = std::move(*done[i]);
      done[i].reset();
    }
    try {
      for (const auto& r : recs) sink(r);
      if (unit_done) unit_done(units[i]);
    } catch (...) {
      sink_failure = std::current_exception();
      stop = true;
      break;
    }
  }
  stop = true;
  for (auto& t : pool) t.join();
  if (sink_failure) std::rethrow_exception(sink_failure);
  if (failure) std::rethrow_exception(failure);
}

std::vector<SearchRecord> load_records(const std::filesystem::path& results) {
  std::vector<SearchRecord> out;
  std::ifstream in(results);
  if (!in) return out;
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto j = Json::parse(lines[i], nullptr, false);
    if (j.is_discarded()) {
      if (i + 1 == lines.size()) break;
      throw Error(Errc::Io, results.string() + ": malformed record on line " + std::to_string(i + 1));
    }
    out.push_back(record_from_json(j));
  }
  return out;
}

SweepSummary table1_sweep(const Table1Limits& limits, const SearchOptions& opts, const std::filesystem::path& results,
                          const std::filesystem::path& cursor) {
  SweepSummary summary;
  const auto units = table1_units(limits);
  summary.units_total = units.size();

  trim_torn_tail(results);
  std::set<Key> seen;
  for (const auto& r : load_records(results)) seen.insert(key_of(r));

  std::vector<WorkUnit> skip;
  if (const auto last = read_cursor(cursor)) {
    for (const auto& u : units)
      if (u <= *last) skip.push_back(u);
  }
  summary.units_skipped = skip.size();

  std::ofstream out(results, std::ios::app);
  if (!out) throw Error(Errc::Io, "cannot open " + results.string());
  table1_search(
      limits, opts,
      [&](const SearchRecord& r) {
        if (!seen.insert(key_of(r)).second) {
          ++summary.duplicates_dropped;
          return;
        }
        out << canonical_dump(to_json(r)) << '\n';
        out.flush();
        if (!out) throw Error(Errc::Io, "write failed on " + results.string());
        ++summary.records_written;
      },
      [&](const WorkUnit& u) {
        write_cursor(cursor, u);
        ++summary.units_run;
      },
      skip);
  summary.complete = summary.units_skipped + summary.units_run == summary.units_total;
  return summary;
}

std::vector<CorollaryHit> corollary_search(u64 n_max) {
  std::vector<CorollaryHit> hits;
  for (u64 N = 3; N < n_max; ++N) {
    for (u64 h = 2; h < N; ++h) {
      // Step 1: q / t^2 = (N h - (h-2)^2) / (N - 1).
      const i64 num = static_cast<i64>(N * h) - static_cast<i64>((h - 2) * (h - 2));
      if (num <= 0 || num % static_cast<i64>(N - 1) != 0) continue;
      const u64 val = static_cast<u64>(num) / (N - 1);
      const auto pp = arith::as_prime_power(val);
      if (!pp) continue;
      const auto [p, w] = *pp;
      if (std::gcd(p, N) != 1) continue;
      // Step 2: f' = ord_N(p) and the Stickelberger exponent at f'.
      const u64 fp = mult_order(p, N);
      const auto st = stickelberger_t(p, static_cast<unsigned>(fp), N);
      // Step 3: f' - 2 theta' must divide w.
      if (fp <= 2 * st.theta) continue;
      const u64 step = fp - 2 * st.theta;
      if (w % step != 0) continue;
      const u64 d = w / step;
      const u64 theta = d * st.theta;
      const u64 tm = arith::powmod(p, theta, N);
      const u64 hm = (h - 2) % N;
      const u64 prod = arith::mulmod(hm, tm, N);
      int sign = 0;
      if ((prod + 1) % N == 0) {
        sign = 1;
      } else if ((N - prod + 1) % N == 0) {
        sign = -1;
      }
      if (sign == 0) continue;
      const auto f = static_cast<unsigned>(d * fp);
      // Members of the known families are not reported.
      if (!family_tags(p, f, N).empty()) continue;
      hits.push_back({p, f, N, theta, h, sign});
    }
  }
  std::sort(hits.begin(), hits.end());
  // One entry per quadruple; the smallest h is kept.
  hits.erase(std::unique(hits.begin(), hits.end(),
                         [](const CorollaryHit& a, const CorollaryHit& b) {
                           return std::tie(a.p, a.f, a.N, a.theta) == std::tie(b.p, b.f, b.N, b.theta);
                         }),
             hits.end());
  return hits;
}

}  // namespace cyclogauss
