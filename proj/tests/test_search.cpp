#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "cyclogauss/conditions.hpp"
#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/field.hpp"
#include "cyclogauss/search.hpp"
#include "cyclogauss/serialize.hpp"

using namespace cyclogauss;
namespace fs = std::filesystem;

namespace {

Table1Limits small_limits() {
  Table1Limits L;
  L.p_max = 60;
  L.q_max = u64{1} << 16;
  return L;
}

SearchOptions quiet(unsigned jobs = 1) {
  SearchOptions o;
  o.jobs = jobs;
  o.timestamps = false;
  return o;
}

std::vector<SearchRecord> run_memory(const Table1Limits& L, const SearchOptions& o) {
  std::vector<SearchRecord> out;
  table1_search(L, o, [&](const SearchRecord& r) { out.push_back(r); });
  return out;
}

bool same(const std::vector<SearchRecord>& a, const std::vector<SearchRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].same_result(b[i])) return false;
  return true;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cyclogauss_search_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const SearchRecord* find(const std::vector<SearchRecord>& recs, u64 p, unsigned f, u64 N) {
  for (const auto& r : recs)
    if (r.p == p && r.f == f && r.N == N) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("units and admissible indices") {
  Table1Limits L;
  L.p_max = 6;
  L.q_max = 30;
  const std::vector<WorkUnit> expected{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}};
  CHECK(table1_units(L) == expected);

  // 11^3 - 1 = 2 * 5 * 7 * 19 and (p - 1) | k forces N | 133.
  CHECK(table1_indices(Table1Limits{}, 11, 3) == std::vector<u64>{7, 19, 133});
  Table1Limits loose;
  loose.require_divisibility = false;
  loose.n_max = 20;
  CHECK(table1_indices(loose, 11, 3) == std::vector<u64>{5, 7, 10, 14, 19});
}

TEST_CASE("sweep records match published rows") {
  const auto recs = run_memory(small_limits(), quiet());
  const auto* a = find(recs, 11, 3, 19);
  REQUIRE(a);
  CHECK(a->status == RecordStatus::ThreeValued);
  CHECK(a->values == std::vector<std::pair<i64, u64>>{{-7, 10}, {4, 6}, {15, 3}});
  CHECK(*a->ap);
  CHECK_FALSE(*a->as);
  CHECK(a->families.empty());

  const auto* b = find(recs, 2, 11, 89);
  REQUIRE(b);
  CHECK(b->values == std::vector<std::pair<i64, u64>>{{-9, 11}, {-1, 56}, {7, 22}});
  CHECK(*b->ap);
  CHECK(*b->as);

  const auto* c = find(recs, 5, 6, 93);
  REQUIRE(c);
  CHECK(c->values == std::vector<std::pair<i64, u64>>{{-7, 70}, {18, 20}, {43, 3}});
  CHECK(*c->ap);
  CHECK_FALSE(*c->as);

  // GF(64) with N = 7 is a conic, an order-3 and a lifted index-2 instance at once.
  const auto* d = find(recs, 2, 6, 7);
  REQUIRE(d);
  CHECK(d->families == std::vector<FamilyId>{FamilyId::Conic, FamilyId::Order3, FamilyId::Index2});
  CHECK(*d->cw);

  std::set<std::tuple<u64, unsigned, u64>> keys;
  for (const auto& r : recs) {
    CHECK(keys.insert({r.p, r.f, r.N}).second);
    CHECK((r.q - 1) % r.N == 0);
    CHECK(r.k * r.N == r.q - 1);
    CHECK(r.k % (r.p - 1) == 0);
    if (r.status == RecordStatus::ThreeValued) {
      CHECK(r.values.size() == 3);
      i64 s = 0;
      for (auto [v, m] : r.values) s += v * static_cast<i64>(m);
      CHECK(s == -1);
    }
  }
}

TEST_CASE("single unit agrees with the periods") {
  const auto recs = search_unit(Table1Limits{}, {3, 6}, quiet());
  const auto field = make_field(3, 6);
  for (const auto& r : recs) {
    const auto spec = gauss_periods(field, r.N);
    CHECK(r.status != RecordStatus::NonRational);
    CHECK(r.values == value_multiset(spec));
  }
  CHECK(find(recs, 3, 6, 13) != nullptr);
}

TEST_CASE("parallel sweep is deterministic") {
  const auto L = small_limits();
  const auto one = run_memory(L, quiet(1));
  const auto three = run_memory(L, quiet(3));
  CHECK(same(one, three));
  CHECK(one.size() > 50);
}

TEST_CASE("CYCLOGAUSS_JOBS overrides the requested parallelism") {
  setenv("CYCLOGAUSS_JOBS", "5", 1);
  CHECK(resolve_jobs(2) == 5);
  setenv("CYCLOGAUSS_JOBS", "junk", 1);
  CHECK(resolve_jobs(2) == 2);
  unsetenv("CYCLOGAUSS_JOBS");
  CHECK(resolve_jobs(3) == 3);
  CHECK(resolve_jobs(0) >= 1);
}

TEST_CASE("persistent sweep resumes to the uninterrupted result") {
  const auto L = small_limits();
  TempDir dir;
  const auto full_res = dir.path / "full.jsonl", full_cur = dir.path / "full.cursor";
  const auto s_full = table1_sweep(L, quiet(2), full_res, full_cur);
  CHECK(s_full.complete);
  const auto reference = load_records(full_res);
  CHECK(same(reference, run_memory(L, quiet())));

  const auto res = dir.path / "r.jsonl", cur = dir.path / "r.cursor";
  auto opts = quiet(2);
  opts.max_units = 7;
  const auto first = table1_sweep(L, opts, res, cur);
  CHECK_FALSE(first.complete);
  CHECK(first.units_run == 7);

  // A crash after some records of the next unit, mid-line.
  {
    const auto extra = search_unit(L, table1_units(L)[7], quiet());
    std::ofstream out(res, std::ios::app);
    for (const auto& r : extra) out << canonical_dump(to_json(r)) << '\n';
    out << "{\"N\":12,\"ap\":tr";
  }
  opts.max_units.reset();
  const auto second = table1_sweep(L, opts, res, cur);
  CHECK(second.complete);
  CHECK(second.units_skipped == 7);
  CHECK(second.duplicates_dropped > 0);
  CHECK(same(load_records(res), reference));

  // Re-running a finished sweep writes nothing.
  const auto third = table1_sweep(L, opts, res, cur);
  CHECK(third.records_written == 0);
  CHECK(third.units_run == 0);
  CHECK(same(load_records(res), reference));
}

TEST_CASE("results file format") {
  TempDir dir;
  Table1Limits L;
  L.p_max = 12;
  L.q_max = 2000;
  SearchOptions o = quiet();
  o.timestamps = true;
  table1_sweep(L, o, dir.path / "r.jsonl", dir.path / "c.json");
  std::ifstream in(dir.path / "r.jsonl");
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = Json::parse(line);
    for (const char* key : {"p", "f", "N", "values", "ap", "as", "cw", "t", "status"}) CHECK(j.contains(key));
    CHECK(canonical_dump(j) == line);
    CHECK(j.at("timestamp").get<std::string>().size() == 20);
    ++n;
  }
  CHECK(n > 0);
  std::ifstream cin(dir.path / "c.json");
  const auto cj = Json::parse(cin);
  CHECK(cj.at("last_p") == 11);
  CHECK(cj.at("last_f") == 3);
}

TEST_CASE("corollary search") {
  const auto small = corollary_search(30);
  REQUIRE(small.size() == 1);
  CHECK(std::tie(small[0].p, small[0].f, small[0].N, small[0].theta) == std::make_tuple(u64{7}, 7u, u64{29}, u64{3}));
  // (29*8 - 36)/28 = 7 and 343 * 6 = -1 mod 29.
  CHECK(small[0].h == 8);
  CHECK(small[0].sign == 1);

  const auto hits = corollary_search(5000);
  std::set<std::tuple<u64, unsigned, u64, u64>> got;
  for (const auto& h : hits) got.insert({h.p, h.f, h.N, h.theta});
  const std::set<std::tuple<u64, unsigned, u64, u64>> expected{{7, 7, 29, 3}, {13, 13, 53, 6}, {2, 36, 247, 15}};
  CHECK(got == expected);

  for (const auto& h : hits) {
    const auto report = check_sufficient(h.p, h.f, h.N);
    CHECK(report.t == arith::checked_pow(h.p, static_cast<unsigned>(h.theta)).value());
    CHECK(report.sufficiency_case != SufficiencyCase::None);
    const auto q = arith::checked_pow(h.p, h.f);
    if (q && *q <= (u64{1} << 25)) {
      const auto spec = gauss_periods(make_field(h.p, h.f), h.N);
      CHECK(value_multiset(spec).size() == 3);
    }
  }
}
