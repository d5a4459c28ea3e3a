#include "cyclogauss/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyclogauss/conditions.hpp"
#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/error.hpp"
#include "cyclogauss/families.hpp"
#include "cyclogauss/field.hpp"
#include "cyclogauss/group_ring.hpp"
#include "cyclogauss/search.hpp"
#include "cyclogauss/serialize.hpp"
#include "cyclogauss/structures.hpp"

namespace cyclogauss::cli {
namespace {

enum class Format { Table, Json };

struct FieldArgs {
  u64 p = 0;
  unsigned f = 0;
  u64 N = 0;
};

void add_field_args(CLI::App* cmd, FieldArgs& a) {
  cmd->add_option("-p", a.p, "characteristic")->required()->check(CLI::PositiveNumber);
  cmd->add_option("-f", a.f, "extension degree")->required()->check(CLI::PositiveNumber);
  cmd->add_option("-N", a.N, "index of the subgroup C_0")->required()->check(CLI::PositiveNumber);
}

std::string yes_no(std::optional<bool> b) { return b ? (*b ? "yes" : "no") : "-"; }

template <class V, class M>
std::string spectrum_text(const std::vector<std::pair<V, M>>& values) {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s << ", ";
    s << values[i].first;
    if (values[i].second != 1) s << '^' << values[i].second;
  }
  return s.str();
}

std::string family_spectrum_text(const FamilyPrediction& pred) {
  std::ostringstream s;
  for (std::size_t i = 0; i < pred.values.size(); ++i) {
    if (i) s << ", ";
    s << pred.values[i];
    if (!pred.multiplicities.empty() && pred.multiplicities[i] != 1) s << '^' << pred.multiplicities[i];
  }
  return s.str();
}

void emit(std::ostream& out, const Json& j) { out << canonical_dump(j) << '\n'; }

struct Table1Row {
  std::string p, f, N, spectrum, ap, as;
};

void print_table1(std::ostream& out, const std::vector<Table1Row>& rows, const std::vector<std::string>& extra = {},
                  const std::vector<std::vector<std::string>>& extra_cols = {}) {
  std::size_t ws = std::string("Gauss periods").size();
  for (const auto& r : rows) ws = std::max(ws, r.spectrum.size());
  out << std::left << std::setw(6) << "p" << std::setw(4) << "f" << std::setw(6) << "N" << std::setw(ws + 2)
      << "Gauss periods" << std::setw(5) << "AP" << std::setw(5) << "AS";
  for (const auto& h : extra) out << std::setw(10) << h;
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << std::left << std::setw(6) << r.p << std::setw(4) << r.f << std::setw(6) << r.N << std::setw(ws + 2)
        << r.spectrum << std::setw(5) << r.ap << std::setw(5) << r.as;
    if (i < extra_cols.size())
      for (const auto& c : extra_cols[i]) out << std::setw(10) << c;
    out << '\n';
  }
}

Partition3 value_partition(const ValueDecomposition& dec) {
  if (!dec.three_valued) throw Error(Errc::InvalidArgument, "spectrum is not three-valued; pass --partition");
  return {dec.index_sets[0], dec.index_sets[1], dec.index_sets[2]};
}

Partition3 parse_partition(const std::string& text, u64 N) {
  Partition3 part;
  std::size_t cls = 0;
  std::string token;
  std::istringstream in(text);
  std::string group;
  while (std::getline(in, group, ';')) {
    if (cls >= 3) throw Error(Errc::InvalidArgument, "partition needs exactly three ';'-separated classes");
    std::istringstream g(group);
    while (std::getline(g, token, ',')) {
      token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
      if (token.empty()) continue;
      std::size_t used = 0;
      const u64 a = std::stoull(token, &used);
      if (used != token.size() || a >= N) throw Error(Errc::InvalidArgument, "bad partition entry '" + token + "'");
      part[cls].push_back(a);
    }
    std::sort(part[cls].begin(), part[cls].end());
    ++cls;
  }
  if (cls != 3) throw Error(Errc::InvalidArgument, "partition needs exactly three ';'-separated classes");
  return part;
}

struct AsFlag {
  std::optional<bool> as;
  std::string method;
};

AsFlag as_flag(const PeriodSpectrum& spec, const ValueDecomposition& dec) {
  AsFlag out;
  try {
    const auto cert = verify_scheme(spec, value_partition(dec));
    out.as = cert.scheme;
    out.method = std::string(to_string(cert.method));
  } catch (const Error& e) {
    if (e.code() != Errc::AsymmetricClasses) throw;
    out.method = "asymmetric";
  }
  return out;
}

std::string status_of(const PeriodSpectrum& spec) {
  if (!spec.rational) return "nonrational";
  switch (value_multiset(spec).size()) {
    case 2: return "two_valued";
    case 3: return "three_valued";
    default: return "other";
  }
}

int cmd_periods(const FieldArgs& a, Format fmt, std::ostream& out) {
  const auto spec = gauss_periods(make_field(a.p, a.f), a.N);
  const std::string status = status_of(spec);
  std::optional<ValueDecomposition> dec;
  AsFlag as;
  if (status == "three_valued") {
    dec = decompose(spec);
    as = as_flag(spec, *dec);
  }
  if (fmt == Format::Json) {
    Json j = to_json(spec);
    j["status"] = status;
    j["ap"] = dec ? Json(dec->ap) : Json(nullptr);
    j["as"] = as.as ? Json(*as.as) : Json(nullptr);
    j["as_method"] = as.method;
    j["decomposition"] = dec ? to_json(*dec) : Json(nullptr);
    emit(out, j);
    return kOk;
  }
  out << "q = " << spec.field.q << ", k = " << spec.k << ", " << status << '\n';
  if (!spec.rational) return kOk;
  print_table1(out, {{std::to_string(a.p), std::to_string(a.f), std::to_string(a.N), spectrum_text(value_multiset(spec)),
                      dec ? yes_no(dec->ap) : "-", yes_no(as.as)}});
  if (dec) {
    out << "t = " << dec->t << ", (u, v, r, s) = (" << dec->u << ", " << dec->v << ", " << dec->r << ", " << dec->s
        << ")\n";
  }
  return kOk;
}

int cmd_check(const FieldArgs& a, Format fmt, std::ostream& out) {
  const auto report = check_sufficient(a.p, a.f, a.N);
  if (fmt == Format::Json) {
    emit(out, to_json(report));
    return kOk;
  }
  out << "q = " << report.q << ", N = " << report.N << ", k = " << report.k << '\n';
  out << "t = " << report.t << " (theta = " << report.theta << (report.t_exact ? "" : ", fractional valuation")
      << "), m = " << report.m << '\n';
  out << "candidates (u, v, r, s):\n";
  for (const auto& c : report.candidates) {
    out << "  (" << c.u << ", " << c.v << ", " << c.r << ", " << c.s << ")  y = " << c.y;
    for (auto cs : c.cases) out << "  " << to_string(cs);
    out << '\n';
  }
  out << "sufficiency: " << to_string(report.sufficiency_case) << '\n';
  return kOk;
}

int cmd_cw(const FieldArgs& a, Format fmt, std::ostream& out) {
  const auto field = make_field(a.p, a.f);
  const auto spec = gauss_periods(field, a.N);
  const auto dec = decompose(spec);
  const auto D = build_cw(dec, field.q);
  const auto check = verify_cw(D);
  if (fmt == Format::Json) {
    emit(out, to_json(D, check));
    return check.ok ? kOk : kDomainError;
  }
  std::vector<u64> plus, minus;
  for (std::size_t i = 0; i < D.entries.size(); ++i) {
    if (D.entries[i] > 0) plus.push_back(i);
    if (D.entries[i] < 0) minus.push_back(i);
  }
  auto list = [](const std::vector<u64>& xs) {
    std::ostringstream s;
    for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << xs[i];
    return s.str();
  };
  out << "CW(" << D.N << "," << check.weight << ")\n";
  out << "+1 at: " << list(plus) << '\n';
  out << "-1 at: " << list(minus) << '\n';
  if (check.ok) {
    out << "verified: D D^(-1) = " << check.weight << " (weight " << check.weight << ")\n";
    return kOk;
  }
  out << "verification failed at lag " << check.bad_lag << " (value " << check.bad_value << ")\n";
  return kDomainError;
}

int cmd_scheme(const FieldArgs& a, const std::string& partition_text, u64 brute_limit, Format fmt, std::ostream& out) {
  const auto spec = gauss_periods(make_field(a.p, a.f), a.N);
  const Partition3 part = partition_text.empty() ? value_partition(decompose(spec)) : parse_partition(partition_text, a.N);
  const auto cert = verify_scheme(spec, part, SchemeOptions{brute_limit});
  if (fmt == Format::Json) {
    emit(out, to_json(cert));
    return kOk;
  }
  out << (cert.scheme ? "scheme" : "not_scheme") << " (method " << to_string(cert.method) << ")\n";
  out << "dual classes: " << cert.dual_classes << ", self-dual: " << to_string(cert.self_dual)
      << ", formally self-dual: " << (cert.formally_self_dual ? "yes" : "no") << '\n';
  if (cert.witness) {
    const auto& w = *cert.witness;
    out << "witness: classes " << w.i << "," << w.j << " cosets " << w.a1 << " vs " << w.a2 << " counts " << w.count1
        << " vs " << w.count2 << '\n';
  }
  if (!cert.eigenmatrix.empty()) {
    out << "eigenmatrix:\n";
    for (const auto& row : cert.eigenmatrix) {
      for (auto x : row) out << std::setw(10) << std::right << x;
      out << '\n';
    }
  }
  return kOk;
}

int cmd_lift(const FieldArgs& a, u64 e, bool verify, Format fmt, std::ostream& out) {
  const auto spec = gauss_periods(make_field(a.p, a.f), a.N);
  const auto lifted = lift_periods(period_element(spec), e);
  std::map<BigInt, u64> counts;
  for (u64 i = 0; i < lifted.N(); ++i) ++counts[lifted[i]];
  std::optional<bool> match;
  std::optional<u64> unit;
  if (verify) {
    const auto direct = gauss_periods(make_field(a.p, static_cast<unsigned>(a.f * e)), a.N);
    unit = equal_up_to_unit(lifted, period_element(direct));
    match = unit.has_value();
  }
  if (fmt == Format::Json) {
    Json j;
    j["p"] = a.p;
    j["f"] = a.f;
    j["N"] = a.N;
    j["e"] = e;
    Json eta = Json::array(), vals = Json::array();
    for (u64 i = 0; i < lifted.N(); ++i) eta.push_back(big_to_json(lifted[i]));
    for (const auto& [v, m] : counts) vals.push_back(Json::array({big_to_json(v), m}));
    j["eta"] = eta;
    j["values"] = vals;
    j["direct_match"] = match ? Json(*match) : Json(nullptr);
    j["unit"] = unit ? Json(*unit) : Json(nullptr);
    emit(out, j);
    return kOk;
  }
  std::vector<std::pair<BigInt, u64>> vm(counts.begin(), counts.end());
  out << "lift of GF(" << a.p << "^" << a.f << "), N = " << a.N << " to degree " << a.f * e << ": " << spectrum_text(vm)
      << '\n';
  if (match) {
    out << (*match ? "matches direct computation up to multiplier " + std::to_string(*unit)
                   : std::string("does not match direct computation"))
        << '\n';
  }
  return kOk;
}

int emit_family(const FamilyPrediction& pred, bool validate, Format fmt, std::ostream& out) {
  std::optional<FamilyCheck> check;
  if (validate) check = validate_prediction(pred);
  if (fmt == Format::Json) {
    Json j = to_json(pred);
    j["validation"] = check ? to_json(*check) : Json(nullptr);
    emit(out, j);
    return kOk;
  }
  out << to_string(pred.family) << ":";
  for (const auto& [k, v] : pred.params) out << ' ' << k << '=' << v;
  out << '\n';
  out << "q = " << pred.q << " (p = " << pred.p << ", f = " << pred.f << "), N = " << pred.N << '\n';
  out << "periods: " << family_spectrum_text(pred) << '\n';
  out << "AP " << yes_no(pred.ap) << ", AS " << yes_no(pred.as) << ", CW " << yes_no(pred.cw) << '\n';
  if (pred.class_data) {
    const auto& cd = *pred.class_data;
    out << "h(" << cd.D << ") = " << cd.h << ", b = " << cd.b << ", c = " << cd.c << '\n';
  }
  if (!pred.note.empty()) out << "note: " << pred.note << '\n';
  if (check) {
    if (!check->computed) {
      out << "validation: skipped (q too large)\n";
    } else {
      out << "validation: " << (check->match ? "match" : "MISMATCH") << " (" << spectrum_text(check->observed) << ")\n";
    }
  }
  return kOk;
}

int emit_summary(Format fmt, std::ostream& out) {
  const auto rows = family_summary();
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"parameters", r.parameters}, {"ap", r.ap}, {"as", r.as}, {"cw", r.cw},
                     {"family", std::string(to_string(r.family))},
                     {"example", r.example ? to_json(*r.example) : Json(nullptr)}});
    }
    emit(out, Json{{"families", arr}});
    return kOk;
  }
  for (const auto& r : rows) {
    out << std::left << std::setw(10) << to_string(r.family) << std::setw(58) << r.parameters << " AP " << std::setw(5)
        << r.ap << "AS " << std::setw(4) << r.as << "CW " << r.cw << '\n';
  }
  return kOk;
}

Table1Row table_row(const SearchRecord& r) {
  return {std::to_string(r.p), std::to_string(r.f), std::to_string(r.N),
          r.status == RecordStatus::NonRational ? "nonrational" : spectrum_text(r.values), yes_no(r.ap), yes_no(r.as)};
}

std::string families_text(const SearchRecord& r) {
  std::string s;
  for (auto id : r.families) s += (s.empty() ? "" : ",") + std::string(to_string(id));
  return s.empty() ? "-" : s;
}

struct Table1Args {
  Table1Limits limits;
  bool no_divisibility = false;
  std::string out_path;
  std::string cursor_path;
  bool all = false;
};

int cmd_table1(Table1Args a, unsigned jobs, Format fmt, std::ostream& out, std::ostream& err) {
  a.limits.require_divisibility = !a.no_divisibility;
  SearchOptions opts;
  opts.jobs = jobs;
  opts.log = &err;
  if (!a.out_path.empty()) {
    const std::string cursor = a.cursor_path.empty() ? a.out_path + ".cursor" : a.cursor_path;
    const auto s = table1_sweep(a.limits, opts, a.out_path, cursor);
    const Json j{{"units_total", s.units_total}, {"units_skipped", s.units_skipped}, {"units_run", s.units_run},
                 {"records_written", s.records_written}, {"duplicates_dropped", s.duplicates_dropped},
                 {"complete", s.complete}, {"results", a.out_path}, {"cursor", cursor}};
    if (fmt == Format::Json) {
      emit(out, j);
    } else {
      out << "units: " << s.units_run << " run, " << s.units_skipped << " resumed, " << s.units_total << " total\n";
      out << "records written: " << s.records_written << " (" << s.duplicates_dropped << " duplicates dropped)\n";
    }
    return kOk;
  }
  std::vector<Table1Row> rows;
  std::vector<std::vector<std::string>> extra;
  table1_search(a.limits, opts, [&](const SearchRecord& r) {
    if (fmt == Format::Json) {
      emit(out, to_json(r));
      return;
    }
    if (!a.all && (r.status != RecordStatus::ThreeValued || !r.families.empty())) return;
    rows.push_back(table_row(r));
    extra.push_back({yes_no(r.cw), families_text(r)});
  });
  if (fmt == Format::Table) print_table1(out, rows, {"CW", "families"}, extra);
  return kOk;
}

int cmd_corollary(u64 n_max, Format fmt, std::ostream& out) {
  const auto hits = corollary_search(n_max);
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& h : hits) arr.push_back(to_json(h));
    emit(out, Json{{"n_max", n_max}, {"quadruples", arr}});
    return kOk;
  }
  out << "(p, f, N, theta)\n";
  for (const auto& h : hits) out << "(" << h.p << ", " << h.f << ", " << h.N << ", " << h.theta << ")  h = " << h.h << '\n';
  return kOk;
}

int cmd_index2(u64 bound, Format fmt, std::ostream& out) {
  const auto r = index2_search(bound);
  if (fmt == Format::Json) {
    Json j = to_json(r);
    j["bound"] = bound;
    emit(out, j);
    return kOk;
  }
  out << "N = p1 (p1, p, h):\n";
  for (const auto& h : r.prime) out << "  (" << h.p1 << ", " << h.p << ", " << h.h << ")\n";
  out << "N = p1 p2 (p1, p2, p, h):\n";
  for (const auto& h : r.product) out << "  (" << h.p1 << ", " << *h.p2 << ", " << h.p << ", " << h.h << ")\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Gauss periods, three-valued spectra and their combinatorial structures", "cyclogauss"};
  app.require_subcommand(1);
  // Global options may follow the subcommand.
  app.fallthrough();
  std::string format = "table";
  unsigned jobs = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--jobs", jobs, "worker threads for searches (CYCLOGAUSS_JOBS overrides)");

  FieldArgs periods_a, check_a, cw_a, scheme_a, lift_a;
  auto* periods = app.add_subcommand("periods", "Gauss periods of the index-N subgroup of GF(p^f)^*");
  add_field_args(periods, periods_a);
  auto* check = app.add_subcommand("check", "necessary and sufficient three-valuedness conditions");
  add_field_args(check, check_a);
  auto* cw = app.add_subcommand("cw", "circulant weighing matrix from an AP spectrum");
  add_field_args(cw, cw_a);
  auto* scheme = app.add_subcommand("scheme", "certify a three-class association scheme");
  add_field_args(scheme, scheme_a);
  std::string partition;
  u64 brute_limit = 1'000'000;
  scheme->add_option("--partition", partition, "classes as 'a,b;c,d;e' (default: value index sets)");
  scheme->add_option("--brute-force-limit", brute_limit, "largest q for brute-force confirmation");
  auto* lift = app.add_subcommand("lift", "Hasse-Davenport lift of the periods to GF(p^(fe))");
  add_field_args(lift, lift_a);
  u64 lift_e = 2;
  bool lift_verify = false;
  lift->add_option("-e", lift_e, "lift degree")->required()->check(CLI::PositiveNumber);
  lift->add_flag("--verify", lift_verify, "compare with periods computed directly in GF(p^(fe))");

  auto* family = app.add_subcommand("family", "predictions of the known families");
  family->require_subcommand(1);
  bool validate = false;
  family->add_flag("--validate", validate, "compare with directly computed periods when q <= 2^25");
  u64 fam_p = 0, fam_q0 = 0, fam_p1 = 0, fam_sub = 0;
  unsigned fam_f = 0, fam_e = 0;
  std::optional<u64> fam_p2;
  auto* conic = family->add_subcommand("conic", "q = p^(6f), N = p^(2f)+p^f+1");
  conic->add_option("-p", fam_p)->required();
  conic->add_option("-f", fam_f)->required();
  auto* order3 = family->add_subcommand("order3", "q = q0^3, N = (q0^3-1)/(3(q0-1))");
  order3->add_option("--q0", fam_q0)->required();
  auto* subfield = family->add_subcommand("subfield", "C_0 = GF(p^e)^* GF(p^f)^* in GF(p^(3f))");
  subfield->add_option("-p", fam_p)->required();
  subfield->add_option("-e", fam_e)->required();
  subfield->add_option("-f", fam_f)->required();
  auto* lifted2v = family->add_subcommand("lifted2v", "lift of a two-valued base GF(p^f) with index subN");
  lifted2v->add_option("-p", fam_p)->required();
  lifted2v->add_option("-f", fam_f)->required();
  lifted2v->add_option("-e", fam_e)->required();
  lifted2v->add_option("--subN", fam_sub)->required();
  auto* index2 = family->add_subcommand("index2", "index-2 closed forms");
  index2->add_option("--p1", fam_p1)->required();
  index2->add_option("-p", fam_p)->required();
  index2->add_option("--p2", fam_p2);
  auto* summary = family->add_subcommand("summary", "all families with their flags");

  auto* search = app.add_subcommand("search", "exhaustive searches");
  search->require_subcommand(1);
  Table1Args t1;
  auto* table1 = search->add_subcommand("table1", "sweep (p, f, N) and classify every spectrum");
  table1->add_option("--p-max", t1.limits.p_max, "p < p-max");
  table1->add_option("--q-max", t1.limits.q_max, "q <= q-max");
  table1->add_option("--n-min", t1.limits.n_min);
  table1->add_option("--n-max", t1.limits.n_max);
  table1->add_flag("--no-divisibility", t1.no_divisibility, "drop the requirement (p-1) | k");
  table1->add_option("--out", t1.out_path, "JSON Lines results file (enables resume)");
  table1->add_option("--cursor", t1.cursor_path, "cursor file (default: <out>.cursor)");
  table1->add_flag("--all", t1.all, "table output: include every record, not only new three-valued ones");
  u64 n_max = 5000, bound = 20000;
  auto* corollary = search->add_subcommand("corollary", "self-complementary AP search over (N, h)");
  corollary->add_option("--n-max", n_max, "N < n-max")->check(CLI::Range(u64{4}, u64{1} << 20));
  auto* index2s = search->add_subcommand("index2", "index-2 AP search");
  index2s->add_option("--bound", bound, "p1 (or p1 p2) <= bound");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }
  const Format fmt = format == "json" ? Format::Json : Format::Table;

  try {
    if (periods->parsed()) return cmd_periods(periods_a, fmt, out);
    if (check->parsed()) return cmd_check(check_a, fmt, out);
    if (cw->parsed()) return cmd_cw(cw_a, fmt, out);
    if (scheme->parsed()) return cmd_scheme(scheme_a, partition, brute_limit, fmt, out);
    if (lift->parsed()) return cmd_lift(lift_a, lift_e, lift_verify, fmt, out);
    if (conic->parsed()) return emit_family(conic_family(fam_p, fam_f), validate, fmt, out);
    if (order3->parsed()) return emit_family(order3_family(fam_q0), validate, fmt, out);
    if (subfield->parsed()) return emit_family(subfield_family(fam_p, fam_e, fam_f), validate, fmt, out);
    if (lifted2v->parsed()) return emit_family(lifted_two_valued(fam_p, fam_f, fam_e, fam_sub), validate, fmt, out);
    if (index2->parsed()) return emit_family(index2_alphas(fam_p1, fam_p, fam_p2), validate, fmt, out);
    if (summary->parsed()) return emit_summary(fmt, out);
    if (table1->parsed()) return cmd_table1(t1, jobs, fmt, out, err);
    if (corollary->parsed()) return cmd_corollary(n_max, fmt, out);
    if (index2s->parsed()) return cmd_index2(bound, fmt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace cyclogauss::cli
