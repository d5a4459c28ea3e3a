#include "cyclogauss/serialize.hpp"

#include <limits>

#include "cyclogauss/error.hpp"

namespace cyclogauss {
namespace {

Json value_pairs(const std::vector<std::pair<i64, u64>>& values) {
  Json out = Json::array();
  for (const auto& [v, m] : values) out.push_back(Json::array({v, m}));
  return out;
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json index_list(const std::vector<u64>& xs) { return Json(xs); }

}  // namespace

Json big_to_json(const BigInt& v) {
  if (auto small = arith::to_i64(v)) return *small;
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<u64>());
  if (j.is_number_integer()) return BigInt(j.get<i64>());
  throw Error(Errc::InvalidArgument, "expected an integer");
}

Json to_json(const FieldSpec& field) {
  return {{"p", field.p}, {"f", field.f}, {"q", field.q}, {"poly", field.poly}};
}

Json to_json(const PeriodSpectrum& spec) {
  Json j;
  j["p"] = spec.field.p;
  j["f"] = spec.field.f;
  j["q"] = spec.field.q;
  j["N"] = spec.N;
  j["k"] = spec.k;
  j["poly"] = spec.field.poly;
  j["rational"] = spec.rational;
  if (spec.rational) {
    j["eta"] = std::vector<i64>(spec.eta.data(), spec.eta.data() + spec.eta.size());
    const auto vm = value_multiset(spec);
    j["values"] = value_pairs(vm);
    j["distinct"] = vm.size();
  } else {
    j["eta"] = nullptr;
    j["values"] = nullptr;
    j["distinct"] = nullptr;
  }
  return j;
}

Json to_json(const ValueDecomposition& dec) {
  Json j;
  j["N"] = dec.N;
  j["values"] = dec.values;
  j["multiplicities"] = dec.multiplicities;
  Json sets = Json::array();
  for (const auto& s : dec.index_sets) sets.push_back(index_list(s));
  j["index_sets"] = sets;
  j["three_valued"] = dec.three_valued;
  j["ap"] = dec.ap;
  if (dec.three_valued) {
    j["t"] = dec.t;
    j["u"] = dec.u;
    j["v"] = dec.v;
    j["r"] = dec.r;
    j["s"] = dec.s;
  }
  return j;
}

Json to_json(const ConditionReport& report) {
  Json j;
  j["p"] = report.p;
  j["f"] = report.f;
  j["q"] = report.q;
  j["N"] = report.N;
  j["k"] = report.k;
  j["t"] = report.t;
  j["theta"] = report.theta;
  j["t_exact"] = report.t_exact;
  j["m"] = report.m;
  j["sufficiency_case"] = std::string(to_string(report.sufficiency_case));
  j["witness"] = opt(report.witness);
  Json cands = Json::array();
  for (const auto& c : report.candidates) {
    Json cj;
    cj["u"] = c.u;
    cj["v"] = c.v;
    cj["r"] = c.r;
    cj["s"] = c.s;
    cj["y"] = c.y;
    Json cases = Json::array();
    for (auto cs : c.cases) cases.push_back(std::string(to_string(cs)));
    cj["cases"] = cases;
    cj["tx_solutions"] = c.tx.solutions.size();
    cj["tx_truncated"] = c.tx.truncated;
    cj["value_sets"] = c.value_sets;
    cands.push_back(cj);
  }
  j["candidates"] = cands;
  return j;
}

Json to_json(const SignedSupport& support, const CwCheck& check) {
  Json j;
  j["N"] = support.N;
  j["entries"] = support.entries;
  std::vector<u64> plus, minus;
  for (std::size_t i = 0; i < support.entries.size(); ++i) {
    if (support.entries[i] > 0) plus.push_back(i);
    if (support.entries[i] < 0) minus.push_back(i);
  }
  j["plus"] = plus;
  j["minus"] = minus;
  j["ok"] = check.ok;
  j["weight"] = check.weight;
  if (!check.ok) {
    j["bad_lag"] = check.bad_lag;
    j["bad_value"] = check.bad_value;
  }
  return j;
}

Json to_json(const SchemeCertificate& cert) {
  Json j;
  j["q"] = cert.q;
  j["N"] = cert.N;
  Json part = Json::array();
  for (const auto& cls : cert.partition) part.push_back(index_list(cls));
  j["partition"] = part;
  j["scheme"] = cert.scheme;
  j["method"] = std::string(to_string(cert.method));
  j["self_dual"] = std::string(to_string(cert.self_dual));
  j["formally_self_dual"] = cert.formally_self_dual;
  j["dual_classes"] = cert.dual_classes;
  j["theorem_fast_path"] = cert.theorem_fast_path;
  j["brute_force_verdict"] = opt(cert.brute_force_verdict);
  Json eig = Json::array();
  for (const auto& row : cert.eigenmatrix) eig.push_back(Json(std::vector<i64>(row.begin(), row.end())));
  j["eigenmatrix"] = eig;
  j["dual_multiplicities"] = std::vector<u64>(cert.dual_multiplicities.begin(), cert.dual_multiplicities.end());
  if (cert.intersection_numbers) {
    Json pn = Json::array();
    for (const auto& a : *cert.intersection_numbers) {
      Json pa = Json::array();
      for (const auto& b : a) {
        Json pb = Json::array();
        for (const auto& c : b) pb.push_back(big_to_json(c));
        pa.push_back(pb);
      }
      pn.push_back(pa);
    }
    j["intersection_numbers"] = pn;
  } else {
    j["intersection_numbers"] = nullptr;
  }
  if (cert.witness) {
    const auto& w = *cert.witness;
    j["witness"] = {{"i", w.i}, {"j", w.j}, {"a1", w.a1}, {"a2", w.a2}, {"count1", w.count1}, {"count2", w.count2}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const FamilyPrediction& pred) {
  Json j;
  j["family"] = std::string(to_string(pred.family));
  Json params = Json::object();
  for (const auto& [name, value] : pred.params) params[name] = value;
  j["params"] = params;
  j["p"] = pred.p;
  j["f"] = pred.f;
  j["q"] = big_to_json(pred.q);
  j["N"] = pred.N;
  Json values = Json::array();
  for (std::size_t i = 0; i < pred.values.size(); ++i) {
    if (pred.multiplicities.empty()) {
      values.push_back(Json::array({big_to_json(pred.values[i]), nullptr}));
    } else {
      values.push_back(Json::array({big_to_json(pred.values[i]), big_to_json(pred.multiplicities[i])}));
    }
  }
  j["values"] = values;
  j["ap"] = opt(pred.ap);
  j["as"] = opt(pred.as);
  j["cw"] = opt(pred.cw);
  j["t"] = pred.t ? big_to_json(*pred.t) : Json(nullptr);
  if (pred.class_data) {
    const auto& cd = *pred.class_data;
    j["class_data"] = {{"D", cd.D}, {"h", cd.h}, {"b", big_to_json(cd.b)}, {"c", big_to_json(cd.c)},
                       {"p1", cd.p1}, {"p2", opt(cd.p2)}};
  } else {
    j["class_data"] = nullptr;
  }
  j["note"] = pred.note;
  return j;
}

Json to_json(const FamilyCheck& check) {
  return {{"computed", check.computed}, {"match", check.match}, {"observed", value_pairs(check.observed)}};
}

Json to_json(const Index2SearchResult& result) {
  auto hits = [](const std::vector<Index2Hit>& xs) {
    Json out = Json::array();
    for (const auto& h : xs) out.push_back({{"p1", h.p1}, {"p2", opt(h.p2)}, {"p", h.p}, {"h", h.h}});
    return out;
  };
  return {{"prime", hits(result.prime)}, {"product", hits(result.product)}};
}

Json to_json(const CorollaryHit& hit) {
  return {{"p", hit.p}, {"f", hit.f}, {"N", hit.N}, {"theta", hit.theta}, {"h", hit.h}, {"sign", hit.sign}};
}

Json to_json(const SearchRecord& rec) {
  Json j;
  j["p"] = rec.p;
  j["f"] = rec.f;
  j["N"] = rec.N;
  j["q"] = rec.q;
  j["k"] = rec.k;
  j["values"] = value_pairs(rec.values);
  j["ap"] = opt(rec.ap);
  j["as"] = opt(rec.as);
  j["cw"] = opt(rec.cw);
  j["t"] = opt(rec.t);
  j["status"] = std::string(to_string(rec.status));
  j["as_method"] = rec.as_method;
  Json fam = Json::array();
  for (auto id : rec.families) fam.push_back(std::string(to_string(id)));
  j["families"] = fam;
  if (!rec.timestamp.empty()) j["timestamp"] = rec.timestamp;
  return j;
}

SearchRecord record_from_json(const Json& j) {
  SearchRecord rec;
  rec.p = j.at("p").get<u64>();
  rec.f = j.at("f").get<unsigned>();
  rec.N = j.at("N").get<u64>();
  rec.q = j.at("q").get<u64>();
  rec.k = j.at("k").get<u64>();
  for (const auto& pair : j.at("values")) rec.values.emplace_back(pair.at(0).get<i64>(), pair.at(1).get<u64>());
  auto read_bool = [&](const char* key) -> std::optional<bool> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<bool>();
  };
  rec.ap = read_bool("ap");
  rec.as = read_bool("as");
  rec.cw = read_bool("cw");
  if (j.contains("t") && !j.at("t").is_null()) rec.t = j.at("t").get<i64>();
  const auto status = record_status_from_string(j.at("status").get<std::string>());
  if (!status) throw Error(Errc::InvalidArgument, "unknown record status");
  rec.status = *status;
  rec.as_method = j.value("as_method", std::string());
  if (j.contains("families")) {
    for (const auto& name : j.at("families")) {
      const auto s = name.get<std::string>();
      for (auto id : {FamilyId::Conic, FamilyId::Lifted2v, FamilyId::Order3, FamilyId::Subfield, FamilyId::Index2})
        if (to_string(id) == s) rec.families.push_back(id);
    }
  }
  rec.timestamp = j.value("timestamp", std::string());
  return rec;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace cyclogauss
