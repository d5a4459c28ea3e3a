#pragma once

// JSON views of library results. Objects use sorted keys and integers only;
// integers outside the i64 range are written as decimal strings.

#include <string>

#include <json.hpp>

#include "cyclogauss/conditions.hpp"
#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/families.hpp"
#include "cyclogauss/search.hpp"
#include "cyclogauss/structures.hpp"

namespace cyclogauss {

using Json = nlohmann::json;

Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

Json to_json(const FieldSpec& field);
Json to_json(const PeriodSpectrum& spec);
Json to_json(const ValueDecomposition& dec);
Json to_json(const ConditionReport& report);
Json to_json(const SignedSupport& support, const CwCheck& check);
Json to_json(const SchemeCertificate& cert);
Json to_json(const FamilyPrediction& pred);
Json to_json(const FamilyCheck& check);
Json to_json(const Index2SearchResult& result);
Json to_json(const CorollaryHit& hit);
Json to_json(const SearchRecord& rec);

SearchRecord record_from_json(const Json& j);

/// Compact single-line dump.
std::string canonical_dump(const Json& j);

}  // namespace cyclogauss
