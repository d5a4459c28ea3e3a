#pragma once

// Predicted spectra for the known infinite families of three-valued Gauss
// periods, plus the index-2 machinery (class numbers and 4p^h = b^2 + N c^2).

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclogauss/arith.hpp"

namespace cyclogauss {

enum class FamilyId { Conic, Lifted2v, Order3, Subfield, Index2 };

std::string_view to_string(FamilyId id);

struct QuadraticClassData {
  i64 D = 0;
  u64 h = 0;
  BigInt b, c;
  u64 p1 = 0;
  std::optional<u64> p2;
};

struct FamilyPrediction {
  FamilyId family = FamilyId::Conic;
  /// Family parameters in input order, e.g. {"p", 2}, {"f", 1}.
  std::vector<std::pair<std::string, i64>> params;
  u64 p = 0;
  /// Extension degree of the field carrying the periods.
  u64 f = 0;
  BigInt q;
  u64 N = 0;
  /// Distinct predicted values, ascending.
  std::vector<BigInt> values;
  /// Same order as values; empty when the family gives no size formula.
  std::vector<BigInt> multiplicities;
  std::optional<bool> ap, as, cw;
  std::optional<BigInt> t;
  std::optional<QuadraticClassData> class_data;
  std::string note;
};

FamilyPrediction conic_family(u64 p, unsigned f);

/// Base field GF(p^f) with index subN; the base spectrum must be two-valued.
FamilyPrediction lifted_two_valued(u64 p, unsigned f, unsigned e, u64 subN);

/// q0 = p^w with q0 = 1 mod 3 and ord_{3(q0-1)}(q0) = 3.
FamilyPrediction order3_family(u64 q0);

/// C_0 generated by GF(p^e)^* and GF(p^f)^* inside GF(p^{3f}), e/gcd(e,f) = 3.
FamilyPrediction subfield_family(u64 p, unsigned e, unsigned f);

/// Number of reduced primitive forms of discriminant D < 0.
u64 class_number(i64 D);

/// Index-2 closed forms: N = p1 (p1 = 3 mod 4) or N = p1 * p2 (p1 = 1, p2 = 3 mod 4).
FamilyPrediction index2_alphas(u64 p1, u64 p, std::optional<u64> p2 = std::nullopt);

struct Index2Hit {
  u64 p1 = 0;
  std::optional<u64> p2;
  u64 p = 0;
  u64 h = 0;
  bool operator==(const Index2Hit&) const = default;
  auto operator<=>(const Index2Hit&) const = default;
};

struct Index2SearchResult {
  std::vector<Index2Hit> prime;    // N = p1
  std::vector<Index2Hit> product;  // N = p1 * p2
};

/// Every N = p1 or p1 * p2 up to bound meeting the AP criterion for index-2 periods.
Index2SearchResult index2_search(u64 bound);

struct FamilyCheck {
  bool computed = false;
  bool match = false;
  std::vector<std::pair<i64, u64>> observed;
};

/// Compares a prediction with directly computed periods when q <= q_limit.
FamilyCheck validate_prediction(const FamilyPrediction& pred, u64 q_limit = u64{1} << 25);

struct FamilySummaryRow {
  std::string parameters;
  std::string ap, as, cw;
  FamilyId family = FamilyId::Conic;
  std::optional<FamilyPrediction> example;
};

/// The known families with their flags and one small instance each.
std::vector<FamilySummaryRow> family_summary();

/// Families whose parameter shape (p, f, N) instantiates; used to tag search output.
std::vector<FamilyId> family_tags(u64 p, unsigned f, u64 N);

}  // namespace cyclogauss
