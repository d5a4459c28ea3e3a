#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cyclogauss/arith.hpp"
#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/error.hpp"
#include "cyclogauss/families.hpp"
#include "cyclogauss/field.hpp"

using namespace cyclogauss;

namespace {

std::vector<std::pair<BigInt, BigInt>> spectrum(const FamilyPrediction& pred) {
  std::vector<std::pair<BigInt, BigInt>> out;
  for (std::size_t i = 0; i < pred.values.size(); ++i)
    out.emplace_back(pred.values[i], pred.multiplicities.empty() ? BigInt(-1) : pred.multiplicities[i]);
  return out;
}

std::vector<std::pair<BigInt, BigInt>> sp(std::initializer_list<std::pair<long long, long long>> xs) {
  std::vector<std::pair<BigInt, BigInt>> out;
  for (auto [v, m] : xs) out.emplace_back(v, m);
  return out;
}

// Kronecker symbol (D/n) for n >= 1.
int kronecker(i64 D, u64 n) {
  int result = 1;
  for (auto [pr, e] : arith::factorize(n)) {
    int chi;
    if (pr == 2) {
      const i64 r = ((D % 8) + 8) % 8;
      chi = (r % 2 == 0) ? 0 : (r == 1 || r == 7) ? 1 : -1;
    } else {
      const u64 a = arith::mod_floor(D, pr);
      if (a == 0) {
        chi = 0;
      } else {
        chi = arith::powmod(a, (pr - 1) / 2, pr) == 1 ? 1 : -1;
      }
    }
    for (unsigned i = 0; i < e; ++i) result *= chi;
  }
  return result;
}

bool squarefree(u64 n) {
  for (auto [pr, e] : arith::factorize(n))
    if (e > 1) return false;
  return true;
}

bool fundamental(i64 D) {
  const u64 a = static_cast<u64>(-D);
  if (a % 4 == 3) return squarefree(a);
  if (a % 4 == 0) {
    const u64 m = a / 4;
    return (m % 4 == 1 || m % 4 == 2) && squarefree(m);
  }
  return false;
}

// Dirichlet class number formula for fundamental D < -4.
u64 analytic_class_number(i64 D) {
  const i64 a = -D;
  i64 s = 0;
  for (i64 n = 1; n <= a; ++n) s += kronecker(D, static_cast<u64>(n)) * n;
  REQUIRE(s % a == 0);
  return static_cast<u64>(-s / a);
}

}  // namespace

TEST_CASE("conic family") {
  const auto two = conic_family(2, 1);
  CHECK(two.q == 64);
  CHECK(two.N == 7);
  CHECK(spectrum(two) == sp({{-3, 3}, {1, 3}, {5, 1}}));
  CHECK(*two.t == 4);
  CHECK(*two.ap);
  CHECK(*two.as);
  CHECK(*two.cw);

  const auto three = conic_family(3, 1);
  CHECK(three.N == 13);
  CHECK(spectrum(three) == sp({{-7, 6}, {2, 4}, {11, 3}}));
  CHECK_FALSE(*three.as);

  for (auto [p, f] : {std::pair<u64, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
    const auto pred = conic_family(p, f);
    const auto check = validate_prediction(pred, u64{1} << 24);
    CHECK(check.computed);
    CHECK(check.match);
  }
  CHECK_THROWS_AS(conic_family(4, 1), Error);
}

TEST_CASE("order-3 family") {
  const auto seven = order3_family(7);
  CHECK(seven.p == 7);
  CHECK(seven.f == 3);
  CHECK(seven.N == 19);
  CHECK(spectrum(seven) == sp({{-3, 12}, {4, 6}, {11, 1}}));
  CHECK_FALSE(*seven.cw);

  const auto four = order3_family(4);
  CHECK(four.N == 7);
  CHECK(*four.cw);

  for (u64 q0 : {4, 7, 13, 16, 19}) {
    INFO("q0 = " << q0);
    const auto pred = order3_family(q0);
    const auto check = validate_prediction(pred, u64{1} << 23);
    if (check.computed) CHECK(check.match);
  }
  try {
    order3_family(5);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
  CHECK_THROWS_AS(order3_family(6), Error);
}

TEST_CASE("subfield family") {
  const auto pred = subfield_family(2, 3, 4);
  CHECK(pred.q == 4096);
  CHECK(pred.N == 39);
  CHECK(spectrum(pred) == sp({{-7, 24}, {9, 14}, {41, 1}}));
  CHECK_FALSE(*pred.ap);
  CHECK(validate_prediction(pred).match);

  // |I1| vanishes and the spectrum degenerates to two values.
  const auto tiny = subfield_family(2, 3, 2);
  CHECK(tiny.N == 3);
  CHECK(spectrum(tiny) == sp({{-3, 2}, {5, 1}}));
  CHECK(validate_prediction(tiny).match);

  CHECK(validate_prediction(subfield_family(3, 3, 2)).match);
  CHECK(validate_prediction(subfield_family(2, 6, 4)).match);
  CHECK_THROWS_AS(subfield_family(2, 2, 4), Error);
}

TEST_CASE("lifted two-valued family") {
  const auto pred = lifted_two_valued(2, 6, 2, 3);
  CHECK(pred.q == 4096);
  CHECK(pred.N == 195);
  CHECK(spectrum(pred) == sp({{-3, 128}, {5, 64}, {21, 3}}));
  CHECK(validate_prediction(pred).match);

  const auto collapsed = lifted_two_valued(2, 4, 2, 5);
  CHECK(collapsed.N == 85);
  CHECK(spectrum(collapsed) == sp({{-1, 64}, {3, 21}}));
  CHECK(validate_prediction(collapsed).match);

  const auto odd = lifted_two_valued(3, 2, 2, 4);
  CHECK(odd.N == 40);
  CHECK(odd.values.size() == 2);
  CHECK(validate_prediction(odd).match);

  try {
    lifted_two_valued(2, 6, 2, 7);
    FAIL("expected BaseNotTwoValued");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BaseNotTwoValued);
  }
  CHECK_THROWS_AS(lifted_two_valued(2, 6, 1, 3), Error);
}

TEST_CASE("class numbers against the analytic formula") {
  CHECK(class_number(-11) == 1);
  CHECK(class_number(-23) == 3);
  CHECK(class_number(-55) == 4);
  CHECK(class_number(-3) == 1);
  CHECK(class_number(-4) == 1);
  for (i64 D = -5; D >= -1500; --D) {
    if (!fundamental(D)) continue;
    INFO("D = " << D);
    CHECK(class_number(D) == analytic_class_number(D));
  }
  CHECK_THROWS_AS(class_number(-5), Error);
  CHECK_THROWS_AS(class_number(4), Error);
}

TEST_CASE("index-2 closed forms") {
  const auto a = index2_alphas(11, 5);
  CHECK(a.class_data->b == 3);
  CHECK(spectrum(a) == sp({{-16, 5}, {9, 5}, {34, 1}}));
  CHECK(*a.ap);
  CHECK(validate_prediction(a).match);

  const auto b = index2_alphas(23, 2);
  CHECK(b.class_data->h == 3);
  CHECK(b.class_data->b == -3);
  CHECK(spectrum(b) == sp({{-23, 1}, {-7, 11}, {9, 11}}));
  CHECK(validate_prediction(b).match);

  const auto c = index2_alphas(5, 2, 11);
  CHECK(c.N == 55);
  CHECK(c.class_data->h == 4);
  CHECK(c.class_data->b == -3);
  CHECK(c.values == std::vector<BigInt>{-391, -135, 121});
  CHECK(validate_prediction(c).match);

  // 43^40 overflows any machine word.
  const auto big = index2_alphas(163, 43);
  CHECK(big.values.size() == 3);
  CHECK(*big.ap);
}

TEST_CASE("index-2 property panel") {
  // AP exactly when b = +-3c; predictions agree with the periods whenever q is small.
  int checked = 0, validated = 0;
  for (u64 p1 = 7; p1 < 200; p1 += 4) {
    if (!arith::is_prime(p1)) continue;
    for (u64 p = 2; p < 60; ++p) {
      if (!arith::is_prime(p) || p == p1) continue;
      FamilyPrediction pred;
      try {
        pred = index2_alphas(p1, p);
      } catch (const Error&) {
        continue;
      }
      ++checked;
      const auto& cd = *pred.class_data;
      INFO("p1 = " << p1 << ", p = " << p);
      CHECK(pred.ap.value() == (cd.b == 3 * cd.c || cd.b == -3 * cd.c));
      CHECK(4 * boost::multiprecision::pow(BigInt(p), cd.h) ==
            cd.b * cd.b + BigInt(p1) * cd.c * cd.c);
      const auto check = validate_prediction(pred, u64{1} << 22);
      if (check.computed) {
        ++validated;
        CHECK(check.match);
      }
    }
  }
  CHECK(checked > 20);
  CHECK(validated >= 3);
}

TEST_CASE("index-2 search") {
  const auto none = index2_search(10);
  CHECK(none.prime.empty());
  CHECK(none.product.empty());

  const auto r = index2_search(20000);
  const std::vector<Index2Hit> prime{
      {11, std::nullopt, 5, 1}, {23, std::nullopt, 2, 3}, {43, std::nullopt, 13, 1},
      {67, std::nullopt, 19, 1}, {163, std::nullopt, 43, 1}};
  const std::vector<Index2Hit> product{{5, 11, 2, 4}, {17, 11, 7, 2}};
  CHECK(r.prime == prime);
  CHECK(r.product == product);
  for (const auto& hit : r.prime) {
    const auto pred = index2_alphas(hit.p1, hit.p);
    CHECK(*pred.ap);
  }
}

TEST_CASE("family summary and tags") {
  const auto rows = family_summary();
  CHECK(rows.size() == 7);
  for (const auto& row : rows) {
    REQUIRE(row.example);
    const auto check = validate_prediction(*row.example, u64{1} << 22);
    if (check.computed) CHECK(check.match);
  }
  auto has = [](const std::vector<FamilyId>& tags, FamilyId id) {
    return std::find(tags.begin(), tags.end(), id) != tags.end();
  };
  CHECK(has(family_tags(2, 6, 7), FamilyId::Conic));
  CHECK(has(family_tags(7, 3, 19), FamilyId::Order3));
  CHECK(has(family_tags(2, 12, 39), FamilyId::Subfield));
  CHECK(has(family_tags(2, 12, 195), FamilyId::Lifted2v));
  CHECK(has(family_tags(5, 5, 11), FamilyId::Index2));
  CHECK(has(family_tags(2, 20, 55), FamilyId::Index2));
  CHECK(family_tags(7, 7, 29).empty());
  CHECK(family_tags(2, 11, 89).empty());
}
