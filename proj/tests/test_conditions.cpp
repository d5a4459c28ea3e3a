#include <doctest.h>

#include <algorithm>
#include <tuple>
#include <vector>

#include "cyclogauss/conditions.hpp"
#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/error.hpp"
#include "cyclogauss/field.hpp"

using namespace cyclogauss;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

// Odometer over every vector (t_{-X}..t_{-1}, t_1..t_X) with entries <= cap.
std::vector<TxSolution> brute_tx(u64 u, u64 v, u64 r, u64 s, u64 m) {
  const i64 R1 = static_cast<i64>(u * (u + 1) * r + v * (v - 1) * s);
  const i64 R2 = static_cast<i64>(u * (u - 1) * r + v * (v + 1) * s);
  i64 X = 1;
  while ((X + 1) * X <= std::max(R1, R2)) ++X;
  const i64 cap = std::max(R1, R2) / 2 + 1;
  std::vector<i64> xs;
  for (i64 x = -X; x <= X; ++x)
    if (x != 0) xs.push_back(x);
  std::vector<i64> t(xs.size(), 0);
  std::vector<TxSolution> out;
  for (;;) {
    i64 e1 = 0, e2 = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const i64 x = xs[i] > 0 ? xs[i] : -xs[i];
      if (xs[i] > 0) {
        e1 += x * (x - 1) * t[i];
        e2 += x * (x + 1) * t[i];
      } else {
        e1 += x * (x + 1) * t[i];
        e2 += x * (x - 1) * t[i];
      }
    }
    if (e1 == R1 && e2 == R2) {
      bool keep = true;
      if (m >= 2) {
        int odd = 0;
        for (i64 c : t) {
          if (c % static_cast<i64>(m) == 0) continue;
          if (c % static_cast<i64>(m) == 1) {
            ++odd;
          } else {
            keep = false;
          }
        }
        keep = keep && odd <= 1;
      }
      if (keep) {
        TxSolution sol;
        for (std::size_t i = 0; i < xs.size(); ++i)
          if (t[i]) sol[xs[i]] = static_cast<u64>(t[i]);
        out.push_back(sol);
      }
    }
    std::size_t i = 0;
    while (i < t.size() && ++t[i] > cap) t[i++] = 0;
    if (i == t.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sizes_three_valued") {
  auto a = sizes_three_valued(-3, 1, 5, 64, 7);
  CHECK(a.integral);
  CHECK(a.sizes == big({3, 3, 1}));
  auto b = sizes_three_valued(-7, 4, 15, 1331, 19);
  CHECK(b.integral);
  CHECK(b.sizes == big({10, 6, 3}));
  auto c = sizes_three_valued(-414, -71, 272, 823543, 29);
  CHECK(c.integral);
  CHECK(c.sizes == big({1, 21, 7}));
  CHECK_FALSE(sizes_three_valued(-3, 1, 6, 64, 7).integral);
}

TEST_CASE("sizes_ap") {
  auto a = sizes_ap(1, 4, 64, 7);
  CHECK(a.integral);
  CHECK(a.sizes == big({3, 1, 3, 2}));
  auto b = sizes_ap(-71, 343, 823543, 29);
  CHECK(b.integral);
  CHECK(b.sizes == big({1, 7, 21, -6}));
  // Conic parameters with p = 2, f = 1.
  auto c = sizes_ap(2 - 1, 4, 64, 4 + 2 + 1);
  CHECK(c.sizes == big({3, 1, 3, 2}));
  CHECK_FALSE(sizes_ap(2, 4, 64, 7).integral);
}

TEST_CASE("check_necessary") {
  CHECK(check_necessary(64, 7, 4, 1, 1, 3, 1) == Necessary{true, true});
  CHECK(check_necessary(823543, 29, 343, 1, 1, 1, 7) == Necessary{true, true});
  CHECK_FALSE(check_necessary(64, 7, 4, 1, 1, 1, 3).congruence);
}

TEST_CASE("necessary conditions and size formulas hold on computed spectra") {
  const std::vector<std::tuple<u64, unsigned, u64>> panel = {
      {2, 6, 7}, {3, 6, 13}, {11, 3, 19}, {7, 3, 19}, {7, 7, 29}, {2, 11, 89}, {29, 3, 67}, {5, 6, 93}, {2, 12, 39}};
  for (auto [p, f, N] : panel) {
    const auto field = make_field(p, f);
    const auto spec = gauss_periods(field, N);
    const auto dec = decompose(spec);
    CAPTURE(p);
    CAPTURE(f);
    CAPTURE(N);
    REQUIRE(dec.three_valued);
    const auto nec = check_necessary(field.q, N, static_cast<u64>(dec.t), static_cast<u64>(dec.u), static_cast<u64>(dec.v),
                                     dec.r, dec.s);
    CHECK(nec == Necessary{true, true});
    const auto sizes = sizes_three_valued(dec.values[0], dec.values[1], dec.values[2], field.q, N);
    CHECK(sizes.integral);
    CHECK(sizes.sizes == std::vector<BigInt>(dec.multiplicities.begin(), dec.multiplicities.end()));
    if (dec.ap) {
      const auto ap = sizes_ap(dec.values[1], dec.t, field.q, N);
      CHECK(ap.sizes[0] == dec.r);
      CHECK(ap.sizes[1] == dec.s);
      CHECK(ap.sizes[3] == BigInt(dec.r) - BigInt(dec.s));
    }
  }
}

TEST_CASE("enumerate_tx examples") {
  const auto a = enumerate_tx(1, 1, 3, 1);
  CHECK(a.solutions == std::vector<TxSolution>{{{-2, 1}}, {{-1, 3}, {1, 1}}});
  const auto b = enumerate_tx(1, 1, 1, 1);
  CHECK(b.solutions == std::vector<TxSolution>{{{-1, 1}, {1, 1}}});
  // v(v+1) = 6 < 2m = 10 with r a multiple of m.
  const auto c = enumerate_tx(1, 2, 10, 1, TxOptions{5});
  CHECK(c.solutions == std::vector<TxSolution>{{{-3, 1}, {-1, 5}}, {{-1, 10}, {2, 1}}});
}

TEST_CASE("enumerate_tx agrees with an exhaustive scan") {
  const std::vector<std::tuple<u64, u64, u64, u64, u64>> panel = {
      {1, 1, 3, 1, 0}, {1, 1, 1, 1, 0}, {1, 1, 2, 2, 0}, {1, 2, 1, 1, 0}, {2, 1, 1, 1, 0}, {1, 2, 2, 1, 0},
      {1, 1, 4, 1, 0}, {1, 1, 3, 1, 2}, {1, 2, 4, 1, 2}, {1, 1, 2, 2, 2}, {1, 3, 1, 1, 0}, {2, 1, 1, 2, 3}};
  for (auto [u, v, r, s, m] : panel) {
    CAPTURE(u);
    CAPTURE(v);
    CAPTURE(r);
    CAPTURE(s);
    CAPTURE(m);
    CHECK(enumerate_tx(u, v, r, s, TxOptions{m}).solutions == brute_tx(u, v, r, s, m));
  }
}

TEST_CASE("enumerate_tx truncates at the cap") {
  const auto e = enumerate_tx(3, 1, 6, 1, TxOptions{0, 3});
  CHECK(e.truncated);
  CHECK(e.solutions.size() == 3);
}

TEST_CASE("check_sufficient") {
  const auto a = check_sufficient(7, 7, 29);
  CHECK(a.t == 343);
  CHECK(a.m == 7);
  CHECK(a.sufficiency_case == SufficiencyCase::Cor32a);
  REQUIRE(a.witness);
  const auto& w = a.candidates[*a.witness];
  CHECK(w.u == 1);
  CHECK(w.v == 1);
  CHECK(w.r == 1);
  CHECK(w.s == 7);
  CHECK(std::find(w.cases.begin(), w.cases.end(), SufficiencyCase::Thm33_5) != w.cases.end());
  // The observed spectrum is among the candidate value sets.
  const std::vector<i64> observed = {-414, -71, 272};
  CHECK(std::find(w.value_sets.begin(), w.value_sets.end(), observed) != w.value_sets.end());

  const auto b = check_sufficient(2, 36, 247);
  CHECK(b.t == (u64{1} << 15));
  CHECK(b.m == 6);
  CHECK(b.sufficiency_case != SufficiencyCase::None);
  // Both (r, s) = (1, 126) and (123, 1) satisfy the necessary conditions with u = v = 1.
  std::vector<std::pair<u64, u64>> rs;
  for (const auto& c : b.candidates)
    if (c.u == 1 && c.v == 1) rs.emplace_back(c.r, c.s);
  CHECK(rs == std::vector<std::pair<u64, u64>>{{1, 126}, {123, 1}});

  CHECK(check_sufficient(2, 4, 5).sufficiency_case == SufficiencyCase::None);
  CHECK_THROWS_AS(check_sufficient(2, 4, 7), Error);
}

TEST_CASE("a reported sufficiency case implies a three-valued spectrum") {
  // Every divisor N > 2 of (q-1)/(p-1) for a handful of fields.
  for (auto [p, f] : {std::pair<u64, unsigned>{2, 6}, {2, 8}, {2, 10}, {2, 12}, {3, 6}, {5, 4}, {7, 3}, {11, 3}, {7, 4}}) {
    const auto field = make_field(p, f);
    const u64 base = (field.q - 1) / (p - 1);
    for (u64 N : arith::divisors(arith::factorize(base))) {
      if (N < 3) continue;
      const auto rep = check_sufficient(p, f, N);
      if (rep.sufficiency_case == SufficiencyCase::None) continue;
      const auto dec = decompose(gauss_periods(field, N));
      CAPTURE(p);
      CAPTURE(f);
      CAPTURE(N);
      CHECK(dec.three_valued);
    }
  }
}
