#include <doctest.h>

#include <random>
#include <tuple>
#include <vector>

#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/group_ring.hpp"

using namespace cyclogauss;

namespace {

// Quadratic reference written directly from the definition.
std::vector<i64> reference_convolve(const std::vector<i64>& a, const std::vector<i64>& b) {
  const std::size_t n = a.size();
  std::vector<i64> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[(i + j) % n] += a[i] * b[j];
  return c;
}

GroupRingI64 from(const std::vector<i64>& v) {
  GroupRingI64 e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e[i] = v[i];
  return e;
}

}  // namespace

TEST_CASE("identity, inverse pair and mismatched moduli") {
  const auto a = from({3, -1, 4, 1, -5, 9, 2});
  CHECK(convolve(a, GroupRingI64::delta(7, 0)) == a);
  CHECK(convolve(GroupRingI64::delta(7, 1), GroupRingI64::delta(7, 6)) == GroupRingI64::delta(7, 0));
  try {
    convolve(a, GroupRingI64::delta(5, 0));
    FAIL("expected MismatchedN");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MismatchedN);
  }
}

TEST_CASE("Singer difference set in Z_7") {
  const std::vector<int> S = {1, 2, 4};
  const auto s = GroupRingI64::indicator(7, S);
  const auto sq = convolve(s, s);
  for (u64 a = 0; a < 7; ++a) {
    CHECK(sq[a] >= 0);
    CHECK(sq[a] <= 3);
  }
  const auto auto_corr = convolve(s, involution(s));
  CHECK(auto_corr == 2 * GroupRingI64::delta(7, 0) + GroupRingI64::ones(7));
  CHECK(auto_corr[0] == 3);
  CHECK(auto_corr[3] == 1);
}

TEST_CASE("involution") {
  CHECK(involution(GroupRingI64::delta(9, 1)) == GroupRingI64::delta(9, 8));
  const auto sym = from({5, 1, 2, 2, 1});
  CHECK(involution(sym) == sym);
  const auto a = from({1, 2, 3, 4, 5, 6});
  CHECK(involution(involution(a)) == a);
}

TEST_CASE("convolution agrees with the quadratic reference on random inputs") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<i64> coeff(-1000, 1000);
  std::uniform_int_distribution<std::size_t> size(1, 64);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    std::vector<i64> a(n), b(n);
    for (auto& x : a) x = coeff(rng);
    for (auto& x : b) x = coeff(rng);
    const auto expected = reference_convolve(a, b);
    const auto got = convolve(from(a), from(b));
    CHECK(got == from(expected));
    CHECK(convolve(from(a).cast<BigInt>(), from(b).cast<BigInt>()) == from(expected).cast<BigInt>());
  }
}

TEST_CASE("i64 convolution reports overflow") {
  GroupRingI64 big(2);
  big[0] = i64{1} << 40;
  big[1] = i64{1} << 40;
  CHECK_THROWS_AS(convolve(big, big), Error);
  const auto exact = convolve(big.cast<BigInt>(), big.cast<BigInt>());
  CHECK(exact[0] == BigInt(1) << 81);
}

TEST_CASE("convolution identity for three-valued periods") {
  for (auto [p, f, N] : {std::tuple<u64, unsigned, u64>{2, 6, 7}, {11, 3, 19}, {7, 7, 29}, {2, 11, 89}}) {
    const auto field = make_field(p, f);
    const auto spec = gauss_periods(field, N);
    auto dec = decompose(spec);
    CHECK(check_lemma21(dec, field.q, spec.k));
    // Move one index from the low set to the high set.
    auto broken = dec;
    broken.index_sets[2].push_back(broken.index_sets[0].back());
    broken.index_sets[0].pop_back();
    CHECK_FALSE(check_lemma21(broken, field.q, spec.k));
  }
}

TEST_CASE("Hasse-Davenport lift") {
  const auto gf8 = make_field(2, 3);
  const auto g = period_element(gauss_periods(gf8, 7));
  // g = 2S - Z_7 for the trace-zero set S = {1,2,4}.
  const std::vector<int> S = {1, 2, 4};
  CHECK(g == 2 * GroupRingI64::indicator(7, S) - GroupRingI64::ones(7));

  CHECK(lift_periods(g, 1) == g.cast<BigInt>());
  const auto lifted = lift_periods(g, 2);
  const auto s = GroupRingI64::indicator(7, S);
  CHECK(lifted == (-4 * convolve(s, s) + 5 * GroupRingI64::ones(7)).cast<BigInt>());

  const auto direct = period_element(gauss_periods(make_field(2, 6), 7));
  CHECK(equal_up_to_unit(direct, lifted).has_value());

  // Parseval identities for higher lifts.
  for (u64 e = 1; e <= 6; ++e) {
    const auto le = lift_periods(g, e);
    BigInt sum = 0, sq = 0;
    for (u64 a = 0; a < 7; ++a) {
      sum += le[a];
      sq += le[a] * le[a];
    }
    const BigInt qE = BigInt(1) << (3 * e);
    CHECK(sum == -1);
    CHECK(sq == qE - (qE - 1) / 7);
  }
}

TEST_CASE("equal_up_to_unit rejects genuinely different elements") {
  const auto a = from({1, 2, 3, 4, 5});
  auto scaled = GroupRingI64(5);
  for (u64 i = 0; i < 5; ++i) scaled[i] = a[(2 * i) % 5];
  CHECK(equal_up_to_unit(a, scaled) == std::optional<u64>(2));
  CHECK_FALSE(equal_up_to_unit(a, from({5, 4, 3, 2, 2})).has_value());
}
