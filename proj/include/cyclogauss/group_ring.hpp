#pragma once

// Integer group ring Z[Z_N]. Coefficient a of an element is the coefficient of
// the group element [a]. Scalar is i64 or BigInt.

#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "cyclogauss/arith.hpp"
#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/error.hpp"

namespace cyclogauss {

template <class Scalar>
class GroupRingElem {
 public:
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  GroupRingElem() = default;
  explicit GroupRingElem(u64 N) : c_(Vec::Zero(static_cast<Eigen::Index>(N))) {}
  explicit GroupRingElem(Vec coeffs) : c_(std::move(coeffs)) {}

  static GroupRingElem delta(u64 N, u64 a) {
    GroupRingElem e(N);
    e[a % N] = Scalar(1);
    return e;
  }
  /// The sum of all group elements.
  static GroupRingElem ones(u64 N) { return GroupRingElem(Vec::Constant(static_cast<Eigen::Index>(N), Scalar(1))); }
  /// Indicator of a subset of Z_N.
  template <class Range>
  static GroupRingElem indicator(u64 N, const Range& subset) {
    GroupRingElem e(N);
    for (auto a : subset) e[static_cast<u64>(a) % N] += Scalar(1);
    return e;
  }

  u64 N() const { return static_cast<u64>(c_.size()); }
  const Vec& coeffs() const { return c_; }
  Vec& coeffs() { return c_; }
  Scalar& operator[](u64 a) { return c_[static_cast<Eigen::Index>(a)]; }
  const Scalar& operator[](u64 a) const { return c_[static_cast<Eigen::Index>(a)]; }

  GroupRingElem& operator+=(const GroupRingElem& o) {
    check_same(o);
    c_ += o.c_;
    return *this;
  }
  GroupRingElem& operator-=(const GroupRingElem& o) {
    check_same(o);
    c_ -= o.c_;
    return *this;
  }
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const Scalar& k, GroupRingElem a) {
    a.c_ *= k;
    return a;
  }
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.N() == b.N() && (a.N() == 0 || a.c_ == b.c_);
  }

  template <class To>
  GroupRingElem<To> cast() const {
    typename GroupRingElem<To>::Vec v(c_.size());
    for (Eigen::Index i = 0; i < c_.size(); ++i) v[i] = To(c_[i]);
    return GroupRingElem<To>(std::move(v));
  }

  void check_same(const GroupRingElem& o) const {
    if (N() != o.N()) {
      throw Error(Errc::MismatchedN, std::to_string(N()) + " vs " + std::to_string(o.N()));
    }
  }

 private:
  Vec c_;
};

using GroupRingI64 = GroupRingElem<i64>;
using GroupRingBig = GroupRingElem<BigInt>;

namespace detail {
template <class Scalar>
struct Accumulator {
  using type = Scalar;
  static Scalar narrow(const Scalar& v) { return v; }
};
template <>
struct Accumulator<i64> {
  using type = i128;
  static i64 narrow(i128 v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
      throw Error(Errc::Overflow, "group ring coefficient exceeds 64 bits");
    }
    return static_cast<i64>(v);
  }
};
}  // namespace detail

/// c_a = sum_b A_b B_{a-b}. Schoolbook; the i64 instantiation throws Overflow
/// rather than wrapping.
template <class Scalar>
GroupRingElem<Scalar> convolve(const GroupRingElem<Scalar>& A, const GroupRingElem<Scalar>& B) {
  A.check_same(B);
  using Acc = detail::Accumulator<Scalar>;
  const u64 N = A.N();
  GroupRingElem<Scalar> C(N);
  std::vector<typename Acc::type> acc(N, typename Acc::type(0));
  for (u64 b = 0; b < N; ++b) {
    if (A[b] == Scalar(0)) continue;
    const typename Acc::type ab(A[b]);
    for (u64 x = 0; x < N; ++x) {
      if (B[x] == Scalar(0)) continue;
      const u64 a = b + x < N ? b + x : b + x - N;
      acc[a] += ab * typename Acc::type(B[x]);
    }
  }
  for (u64 a = 0; a < N; ++a) C[a] = Acc::narrow(acc[a]);
  return C;
}

/// Coefficient at a moves to -a.
template <class Scalar>
GroupRingElem<Scalar> involution(const GroupRingElem<Scalar>& A) {
  const u64 N = A.N();
  GroupRingElem<Scalar> out(N);
  for (u64 a = 0; a < N; ++a) out[(N - a) % N] = A[a];
  return out;
}

template <class Scalar>
GroupRingElem<Scalar> power(GroupRingElem<Scalar> base, u64 e) {
  GroupRingElem<Scalar> result = GroupRingElem<Scalar>::delta(base.N(), 0);
  while (e > 0) {
    if (e & 1) result = convolve(result, base);
    e >>= 1;
    if (e > 0) base = convolve(base, base);
  }
  return result;
}

/// g_{F,N} = sum_a eta_a [a].
inline GroupRingI64 period_element(const PeriodSpectrum& spec) {
  if (!spec.rational) throw Error(Errc::NotRational, "spectrum is not rational");
  return GroupRingI64(spec.eta);
}

/// (-1)^{e-1} g^e. Uses 64-bit arithmetic when |g|_1^e stays below 2^62,
/// arbitrary precision otherwise.
inline GroupRingBig lift_periods(const GroupRingI64& g, u64 e) {
  if (e == 0) throw Error(Errc::InvalidArgument, "lift degree must be >= 1");
  BigInt l1 = 0;
  for (u64 a = 0; a < g.N(); ++a) l1 += g[a] < 0 ? BigInt(-g[a]) : BigInt(g[a]);
  BigInt bound = 1;
  for (u64 i = 0; i < e && bound < (BigInt(1) << 62); ++i) bound *= l1;
  const BigInt sign = e % 2 == 1 ? 1 : -1;
  if (bound < (BigInt(1) << 62)) {
    const auto r = power(g, e).cast<BigInt>();
    return sign * r;
  }
  return sign * power(g.cast<BigInt>(), e);
}

/// Returns a unit c of Z_N with A[c*a] == B[a] for every a, if one exists.
template <class S1, class S2>
std::optional<u64> equal_up_to_unit(const GroupRingElem<S1>& A, const GroupRingElem<S2>& B) {
  if (A.N() != B.N()) return std::nullopt;
  const u64 N = A.N();
  for (u64 c = 1; c < N || (N == 1 && c == 1); ++c) {
    if (std::gcd(c, N) != 1) continue;
    bool ok = true;
    for (u64 a = 0; a < N && ok; ++a) ok = BigInt(A[arith::mulmod(c, a, N)]) == BigInt(B[a]);
    if (ok) return c;
    if (N == 1) break;
  }
  return std::nullopt;
}

/// (sum alpha_i I_i)(sum alpha_i I_i)^{(-1)} == q [0] - k Z_N.
bool check_lemma21(const ValueDecomposition& dec, u64 q, u64 k);

}  // namespace cyclogauss
