#include "cyclogauss/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "cyclogauss/conditions.hpp"
#include "cyclogauss/cyclotomy.hpp"
#include "cyclogauss/error.hpp"
#include "cyclogauss/field.hpp"

namespace cyclogauss {
namespace {

// Largest base field whose spectrum family_tags computes directly.
constexpr u64 kTagBaseLimit = u64{1} << 24;

BigInt big_pow(u64 p, u64 e) {
  BigInt r = 1;
  for (u64 i = 0; i < e; ++i) r *= p;
  return r;
}

u64 to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(std::numeric_limits<u64>::max() >> 1)) {
    throw Error(Errc::Overflow, std::string(what) + " does not fit in 63 bits");
  }
  return v.convert_to<u64>();
}

// Merges equal values and drops zero multiplicities; output ascending.
void set_spectrum(FamilyPrediction& pred, const std::vector<std::pair<BigInt, BigInt>>& entries) {
  std::map<BigInt, BigInt> merged;
  for (const auto& [value, mult] : entries)
    if (mult != 0) merged[value] += mult;
  pred.values.clear();
  pred.multiplicities.clear();
  for (const auto& [value, mult] : merged) {
    pred.values.push_back(value);
    pred.multiplicities.push_back(mult);
  }
}

bool is_ap(const std::vector<BigInt>& values) {
  return values.size() == 3 && values[1] - values[0] == values[2] - values[1];
}

// Solves the moment equations for two or three distinct values.
std::vector<BigInt> multiplicities_for(const std::vector<BigInt>& values, const BigInt& q, u64 N) {
  if (values.size() == 3) {
    const auto sizes = sizes_three_valued(values[0], values[1], values[2], q, N);
    if (sizes.integral) return sizes.sizes;
  } else if (values.size() == 2) {
    // a n0 + b n1 = -1, n0 + n1 = N.
    const BigInt num = -1 - values[1] * N;
    const BigInt den = values[0] - values[1];
    if (num % den == 0 && num / den >= 0 && num / den <= N) return {num / den, BigInt(N) - num / den};
  }
  return {};
}


BigInt powm_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const BigInt quot = old_r / r;
    BigInt tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::logic_error("not invertible");
  BigInt inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

// Square root of -N modulo 4 p^h with the parity of N; nullopt when p is inert or ramified.
std::optional<BigInt> sqrt_minus_n(u64 p, u64 h, u64 N) {
  const BigInt mod = 4 * big_pow(p, h);
  BigInt r;
  if (p == 2) {
    if (N % 8 != 7) return std::nullopt;
    // Bitwise lifting of the odd root of -N modulo 2^(h+2).
    r = 1;
    BigInt m = 8;
    const BigInt target = mod - N % mod;
    for (u64 k = 3; k < h + 2; ++k) {
      const BigInt next = 2 * m;
      if ((r * r - target) % next != 0) r += m / 2;
      m = next;
    }
    if ((r * r + N) % mod != 0) return std::nullopt;
    return r;
  }
  if (N % p == 0) return std::nullopt;
  const u64 minus_n = arith::mod_floor(-static_cast<i64>(N % p), p);
  std::optional<u64> r0;
  for (u64 x = 1; x < p && !r0; ++x)
    if (arith::mulmod(x, x, p) == minus_n) r0 = x;
  if (!r0) return std::nullopt;
  // Newton steps recover the root modulo p^h.
  r = *r0;
  BigInt pk = p;
  const BigInt ph = big_pow(p, h);
  while (pk < ph) {
    pk = std::min<BigInt>(pk * pk, ph);
    const BigInt twor = (2 * r) % pk;
    BigInt inv = powm_inverse(twor, pk);
    r = (r - (r * r + N) * inv) % pk;
    if (r < 0) r += pk;
  }
  // N is odd, so B must be odd for B^2 = -N mod 4.
  if (r % 2 == 0) r += ph;
  return r;
}

// (b, c) with 4 p^h = b^2 + N c^2 from a generator of a prime ideal above p raised to h,
// found by reducing the norm form of that ideal.
std::optional<std::pair<BigInt, BigInt>> principal_generator(u64 p, u64 h, u64 N) {
  const auto B = sqrt_minus_n(p, h, N);
  if (!B) return std::nullopt;
  const BigInt ph = big_pow(p, h);
  BigInt a = ph, b = *B, c = (b * b + N) / (4 * ph);
  // f_final(v) = f(M v); M starts as the identity.
  BigInt m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (;;) {
    if (!(-a < b && b <= a)) {
      BigInt k = (a - b) / (2 * a);
      if ((a - b) % (2 * a) != 0 && (a - b) < 0) k -= 1;
      c = a * k * k + b * k + c;
      b = b + 2 * a * k;
      m01 += m00 * k;
      m11 += m10 * k;
      continue;
    }
    if (a > c || (a == c && b < 0)) {
      std::swap(a, c);
      b = -b;
      BigInt t0 = m00, t1 = m10;
      m00 = m01;
      m10 = m11;
      m01 = -t0;
      m11 = -t1;
      continue;
    }
    break;
  }
  if (a != 1) return std::nullopt;
  const BigInt x = m00, y = m10;
  const BigInt bb = 2 * x * ph + y * *B;
  if (bb * bb + BigInt(N) * y * y != 4 * ph) throw std::logic_error("norm form reduction lost the norm");
  return std::make_pair(bb, y);
}

}  // namespace

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::Conic: return "conic";
    case FamilyId::Lifted2v: return "lifted2v";
    case FamilyId::Order3: return "order3";
    case FamilyId::Subfield: return "subfield";
    case FamilyId::Index2: return "index2";
  }
  return "conic";
}

FamilyPrediction conic_family(u64 p, unsigned f) {
  if (!arith::is_prime(p)) throw Error(Errc::CompositeP, std::to_string(p) + " is not prime");
  if (f < 1) throw Error(Errc::InvalidArgument, "f must be >= 1");
  FamilyPrediction pred;
  pred.family = FamilyId::Conic;
  pred.params = {{"p", static_cast<i64>(p)}, {"f", f}};
  pred.p = p;
  pred.f = 6 * u64{f};
  const BigInt pf = big_pow(p, f);
  pred.q = big_pow(p, 6 * u64{f});
  pred.N = to_u64(pf * pf + pf + 1, "N");
  const BigInt t = pf * pf;
  const BigInt mid = pf - 1;
  const auto sizes = sizes_ap(mid, t, pred.q, pred.N);
  if (!sizes.integral) throw std::logic_error("conic sizes are not integral");
  set_spectrum(pred, {{mid - t, sizes.sizes[0]}, {mid, sizes.sizes[2]}, {mid + t, sizes.sizes[1]}});
  pred.t = t;
  pred.ap = true;
  pred.as = p == 2;
  pred.cw = true;
  return pred;
}

FamilyPrediction lifted_two_valued(u64 p, unsigned f, unsigned e, u64 subN) {
  if (e < 2) throw Error(Errc::InvalidArgument, "lift degree e must be > 1");
  const auto base_field = make_field(p, f);
  if (subN < 2 || (base_field.q - 1) % subN != 0) {
    throw Error(Errc::NotDivisor, std::to_string(subN) + " must be a divisor > 1 of p^f-1");
  }
  const auto base = gauss_periods(base_field, subN);
  const auto values = value_multiset(base);
  if (!base.rational || values.size() != 2) {
    throw Error(Errc::BaseNotTwoValued, "base periods take " + std::to_string(values.size()) + " values");
  }
  FamilyPrediction pred;
  pred.family = FamilyId::Lifted2v;
  pred.params = {{"p", static_cast<i64>(p)}, {"f", f}, {"e", e}, {"subN", static_cast<i64>(subN)}};
  pred.p = p;
  pred.f = u64{f} * e;
  const u64 k = base.k;
  pred.q = big_pow(p, pred.f);
  pred.N = to_u64((pred.q - 1) / k, "N");
  const BigInt fibre = big_pow(base_field.q, e - 1);
  set_spectrum(pred, {{BigInt(k), (fibre - 1) / k},
                      {BigInt(values[0].first), fibre * values[0].second},
                      {BigInt(values[1].first), fibre * values[1].second}});
  pred.ap = is_ap(pred.values);
  pred.as = pred.values.size() == 3;
  pred.cw = false;
  if (pred.values.size() < 3) pred.note = "k coincides with a base value; the lift is two-valued";
  return pred;
}

FamilyPrediction order3_family(u64 q0) {
  const auto pp = arith::as_prime_power(q0);
  if (!pp) throw Error(Errc::PreconditionFailed, "q0 must be a prime power");
  if (q0 % 3 != 1) throw Error(Errc::PreconditionFailed, "q0 must be 1 mod 3");
  if (mult_order(q0, 3 * (q0 - 1)) != 3) throw Error(Errc::PreconditionFailed, "ord_{3(q0-1)}(q0) must be 3");
  FamilyPrediction pred;
  pred.family = FamilyId::Order3;
  pred.params = {{"q0", static_cast<i64>(q0)}};
  pred.p = pp->first;
  pred.f = 3 * u64{pp->second};
  const BigInt Q0 = q0;
  pred.q = Q0 * Q0 * Q0;
  pred.N = to_u64((pred.q - 1) / (3 * (Q0 - 1)), "N");
  set_spectrum(pred, {{BigInt(-3), (Q0 - 1) * (Q0 - 1) / 3}, {Q0 - 3, Q0 - 1}, {2 * Q0 - 3, BigInt(1)}});
  pred.t = Q0;
  pred.ap = true;
  pred.as = true;
  pred.cw = q0 == 4 && pred.N == 7;
  return pred;
}

FamilyPrediction subfield_family(u64 p, unsigned e, unsigned f) {
  if (!arith::is_prime(p)) throw Error(Errc::CompositeP, std::to_string(p) + " is not prime");
  if (e == 0 || f == 0) throw Error(Errc::InvalidArgument, "e and f must be positive");
  const unsigned l = std::gcd(e, f);
  if (e / l != 3 || e % l != 0) throw Error(Errc::PreconditionFailed, "e/gcd(e,f) must be 3");
  FamilyPrediction pred;
  pred.family = FamilyId::Subfield;
  pred.params = {{"p", static_cast<i64>(p)}, {"e", e}, {"f", f}};
  pred.p = p;
  pred.f = 3 * u64{f};
  pred.q = big_pow(p, pred.f);
  const BigInt pe = big_pow(p, e), pfv = big_pow(p, f), pl = big_pow(p, l);
  const BigInt N = (pred.q - 1) * (pl - 1) / ((pe - 1) * (pfv - 1));
  if (N <= 2) throw Error(Errc::PreconditionFailed, "degenerate case: N = " + N.str() + " <= 2");
  pred.N = to_u64(N, "N");
  const BigInt a1 = (1 - pe) / (pl - 1);
  const BigInt a2 = pfv + a1;
  const BigInt a3 = pfv * (pl + 1) + a1;
  const BigInt s1 = (pl * pl * pl + pfv * pfv - pl * pl * pfv - pl * pfv) / (1 + pl + pl * pl);
  set_spectrum(pred, {{a1, s1}, {a2, pfv - pl}, {a3, BigInt(1)}});
  pred.ap = is_ap(pred.values);
  pred.as = pred.values.size() == 3;
  pred.cw = false;
  if (pred.values.size() < 3) pred.note = "the lowest value has multiplicity 0; two-valued";
  return pred;
}

u64 class_number(i64 D) {
  if (D >= 0) throw Error(Errc::BadDiscriminant, "discriminant must be negative");
  const i64 m4 = ((D % 4) + 4) % 4;
  if (m4 != 0 && m4 != 1) throw Error(Errc::BadDiscriminant, std::to_string(D) + " is not 0 or 1 mod 4");
  const i64 absD = -D;
  u64 h = 0;
  for (i64 a = 1; 3 * a * a <= absD; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      if (((b % 2) + 2) % 2 != absD % 2) continue;
      const i64 num = b * b + absD;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

FamilyPrediction index2_alphas(u64 p1, u64 p, std::optional<u64> p2) {
  if (!arith::is_prime(p)) throw Error(Errc::CompositeP, std::to_string(p) + " is not prime");
  if (!arith::is_prime(p1) || (p2 && !arith::is_prime(*p2))) throw Error(Errc::InvalidArgument, "p1 and p2 must be primes");
  const u64 N = p2 ? p1 * *p2 : p1;
  if (std::gcd(p, N) != 1) throw Error(Errc::NotCoprime, "p divides N");
  if (!p2) {
    if (p1 % 4 != 3 || p1 <= 3) throw Error(Errc::PreconditionFailed, "p1 must be a prime > 3 with p1 = 3 mod 4");
  } else {
    if (p1 % 4 != 1 || *p2 % 4 != 3) throw Error(Errc::PreconditionFailed, "need p1 = 1 and p2 = 3 mod 4");
  }
  const u64 phi = p2 ? (p1 - 1) * (*p2 - 1) : p1 - 1;
  const u64 f = phi / 2;
  if (mult_order(p, N) != f) throw Error(Errc::NotIndex2, "ord_N(p) != phi(N)/2");
  if (p2 && (mult_order(p, p1) != p1 - 1 || mult_order(p, *p2) != *p2 - 1)) {
    throw Error(Errc::NotIndex2, "p must be primitive modulo p1 and p2");
  }
  const i64 D = -static_cast<i64>(N);
  const u64 h = class_number(D);
  if (h > f || (f - h) % 2 != 0) throw Error(Errc::NoDecomposition, "f - h must be a nonnegative even number");

  const BigInt ph = big_pow(p, h);
  const BigInt P = big_pow(p, (f - h) / 2);
  const BigInt BN = N;
  const i64 sign_target = p2 ? 2 : -2;
  std::optional<std::pair<BigInt, BigInt>> bc;
  if (auto gen = principal_generator(p, h, N)) {
    auto [b, c] = *gen;
    if (c < 0) c = -c;
    if (b % p != 0 && c % p != 0) {
      auto good = [&](const BigInt& cand) { return ((cand * P - sign_target) % BN) == 0; };
      if (good(b)) {
        bc = std::make_pair(b, c);
      } else if (good(-b)) {
        bc = std::make_pair(BigInt(-b), c);
      }
    }
  }
  if (!bc) throw Error(Errc::NoDecomposition, "no (b, c) with 4p^h = b^2 + N c^2 and the sign congruence");
  const auto& [b, c] = *bc;

  FamilyPrediction pred;
  pred.family = FamilyId::Index2;
  pred.params = {{"p1", static_cast<i64>(p1)}, {"p", static_cast<i64>(p)}};
  if (p2) pred.params.emplace_back("p2", static_cast<i64>(*p2));
  pred.p = p;
  pred.f = f;
  pred.q = big_pow(p, f);
  pred.N = N;
  pred.class_data = QuadraticClassData{D, h, b, c, p1, p2};

  std::vector<BigInt> raw;
  auto exact = [&](const BigInt& num, const BigInt& den) {
    if (num % den != 0) throw std::logic_error("index-2 period is not integral");
    return BigInt(num / den);
  };
  if (!p2) {
    const BigInt den = 2 * BN;
    raw = {exact(-2 + P * b * (BN - 1), den), exact(-2 + P * c * BN - P * b, den), exact(-2 - P * c * BN - P * b, den)};
  } else {
    const BigInt q1 = p1, q2 = *p2;
    const BigInt half = big_pow(p, f / 2);
    // Products with b P are even because b and the cofactors below have matching parity.
    auto halved = [&](const BigInt& x) { return exact(x, 2); };
    raw = {exact(-1 + halved(P * (b + c * BN)), BN), exact(-1 + halved(-b * P * (q1 - 1)) + half * q1, BN),
           exact(-1 + halved(P * (b - c * BN)), BN), exact(-1 + halved(-b * P * (q2 - 1)) - half * q2, BN),
           exact(-1 + half * q1 + halved(b * P * (q1 - 1) * (q2 - 1)) - half * q2, BN)};
  }
  std::vector<BigInt> distinct = raw;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  pred.values = distinct;
  pred.multiplicities = multiplicities_for(distinct, pred.q, N);
  pred.ap = is_ap(distinct);
  pred.as = distinct.size() == 3;
  pred.cw = false;
  if (distinct.size() > 3) pred.note = "closed forms give " + std::to_string(distinct.size()) + " values";
  return pred;
}

Index2SearchResult index2_search(u64 bound) {
  Index2SearchResult out;
  auto congruent = [](u64 p, u64 e, u64 N, i64 rhs) {
    const u64 pw = arith::powmod(p, e, N);
    const u64 r = arith::mod_floor(rhs, N);
    return arith::mulmod(3, pw, N) == r || arith::mulmod(N - 3 % N, pw, N) == r;
  };
  // Shared clauses: (N + 9)/4 = p^h with h the class number, then the sign congruence.
  auto test = [&](u64 N, u64 f, i64 rhs, const std::function<bool(u64)>& index2) -> std::optional<Index2Hit> {
    if ((N + 9) % 4 != 0) return std::nullopt;
    const auto pp = arith::as_prime_power((N + 9) / 4);
    if (!pp) return std::nullopt;
    const auto [p, w] = *pp;
    if (p == 3 || std::gcd(p, N) != 1 || !index2(p)) return std::nullopt;
    const u64 h = class_number(-static_cast<i64>(N));
    if (h != w || h > f || (f - h) % 2 != 0) return std::nullopt;
    if (!congruent(p, (f - h) / 2, N, rhs)) return std::nullopt;
    return Index2Hit{0, std::nullopt, p, h};
  };
  std::vector<u64> primes;
  for (u64 n = 2; n <= bound; ++n)
    if (arith::is_prime(n)) primes.push_back(n);
  for (u64 p1 : primes) {
    if (p1 % 4 != 3 || p1 <= 3) continue;
    const u64 f = (p1 - 1) / 2;
    auto hit = test(p1, f, -2, [&](u64 p) { return mult_order(p, p1) == f; });
    if (hit) {
      hit->p1 = p1;
      out.prime.push_back(*hit);
    }
  }
  for (u64 p1 : primes) {
    if (p1 % 4 != 1) continue;
    for (u64 p2 : primes) {
      if (p1 * p2 > bound) break;
      if (p2 % 4 != 3) continue;
      const u64 N = p1 * p2;
      const u64 f = (p1 - 1) * (p2 - 1) / 2;
      auto hit = test(N, f, 2, [&](u64 p) {
        return mult_order(p, p1) == p1 - 1 && mult_order(p, p2) == p2 - 1 && mult_order(p, N) == f;
      });
      if (hit) {
        hit->p1 = p1;
        hit->p2 = p2;
        out.product.push_back(*hit);
      }
    }
  }
  std::sort(out.prime.begin(), out.prime.end());
  std::sort(out.product.begin(), out.product.end());
  return out;
}

FamilyCheck validate_prediction(const FamilyPrediction& pred, u64 q_limit) {
  FamilyCheck out;
  if (pred.q > q_limit) return out;
  const auto spec = gauss_periods(make_field(pred.p, static_cast<unsigned>(pred.f)), pred.N);
  out.computed = true;
  out.observed = value_multiset(spec);
  if (!spec.rational || out.observed.size() != pred.values.size()) return out;
  out.match = true;
  for (std::size_t i = 0; i < pred.values.size(); ++i) {
    if (BigInt(out.observed[i].first) != pred.values[i]) out.match = false;
    if (!pred.multiplicities.empty() && BigInt(out.observed[i].second) != pred.multiplicities[i]) out.match = false;
  }
  return out;
}

std::vector<FamilySummaryRow> family_summary() {
  std::vector<FamilySummaryRow> rows;
  rows.push_back({"p=2, q=p^(6f), N=(p^(3f)-1)/(p^f-1)", "yes", "yes", "yes", FamilyId::Conic, conic_family(2, 1)});
  rows.push_back({"p odd, q=p^(6f), N=(p^(3f)-1)/(p^f-1)", "yes", "no", "yes", FamilyId::Conic, conic_family(3, 1)});
  rows.push_back({"q=q0^3, N=(q0^3-1)/(3(q0-1)), ord_(3(q0-1))(q0)=3", "yes", "yes", "no", FamilyId::Order3, order3_family(7)});
  rows.push_back({"q=p^(fe), (p^(fe)-1)/N | p^f-1, base periods two-valued", "some", "yes", "no", FamilyId::Lifted2v,
                  lifted_two_valued(2, 6, 2, 3)});
  rows.push_back({"q=p^(3f), e/gcd(e,f)=3, C_0 = GF(p^e)^* GF(p^f)^*", "no", "yes", "no", FamilyId::Subfield,
                  subfield_family(2, 3, 4)});
  rows.push_back({"N=p1, [Z_N^*:<p>]=2, f=e(N-1)/2", "some", "yes", "no", FamilyId::Index2, index2_alphas(11, 5)});
  rows.push_back({"N=p1 p2, [Z_N^*:<p>]=2, f=phi(N)/2", "some", "yes", "no", FamilyId::Index2, index2_alphas(5, 2, 11)});
  return rows;
}

std::vector<FamilyId> family_tags(u64 p, unsigned f, u64 N) {
  std::vector<FamilyId> tags;
  if (!arith::is_prime(p) || f == 0 || N < 2) return tags;
  const BigInt q = big_pow(p, f);
  if ((q - 1) % N != 0) return tags;
  if (f % 6 == 0) {
    const BigInt g = big_pow(p, f / 6);
    if (g * g + g + 1 == N) tags.push_back(FamilyId::Conic);
  }
  if (f % 3 == 0) {
    // For q0 > 1, ord_{3(q0-1)}(q0) = 3 reduces to q0 = 1 mod 3.
    const BigInt q0 = big_pow(p, f / 3);
    if (q0 % 3 == 1 && (q0 * q0 + q0 + 1) == 3 * BigInt(N)) tags.push_back(FamilyId::Order3);
    const unsigned fs = f / 3;
    for (unsigned l = 1; l <= fs; ++l) {
      if (fs % l != 0 || std::gcd(3 * l, fs) != l) continue;
      const BigInt pl = big_pow(p, l), pe = big_pow(p, 3 * l), pfs = big_pow(p, fs);
      if ((q - 1) * (pl - 1) == BigInt(N) * (pe - 1) * (pfs - 1)) {
        tags.push_back(FamilyId::Subfield);
        break;
      }
    }
  }
  const BigInt k = (q - 1) / N;
  for (unsigned f0 = 1; f0 < f; ++f0) {
    if (f % f0 != 0) continue;
    const BigInt qf = big_pow(p, f0);
    if ((qf - 1) % k != 0 || (qf - 1) / k < 2) continue;
    const BigInt sub = (qf - 1) / k;
    bool two_valued = false;
    if (qf <= kTagBaseLimit) {
      const auto base = gauss_periods(make_field(p, f0), sub.convert_to<u64>());
      two_valued = base.rational && value_multiset(base).size() == 2;
    } else {
      // Too large to compute; only the semiprimitive bases are recognized.
      const u64 n = sub.convert_to<u64>();
      const u64 ord = mult_order(p, n);
      two_valued = ord % 2 == 0 && arith::powmod(p, ord / 2, n) == n - 1;
    }
    if (two_valued) {
      tags.push_back(FamilyId::Lifted2v);
      break;
    }
  }
  if (std::gcd(p, N) != 1) return tags;
  if (arith::is_prime(N)) {
    if (N % 4 == 3 && N > 3 && mult_order(p, N) == (N - 1) / 2 && f % ((N - 1) / 2) == 0) {
      tags.push_back(FamilyId::Index2);
    }
  } else {
    const auto fac = arith::factorize(N);
    if (fac.size() == 2 && fac[0].second == 1 && fac[1].second == 1) {
      u64 a = fac[0].first, b = fac[1].first;
      if (a % 4 == 3) std::swap(a, b);
      const u64 half = (a - 1) * (b - 1) / 2;
      if (a % 4 == 1 && b % 4 == 3 && mult_order(p, a) == a - 1 && mult_order(p, b) == b - 1 &&
          mult_order(p, N) == half && f == half) {
        tags.push_back(FamilyId::Index2);
      }
    }
  }
  return tags;
}

}  // namespace cyclogauss
