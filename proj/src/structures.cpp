#include "cyclogauss/structures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclogauss/error.hpp"
#include "cyclogauss/group_ring.hpp"

namespace cyclogauss {
namespace {

std::vector<int> labels_of(const Partition3& part, u64 N) {
  std::vector<int> lab(N, -1);
  for (int c = 0; c < 3; ++c) {
    if (part[c].empty()) throw Error(Errc::InvalidArgument, "partition classes must be nonempty");
    for (u64 a : part[c]) {
      if (a >= N || lab[a] != -1) throw Error(Errc::InvalidArgument, "partition must split Z_N into disjoint classes");
      lab[a] = c;
    }
  }
  if (std::find(lab.begin(), lab.end(), -1) != lab.end()) {
    throw Error(Errc::InvalidArgument, "partition does not cover Z_N");
  }
  return lab;
}

bool same_sets(const Partition3& part, const ValueDecomposition& dec) {
  if (!dec.three_valued) return false;
  for (int c = 0; c < 3; ++c) {
    auto a = part[c];
    std::sort(a.begin(), a.end());
    if (a != dec.index_sets[c]) return false;
  }
  return true;
}

bool is_p_invariant(const std::vector<int>& lab, u64 p, u64 N) {
  for (u64 a = 0; a < N; ++a)
    if (lab[a] != lab[arith::mulmod(a, p, N)]) return false;
  return true;
}

// Intersection numbers from the 4 x 4 character table, exact.
std::optional<IntersectionNumbers> intersection_from_characters(const std::vector<std::array<i64, 4>>& P,
                                                                const std::array<u64, 4>& mult, u64 q) {
  IntersectionNumbers out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        BigInt acc = 0;
        for (int l = 0; l < 4; ++l) acc += BigInt(mult[l]) * P[l][i] * P[l][j] * P[l][k];
        const BigInt den = BigInt(q) * P[0][k];
        if (acc % den != 0) return std::nullopt;
        out[i][j][k] = acc / den;
        if (out[i][j][k] < 0) return std::nullopt;
      }
  return out;
}

// Bose-Mesner closure on the character side: P_li P_lj = sum_k p_ij^k P_lk.
bool closure_holds(const IntersectionNumbers& pn, const std::vector<std::array<i64, 4>>& P) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        BigInt total = 0;
        for (int jj = 0; jj < 4; ++jj) total += pn[i][jj][k];
        if (total != P[0][i]) return false;
      }
      for (int l = 0; l < 4; ++l) {
        BigInt rhs = 0;
        for (int k = 0; k < 4; ++k) rhs += pn[i][j][k] * P[l][k];
        if (BigInt(P[l][i]) * P[l][j] != rhs) return false;
      }
    }
  return true;
}

bool formally_self_dual(const std::vector<std::array<i64, 4>>& P, const std::array<u64, 4>& mult) {
  std::array<int, 4> sigma{0, 1, 2, 3};
  do {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = 0; j < 4 && ok; ++j) {
        ok = BigInt(P[sigma[i]][j]) * P[0][i] == BigInt(mult[sigma[j]]) * P[sigma[j]][i];
      }
    if (ok) return true;
  } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
  return false;
}

struct BruteResult {
  bool scheme = false;
  std::optional<SchemeWitness> witness;
  IntersectionNumbers numbers;
};

BruteResult brute_force(const FieldSpec& field, u64 N, const Partition3& part, const std::vector<int>& lab, u64 k) {
  const FieldTables tab(field);
  const u64 q = field.q;
  // cn[x][y] = #{w in C_x : 1 - w in C_y}.
  std::vector<u64> cn(N * N, 0);
  for (u64 i = 1; i + 1 < q; ++i) {
    const u64 w = tab.exp(i);
    const u64 one_minus = tab.subtract(1, w);
    if (one_minus == 0) continue;
    ++cn[(i % N) * N + tab.log(one_minus) % N];
  }
  const bool invariant = is_p_invariant(lab, field.p, N);
  std::vector<char> needed(N, 1);
  if (invariant) {
    std::fill(needed.begin(), needed.end(), 0);
    for (const auto& orbit : p_orbits(field.p, N)) needed[orbit.front()] = 1;
  }
  // For y in C_a: #{z in R_i : y - z in R_j} = sum over x, y' of cn[x][y'] with lab[x+a] = i, lab[y'+a] = j.
  auto counts_at = [&](u64 a) {
    std::array<std::array<u64, 3>, 3> c{};
    for (u64 x = 0; x < N; ++x) {
      const int li = lab[(x + a) % N];
      const u64* row = cn.data() + x * N;
      std::array<u64, 3> by{};
      for (u64 y = 0; y < N; ++y) by[lab[(y + a) % N]] += row[y];
      for (int j = 0; j < 3; ++j) c[li][j] += by[j];
    }
    return c;
  };
  std::vector<std::optional<std::array<std::array<u64, 3>, 3>>> memo(N);
  auto at = [&](u64 a) {
    if (!needed[a]) {
      // Constant on p-orbits; map a to its orbit representative.
      u64 rep = a;
      for (u64 x = arith::mulmod(a, field.p, N); x != a; x = arith::mulmod(x, field.p, N)) rep = std::min(rep, x);
      a = rep;
    }
    if (!memo[a]) memo[a] = counts_at(a);
    return *memo[a];
  };

  BruteResult res;
  res.scheme = true;
  std::array<u64, 4> valency{1, k * part[0].size(), k * part[1].size(), k * part[2].size()};
  for (int kc = 0; kc < 3 && res.scheme; ++kc) {
    const u64 a1 = part[kc].front();
    const auto ref = at(a1);
    for (u64 a2 : part[kc]) {
      const auto cur = at(a2);
      if (cur == ref) continue;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (cur[i][j] != ref[i][j] && !res.witness) res.witness = SchemeWitness{i + 1, j + 1, a1, a2, ref[i][j], cur[i][j]};
      res.scheme = false;
      break;
    }
    if (!res.scheme) break;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) res.numbers[i + 1][j + 1][kc + 1] = ref[i][j];
  }
  if (res.scheme) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        res.numbers[0][j][i] = i == j ? 1 : 0;
        res.numbers[j][0][i] = i == j ? 1 : 0;
        res.numbers[i][j][0] = i == j ? BigInt(valency[i]) : BigInt(0);
      }
  }
  return res;
}

}  // namespace

SignedSupport build_cw(const ValueDecomposition& dec, u64 q) {
  if (!dec.three_valued || !dec.ap) throw Error(Errc::NotAP, "spectrum is not a three-term arithmetic progression");
  const u64 root = arith::isqrt(q);
  const i128 mid = static_cast<i128>(dec.values[1]) * static_cast<i128>(dec.N) + 1;
  if (root * root != q) {
    // A non-square q already rules out alpha_2 = (sqrt(q)-1)/N.
    throw Error(Errc::MidValueMismatch, "alpha_2 = " + std::to_string(dec.values[1]) + " cannot equal (sqrt(q)-1)/N: q = " +
                                            std::to_string(q) + " is not a square");
  }
  if (mid != static_cast<i128>(root)) {
    throw Error(Errc::MidValueMismatch,
                "alpha_2 = " + std::to_string(dec.values[1]) + " differs from (sqrt(q)-1)/N");
  }
  SignedSupport D;
  D.N = dec.N;
  D.entries.assign(dec.N, 0);
  for (u64 a : dec.index_sets[0]) D.entries[a] = 1;
  for (u64 a : dec.index_sets[2]) D.entries[a] = -1;
  return D;
}

CwCheck verify_cw(const SignedSupport& D) {
  GroupRingI64 d(D.N);
  for (u64 a = 0; a < D.N; ++a) d[a] = D.entries[a];
  const auto c = convolve(d, involution(d));
  CwCheck out;
  out.weight = D.N ? c[0] : 0;
  out.ok = true;
  for (u64 a = 1; a < D.N; ++a) {
    if (c[a] != 0) {
      out.ok = false;
      out.bad_lag = a;
      out.bad_value = c[a];
      break;
    }
  }
  return out;
}

std::string_view to_string(SchemeMethod m) {
  switch (m) {
    case SchemeMethod::Thm26: return "thm2.6";
    case SchemeMethod::DualCount: return "dual_count";
    case SchemeMethod::BruteForce: return "brute_force";
  }
  return "dual_count";
}

std::string_view to_string(SelfDual s) { return s == SelfDual::Yes ? "yes" : "undetermined"; }

bool minus_one_in_c0(u64 p, u64 q, u64 N) { return p == 2 || ((q - 1) / 2) % N == 0; }

SchemeCertificate verify_scheme(const FieldSpec& field, u64 N, const Partition3& partition, const SchemeOptions& opts) {
  return verify_scheme(gauss_periods(field, N), partition, opts);
}

SchemeCertificate verify_scheme(const PeriodSpectrum& spec, const Partition3& partition, const SchemeOptions& opts) {
  const FieldSpec& field = spec.field;
  const u64 N = spec.N, q = field.q, k = spec.k;
  if (!minus_one_in_c0(field.p, q, N)) {
    throw Error(Errc::AsymmetricClasses, "-1 is not in C_0, relations would not be symmetric");
  }
  if (!spec.rational) throw Error(Errc::NotRational, "spectrum is not rational");
  const auto lab = labels_of(partition, N);

  SchemeCertificate cert;
  cert.q = q;
  cert.N = N;
  cert.partition = partition;

  // (a) three values with a singleton extreme class.
  const auto dec = decompose(spec);
  cert.theorem_fast_path =
      same_sets(partition, dec) && (dec.index_sets[0].size() == 1 || dec.index_sets[2].size() == 1);

  // (b) distinct character tuples, trivial character first.
  std::vector<std::array<i64, 4>> P;
  std::array<u64, 4> dual_count{};
  P.push_back({1, static_cast<i64>(k * partition[0].size()), static_cast<i64>(k * partition[1].size()),
               static_cast<i64>(k * partition[2].size())});
  std::vector<u64> mult{1};
  std::map<std::array<i64, 4>, std::size_t> seen;
  for (u64 a = 0; a < N; ++a) {
    std::array<i64, 4> tuple{1, 0, 0, 0};
    for (u64 i = 0; i < N; ++i) tuple[lab[i] + 1] += spec.eta[static_cast<Eigen::Index>((i + a) % N)];
    auto [it, fresh] = seen.emplace(tuple, P.size());
    if (fresh) {
      P.push_back(tuple);
      mult.push_back(0);
    }
    mult[it->second] += k;
  }
  cert.dual_classes = P.size();
  const bool dual_scheme = P.size() == 4;
  if (cert.theorem_fast_path && !dual_scheme) {
    throw std::logic_error("singleton-class criterion and dual count disagree");
  }
  cert.scheme = dual_scheme;
  cert.method = cert.theorem_fast_path ? SchemeMethod::Thm26 : SchemeMethod::DualCount;

  if (dual_scheme) {
    for (int l = 0; l < 4; ++l) dual_count[l] = mult[l];
    cert.eigenmatrix = P;
    cert.dual_multiplicities = dual_count;
    auto numbers = intersection_from_characters(P, dual_count, q);
    if (!numbers || !closure_holds(*numbers, P)) {
      throw std::logic_error("character table does not yield valid intersection numbers");
    }
    cert.intersection_numbers = numbers;
    cert.formally_self_dual = formally_self_dual(P, dual_count);
    if (cert.theorem_fast_path) cert.self_dual = SelfDual::Yes;
  }

  // (c) exhaustive confirmation on small fields.
  if (q <= opts.brute_force_limit && q <= FieldTables::kMaxOrder) {
    const auto brute = brute_force(field, N, partition, lab, k);
    cert.brute_force_verdict = brute.scheme;
    cert.method = SchemeMethod::BruteForce;
    if (brute.scheme != dual_scheme) throw std::logic_error("dual-count and brute-force scheme verdicts disagree");
    if (brute.scheme && brute.numbers != *cert.intersection_numbers) {
      throw std::logic_error("brute-force intersection numbers differ from the character computation");
    }
    cert.witness = brute.witness;
  }
  return cert;
}

IntMatrix cyclotomic_eigenmatrix(const PeriodSpectrum& spec) {
  if (!spec.rational) throw Error(Errc::NotRational, "spectrum is not rational");
  const auto N = static_cast<Eigen::Index>(spec.N);
  IntMatrix P(N + 1, N + 1);
  P(0, 0) = 1;
  for (Eigen::Index j = 1; j <= N; ++j) P(0, j) = static_cast<i64>(spec.k);
  for (Eigen::Index i = 1; i <= N; ++i) {
    P(i, 0) = 1;
    for (Eigen::Index j = 1; j <= N; ++j) P(i, j) = spec.eta[((j - 1 - i) % N + N) % N];
  }
  return P;
}

}  // namespace cyclogauss
