#include "cyclogauss/group_ring.hpp"

namespace cyclogauss {

bool check_lemma21(const ValueDecomposition& dec, u64 q, u64 k) {
  GroupRingI64 x(dec.N);
  for (std::size_t i = 0; i < dec.values.size(); ++i) {
    for (u64 a : dec.index_sets[i]) x[a] = dec.values[i];
  }
  // |coefficients| of x x^(-1) are bounded by sum alpha^2 = q - k, so i64 suffices.
  const auto lhs = convolve(x, involution(x));
  GroupRingI64 rhs = static_cast<i64>(q) * GroupRingI64::delta(dec.N, 0);
  rhs -= static_cast<i64>(k) * GroupRingI64::ones(dec.N);
  return lhs == rhs;
}

}  // namespace cyclogauss
