#pragma once

// GF(p^f) modelled as GF(p)[x]/(poly) with poly primitive, so that the class of
// x is the primitive element gamma. Elements are never materialized during
// period computations; the trace sequence Tr(gamma^i) is produced by the
// linear recurrence whose characteristic polynomial is poly.

#include <cstdint>
#include <span>
#include <vector>

#include "cyclogauss/arith.hpp"

namespace cyclogauss {

struct FieldSpec {
  u64 p = 0;
  unsigned f = 0;
  u64 q = 0;
  /// poly[i] is the coefficient of x^i; poly[f] == 1.
  std::vector<u64> poly;
  Factorization factor_q_minus_1;

  bool operator==(const FieldSpec&) const = default;
};

/// Lexicographically least monic primitive polynomial of degree f over GF(p),
/// ordered by the base-p integer c_{f-1} ... c_1 c_0.
FieldSpec make_field(u64 p, unsigned f);

/// Same ordering, but returns the (skip+1)-th primitive polynomial.
FieldSpec make_field_nth(u64 p, unsigned f, unsigned skip);

/// Builds a field from a caller-supplied polynomial; throws PreconditionFailed
/// unless poly is monic of degree f and primitive.
FieldSpec make_field_from_poly(u64 p, std::vector<u64> poly);

bool is_primitive_poly(u64 p, std::span<const u64> poly, const Factorization& factor_q_minus_1);

/// Least e >= 1 with a^e == 1 (mod n).
u64 mult_order(u64 a, u64 n);

/// Streams Tr(gamma^0), Tr(gamma^1), ... in O(f) word operations per step.
class TraceSeq {
 public:
  explicit TraceSeq(const FieldSpec& field);

  /// Returns Tr(gamma^i) for the current i and advances.
  u64 next();

  u64 index() const { return index_; }
  const FieldSpec& field() const { return *field_; }

 private:
  void refill();

  const FieldSpec* field_;
  std::vector<u64> recurrence_;  // -c_j mod p
  std::vector<u64> buffer_;
  std::size_t head_ = 0;
  std::size_t filled_ = 0;
  u64 index_ = 0;
  unsigned batch_ = 1;
};

/// Seeds of the recurrence: power sums Tr(gamma^i) for i < f via Newton's identities.
std::vector<u64> trace_seeds(const FieldSpec& field);

/// Explicit discrete-log tables for small fields. Elements are encoded as the
/// base-p integer sum c_i p^i of their coordinates in the basis 1, x, ..., x^{f-1}.
class FieldTables {
 public:
  static constexpr u64 kMaxOrder = u64{1} << 26;

  explicit FieldTables(const FieldSpec& field);

  u64 order() const { return q_; }
  /// Code of gamma^i, i in [0, q-2].
  u64 exp(u64 i) const { return exp_[i]; }
  /// Discrete log of a nonzero code.
  u64 log(u64 code) const { return log_[code]; }
  u64 subtract(u64 a, u64 b) const;

 private:
  u64 p_;
  unsigned f_;
  u64 q_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace cyclogauss
