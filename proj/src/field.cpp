#include "cyclogauss/field.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "cyclogauss/error.hpp"

namespace cyclogauss {
namespace {

// Arithmetic in GF(p)[x]/(m) for monic m of degree f; residues are length-f vectors.
class PolyRing {
 public:
  PolyRing(u64 p, std::span<const u64> modulus) : p_(p), f_(modulus.size() - 1), mod_(modulus.begin(), modulus.end()) {}

  std::vector<u64> one() const {
    std::vector<u64> r(f_, 0);
    r[0] = 1 % p_;
    return r;
  }

  std::vector<u64> x() const {
    std::vector<u64> r(f_, 0);
    if (f_ == 1) {
      r[0] = (p_ - mod_[0]) % p_;
    } else {
      r[1] = 1;
    }
    return r;
  }

  std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b) const {
    std::vector<u64> prod(2 * f_ - 1, 0);
    for (std::size_t i = 0; i < f_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < f_; ++j) {
        prod[i + j] = (prod[i + j] + arith::mulmod(a[i], b[j], p_)) % p_;
      }
    }
    for (std::size_t d = prod.size(); d-- > f_;) {
      const u64 lead = prod[d];
      if (lead == 0) continue;
      for (std::size_t j = 0; j < f_; ++j) {
        const u64 sub = arith::mulmod(lead, mod_[j], p_);
        u64& slot = prod[d - f_ + j];
        slot = (slot + p_ - sub) % p_;
      }
      prod[d] = 0;
    }
    prod.resize(f_);
    return prod;
  }

  std::vector<u64> pow(std::vector<u64> base, u64 e) const {
    std::vector<u64> r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

 private:
  u64 p_;
  std::size_t f_;
  std::vector<u64> mod_;
};

FieldSpec nth_primitive(u64 p, unsigned f, unsigned skip) {
  if (!arith::is_prime(p)) throw Error(Errc::CompositeP, std::to_string(p) + " is not prime");
  if (f < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  const auto q = arith::checked_pow(p, f);
  if (!q) throw Error(Errc::Overflow, "p^f must be below 2^63");

  FieldSpec spec;
  spec.p = p;
  spec.f = f;
  spec.q = *q;
  spec.factor_q_minus_1 = arith::factorize(*q - 1);

  std::vector<u64> poly(f + 1, 0);
  poly[f] = 1;
  // Enumerate tails c_{f-1}..c_0 as a base-p counter, starting at 1 (c_0 = 0 is never primitive).
  poly[0] = 1;
  unsigned found = 0;
  for (;;) {
    if (poly[0] != 0 && is_primitive_poly(p, poly, spec.factor_q_minus_1)) {
      if (found == skip) break;
      ++found;
    }
    std::size_t i = 0;
    while (i < f) {
      if (++poly[i] < p) break;
      poly[i] = 0;
      ++i;
    }
    if (i == f) throw Error(Errc::PreconditionFailed, "ran out of primitive polynomials");
  }
  spec.poly = std::move(poly);
  return spec;
}

}  // namespace

bool is_primitive_poly(u64 p, std::span<const u64> poly, const Factorization& factor_q_minus_1) {
  const std::size_t f = poly.size() - 1;
  if (f == 0 || poly[f] != 1 || poly[0] % p == 0) return false;
  PolyRing ring(p, poly);
  // q-1 recovered from its factorization.
  u64 q_minus_1 = 1;
  for (auto [pr, e] : factor_q_minus_1) {
    for (unsigned i = 0; i < e; ++i) q_minus_1 *= pr;
  }
  const auto gen = ring.x();
  if (ring.pow(gen, q_minus_1) != ring.one()) return false;
  for (auto [pr, e] : factor_q_minus_1) {
    if (ring.pow(gen, q_minus_1 / pr) == ring.one()) return false;
  }
  // Order q-1 in the unit group forces the quotient ring to be a field.
  return true;
}

FieldSpec make_field(u64 p, unsigned f) { return nth_primitive(p, f, 0); }

FieldSpec make_field_nth(u64 p, unsigned f, unsigned skip) { return nth_primitive(p, f, skip); }

FieldSpec make_field_from_poly(u64 p, std::vector<u64> poly) {
  if (!arith::is_prime(p)) throw Error(Errc::CompositeP, std::to_string(p) + " is not prime");
  if (poly.size() < 2) throw Error(Errc::InvalidArgument, "polynomial degree must be >= 1");
  const unsigned f = static_cast<unsigned>(poly.size() - 1);
  const auto q = arith::checked_pow(p, f);
  if (!q) throw Error(Errc::Overflow, "p^f must be below 2^63");
  for (auto& c : poly) c %= p;
  FieldSpec spec{p, f, *q, std::move(poly), arith::factorize(*q - 1)};
  if (!is_primitive_poly(p, spec.poly, spec.factor_q_minus_1)) {
    throw Error(Errc::PreconditionFailed, "polynomial is not monic primitive");
  }
  return spec;
}

u64 mult_order(u64 a, u64 n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "modulus must be >= 1");
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) {
    throw Error(Errc::NotCoprime, std::to_string(a) + " is not a unit mod " + std::to_string(n));
  }
  u64 order = arith::euler_phi(arith::factorize(n));
  for (auto [pr, e] : arith::factorize(order)) {
    for (unsigned i = 0; i < e; ++i) {
      if (arith::powmod(a, order / pr, n) == 1) {
        order /= pr;
      } else {
        break;
      }
    }
  }
  return order;
}

std::vector<u64> trace_seeds(const FieldSpec& field) {
  const u64 p = field.p;
  const unsigned f = field.f;
  const auto& c = field.poly;
  // Newton: P_k + c_{f-1} P_{k-1} + ... + c_{f-k+1} P_1 + k c_{f-k} = 0.
  std::vector<u64> seeds(f, 0);
  seeds[0] = f % p;
  for (unsigned k = 1; k < f; ++k) {
    u64 acc = arith::mulmod(k % p, c[f - k], p);
    for (unsigned j = 1; j < k; ++j) {
      acc = (acc + arith::mulmod(c[f - j], seeds[k - j], p)) % p;
    }
    seeds[k] = (p - acc) % p;
  }
  return seeds;
}

TraceSeq::TraceSeq(const FieldSpec& field) : field_(&field) {
  const u64 p = field.p;
  const unsigned f = field.f;
  recurrence_.resize(f);
  for (unsigned j = 0; j < f; ++j) recurrence_[j] = (p - field.poly[j] % p) % p;
  // Products are < (p-1)^2; batch_ of them fit in a u64 before a reduction is needed.
  const u128 sq = static_cast<u128>(p - 1) * (p - 1);
  if (sq == 0) {
    batch_ = f;
  } else if (sq > std::numeric_limits<u64>::max()) {
    batch_ = 0;
  } else {
    // One slot is reserved for the reduced carry (< p).
    const u64 fit = std::numeric_limits<u64>::max() / static_cast<u64>(sq);
    batch_ = fit >= 2 ? static_cast<unsigned>(std::min<u64>(fit - 1, f)) : 0;
  }
  buffer_.assign(f + 4096, 0);
  const auto seeds = trace_seeds(field);
  std::copy(seeds.begin(), seeds.end(), buffer_.begin());
  filled_ = f;
}

void TraceSeq::refill() {
  const std::size_t f = recurrence_.size();
  const u64 p = field_->p;
  if (filled_ == buffer_.size()) {
    // Keep the last f values as the window for the next block.
    std::copy(buffer_.end() - static_cast<std::ptrdiff_t>(f), buffer_.end(), buffer_.begin());
    filled_ = f;
    head_ = f;
  }
  while (filled_ < buffer_.size()) {
    const u64* w = buffer_.data() + filled_ - f;
    u64 acc = 0;
    if (batch_ == 0) {
      for (std::size_t j = 0; j < f; ++j) acc = (acc + arith::mulmod(recurrence_[j], w[j], p)) % p;
    } else {
      unsigned pending = 0;
      for (std::size_t j = 0; j < f; ++j) {
        acc += recurrence_[j] * w[j];
        if (++pending == batch_) {
          acc %= p;
          pending = 0;
        }
      }
      acc %= p;
    }
    buffer_[filled_++] = acc;
  }
}

u64 TraceSeq::next() {
  if (head_ == filled_) refill();
  ++index_;
  return buffer_[head_++];
}

FieldTables::FieldTables(const FieldSpec& field) : p_(field.p), f_(field.f), q_(field.q) {
  if (q_ > kMaxOrder) throw Error(Errc::Overflow, "field too large for explicit log tables");
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::vector<u64> coords(f_, 0);
  coords[0] = 1;
  std::vector<u64> pw(f_, 1);
  for (unsigned i = 1; i < f_; ++i) pw[i] = pw[i - 1] * p_;
  for (u64 i = 0; i + 1 < q_; ++i) {
    u64 code = 0;
    for (unsigned j = 0; j < f_; ++j) code += coords[j] * pw[j];
    exp_[i] = static_cast<std::uint32_t>(code);
    log_[code] = static_cast<std::uint32_t>(i);
    // Multiply by x and reduce with x^f = -sum c_j x^j.
    const u64 top = coords[f_ - 1];
    for (unsigned j = f_ - 1; j > 0; --j) coords[j] = coords[j - 1];
    coords[0] = 0;
    if (top != 0) {
      for (unsigned j = 0; j < f_; ++j) {
        coords[j] = (coords[j] + p_ - top * field.poly[j] % p_) % p_;
      }
    }
  }
}

u64 FieldTables::subtract(u64 a, u64 b) const {
  u64 out = 0, pw = 1;
  for (unsigned j = 0; j < f_; ++j) {
    const u64 da = a % p_, db = b % p_;
    out += ((da + p_ - db) % p_) * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return out;
}

}  // namespace cyclogauss
