#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbps/errors.hpp"
#include "qbps/partitions.hpp"
#include "qbps/quiver.hpp"
#include "qbps/rational.hpp"
#include "qbps/weights.hpp"

namespace qbps {

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("dimension overflows 64 bits");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("dimension overflows 64 bits");
  return r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace detail

/// Number of integer tuples (c_1..c_d) with
///   c_i - c_{i-1} + 2g >= 0           for 2 <= i <= d,
///   d * (c_{d-k+1} + ... + c_d) <= v k for 1 <= k <= d,
///   c_1 + ... + c_d = v.
/// Enumerated directly; coordinate i lies in
/// [ceil(v/d) - 2g(i-1), floor(v/d) + 2g(d-i)].
inline std::uint64_t score_sequence_count(std::int64_t g, std::int64_t d, std::int64_t v) {
  if (g < 0) throw SchemaError("g must be nonnegative");
  if (d < 1) throw SchemaError("d must be positive");
  const std::int64_t lo_all = detail::ceil_div(v, d);
  const std::int64_t hi_all = detail::floor_div(v, d);
  std::vector<std::int64_t> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  for (std::int64_t i = 1; i <= d; ++i) {
    lo[static_cast<std::size_t>(i - 1)] = lo_all - 2 * g * (i - 1);
    hi[static_cast<std::size_t>(i - 1)] = hi_all + 2 * g * (d - i);
  }
  std::vector<std::int64_t> c(static_cast<std::size_t>(d));
  std::uint64_t count = 0;
  // Fill from the last coordinate backwards so suffix sums are checked as soon
  // as they are complete.
  auto rec = [&](auto&& self, std::int64_t idx, std::int64_t suffix) -> void {
    if (idx < 0) {
      if (suffix == v) ++count;
      return;
    }
    const auto i = static_cast<std::size_t>(idx);
    const std::int64_t k = d - idx;  // suffix length once c[i] is set
    std::int64_t top = hi[i];
    std::int64_t bottom = lo[i];
    if (idx + 1 < d) top = std::min(top, c[i + 1] + 2 * g);  // c_{i+1} - c_i + 2g >= 0
    for (std::int64_t x = bottom; x <= top; ++x) {
      const std::int64_t s = suffix + x;
      if (d * s > v * k) break;
      // Remaining idx coordinates each lie in [lo, hi].
      std::int64_t rest_lo = 0, rest_hi = 0;
      for (std::int64_t r = 0; r < idx; ++r) {
        rest_lo += lo[static_cast<std::size_t>(r)];
        rest_hi += hi[static_cast<std::size_t>(r)];
      }
      if (s + rest_hi < v) continue;
      if (s + rest_lo > v) break;
      c[i] = x;
      self(self, idx - 1, s);
    }
  };
  rec(rec, d - 1, 0);
  return count;
}

/// Number of integer partitions of n.
inline std::uint64_t partition_count_p2(std::int64_t n) {
  if (n < 0) throw SchemaError("n must be nonnegative");
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (std::int64_t part = 1; part <= n; ++part)
    for (std::int64_t s = part; s <= n; ++s)
      p[static_cast<std::size_t>(s)] =
          detail::checked_add(p[static_cast<std::size_t>(s)], p[static_cast<std::size_t>(s - part)]);
  return p[static_cast<std::size_t>(n)];
}

/// Total dimension of Sym^m of a space of total dimension n, counting every
/// class as even: C(n + m - 1, m).
inline std::uint64_t sym_power_dim(std::uint64_t n, std::uint64_t m) {
  if (m == 0) return 1;
  if (n == 0) return 0;
  // C(n+m-1, m) built incrementally; each prefix is itself a binomial.
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    const std::uint64_t top = n - 1 + i;
    // r * top / i is exact; divide by the gcd first to delay overflow.
    std::uint64_t g = std::gcd(r, i);
    std::uint64_t rr = r / g, ii = i / g;
    std::uint64_t tt = top / ii;  // ii divides top * rr with gcd(rr, ii) = 1
    r = detail::checked_mul(rr, tt);
  }
  return r;
}

enum class Monodromy { trivial, nontrivial };

/// Total dimensions of H*(X(e), BPS_e) per part e, plus the monodromy flag.
/// `fallback` answers for parts without an explicit entry.
struct BlockDimTable {
  std::map<DimVector, std::uint64_t> blocks;
  std::optional<std::uint64_t> fallback;
  Monodromy monodromy = Monodromy::trivial;
  /// With nontrivial monodromy: dim H*(BPS_{d,delta})^inv for the query, supplied by the user.
  std::optional<std::uint64_t> invariant_dim;

  std::optional<std::uint64_t> lookup(const DimVector& e) const {
    if (auto it = blocks.find(e); it != blocks.end()) return it->second;
    return fallback;
  }
};

namespace builtin_tables {

/// Tripled one-loop quiver (three loops, tripled potential): every block is one dimensional.
inline BlockDimTable tripled_one_loop() { return {{}, 1, Monodromy::trivial, std::nullopt}; }

/// One vertex, one loop, zero potential: block 1 at e = 1 and 0 above.
inline BlockDimTable one_loop() { return {{{DimVector{1}, 1}}, 0, Monodromy::trivial, std::nullopt}; }

/// Two-vertex toric quiver with potential sum_i e_i ebar_i at d = (1,1):
/// BPS_(1,1) = 0 and the two simple blocks are one dimensional.
inline BlockDimTable toric_with_potential() {
  return {{{DimVector{1, 1}, 0}, {DimVector{1, 0}, 1}, {DimVector{0, 1}, 1}}, std::nullopt, Monodromy::trivial,
          std::nullopt};
}

}  // namespace builtin_tables

/// Product over distinct parts e (multiplicity m) of sym_power_dim(blocks[e], m).
inline std::uint64_t bps_summand_dim(const VectorPartition& a, const BlockDimTable& blocks) {
  std::uint64_t prod = 1;
  for (const auto& [e, m] : a.profile()) {
    auto dim = blocks.lookup(e);
    if (!dim) throw MissingBlockError("block table has no entry for part " + to_string(e));
    prod = detail::checked_mul(prod, sym_power_dim(*dim, static_cast<std::uint64_t>(m)));
  }
  return prod;
}

/// Total dimension of H*(BPS_{d,delta}) = sum over A in S^d_delta of the
/// summand dimensions. Cohomological shifts do not change totals.
inline std::uint64_t bps_assembly_dim(const Quiver& q, const DimVector& d, const CentralWeight& delta,
                                      const BlockDimTable& blocks, std::int64_t cutoff = kPartitionCutoff,
                                      bool force = false) {
  std::uint64_t total = 0;
  for (const auto& a : s_set(q, d, delta, cutoff, force))
    total = detail::checked_add(total, bps_summand_dim(a, blocks));
  return total;
}

enum class Flavor { matrix_factorization, preprojective };

struct KTheoryDims {
  std::uint64_t k0 = 0;
  std::uint64_t k1 = 0;
  friend bool operator==(const KTheoryDims&, const KTheoryDims&) = default;
};

/// Rational K-theory dimensions from the monodromy-invariant BPS total.
/// With trivial monodromy the invariant part is the whole assembly; otherwise
/// the invariant dimension must be supplied.
inline KTheoryDims ktheory_dim_from_bps(std::uint64_t assembly, Monodromy monodromy, Flavor flavor,
                                        std::optional<std::uint64_t> invariant_dim = std::nullopt) {
  std::uint64_t inv = assembly;
  if (monodromy == Monodromy::nontrivial) {
    if (!invariant_dim)
      throw UnsupportedInput("nontrivial monodromy: the monodromy-invariant dimension must be supplied");
    inv = *invariant_dim;
  }
  if (flavor == Flavor::preprojective) return {inv, 0};
  return {inv, inv};
}

}  // namespace qbps
