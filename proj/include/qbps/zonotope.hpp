#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbps/errors.hpp"
#include "qbps/quiver.hpp"
#include "qbps/rational.hpp"
#include "qbps/simplex.hpp"
#include "qbps/weights.hpp"

namespace qbps {

/// The zonotope W(d) = 1/2 * (Minkowski sum of the segments [0, beta]) over
/// the nonzero weights beta = e_p - e_q of R(d). Parallel generators are
/// merged: a generator with multiplicity m contributes the segment
/// [0, m/2] * (e_p - e_q).
class Zonotope {
 public:
  struct Generator {
    std::size_t p;  // +1 coordinate
    std::size_t q;  // -1 coordinate
    std::int64_t multiplicity;
    friend bool operator==(const Generator&, const Generator&) = default;
  };

  /// Parallel generators (same p and q) are merged into one.
  Zonotope(std::size_t dimension, const std::vector<Generator>& generators) : dim_(dimension) {
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> merged;
    for (const auto& g : generators) {
      if (g.p >= dim_ || g.q >= dim_) throw SchemaError("zonotope generator outside the ambient space");
      if (g.p == g.q) throw SchemaError("zonotope generator is the zero vector");
      if (g.multiplicity <= 0) throw SchemaError("zonotope generator multiplicity must be positive");
      merged[{g.p, g.q}] += g.multiplicity;
    }
    for (const auto& [pq, m] : merged) gens_.push_back({pq.first, pq.second, m});
  }

  static Zonotope from_quiver(const Quiver& quiver, const DimVector& d) {
    const auto ms = weight_multisets(quiver, d);
    std::vector<Generator> gens;
    for (const auto& e : ms.representation.entries)
      if (e.p != e.q) gens.push_back({e.p, e.q, e.multiplicity});
    return Zonotope(static_cast<std::size_t>(d.total()), gens);
  }

  std::size_t dimension() const { return dim_; }
  const std::vector<Generator>& generators() const { return gens_; }

  /// h(lambda) = sum over generators of (m/2) * max(0, <lambda, e_p - e_q>).
  Rational support(const RationalVector& lambda) const {
    check(lambda.size());
    Rational h = 0;
    for (const auto& g : gens_) {
      Rational t = lambda[g.p] - lambda[g.q];
      if (t > 0) h += Rational(g.multiplicity, 2) * t;
    }
    return h;
  }

  Rational support(const Cocharacter& lambda) const {
    check(lambda.size());
    std::int64_t twice = 0;
    for (const auto& g : gens_) {
      auto t = lambda.values[g.p] - lambda.values[g.q];
      if (t > 0) twice += g.multiplicity * t;
    }
    return Rational(twice, 2);
  }

  /// Per-coordinate [min, max] over the zonotope.
  std::vector<std::pair<Rational, Rational>> bounding_box() const {
    std::vector<std::pair<Rational, Rational>> box;
    for (std::size_t p = 0; p < dim_; ++p) {
      RationalVector e(dim_, Rational(0));
      e[p] = 1;
      Rational hi = support(e);
      e[p] = -1;
      Rational lo = -support(e);
      box.emplace_back(lo, hi);
    }
    return box;
  }

  /// Ground-truth membership by an exact phase-1 simplex. The generators on
  /// each unordered pair {p, q} are combined into one variable
  ///   u = t_pq - t_qp + m_qp/2 in [0, (m_pq + m_qp)/2],
  /// giving the system
  ///   sum_k u_k (e_p - e_q) = x + sum_k (m_qp/2)(e_p - e_q),  u_k + s_k = cap_k,
  /// with the last coordinate row dropped (every column sums to zero, so it is
  /// implied once <1, x> = 0 is checked). Returns the t_j of a witness, in
  /// generator order, or nullopt.
  std::optional<RationalVector> membership_witness(const RationalVector& x) const {
    check(x.size());
    Rational total = 0;
    for (const auto& c : x) total += c;
    if (total != 0) return std::nullopt;
    if (gens_.empty()) {
      for (const auto& c : x)
        if (c != 0) return std::nullopt;
      return RationalVector{};
    }
    // Pair k collects forward (p < q) and backward generators.
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::int64_t, std::int64_t>> pairs;
    for (const auto& g : gens_) {
      if (g.p < g.q)
        pairs[{g.p, g.q}].first += g.multiplicity;
      else
        pairs[{g.q, g.p}].second += g.multiplicity;
    }
    const std::size_t k = pairs.size();
    const std::size_t rows = dim_ - 1;
    lp::Matrix<Rational> a(rows + k, RationalVector(2 * k, Rational(0)));
    RationalVector b(rows + k, Rational(0));
    for (std::size_t r = 0; r < rows; ++r) b[r] = x[r];
    std::size_t j = 0;
    for (const auto& [pq, m] : pairs) {
      const auto [p, q] = pq;
      const Rational back(m.second, 2);
      if (p < rows) a[p][j] = 1, b[p] += back;
      if (q < rows) a[q][j] = -1, b[q] -= back;
      a[rows + j][j] = 1;
      a[rows + j][k + j] = 1;
      b[rows + j] = Rational(m.first + m.second, 2);
      ++j;
    }
    auto sol = lp::find_feasible(a, b, 2 * k);
    if (!sol) return std::nullopt;
    // Split each u back into t_pq = max(s, 0) and t_qp = max(-s, 0).
    std::map<std::pair<std::size_t, std::size_t>, Rational> net;
    j = 0;
    for (const auto& [pq, m] : pairs) net[pq] = (*sol)[j++] - Rational(m.second, 2);
    RationalVector t;
    for (const auto& g : gens_) {
      const Rational s = g.p < g.q ? net[{g.p, g.q}] : Rational(-net[{g.q, g.p}]);
      t.push_back(s > 0 ? s : Rational(0));
      // A pair's net flow is carried once, by the first generator in its direction.
      if (g.p < g.q)
        net[{g.p, g.q}] = s > 0 ? Rational(0) : s;
      else
        net[{g.q, g.p}] = s > 0 ? Rational(0) : Rational(-s);
    }
    return t;
  }

  bool contains(const RationalVector& x) const { return membership_witness(x).has_value(); }

 private:
  void check(std::size_t n) const {
    if (n != dim_)
      throw SchemaError("vector of length " + std::to_string(n) + " against a zonotope in dimension " +
                        std::to_string(dim_));
  }

  std::size_t dim_;
  std::vector<Generator> gens_;
};

inline constexpr std::size_t kIndicatorCutoff = 16;

/// Fast membership filter: x passes iff <1_S, x> <= h(1_S) and
/// <-1_S, x> <= h(-1_S) for every coordinate subset S. Every inequality is
/// valid for the zonotope, so a rejection is always correct. Supports of all
/// 2^n indicators are tabulated once at construction.
class IndicatorFilter {
 public:
  explicit IndicatorFilter(const Zonotope& z, std::size_t cutoff = kIndicatorCutoff) : dim_(z.dimension()) {
    if (dim_ > cutoff || dim_ >= 63)
      throw CutoffExceeded("indicator membership test refused in dimension " + std::to_string(dim_) +
                           " (cutoff " + std::to_string(cutoff) + ")");
    const std::uint64_t count = std::uint64_t{1} << dim_;
    twice_support_.assign(count, 0);
    for (std::uint64_t s = 0; s < count; ++s) {
      std::int64_t h = 0;
      for (const auto& g : z.generators())
        if (((s >> g.p) & 1U) && !((s >> g.q) & 1U)) h += g.multiplicity;
      twice_support_[s] = h;
    }
  }

  std::size_t dimension() const { return dim_; }

  /// Support h(1_S), S given as a bitmask.
  Rational indicator_support(std::uint64_t subset) const { return Rational(twice_support_.at(subset), 2); }

  bool passes(const RationalVector& x) const {
    if (x.size() != dim_) throw SchemaError("vector length does not match the zonotope dimension");
    // Scale to a common denominator D so all comparisons run on integers:
    // 2 D x(S) <= D * twice_support(S).
    BigInt den = 1;
    for (const auto& c : x) den = boost::multiprecision::lcm(den, BigInt(boost::multiprecision::denominator(c)));
    std::vector<BigInt> scaled;
    for (const auto& c : x) scaled.push_back(BigInt(boost::multiprecision::numerator(c)) * (den / BigInt(boost::multiprecision::denominator(c))) * 2);
    std::vector<std::int64_t> xs;
    bool small = den < (BigInt(1) << 20);
    for (const auto& s : scaled) {
      if (abs(s) > (BigInt(1) << 36)) small = false;
      if (small) xs.push_back(s.convert_to<std::int64_t>());
    }
    const std::uint64_t count = std::uint64_t{1} << dim_;
    const std::uint64_t full = count - 1;
    if (small) {
      const auto d = den.convert_to<std::int64_t>();
      // Gray-code walk so every subset sum is one update away from the last.
      std::int64_t sum = 0;
      std::uint64_t prev = 0;
      for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t s = i ^ (i >> 1);
        if (i) {
          const std::uint64_t flipped = s ^ prev;
          const auto bit = static_cast<std::size_t>(__builtin_ctzll(flipped));
          sum += (s & flipped) ? xs[bit] : -xs[bit];
        }
        prev = s;
        if (sum > d * twice_support_[s]) return false;
        if (-sum > d * twice_support_[full ^ s]) return false;
      }
      return true;
    }
    for (std::uint64_t s = 0; s < count; ++s) {
      BigInt sum = 0;
      for (std::size_t p = 0; p < dim_; ++p)
        if ((s >> p) & 1U) sum += scaled[p];
      if (sum > den * twice_support_[s]) return false;
      if (-sum > den * twice_support_[full ^ s]) return false;
    }
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::int64_t> twice_support_;
};

/// One-shot indicator test; refuses dimensions above `cutoff`.
inline bool contains_fast(const Zonotope& z, const RationalVector& x, std::size_t cutoff = kIndicatorCutoff) {
  return IndicatorFilter(z, cutoff).passes(x);
}

}  // namespace qbps
