#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qbps/errors.hpp"
#include "qbps/partitions.hpp"
#include "qbps/quiver.hpp"
#include "qbps/rational.hpp"
#include "qbps/weights.hpp"
#include "qbps/zonotope.hpp"

// Brute-force counterparts of the primary routines. Nothing here calls the
// primary n_lambda, epsilon or counting code; they only share the value types.

namespace qbps::oracle {

/// Expands every weight of R(d) (one per arrow, per slot pair) and every root
/// of gl(d) as an explicit vector and sums the positive pairings.
inline std::int64_t n_lambda_bruteforce(const Quiver& q, const DimVector& d, const Cocharacter& lambda) {
  std::vector<std::size_t> offset;
  std::int64_t n = 0;
  for (auto x : d.entries) {
    offset.push_back(static_cast<std::size_t>(n));
    n += x;
  }
  const auto len = static_cast<std::size_t>(n);
  if (lambda.values.size() != len) throw SchemaError("cocharacter length does not match the dimension vector");
  auto pair_with = [&](const std::vector<std::int64_t>& w) {
    std::int64_t s = 0;
    for (std::size_t p = 0; p < len; ++p) s += lambda.values[p] * w[p];
    return s;
  };
  std::int64_t total = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      for (std::int64_t arrow = 0; arrow < q.arrows(i, j); ++arrow)
        for (std::int64_t a = 0; a < d[i]; ++a)
          for (std::int64_t b = 0; b < d[j]; ++b) {
            std::vector<std::int64_t> w(len, 0);
            w[offset[i] + static_cast<std::size_t>(a)] += 1;
            w[offset[j] + static_cast<std::size_t>(b)] -= 1;
            const auto t = pair_with(w);
            if (t > 0) total += t;
          }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::int64_t a = 0; a < d[i]; ++a)
      for (std::int64_t b = 0; b < d[i]; ++b) {
        if (a == b) continue;
        std::vector<std::int64_t> w(len, 0);
        w[offset[i] + static_cast<std::size_t>(a)] += 1;
        w[offset[i] + static_cast<std::size_t>(b)] -= 1;
        const auto t = pair_with(w);
        if (t > 0) total -= t;
      }
  return total;
}

enum class SamplingVerdict { refuted = 0, consistent = 1, unknown = 2 };

/// Tests n_lambda/2 + <lambda, delta> in Z for every antidominant integer
/// cocharacter with block values in [-bound, bound] whose associated
/// partition is an ordering of A. `unknown` when no such cocharacter exists.
inline SamplingVerdict epsilon_sampling(const Quiver& q, const DimVector& d, const VectorPartition& a,
                                        const CentralWeight& delta, std::int64_t bound) {
  const auto dl = delta.expand(d);
  std::vector<DimVector> parts = a.parts;
  std::sort(parts.begin(), parts.end());
  bool any = false;
  const std::size_t k = parts.size();
  do {
    // Strictly decreasing block values m_0 > m_1 > ... > m_{k-1} in [-bound, bound].
    std::vector<std::int64_t> m(k);
    auto rec = [&](auto&& self, std::size_t j, std::int64_t upper) -> bool {
      if (j == k) {
        any = true;
        Cocharacter lambda{std::vector<std::int64_t>(dl.size())};
        std::size_t p = 0;
        for (std::size_t i = 0; i < d.size(); ++i)
          for (std::size_t b = 0; b < k; ++b)
            for (std::int64_t c = 0; c < parts[b][i]; ++c) lambda.values[p++] = m[b];
        Rational f = Rational(n_lambda_bruteforce(q, d, lambda), 2);
        for (std::size_t s = 0; s < dl.size(); ++s) f += Rational(lambda.values[s]) * dl[s];
        return is_integer(f);
      }
      for (std::int64_t x = upper; x >= -bound + static_cast<std::int64_t>(k - 1 - j); --x) {
        m[j] = x;
        if (!self(self, j + 1, x - 1)) return false;
      }
      return true;
    };
    if (!rec(rec, 0, bound)) return SamplingVerdict::refuted;
  } while (std::next_permutation(parts.begin(), parts.end()));
  return any ? SamplingVerdict::consistent : SamplingVerdict::unknown;
}

inline constexpr std::uint64_t kNaiveBoxCutoff = 2'000'000;

/// Scans every integer point of the bounding box of W(d) + delta - rho and
/// keeps the dominant ones inside, decided by the exact simplex.
inline std::uint64_t lattice_count_naive(const Quiver& q, const DimVector& d, const CentralWeight& delta,
                                         std::uint64_t box_cutoff = kNaiveBoxCutoff) {
  check_dimension(q, d);
  const auto z = Zonotope::from_quiver(q, d);
  const auto box = z.bounding_box();
  const auto dl = delta.expand(d);
  // rho recomputed from its definition: half the sum of beta_a - beta_b, a > b.
  RationalVector half_roots(dl.size(), Rational(0));
  {
    std::size_t off = 0;
    for (auto di : d.entries) {
      for (std::int64_t a = 0; a < di; ++a)
        for (std::int64_t b = 0; b < a; ++b) {
          half_roots[off + static_cast<std::size_t>(a)] += Rational(1, 2);
          half_roots[off + static_cast<std::size_t>(b)] -= Rational(1, 2);
        }
      off += static_cast<std::size_t>(di);
    }
  }
  const std::size_t n = dl.size();
  std::vector<std::int64_t> lo(n), hi(n);
  std::uint64_t volume = 1;
  for (std::size_t p = 0; p < n; ++p) {
    lo[p] = to_int64(ceil_of(box[p].first + dl[p] - half_roots[p]));
    hi[p] = to_int64(floor_of(box[p].second + dl[p] - half_roots[p]));
    if (hi[p] < lo[p]) return 0;
    volume *= static_cast<std::uint64_t>(hi[p] - lo[p] + 1);
    if (volume > box_cutoff) throw CutoffExceeded("naive lattice scan box is too large");
  }
  const Rational target = delta.total(d);
  std::uint64_t count = 0;
  std::vector<std::int64_t> chi = lo;
  for (;;) {
    Weight w{chi};
    std::int64_t sum = 0;
    for (auto c : chi) sum += c;
    if (Rational(sum) == target && is_dominant(w, d)) {
      RationalVector x(n);
      for (std::size_t p = 0; p < n; ++p) x[p] = Rational(chi[p]) + half_roots[p] - dl[p];
      if (z.contains(x)) ++count;
    }
    std::size_t p = 0;
    while (p < n && chi[p] == hi[p]) chi[p] = lo[p], ++p;
    if (p == n) break;
    ++chi[p];
  }
  return count;
}

}  // namespace qbps::oracle
