#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbps/errors.hpp"
#include "qbps/quiver.hpp"
#include "qbps/rational.hpp"
#include "qbps/weights.hpp"

namespace qbps {

/// Unordered multiset of nonzero dimension vectors; parts are kept sorted in
/// decreasing lexicographic order, which is the canonical form.
struct VectorPartition {
  std::vector<DimVector> parts;

  VectorPartition() = default;
  explicit VectorPartition(std::vector<DimVector> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
  }

  std::size_t length() const { return parts.size(); }

  DimVector total() const {
    DimVector s(std::vector<std::int64_t>(parts.empty() ? 0 : parts[0].size(), 0));
    for (const auto& p : parts)
      for (std::size_t i = 0; i < p.size(); ++i) s[i] += p[i];
    return s;
  }

  /// Distinct parts e_i with multiplicities m_i.
  std::vector<std::pair<DimVector, std::int64_t>> profile() const {
    std::vector<std::pair<DimVector, std::int64_t>> out;
    for (const auto& p : parts) {
      if (!out.empty() && out.back().first == p)
        ++out.back().second;
      else
        out.emplace_back(p, 1);
    }
    return out;
  }

  friend bool operator==(const VectorPartition&, const VectorPartition&) = default;
  friend auto operator<=>(const VectorPartition&, const VectorPartition&) = default;
};

inline std::string to_string(const VectorPartition& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.parts.size(); ++i) s += (i ? ", " : "") + to_string(a.parts[i]);
  return s + "}";
}

inline constexpr std::int64_t kPartitionCutoff = 20;

namespace detail {

inline void partitions_rec(DimVector& remaining, const DimVector& max_part, std::vector<DimVector>& current,
                           std::vector<VectorPartition>& out) {
  if (remaining.is_zero()) {
    VectorPartition a;
    a.parts = current;  // generated in canonical order already
    out.push_back(std::move(a));
    return;
  }
  // Candidates p <= remaining componentwise, p <= max_part lexicographically,
  // visited in decreasing lexicographic order.
  const std::size_t n = remaining.size();
  DimVector p(std::vector<std::int64_t>(n, 0));
  std::function<void(std::size_t, bool)> choose = [&](std::size_t i, bool below) {
    if (i == n) {
      if (p.is_zero()) return;
      for (std::size_t k = 0; k < n; ++k) remaining[k] -= p[k];
      current.push_back(p);
      partitions_rec(remaining, p, current, out);
      current.pop_back();
      for (std::size_t k = 0; k < n; ++k) remaining[k] += p[k];
      return;
    }
    const std::int64_t top = below ? remaining[i] : std::min(remaining[i], max_part[i]);
    for (std::int64_t x = top; x >= 0; --x) {
      p[i] = x;
      choose(i + 1, below || x < max_part[i]);
    }
    p[i] = 0;
  };
  choose(0, false);
}

// Distinct orderings of a multiset of parts.
inline std::vector<std::vector<DimVector>> orderings(const VectorPartition& a) {
  std::vector<DimVector> parts = a.parts;
  std::sort(parts.begin(), parts.end());
  std::vector<std::vector<DimVector>> out;
  do {
    out.push_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

inline void check_partition(const Quiver& q, const DimVector& d, const VectorPartition& a) {
  check_dimension(q, d);
  if (a.parts.empty()) throw SchemaError("empty partition");
  for (const auto& p : a.parts) {
    if (p.size() != d.size()) throw SchemaError("partition part " + to_string(p) + " has the wrong length");
    if (p.is_zero()) throw SchemaError("partition has a zero part");
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] < 0) throw SchemaError("partition part " + to_string(p) + " has a negative entry");
  }
  if (a.total() != d) throw SchemaError("partition " + to_string(a) + " does not sum to " + to_string(d));
}

}  // namespace detail

/// All multiset partitions of d into nonzero dimension vectors. The list is in
/// decreasing lexicographic order of the canonical part sequences, so {d}
/// comes first.
inline std::vector<VectorPartition> enumerate_vector_partitions(const DimVector& d,
                                                                std::int64_t cutoff = kPartitionCutoff,
                                                                bool force = false) {
  if (d.is_zero()) throw SchemaError("zero dimension vector");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] < 0) throw SchemaError("dimension vector entry " + std::to_string(i) + " is negative");
  if (d.total() > cutoff && !force)
    throw CutoffExceeded("total dimension " + std::to_string(d.total()) +
                         " exceeds the partition enumeration cutoff " + std::to_string(cutoff));
  std::vector<VectorPartition> out;
  DimVector remaining = d;
  std::vector<DimVector> current;
  detail::partitions_rec(remaining, d, current, out);
  return out;
}

/// Coefficients c_j of f(lambda) = n_lambda/2 + <lambda, delta>, which is
/// linear in the block values m_1 > ... > m_k of an antidominant cocharacter
/// with the given ordered partition. Extracted from f at the base values
/// (3k, 3(k-1), ..., 3) and its +1 perturbation in each block.
inline std::vector<Rational> width_form_coefficients(const Quiver& q, const DimVector& d,
                                                     const std::vector<DimVector>& ordered_parts,
                                                     const CentralWeight& delta) {
  const std::size_t k = ordered_parts.size();
  std::vector<std::int64_t> base(k);
  for (std::size_t j = 0; j < k; ++j) base[j] = 3 * static_cast<std::int64_t>(k - j);
  const Rational f0 = width_form(q, d, cocharacter_for_partition(ordered_parts, base, d), delta);
  std::vector<Rational> coeffs;
  for (std::size_t j = 0; j < k; ++j) {
    auto bumped = base;
    bumped[j] += 1;
    coeffs.push_back(width_form(q, d, cocharacter_for_partition(ordered_parts, bumped, d), delta) - f0);
  }
  return coeffs;
}

struct EpsilonVerdict {
  int value = 0;                   // 1 iff every ordering passes
  std::vector<int> per_ordering;   // verdict for each distinct ordering
  bool orderings_disagree = false; // flagged anomaly
};

inline EpsilonVerdict epsilon_partition_detail(const Quiver& q, const DimVector& d, const VectorPartition& a,
                                               const CentralWeight& delta) {
  require_symmetric(q);
  detail::check_partition(q, d, a);
  EpsilonVerdict out;
  out.value = 1;
  for (const auto& ordering : detail::orderings(a)) {
    int ok = 1;
    for (const auto& c : width_form_coefficients(q, d, ordering, delta))
      if (!is_integer(c)) {
        ok = 0;
        break;
      }
    out.per_ordering.push_back(ok);
    out.value &= ok;
  }
  for (int x : out.per_ordering)
    if (x != out.per_ordering.front()) out.orderings_disagree = true;
  return out;
}

/// epsilon_{A,delta}: 1 iff n_lambda/2 + <lambda,delta> is an integer for every
/// antidominant cocharacter whose associated partition is an ordering of A.
inline int epsilon_partition(const Quiver& q, const DimVector& d, const VectorPartition& a,
                             const CentralWeight& delta) {
  return epsilon_partition_detail(q, d, a, delta).value;
}

/// Independent route: for each ordering build the half-weights
/// theta = -1/2 (weights of R(d) positive on lambda) + 1/2 (roots positive on
/// lambda) and require <1_{d_j}, theta_j + delta_j> in Z for every block j.
inline int epsilon_partition_theta(const Quiver& q, const DimVector& d, const VectorPartition& a,
                                   const CentralWeight& delta) {
  require_symmetric(q);
  detail::check_partition(q, d, a);
  const auto ms = weight_multisets(q, d);
  const auto dl = delta.expand(d);
  const std::size_t n = static_cast<std::size_t>(d.total());
  for (const auto& ordering : detail::orderings(a)) {
    const std::size_t k = ordering.size();
    std::vector<std::int64_t> values(k);
    for (std::size_t j = 0; j < k; ++j) values[j] = static_cast<std::int64_t>(k - j);
    const auto lambda = cocharacter_for_partition(ordering, values, d);
    // Twice theta, kept integral.
    std::vector<std::int64_t> twice_theta(n, 0);
    for (const auto& e : ms.representation.entries)
      if (lambda.values[e.p] > lambda.values[e.q]) {
        twice_theta[e.p] -= e.multiplicity;
        twice_theta[e.q] += e.multiplicity;
      }
    for (const auto& e : ms.roots.entries)
      if (lambda.values[e.p] > lambda.values[e.q]) {
        twice_theta[e.p] += e.multiplicity;
        twice_theta[e.q] -= e.multiplicity;
      }
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = 0;
      for (std::size_t p = 0; p < n; ++p)
        if (lambda.values[p] == values[j]) s += Rational(twice_theta[p], 2) + dl[p];
      if (!is_integer(s)) return 0;
    }
  }
  return 1;
}

/// S^d_delta: partitions with epsilon = 1, in enumeration order.
inline std::vector<VectorPartition> s_set(const Quiver& q, const DimVector& d, const CentralWeight& delta,
                                          std::int64_t cutoff = kPartitionCutoff, bool force = false) {
  require_symmetric(q);
  check_dimension(q, d);
  std::vector<VectorPartition> out;
  for (auto& a : enumerate_vector_partitions(d, cutoff, force))
    if (epsilon_partition(q, d, a, delta)) out.push_back(std::move(a));
  return out;
}

inline std::vector<VectorPartition> s_set_v(const Quiver& q, const DimVector& d, std::int64_t v,
                                            std::int64_t cutoff = kPartitionCutoff, bool force = false) {
  check_dimension(q, d);
  return s_set(q, d, CentralWeight::multiple_of_tau(Rational(v), d), cutoff, force);
}

enum class ClosedFormFamily {
  odd_loops_even_cross,  // odd loops at every vertex, even arrow counts between distinct vertices
  even_loops_one_vertex, // one vertex, 2e loops with e >= 1
};

inline std::optional<ClosedFormFamily> closed_form_family(const Quiver& q) {
  bool odd_even = true;
  for (std::size_t i = 0; i < q.num_vertices(); ++i)
    for (std::size_t j = 0; j < q.num_vertices(); ++j) {
      const auto m = q.arrows(i, j);
      if (i == j ? (m % 2 == 0) : (m % 2 != 0)) odd_even = false;
    }
  if (odd_even && is_symmetric(q)) return ClosedFormFamily::odd_loops_even_cross;
  if (q.num_vertices() == 1 && q.arrows(0, 0) >= 2 && q.arrows(0, 0) % 2 == 0)
    return ClosedFormFamily::even_loops_one_vertex;
  return std::nullopt;
}

/// Membership of one partition in S^d_v by the closed-form conditions:
///   odd loops / even cross arrows:  v * total(d_i) / total(d) in Z for all i;
///   one vertex with 2e loops:       d_i (sum_{j<i} d_j - sum_{j>i} d_j)/2 + v d_i / d in Z,
///                                   evaluated in the canonical ordering.
inline bool closed_form_member(ClosedFormFamily family, const DimVector& d, std::int64_t v,
                               const VectorPartition& a) {
  const std::int64_t dt = d.total();
  if (family == ClosedFormFamily::odd_loops_even_cross) {
    for (const auto& p : a.parts)
      if ((v * p.total()) % dt != 0) return false;
    return true;
  }
  const auto& parts = a.parts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::int64_t before = 0, after = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j < i) before += parts[j][0];
      if (j > i) after += parts[j][0];
    }
    const Rational val = Rational(parts[i][0] * (before - after), 2) + Rational(v * parts[i][0], dt);
    if (!is_integer(val)) return false;
  }
  return true;
}

inline std::vector<VectorPartition> s_set_closed_form(const Quiver& q, const DimVector& d, std::int64_t v,
                                                      std::int64_t cutoff = kPartitionCutoff, bool force = false) {
  check_dimension(q, d);
  const auto family = closed_form_family(q);
  if (!family)
    throw UnsupportedInput("no closed form for this quiver: need odd loops and even cross arrows, "
                           "or a single vertex with an even positive number of loops");
  std::vector<VectorPartition> out;
  for (auto& a : enumerate_vector_partitions(d, cutoff, force))
    if (closed_form_member(*family, d, v, a)) out.push_back(std::move(a));
  return out;
}

/// True iff S^d_delta = {{d}}.
inline bool s_set_is_trivial(const Quiver& q, const DimVector& d, const CentralWeight& delta,
                             std::int64_t cutoff = kPartitionCutoff, bool force = false) {
  require_symmetric(q);
  if (!is_integer(delta.total(d))) return false;
  for (const auto& a : enumerate_vector_partitions(d, cutoff, force))
    if (a.length() >= 2 && epsilon_partition(q, d, a, delta)) return false;
  return true;
}

struct DeltaSearchBounds {
  std::int64_t max_numerator = 6;
  std::int64_t max_denominator = 6;
};

struct DeltaSearchResult {
  CentralWeight delta;
  std::int64_t v = 0;         // <1_d, delta>
  bool multiple_of_tau = true; // delta = v tau_d exactly
};

/// Searches delta = v tau_d for v = 0, 1, ..., total(d)-1 (the value of
/// epsilon only depends on v mod total(d)), then delta = v tau_d + delta' with
/// delta' per-vertex rational, sum-zero, numerators and denominators inside
/// the bounds. Returns nullopt when nothing in range works.
inline std::optional<DeltaSearchResult> find_delta(const Quiver& q, const DimVector& d,
                                                   const DeltaSearchBounds& bounds = {},
                                                   std::int64_t cutoff = kPartitionCutoff, bool force = false) {
  require_symmetric(q);
  check_dimension(q, d);
  if (d.is_zero()) throw SchemaError("zero dimension vector");
  const std::int64_t dt = d.total();
  for (std::int64_t v = 0; v < dt; ++v) {
    auto delta = CentralWeight::multiple_of_tau(Rational(v), d);
    if (s_set_is_trivial(q, d, delta, cutoff, force)) return DeltaSearchResult{delta, v, true};
  }
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) active.push_back(i);
  if (active.size() < 2) return std::nullopt;
  const std::size_t free_count = active.size() - 1;
  for (std::int64_t den = 1; den <= bounds.max_denominator; ++den) {
    std::vector<std::int64_t> num(free_count, -bounds.max_numerator);
    for (;;) {
      bool nonzero = false;
      for (auto x : num) nonzero = nonzero || x != 0;
      if (nonzero) {
        std::vector<Rational> shift(d.size(), Rational(0));
        Rational acc = 0;
        for (std::size_t t = 0; t < free_count; ++t) {
          shift[active[t]] = Rational(num[t], den);
          acc += Rational(d[active[t]]) * shift[active[t]];
        }
        shift[active.back()] = -acc / Rational(d[active.back()]);
        for (std::int64_t v = 0; v < dt; ++v) {
          CentralWeight delta = CentralWeight::multiple_of_tau(Rational(v), d);
          for (std::size_t i = 0; i < d.size(); ++i) delta.per_vertex[i] += shift[i];
          if (s_set_is_trivial(q, d, delta, cutoff, force)) return DeltaSearchResult{delta, v, false};
        }
      }
      std::size_t t = 0;
      while (t < free_count && num[t] == bounds.max_numerator) num[t++] = -bounds.max_numerator;
      if (t == free_count) break;
      ++num[t];
    }
  }
  return std::nullopt;
}

}  // namespace qbps
