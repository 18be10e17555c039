#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "qbps/errors.hpp"
#include "qbps/quiver.hpp"
#include "qbps/rational.hpp"

// Conventions used throughout the library, all in the vertex-major flat slot
// coordinates of SlotLayout:
//   * a weight is dominant when its coefficients are nondecreasing in the slot
//     index inside every vertex block;
//   * a cocharacter is antidominant when its values are nonincreasing in the
//     slot index inside every vertex block. Its associated partition lists the
//     blocks of equal value from the largest value to the smallest.
// The two orientations are dual to each other; every count computed here is
// invariant under flipping both at once.

namespace qbps {

/// Integer weight, one coefficient per slot.
struct Weight {
  std::vector<std::int64_t> coeffs;
  std::size_t size() const { return coeffs.size(); }
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Integer cocharacter, one value per slot.
struct Cocharacter {
  std::vector<std::int64_t> values;
  std::size_t size() const { return values.size(); }
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

/// A Weyl-invariant weight: one rational per vertex, repeated over the slots
/// of that vertex when expanded.
struct CentralWeight {
  std::vector<Rational> per_vertex;

  static CentralWeight zero(std::size_t vertices) { return {std::vector<Rational>(vertices)}; }

  /// v * tau_d, i.e. v / total(d) on every slot.
  static CentralWeight multiple_of_tau(const Rational& v, const DimVector& d) {
    if (d.total() <= 0) throw SchemaError("tau_d needs a nonzero dimension vector");
    return {std::vector<Rational>(d.size(), v / Rational(d.total()))};
  }

  RationalVector expand(const DimVector& d) const {
    if (per_vertex.size() != d.size())
      throw SchemaError("central weight has " + std::to_string(per_vertex.size()) +
                        " entries but the dimension vector has " + std::to_string(d.size()));
    RationalVector out;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::int64_t a = 0; a < d[i]; ++a) out.push_back(per_vertex[i]);
    return out;
  }

  /// <1_d, delta> = sum_i d^i delta^i.
  Rational total(const DimVector& d) const {
    if (per_vertex.size() != d.size())
      throw SchemaError("central weight has " + std::to_string(per_vertex.size()) +
                        " entries but the dimension vector has " + std::to_string(d.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += Rational(d[i]) * per_vertex[i];
    return s;
  }

  friend bool operator==(const CentralWeight&, const CentralWeight&) = default;
};

namespace detail {
inline void check_lengths(std::size_t a, std::size_t b) {
  if (a != b)
    throw SchemaError("pairing of vectors of different lengths (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
}
}  // namespace detail

inline std::int64_t pairing(const Cocharacter& lambda, const Weight& x) {
  detail::check_lengths(lambda.size(), x.size());
  std::int64_t s = 0;
  for (std::size_t p = 0; p < x.size(); ++p) s += lambda.values[p] * x.coeffs[p];
  return s;
}

inline Rational pairing(const Cocharacter& lambda, const RationalVector& x) {
  detail::check_lengths(lambda.size(), x.size());
  Rational s = 0;
  for (std::size_t p = 0; p < x.size(); ++p) s += Rational(lambda.values[p]) * x[p];
  return s;
}

inline Rational pairing(const RationalVector& lambda, const RationalVector& x) {
  detail::check_lengths(lambda.size(), x.size());
  Rational s = 0;
  for (std::size_t p = 0; p < x.size(); ++p) s += lambda[p] * x[p];
  return s;
}

inline Rational pairing(const RationalVector& lambda, const Weight& x) {
  detail::check_lengths(lambda.size(), x.size());
  Rational s = 0;
  for (std::size_t p = 0; p < x.size(); ++p) s += lambda[p] * Rational(x.coeffs[p]);
  return s;
}

/// Half the sum of positive roots: slot (i, a) gets a - (d^i + 1)/2.
inline RationalVector rho(const DimVector& d) {
  RationalVector out;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::int64_t a = 1; a <= d[i]; ++a) out.push_back(Rational(2 * a - d[i] - 1, 2));
  return out;
}

inline Weight sigma(const DimVector& d) {
  return {std::vector<std::int64_t>(static_cast<std::size_t>(d.total()), 1)};
}

inline RationalVector tau(const DimVector& d) {
  if (d.total() <= 0) throw SchemaError("tau_d needs a nonzero dimension vector");
  return RationalVector(static_cast<std::size_t>(d.total()), Rational(1, d.total()));
}

inline Cocharacter one_d(const DimVector& d) {
  return {std::vector<std::int64_t>(static_cast<std::size_t>(d.total()), 1)};
}

template <class Coeffs>
bool is_dominant_coeffs(const Coeffs& c, const DimVector& d) {
  SlotLayout slots(d);
  if (c.size() != slots.size())
    throw SchemaError("weight length " + std::to_string(c.size()) + " does not match total dimension " +
                      std::to_string(slots.size()));
  for (std::size_t i = 0; i < slots.num_vertices(); ++i)
    for (auto p = slots.begin(i); p + 1 < slots.end(i); ++p)
      if (c[p] > c[p + 1]) return false;
  return true;
}

inline bool is_dominant(const Weight& chi, const DimVector& d) { return is_dominant_coeffs(chi.coeffs, d); }
inline bool is_dominant(const RationalVector& chi, const DimVector& d) { return is_dominant_coeffs(chi, d); }

inline bool is_antidominant(const Cocharacter& lambda, const DimVector& d) {
  SlotLayout slots(d);
  if (lambda.size() != slots.size())
    throw SchemaError("cocharacter length " + std::to_string(lambda.size()) +
                      " does not match total dimension " + std::to_string(slots.size()));
  for (std::size_t i = 0; i < slots.num_vertices(); ++i)
    for (auto p = slots.begin(i); p + 1 < slots.end(i); ++p)
      if (lambda.values[p] < lambda.values[p + 1]) return false;
  return true;
}

/// Ordered block decomposition d = d_1 + ... + d_k of an antidominant
/// cocharacter, blocks sorted by decreasing value.
inline std::vector<DimVector> associated_partition(const Cocharacter& lambda, const DimVector& d) {
  if (!is_antidominant(lambda, d)) throw SchemaError("cocharacter is not antidominant");
  SlotLayout slots(d);
  std::vector<std::int64_t> distinct = lambda.values;
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<DimVector> parts(distinct.size(), DimVector(std::vector<std::int64_t>(d.size(), 0)));
  for (std::size_t p = 0; p < slots.size(); ++p) {
    auto k = static_cast<std::size_t>(
        std::find(distinct.begin(), distinct.end(), lambda.values[p]) - distinct.begin());
    parts[k][slots.vertex_of(p)] += 1;
  }
  return parts;
}

/// The antidominant cocharacter taking value block_values[j] on part j of an
/// ordered partition. block_values must be strictly decreasing.
inline Cocharacter cocharacter_for_partition(const std::vector<DimVector>& parts,
                                             const std::vector<std::int64_t>& block_values,
                                             const DimVector& d) {
  if (parts.size() != block_values.size()) throw SchemaError("one block value per part is required");
  Cocharacter out{std::vector<std::int64_t>(static_cast<std::size_t>(d.total()), 0)};
  SlotLayout slots(d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto p = slots.begin(i);
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (std::int64_t a = 0; a < parts[j][i]; ++a) out.values[p++] = block_values[j];
    if (p != slots.end(i)) throw SchemaError("parts do not sum to the dimension vector");
  }
  return out;
}

/// n_lambda = sum over weights b of R(d) with <lambda,b> > 0 of <lambda,b>,
/// minus the same sum over the roots of gl(d). For a symmetric quiver the
/// weight multiset is negation-stable, so taking the weights of R(d) or of its
/// dual gives the same number.
inline std::int64_t n_lambda(const Quiver& q, const DimVector& d, const Cocharacter& lambda) {
  require_symmetric(q);
  check_dimension(q, d);
  SlotLayout slots(d);
  if (lambda.size() != slots.size())
    throw SchemaError("cocharacter length " + std::to_string(lambda.size()) +
                      " does not match total dimension " + std::to_string(slots.size()));
  const auto& v = lambda.values;
  auto positive_part_sum = [&](std::size_t i, std::size_t j) {
    std::int64_t s = 0;
    for (auto a = slots.begin(i); a < slots.end(i); ++a)
      for (auto b = slots.begin(j); b < slots.end(j); ++b) s += std::max<std::int64_t>(0, v[a] - v[b]);
    return s;
  };
  std::int64_t n = 0;
  for (std::size_t i = 0; i < q.num_vertices(); ++i) {
    for (std::size_t j = 0; j < q.num_vertices(); ++j)
      if (q.arrows(i, j) != 0) n += q.arrows(i, j) * positive_part_sum(i, j);
    n -= positive_part_sum(i, i);
  }
  return n;
}

/// n_lambda / 2 + <lambda, delta>.
inline Rational width_form(const Quiver& q, const DimVector& d, const Cocharacter& lambda,
                           const CentralWeight& delta) {
  return Rational(n_lambda(q, d, lambda), 2) + pairing(lambda, delta.expand(d));
}

/// 1 iff n_lambda/2 + <lambda, delta> is an integer.
inline int epsilon_lambda(const Quiver& q, const DimVector& d, const Cocharacter& lambda,
                          const CentralWeight& delta) {
  if (!is_antidominant(lambda, d)) throw SchemaError("epsilon_lambda needs an antidominant cocharacter");
  return is_integer(width_form(q, d, lambda, delta)) ? 1 : 0;
}

}  // namespace qbps
