#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qbps/errors.hpp"

namespace qbps {

/// A quiver: ordered vertices and an arrow-multiplicity matrix,
/// arrows[a][b] = number of arrows a -> b (diagonal entries are loops).
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<std::vector<std::int64_t>> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    const std::size_t n = vertices_.size();
    if (n == 0) throw SchemaError("quiver has no vertices");
    if (arrows_.size() != n)
      throw SchemaError("arrows: expected " + std::to_string(n) + " rows, got " +
                        std::to_string(arrows_.size()));
    for (std::size_t a = 0; a < n; ++a) {
      if (arrows_[a].size() != n)
        throw SchemaError("arrows[" + std::to_string(a) + "]: expected " + std::to_string(n) +
                          " entries, got " + std::to_string(arrows_[a].size()));
      for (std::size_t b = 0; b < n; ++b)
        if (arrows_[a][b] < 0)
          throw SchemaError("arrows[" + std::to_string(a) + "][" + std::to_string(b) +
                            "]: negative arrow count");
    }
  }

  /// Unnamed vertices "v1".."vn".
  explicit Quiver(const std::vector<std::vector<std::int64_t>>& arrows)
      : Quiver(default_names(arrows.size()), arrows) {}

  Quiver(std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : Quiver(std::vector<std::vector<std::int64_t>>(rows.begin(), rows.end())) {}

  /// One vertex with `loops` loops.
  static Quiver loop_quiver(std::int64_t loops) {
    return Quiver(std::vector<std::vector<std::int64_t>>{{loops}});
  }

  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::vector<std::int64_t>>& arrows() const { return arrows_; }
  std::int64_t arrows(std::size_t from, std::size_t to) const { return arrows_[from][to]; }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  static std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    return names;
  }

  std::vector<std::string> vertices_;
  std::vector<std::vector<std::int64_t>> arrows_;
};

/// Dimension vector d = (d^i); entries in the quiver's vertex order.
struct DimVector {
  std::vector<std::int64_t> entries;

  DimVector() = default;
  DimVector(std::initializer_list<std::int64_t> init) : entries(init) {}
  explicit DimVector(std::vector<std::int64_t> e) : entries(std::move(e)) {}

  std::size_t size() const { return entries.size(); }
  std::int64_t operator[](std::size_t i) const { return entries[i]; }
  std::int64_t& operator[](std::size_t i) { return entries[i]; }
  /// Total dimension, the sum of the entries.
  std::int64_t total() const { return std::accumulate(entries.begin(), entries.end(), std::int64_t{0}); }
  bool is_zero() const {
    for (auto x : entries)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;
};

inline std::string to_string(const DimVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

/// Vertex-major flattening of the slots (i, a), 1 <= a <= d^i, into 0..total-1.
class SlotLayout {
 public:
  explicit SlotLayout(const DimVector& d) : dims_(d) {
    std::int64_t off = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0) throw SchemaError("dimension vector entry " + std::to_string(i) + " is negative");
      offsets_.push_back(static_cast<std::size_t>(off));
      for (std::int64_t a = 0; a < d[i]; ++a) vertex_of_.push_back(i);
      off += d[i];
    }
  }

  std::size_t size() const { return vertex_of_.size(); }
  std::size_t num_vertices() const { return offsets_.size(); }
  std::size_t begin(std::size_t vertex) const { return offsets_[vertex]; }
  std::size_t end(std::size_t vertex) const { return offsets_[vertex] + static_cast<std::size_t>(dims_[vertex]); }
  std::size_t vertex_of(std::size_t slot) const { return vertex_of_[slot]; }
  /// 1-based index a of the slot within its vertex block.
  std::size_t index_in_block(std::size_t slot) const { return slot - offsets_[vertex_of_[slot]] + 1; }
  const DimVector& dims() const { return dims_; }

 private:
  DimVector dims_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> vertex_of_;
};

inline void check_dimension(const Quiver& q, const DimVector& d) {
  if (d.size() != q.num_vertices())
    throw SchemaError("dimension vector has " + std::to_string(d.size()) + " entries but the quiver has " +
                      std::to_string(q.num_vertices()) + " vertices");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] < 0) throw SchemaError("dimension vector entry " + std::to_string(i) + " is negative");
}

inline bool is_symmetric(const Quiver& q) {
  for (std::size_t a = 0; a < q.num_vertices(); ++a)
    for (std::size_t b = a + 1; b < q.num_vertices(); ++b)
      if (q.arrows(a, b) != q.arrows(b, a)) return false;
  return true;
}

inline void require_symmetric(const Quiver& q) {
  for (std::size_t a = 0; a < q.num_vertices(); ++a)
    for (std::size_t b = a + 1; b < q.num_vertices(); ++b)
      if (q.arrows(a, b) != q.arrows(b, a))
        throw AsymmetricQuiverError("quiver is not symmetric: arrows[" + std::to_string(a) + "][" +
                                    std::to_string(b) + "]=" + std::to_string(q.arrows(a, b)) +
                                    " but arrows[" + std::to_string(b) + "][" + std::to_string(a) +
                                    "]=" + std::to_string(q.arrows(b, a)));
}

/// Adds the opposite of every arrow.
inline Quiver double_quiver(const Quiver& q) {
  auto m = q.arrows();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) m[a][b] = q.arrows(a, b) + q.arrows(b, a);
  return Quiver(q.vertices(), std::move(m));
}

/// The doubled quiver plus one loop at every vertex. The accompanying
/// potential is never evaluated; callers tag the result with Potential::tripled.
inline Quiver triple_quiver(const Quiver& q) {
  auto m = double_quiver(q).arrows();
  for (std::size_t a = 0; a < m.size(); ++a) m[a][a] += 1;
  return Quiver(q.vertices(), std::move(m));
}

enum class Potential { none, tripled, opaque };

/// Multiset of weights beta_p - beta_q, p and q flat slot indices.
/// Zero weights (p == q) are kept so cardinalities are auditable.
struct WeightMultiset {
  struct Entry {
    std::size_t p;
    std::size_t q;
    std::int64_t multiplicity;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  std::int64_t cardinality() const {
    std::int64_t n = 0;
    for (const auto& e : entries) n += e.multiplicity;
    return n;
  }
  std::int64_t multiplicity(std::size_t p, std::size_t q) const {
    std::int64_t n = 0;
    for (const auto& e : entries)
      if (e.p == p && e.q == q) n += e.multiplicity;
    return n;
  }
};

struct WeightMultisets {
  WeightMultiset representation;  // weights of R(d)
  WeightMultiset roots;           // roots of gl(d)
};

inline WeightMultisets weight_multisets(const Quiver& q, const DimVector& d) {
  check_dimension(q, d);
  SlotLayout slots(d);
  WeightMultisets out;
  for (std::size_t i = 0; i < q.num_vertices(); ++i)
    for (std::size_t j = 0; j < q.num_vertices(); ++j) {
      const auto mult = q.arrows(i, j);
      if (mult == 0) continue;
      for (auto p = slots.begin(i); p < slots.end(i); ++p)
        for (auto r = slots.begin(j); r < slots.end(j); ++r)
          out.representation.entries.push_back({p, r, mult});
    }
  for (std::size_t i = 0; i < q.num_vertices(); ++i)
    for (auto p = slots.begin(i); p < slots.end(i); ++p)
      for (auto r = slots.begin(i); r < slots.end(i); ++r)
        if (p != r) out.roots.entries.push_back({p, r, 1});
  return out;
}

}  // namespace qbps
