#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qbps/bps_dim.hpp"
#include "qbps/magic_count.hpp"
#include "qbps/oracle.hpp"
#include "qbps/partitions.hpp"
#include "qbps/quiver.hpp"
#include "qbps/report.hpp"
#include "qbps/weights.hpp"
#include "qbps/zonotope.hpp"

// The reproduction table run by `verify` and by the acceptance binary. Each
// criterion appends exactly one check to a report.

namespace qbps::acceptance {

inline constexpr int kCriteria = 10;

inline Quiver toric_quiver(std::int64_t g) {
  return Quiver(std::vector<std::vector<std::int64_t>>{{1, 2 * g + 1}, {2 * g + 1, 1}});
}

/// Every nonzero dimension vector with the given number of vertices and total at most `max_total`.
inline std::vector<DimVector> dimension_vectors(std::size_t vertices, std::int64_t max_total) {
  std::vector<DimVector> out;
  std::vector<std::int64_t> cur(vertices, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i == vertices) {
      DimVector d(cur);
      if (!d.is_zero()) out.push_back(d);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      cur[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, max_total);
  std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
    return a.total() != b.total() ? a.total() < b.total() : a < b;
  });
  return out;
}

/// Quivers with odd loops at every vertex and even arrow counts between distinct vertices.
inline std::vector<Quiver> odd_even_family() {
  using M = std::vector<std::vector<std::int64_t>>;
  return {Quiver::loop_quiver(1), Quiver::loop_quiver(3), Quiver(M{{1, 0}, {0, 1}}), Quiver(M{{1, 2}, {2, 1}}),
          Quiver(M{{3, 2}, {2, 1}})};
}

inline std::vector<Quiver> even_loop_family() { return {Quiver::loop_quiver(2), Quiver::loop_quiver(4)}; }

inline std::string partitions_string(std::vector<VectorPartition> s) {
  std::vector<std::string> names;
  for (const auto& a : s) names.push_back(to_string(a));
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n;
  return out.empty() ? "{}" : out;
}

inline std::string quiver_label(const Quiver& q) {
  std::string s = "[";
  for (std::size_t a = 0; a < q.num_vertices(); ++a) {
    s += a ? ",[" : "[";
    for (std::size_t b = 0; b < q.num_vertices(); ++b) s += (b ? "," : "") + std::to_string(q.arrows(a, b));
    s += "]";
  }
  return s + "]";
}

/// Collects the first few mismatches of a sweep for the report.
class Mismatches {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) text_ += (text_.empty() ? "" : "; ") + what;
  }
  std::size_t count() const { return count_; }
  std::string summary(std::size_t checked, const std::string& unit) const {
    if (count_ == 0) return std::to_string(checked) + " " + unit + " agree";
    return std::to_string(count_) + " of " + std::to_string(checked) + " " + unit + " differ: " + text_ +
           (count_ > 5 ? "; ..." : "");
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

// 1. Toric quiver, d = (1,1): 2g+1 lattice points for odd v and 2g+2 for even v.
inline void toric_counts(RunReport& r) {
  r.run(
      "c1 toric counts", "toric quiver, d=(1,1): 2g+1 points for odd v, 2g+2 for even v",
      [](Check& c) {
        std::string expected, computed;
        bool ok = true;
        for (std::int64_t g = 0; g <= 4; ++g) {
          const auto q = toric_quiver(g);
          expected += (g ? " " : "") + std::string("g") + std::to_string(g) + ":";
          computed += (g ? " " : "") + std::string("g") + std::to_string(g) + ":";
          for (std::int64_t v = -3; v <= 3; ++v) {
            const std::uint64_t want = (v % 2 != 0) ? 2 * g + 1 : 2 * g + 2;
            const auto got = magic_dimension_v(q, DimVector{1, 1}, v);
            expected += (v > -3 ? "," : "") + std::to_string(want);
            computed += (v > -3 ? "," : "") + std::to_string(got);
            ok = ok && got == want;
          }
        }
        c.expected = expected + " (v=-3..3)";
        c.computed = computed;
        c.pass = ok;
      },
      1000);
}

// 2. One vertex with 2e+1 loops, d = 2, v = 1: e points.
inline void loop_example(RunReport& r) {
  r.run(
      "c2 loop quiver d=2 v=1", "one vertex, 2e+1 loops, d=2, v=1: count e",
      [](Check& c) {
        std::string computed;
        bool ok = true;
        for (std::int64_t e = 1; e <= 4; ++e) {
          const auto got = magic_dimension_v(Quiver::loop_quiver(2 * e + 1), DimVector{2}, 1);
          computed += (e > 1 ? "," : "") + std::to_string(got);
          ok = ok && got == static_cast<std::uint64_t>(e);
        }
        c.expected = "1,2,3,4 (e=1..4)";
        c.computed = computed;
        c.pass = ok;
      },
      1000);
}

// 3. One loop: count 1 iff d divides v.
inline void one_loop_family(RunReport& r) {
  r.run(
      "c3 one-loop quiver", "one vertex, one loop: count 1 if d|v, else 0",
      [](Check& c) {
        Mismatches bad;
        std::size_t n = 0;
        const auto q = Quiver::loop_quiver(1);
        for (std::int64_t d = 1; d <= 6; ++d)
          for (std::int64_t v = -6; v <= 12; ++v, ++n) {
            const std::uint64_t want = (v % d == 0) ? 1 : 0;
            const auto got = magic_dimension_v(q, DimVector{d}, v);
            if (got != want)
              bad.add("d=" + std::to_string(d) + " v=" + std::to_string(v) + ": " + std::to_string(got));
          }
        c.expected = "1 iff d|v, d<=6, v=-6..12";
        c.computed = bad.summary(n, "instances");
        c.pass = bad.count() == 0;
      },
      1000);
}

/// magic_dimension_v on 2g+1-loop quivers, g <= 2, d <= 5, v = -d..2d.
struct LoopSweep {
  struct Row {
    std::int64_t g, d, v;
    std::uint64_t magic, score;
  };
  std::vector<Row> rows;

  static const LoopSweep& get() {
    static const LoopSweep sweep = [] {
      LoopSweep s;
      for (std::int64_t g = 0; g <= 2; ++g)
        for (std::int64_t d = 1; d <= 5; ++d)
          for (std::int64_t v = -d; v <= 2 * d; ++v)
            s.rows.push_back({g, d, v, magic_dimension_v(Quiver::loop_quiver(2 * g + 1), DimVector{d}, v),
                              score_sequence_count(g, d, v)});
      return s;
    }();
    return sweep;
  }
};

// 4. Lattice count equals the score-sequence count.
inline void route_agreement(RunReport& r) {
  r.run(
      "c4 lattice count = score sequences", "one vertex, 2g+1 loops: lattice count equals the score-sequence count",
      [](Check& c) {
        const auto& sweep = LoopSweep::get();
        Mismatches bad;
        for (const auto& row : sweep.rows)
          if (row.magic != row.score)
            bad.add("g=" + std::to_string(row.g) + " d=" + std::to_string(row.d) + " v=" + std::to_string(row.v) +
                    ": " + std::to_string(row.magic) + " vs " + std::to_string(row.score));
        c.expected = "equal counts, g<=2, d<=5, v=-d..2d";
        c.computed = bad.summary(sweep.rows.size(), "instances");
        c.pass = bad.count() == 0;
      },
      60000);
}

// 5. Counts depend on v only through gcd(v, d).
inline void gcd_invariance(RunReport& r) {
  r.run(
      "c5 gcd invariance", "counts for v and v' with gcd(v,d)=gcd(v',d) agree",
      [](Check& c) {
        const auto& sweep = LoopSweep::get();
        std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::set<std::uint64_t>> seen;
        for (const auto& row : sweep.rows) {
          const auto g = std::gcd(row.v, row.d);
          seen[{row.g, row.d, g}].insert(row.magic);
          seen[{row.g, row.d, g}].insert(row.score);
        }
        Mismatches bad;
        for (const auto& [key, values] : seen)
          if (values.size() != 1)
            bad.add("g=" + std::to_string(std::get<0>(key)) + " d=" + std::to_string(std::get<1>(key)) +
                    " gcd=" + std::to_string(std::get<2>(key)) + ": " + std::to_string(values.size()) +
                    " distinct counts");
        c.expected = "one count per (g, d, gcd(v,d))";
        c.computed = bad.summary(seen.size(), "gcd classes");
        c.pass = bad.count() == 0;
      },
      60000);
}

// 6. Generic S-set equals the closed forms.
inline void s_set_closed_forms(RunReport& r) {
  r.run(
      "c6 S-set closed forms",
      "odd loops and even cross arrows: parts with v*|d_i|/|d| integral; 2e loops: the ordered parity condition",
      [](Check& c) {
        Mismatches bad;
        std::size_t n = 0;
        auto compare = [&](const Quiver& q, const DimVector& d, std::int64_t v) {
          ++n;
          const auto generic = partitions_string(s_set_v(q, d, v));
          const auto closed = partitions_string(s_set_closed_form(q, d, v));
          if (generic != closed)
            bad.add(quiver_label(q) + " d=" + to_string(d) + " v=" + std::to_string(v) + ": " + generic + " vs " +
                    closed);
        };
        for (const auto& q : odd_even_family())
          for (const auto& d : dimension_vectors(q.num_vertices(), 5))
            for (std::int64_t v = 0; v <= d.total(); ++v) compare(q, d, v);
        for (const auto& q : even_loop_family())
          for (std::int64_t d = 1; d <= 5; ++d)
            for (std::int64_t v = 0; v <= d; ++v) compare(q, DimVector{d}, v);
        c.expected = "generic = closed form on every instance";
        c.computed = bad.summary(n, "instances");
        c.pass = bad.count() == 0;
      },
      30000);
}

// 7. The theta route and sampling agree with epsilon_partition.
inline void epsilon_oracles(RunReport& r) {
  r.run(
      "c7 epsilon oracles", "epsilon via half-weights theta and via sampled cocharacters",
      [](Check& c) {
        Mismatches bad;
        std::size_t n = 0;
        auto check = [&](const Quiver& q, const DimVector& d) {
          for (const auto& a : enumerate_vector_partitions(d))
            for (std::int64_t v = 0; v <= d.total(); ++v) {
              ++n;
              const auto delta = CentralWeight::multiple_of_tau(Rational(v), d);
              const int e = epsilon_partition(q, d, a, delta);
              const int t = epsilon_partition_theta(q, d, a, delta);
              const std::string where = quiver_label(q) + " d=" + to_string(d) + " A=" + to_string(a) +
                                        " v=" + std::to_string(v);
              if (e != t) bad.add(where + ": theta " + std::to_string(t) + " vs " + std::to_string(e));
              if (e == 1 && oracle::epsilon_sampling(q, d, a, delta, 6) == oracle::SamplingVerdict::refuted)
                bad.add(where + ": sampling refutes a positive verdict");
            }
        };
        for (const auto& q : odd_even_family())
          for (const auto& d : dimension_vectors(q.num_vertices(), 4)) check(q, d);
        for (const auto& q : even_loop_family())
          for (std::int64_t d = 1; d <= 4; ++d) check(q, DimVector{d});
        c.expected = "theta = epsilon; no sampled refutation of epsilon=1 (M=6)";
        c.computed = bad.summary(n, "verdicts");
        c.pass = bad.count() == 0;
      },
      60000);
}

// 8. Tripled one-loop quiver: assembly equals p2(n).
inline void p2_identity(RunReport& r) {
  r.run(
      "c8 p2 identity", "tripled one-loop quiver: BPS total p2(n) at v=0, 1 when gcd(n,v)=1; K-theory split",
      [](Check& c) {
        const auto q = triple_quiver(Quiver::loop_quiver(1));
        const auto table = builtin_tables::tripled_one_loop();
        Mismatches bad;
        std::size_t n_checked = 0;
        std::string computed;
        for (std::int64_t n = 1; n <= 8; ++n) {
          const DimVector d{n};
          const auto p2 = partition_count_p2(n);
          const auto at0 = bps_assembly_dim(q, d, CentralWeight::multiple_of_tau(0, d), table);
          computed += (n > 1 ? "," : "") + std::to_string(at0);
          ++n_checked;
          if (at0 != p2) bad.add("n=" + std::to_string(n) + " v=0: " + std::to_string(at0));
          for (std::int64_t v = 1; v <= n; ++v) {
            if (std::gcd(n, v) != 1) continue;
            ++n_checked;
            const auto got = bps_assembly_dim(q, d, CentralWeight::multiple_of_tau(Rational(v), d), table);
            if (got != 1) bad.add("n=" + std::to_string(n) + " v=" + std::to_string(v) + ": " + std::to_string(got));
          }
          ++n_checked;
          if (ktheory_dim_from_bps(at0, table.monodromy, Flavor::matrix_factorization) != KTheoryDims{p2, p2})
            bad.add("n=" + std::to_string(n) + ": matrix-factorization K-theory");
          ++n_checked;
          if (ktheory_dim_from_bps(at0, table.monodromy, Flavor::preprojective) != KTheoryDims{p2, 0})
            bad.add("n=" + std::to_string(n) + ": preprojective K-theory");
        }
        c.expected = "1,2,3,5,7,11,15,22 at v=0 (n=1..8)";
        c.computed = computed + "; " + bad.summary(n_checked, "identities");
        c.pass = bad.count() == 0;
      },
      5000);
}

// 9. find_delta on the 3-loop quiver.
inline void find_delta_rule(RunReport& r) {
  r.run(
      "c9 find_delta on 3 loops", "one vertex, odd loops: S={d} exactly when gcd(d,v)=1",
      [](Check& c) {
        const auto q = Quiver::loop_quiver(3);
        std::string computed;
        bool ok = true;
        for (std::int64_t d = 1; d <= 8; ++d) {
          const DimVector dv{d};
          const auto res = find_delta(q, dv);
          if (!res) {
            computed += (d > 1 ? "," : "") + std::string("none");
            ok = false;
            continue;
          }
          computed += (d > 1 ? "," : "") + std::to_string(res->v);
          const std::int64_t want = d == 1 ? 0 : 1;  // least v >= 0 coprime to d
          const auto s = s_set(q, dv, res->delta);
          ok = ok && res->multiple_of_tau && res->v == want && std::gcd(d, res->v) == 1 && s.size() == 1 &&
               s.front().length() == 1;
        }
        c.expected = "0,1,1,1,1,1,1,1 (d=1..8), S={d} each";
        c.computed = computed;
        c.pass = ok;
      },
      10000);
}

// 10. Polytope properties.
inline void polytope_properties(RunReport& r) {
  r.run(
      "c10 polytope properties",
      "indicator and simplex membership agree; central symmetry, support bounds, shift and duality",
      [](Check& c) {
        Mismatches bad;
        std::uint64_t candidates = 0;
        using M = std::vector<std::vector<std::int64_t>>;
        CountOptions audit;
        audit.membership = MembershipMode::audit;
        auto sweep = [&](const Quiver& q, const DimVector& d) {
          const auto dt = d.total();
          for (std::int64_t v = 0; v < dt; ++v) {
            const auto res = magic_count(q, d, CentralWeight::multiple_of_tau(Rational(v), d), audit);
            candidates += res.candidates;
            if (res.disagreements)
              bad.add(quiver_label(q) + " d=" + to_string(d) + " v=" + std::to_string(v) + ": " +
                      std::to_string(res.disagreements) + " membership disagreements");
          }
        };
        for (std::int64_t d = 1; d <= 6; ++d) {
          sweep(Quiver::loop_quiver(1), DimVector{d});
          sweep(Quiver::loop_quiver(2), DimVector{d});
          sweep(Quiver::loop_quiver(3), DimVector{d});
        }
        for (std::int64_t d = 1; d <= 6; ++d) sweep(Quiver::loop_quiver(5), DimVector{d});
        for (const auto& m : {M{{1, 1}, {1, 1}}, M{{1, 2}, {2, 1}}, M{{0, 1}, {1, 0}}, M{{1, 3}, {3, 1}}})
          for (const auto& d : dimension_vectors(2, 6)) sweep(Quiver(m), d);

        // Randomized properties.
        std::mt19937_64 rng(20261018);
        const std::vector<Quiver> quivers{Quiver::loop_quiver(3), Quiver(M{{1, 3}, {3, 1}}), Quiver(M{{1, 2}, {2, 1}}),
                                          Quiver(M{{2, 1, 0}, {1, 0, 2}, {0, 2, 1}})};
        auto pick = [&](std::int64_t lo, std::int64_t hi) {
          return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
        };
        std::size_t samples = 0;
        for (int s = 0; s < 400; ++s) {
          const auto& q = quivers[static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(quivers.size()) - 1))];
          DimVector d(std::vector<std::int64_t>(q.num_vertices(), 0));
          do {
            for (auto& x : d.entries) x = pick(0, 2);
          } while (d.is_zero() || d.total() > 4);
          const auto z = Zonotope::from_quiver(q, d);
          const auto n = z.dimension();
          // A random point with random sum-zero direction and denominator up to 4.
          RationalVector x(n, Rational(0));
          const auto den = pick(1, 4);
          for (std::size_t p = 0; p + 1 < n; ++p) {
            x[p] = Rational(pick(-8, 8), den);
            x[n - 1] -= x[p];
          }
          RationalVector neg(n);
          for (std::size_t p = 0; p < n; ++p) neg[p] = -x[p];
          const bool in = z.contains(x);
          ++samples;
          if (in != z.contains(neg)) bad.add("central symmetry fails at a sampled point");
          if (in) {
            for (int t = 0; t < 3; ++t) {
              RationalVector lambda(n);
              for (auto& l : lambda) l = Rational(pick(-5, 5));
              if (pairing(lambda, x) > z.support(lambda)) bad.add("support bound fails at a sampled point");
            }
            RationalVector half(n);
            const Rational t(pick(0, 3), 3);
            for (std::size_t p = 0; p < n; ++p) half[p] = x[p] * t;
            if (!z.contains(half)) bad.add("scaling toward the origin leaves the zonotope");
          }
          if (s % 2 == 0) {
            const auto v = pick(-6, 6);
            const auto base = magic_dimension_v(q, d, v);
            ++samples;
            if (magic_dimension_v(q, d, v + d.total()) != base) bad.add("shift invariance fails");
            if (magic_dimension_v(q, d, -v) != base) bad.add("duality v <-> -v fails");
          }
        }
        c.expected = "no disagreement, no property failure";
        c.computed = std::to_string(candidates) + " audited candidates, " + std::to_string(samples) +
                     " random samples; " + bad.summary(candidates + samples, "checks");
        c.pass = bad.count() == 0 && samples >= 500;
      },
      120000);
}

// Oracle suites run by `verify --deep`.
inline void deep_n_lambda(RunReport& r) {
  r.run("deep n_lambda oracle", "n_lambda by explicit weight expansion", [](Check& c) {
    std::mt19937_64 rng(7);
    auto pick = [&](std::int64_t lo, std::int64_t hi) {
      return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    Mismatches bad;
    const int samples = 1000;
    for (int s = 0; s < samples; ++s) {
      const auto k = static_cast<std::size_t>(pick(1, 3));
      std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) m[a][b] = m[b][a] = pick(0, 3);
      const Quiver q(m);
      DimVector d(std::vector<std::int64_t>(k, 0));
      do {
        for (auto& x : d.entries) x = pick(0, 4);
      } while (d.is_zero() || d.total() > 4);
      Cocharacter lambda{std::vector<std::int64_t>(static_cast<std::size_t>(d.total()))};
      for (auto& x : lambda.values) x = pick(-5, 5);
      const auto a = n_lambda(q, d, lambda);
      const auto b = oracle::n_lambda_bruteforce(q, d, lambda);
      if (a != b) bad.add(quiver_label(q) + " d=" + to_string(d) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
    c.expected = "equal on 1000 random instances";
    c.computed = bad.summary(samples, "instances");
    c.pass = bad.count() == 0;
  });
}

inline void deep_naive_count(RunReport& r) {
  r.run("deep naive lattice scan", "full bounding-box scan with simplex membership", [](Check& c) {
    Mismatches bad;
    std::size_t n = 0;
    auto compare = [&](const Quiver& q, const DimVector& d, std::int64_t v) {
      ++n;
      const auto delta = CentralWeight::multiple_of_tau(Rational(v), d);
      const auto a = magic_dimension(q, d, delta);
      const auto b = oracle::lattice_count_naive(q, d, delta);
      if (a != b)
        bad.add(quiver_label(q) + " d=" + to_string(d) + " v=" + std::to_string(v) + ": " + std::to_string(a) +
                " vs " + std::to_string(b));
    };
    for (std::int64_t g = 0; g <= 2; ++g)
      for (std::int64_t v = -4; v <= 4; ++v) compare(toric_quiver(g), DimVector{1, 1}, v);
    for (std::int64_t d = 1; d <= 3; ++d)
      for (std::int64_t v = -d; v <= 2 * d; ++v) compare(Quiver::loop_quiver(3), DimVector{d}, v);
    c.expected = "magic_dimension = naive scan";
    c.computed = bad.summary(n, "instances");
    c.pass = bad.count() == 0;
  });
}

inline void deep_indicator_box(RunReport& r) {
  r.run("deep indicator vs simplex on boxes", "indicator inequalities decide membership exactly", [](Check& c) {
    Mismatches bad;
    std::size_t n = 0;
    for (std::int64_t g = 0; g <= 2; ++g)
      for (std::int64_t d = 1; d <= 4; ++d) {
        if (g == 2 && d == 4) continue;  // 10^4 box points per half-shift; covered at g <= 1
        const DimVector dv{d};
        const auto z = Zonotope::from_quiver(Quiver::loop_quiver(2 * g + 1), dv);
        const IndicatorFilter filter(z);
        const auto box = z.bounding_box();
        // Integer and half-integer lattices both occur as chi + rho - delta.
        for (int half = 0; half <= 1; ++half) {
          const Rational off(half, 2);
          std::vector<std::int64_t> lo, hi;
          for (const auto& [a, b] : box) {
            lo.push_back(to_int64(ceil_of(a - off)));
            hi.push_back(to_int64(floor_of(b - off)));
          }
          bool empty = false;
          for (std::size_t p = 0; p < lo.size(); ++p) empty = empty || lo[p] > hi[p];
          std::vector<std::int64_t> cur = lo;
          while (!empty) {
            std::int64_t sum = 0;
            for (auto x : cur) sum += x;
            if (Rational(sum) + off * Rational(d) == 0) {
              RationalVector x;
              for (auto v : cur) x.push_back(Rational(v) + off);
              ++n;
              if (filter.passes(x) != z.contains(x))
                bad.add("g=" + std::to_string(g) + " d=" + std::to_string(d) + " at a box point");
            }
            std::size_t p = 0;
            while (p < cur.size() && cur[p] == hi[p]) cur[p] = lo[p], ++p;
            if (p == cur.size()) break;
            ++cur[p];
          }
        }
      }
    c.expected = "agreement on every sum-zero box point";
    c.computed = bad.summary(n, "points");
    c.pass = bad.count() == 0;
  });
}

inline void deep_epsilon_sampling(RunReport& r) {
  r.run("deep epsilon sampling", "sampled cocharacters never refute a positive epsilon", [](Check& c) {
    Mismatches bad;
    std::size_t n = 0;
    std::size_t refuted_negatives = 0;
    for (const auto& q : {Quiver::loop_quiver(2), Quiver::loop_quiver(3), Quiver::loop_quiver(4)})
      for (std::int64_t d = 1; d <= 4; ++d)
        for (const auto& a : enumerate_vector_partitions(DimVector{d}))
          for (std::int64_t v = 0; v < d; ++v) {
            ++n;
            const auto delta = CentralWeight::multiple_of_tau(Rational(v), DimVector{d});
            const int e = epsilon_partition(q, DimVector{d}, a, delta);
            const auto s = oracle::epsilon_sampling(q, DimVector{d}, a, delta, 6);
            if (e == 1 && s == oracle::SamplingVerdict::refuted)
              bad.add(quiver_label(q) + " d=" + std::to_string(d) + " A=" + to_string(a));
            if (e == 0 && s == oracle::SamplingVerdict::refuted) ++refuted_negatives;
            if (e == 0 && s != oracle::SamplingVerdict::refuted)
              bad.add(quiver_label(q) + " d=" + std::to_string(d) + " A=" + to_string(a) + ": unrefuted zero");
          }
    c.expected = "sampling matches epsilon in both directions";
    c.computed = bad.summary(n, "verdicts") + " (" + std::to_string(refuted_negatives) + " zeros refuted)";
    c.pass = bad.count() == 0;
  });
}

inline void run_criterion(int k, RunReport& r) {
  switch (k) {
    case 1: toric_counts(r); break;
    case 2: loop_example(r); break;
    case 3: one_loop_family(r); break;
    case 4: route_agreement(r); break;
    case 5: gcd_invariance(r); break;
    case 6: s_set_closed_forms(r); break;
    case 7: epsilon_oracles(r); break;
    case 8: p2_identity(r); break;
    case 9: find_delta_rule(r); break;
    case 10: polytope_properties(r); break;
    default: throw std::out_of_range("no criterion " + std::to_string(k));
  }
}

inline RunReport run_all(bool deep) {
  RunReport r;
  for (int k = 1; k <= kCriteria; ++k) run_criterion(k, r);
  if (deep) {
    deep_n_lambda(r);
    deep_naive_count(r);
    deep_indicator_box(r);
    deep_epsilon_sampling(r);
  }
  return r;
}

}  // namespace qbps::acceptance
