#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "qbps/bps_dim.hpp"
#include "qbps/magic_count.hpp"

using namespace qbps;
using M = std::vector<std::vector<std::int64_t>>;

TEST(ScoreSequences, Examples) {
  EXPECT_EQ(score_sequence_count(1, 2, 1), 1U);
  EXPECT_EQ(score_sequence_count(0, 3, 3), 1U);
  EXPECT_EQ(score_sequence_count(0, 3, 1), 0U);
  for (std::int64_t g = 0; g <= 3; ++g)
    for (std::int64_t v = -5; v <= 5; ++v) EXPECT_EQ(score_sequence_count(g, 1, v), 1U);
  EXPECT_THROW(score_sequence_count(-1, 2, 0), SchemaError);
  EXPECT_THROW(score_sequence_count(1, 0, 0), SchemaError);
}

TEST(ScoreSequences, MatchesUnprunedEnumeration) {
  // Scan the box [ceil(v/d) - 2g(d-1), floor(v/d) + 2g(d-1)]^d with no pruning.
  for (std::int64_t g = 0; g <= 1; ++g)
    for (std::int64_t d = 1; d <= 4; ++d)
      for (std::int64_t v = -d; v <= 2 * d; ++v) {
        const std::int64_t lo = (v >= 0 ? (v + d - 1) / d : -((-v) / d)) - 2 * g * (d - 1);
        const std::int64_t hi = (v >= 0 ? v / d : -((-v + d - 1) / d)) + 2 * g * (d - 1);
        std::vector<std::int64_t> c(static_cast<std::size_t>(d), lo);
        std::uint64_t count = 0;
        while (lo <= hi) {
          bool ok = std::accumulate(c.begin(), c.end(), std::int64_t{0}) == v;
          for (std::int64_t i = 1; ok && i < d; ++i) ok = c[i] - c[i - 1] + 2 * g >= 0;
          for (std::int64_t k = 1; ok && k <= d; ++k) {
            std::int64_t s = 0;
            for (std::int64_t i = d - k; i < d; ++i) s += c[i];
            ok = d * s <= v * k;
          }
          if (ok) ++count;
          std::size_t p = 0;
          while (p < c.size() && c[p] == hi) c[p++] = lo;
          if (p == c.size()) break;
          ++c[p];
        }
        EXPECT_EQ(score_sequence_count(g, d, v), count) << "g=" << g << " d=" << d << " v=" << v;
      }
}

TEST(ScoreSequences, MatchesLatticeCount) {
  for (std::int64_t g = 0; g <= 2; ++g)
    for (std::int64_t d = 1; d <= (g == 2 ? 4 : 5); ++d)
      for (std::int64_t v = -d; v <= 2 * d; ++v)
        EXPECT_EQ(score_sequence_count(g, d, v), magic_dimension_v(Quiver::loop_quiver(2 * g + 1), DimVector{d}, v))
            << "g=" << g << " d=" << d << " v=" << v;
}

TEST(ScoreSequences, ShiftDualityGcd) {
  for (std::int64_t g = 0; g <= 2; ++g)
    for (std::int64_t d = 1; d <= 5; ++d) {
      std::map<std::int64_t, std::uint64_t> by_gcd;
      for (std::int64_t v = -d; v <= 2 * d; ++v) {
        const auto n = score_sequence_count(g, d, v);
        EXPECT_EQ(n, score_sequence_count(g, d, v + d));
        EXPECT_EQ(n, score_sequence_count(g, d, -v));
        auto [it, fresh] = by_gcd.emplace(std::gcd(v, d), n);
        if (!fresh) EXPECT_EQ(it->second, n);
      }
    }
}

TEST(PartitionCount, Values) {
  EXPECT_EQ(partition_count_p2(0), 1U);
  EXPECT_EQ(partition_count_p2(1), 1U);
  EXPECT_EQ(partition_count_p2(4), 5U);
  EXPECT_EQ(partition_count_p2(8), 22U);
  EXPECT_EQ(partition_count_p2(100), 190569292U);
  EXPECT_THROW(partition_count_p2(-1), SchemaError);
}

TEST(SymPower, Values) {
  for (std::uint64_t m = 0; m <= 20; ++m) EXPECT_EQ(sym_power_dim(1, m), 1U);
  EXPECT_EQ(sym_power_dim(2, 2), 3U);
  for (std::uint64_t n = 0; n <= 5; ++n) EXPECT_EQ(sym_power_dim(n, 0), 1U);
  EXPECT_EQ(sym_power_dim(0, 3), 0U);
  EXPECT_EQ(sym_power_dim(5, 3), 35U);
  for (std::uint64_t n = 1; n <= 8; ++n)
    for (std::uint64_t m = 0; m <= 8; ++m) {
      EXPECT_LE(sym_power_dim(n, m), sym_power_dim(n + 1, m));
      EXPECT_LE(sym_power_dim(n, m), sym_power_dim(n, m + 1));
      // Pascal: C(n+m-1, m) = C(n+m-2, m) + C(n+m-2, m-1).
      if (m > 0 && n > 1) EXPECT_EQ(sym_power_dim(n, m), sym_power_dim(n - 1, m) + sym_power_dim(n, m - 1));
    }
  EXPECT_THROW(sym_power_dim(1000, 1000), std::overflow_error);
}

TEST(BpsAssembly, TripledOneLoop) {
  const auto q = triple_quiver(Quiver::loop_quiver(1));
  const auto table = builtin_tables::tripled_one_loop();
  EXPECT_EQ(bps_assembly_dim(q, DimVector{4}, CentralWeight::multiple_of_tau(0, DimVector{4}), table), 5U);
  EXPECT_EQ(bps_assembly_dim(q, DimVector{4}, CentralWeight::multiple_of_tau(1, DimVector{4}), table), 1U);
  for (std::int64_t n = 1; n <= 8; ++n)
    EXPECT_EQ(bps_assembly_dim(q, DimVector{n}, CentralWeight::multiple_of_tau(0, DimVector{n}), table),
              partition_count_p2(n));
}

TEST(BpsAssembly, SingleSummandIsTheBlock) {
  BlockDimTable table;
  table.blocks[DimVector{3}] = 7;
  const auto q = Quiver::loop_quiver(3);
  EXPECT_EQ(bps_assembly_dim(q, DimVector{3}, CentralWeight::multiple_of_tau(1, DimVector{3}), table), 7U);
  EXPECT_THROW(bps_assembly_dim(q, DimVector{3}, CentralWeight::multiple_of_tau(0, DimVector{3}), table),
               MissingBlockError);
}

TEST(BpsAssembly, SymmetricPowersOfRepeatedParts) {
  BlockDimTable table;
  table.blocks[DimVector{1}] = 2;
  table.blocks[DimVector{2}] = 5;
  const VectorPartition a({DimVector{1}, DimVector{1}, DimVector{2}});
  EXPECT_EQ(bps_summand_dim(a, table), sym_power_dim(2, 2) * 5);
}

TEST(BpsAssembly, BuiltinTables) {
  const auto loop = builtin_tables::one_loop();
  EXPECT_EQ(loop.lookup(DimVector{1}), 1U);
  EXPECT_EQ(loop.lookup(DimVector{4}), 0U);
  // One loop: only {1,...,1} contributes, and it lies in S iff d | v.
  const auto q1 = Quiver::loop_quiver(1);
  for (std::int64_t d = 1; d <= 5; ++d)
    for (std::int64_t v = 0; v < d; ++v)
      EXPECT_EQ(bps_assembly_dim(q1, DimVector{d}, CentralWeight::multiple_of_tau(v, DimVector{d}), loop),
                magic_dimension_v(q1, DimVector{d}, v))
          << "d=" << d << " v=" << v;
  const auto toric = builtin_tables::toric_with_potential();
  EXPECT_EQ(toric.lookup(DimVector{1, 1}), 0U);
  EXPECT_EQ(toric.lookup(DimVector{1, 0}), 1U);
  EXPECT_FALSE(toric.lookup(DimVector{2, 0}).has_value());
}

TEST(KTheory, Split) {
  EXPECT_EQ(ktheory_dim_from_bps(1, Monodromy::trivial, Flavor::matrix_factorization), (KTheoryDims{1, 1}));
  EXPECT_EQ(ktheory_dim_from_bps(9, Monodromy::trivial, Flavor::preprojective), (KTheoryDims{9, 0}));
  EXPECT_EQ(ktheory_dim_from_bps(0, Monodromy::trivial, Flavor::matrix_factorization), (KTheoryDims{0, 0}));
  EXPECT_THROW(ktheory_dim_from_bps(4, Monodromy::nontrivial, Flavor::matrix_factorization), UnsupportedInput);
  EXPECT_EQ(ktheory_dim_from_bps(4, Monodromy::nontrivial, Flavor::matrix_factorization, 3), (KTheoryDims{3, 3}));
  // Tripled one loop, v coprime to n.
  const auto q = triple_quiver(Quiver::loop_quiver(1));
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto a = bps_assembly_dim(q, DimVector{n}, CentralWeight::multiple_of_tau(1, DimVector{n}),
                                    builtin_tables::tripled_one_loop());
    EXPECT_EQ(ktheory_dim_from_bps(a, Monodromy::trivial, Flavor::matrix_factorization), (KTheoryDims{1, 1}));
  }
}
