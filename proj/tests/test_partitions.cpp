#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "qbps/bps_dim.hpp"
#include "qbps/oracle.hpp"
#include "qbps/partitions.hpp"

using namespace qbps;
using M = std::vector<std::vector<std::int64_t>>;

namespace {

std::set<std::string> names(const std::vector<VectorPartition>& s) {
  std::set<std::string> out;
  for (const auto& a : s) out.insert(to_string(a));
  return out;
}

VectorPartition one_vertex(std::vector<std::int64_t> parts) {
  std::vector<DimVector> p;
  for (auto x : parts) p.push_back(DimVector{x});
  return VectorPartition(p);
}

}  // namespace

TEST(Partitions, EnumerateSmall) {
  EXPECT_EQ(enumerate_vector_partitions(DimVector{2}).size(), 2U);
  EXPECT_EQ(enumerate_vector_partitions(DimVector{1, 1}).size(), 2U);
  EXPECT_EQ(enumerate_vector_partitions(DimVector{3}).size(), 3U);
  EXPECT_EQ(enumerate_vector_partitions(DimVector{2}).front().length(), 1U);
}

TEST(Partitions, EnumerateMatchesCountsAndInvariants) {
  for (std::int64_t n = 1; n <= 10; ++n)
    EXPECT_EQ(enumerate_vector_partitions(DimVector{n}).size(), partition_count_p2(n));
  // Vector partitions of (2,2): 9; of (2,1): 4; of (1,1,1): 5 (set partitions of 3 labelled points).
  EXPECT_EQ(enumerate_vector_partitions(DimVector{2, 2}).size(), 9U);
  EXPECT_EQ(enumerate_vector_partitions(DimVector{2, 1}).size(), 4U);
  EXPECT_EQ(enumerate_vector_partitions(DimVector{1, 1, 1}).size(), 5U);
  for (const auto& d : {DimVector{3, 2}, DimVector{2, 0, 2}}) {
    const auto all = enumerate_vector_partitions(d);
    EXPECT_EQ(names(all).size(), all.size());
    for (const auto& a : all) {
      EXPECT_EQ(a.total(), d);
      for (const auto& p : a.parts) EXPECT_FALSE(p.is_zero());
    }
  }
}

TEST(Partitions, EnumerateCutoff) {
  EXPECT_THROW(enumerate_vector_partitions(DimVector{21}), CutoffExceeded);
  EXPECT_THROW(enumerate_vector_partitions(DimVector{0}), SchemaError);
}

TEST(Partitions, EpsilonExamples) {
  const auto q3 = Quiver::loop_quiver(3);
  const DimVector d{2};
  const auto split = one_vertex({1, 1});
  EXPECT_EQ(epsilon_partition(q3, d, split, CentralWeight::multiple_of_tau(1, d)), 0);
  EXPECT_EQ(epsilon_partition(q3, d, split, CentralWeight::zero(1)), 1);
  EXPECT_EQ(epsilon_partition(Quiver::loop_quiver(2), d, split, CentralWeight::multiple_of_tau(1, d)), 1);
  EXPECT_EQ(epsilon_partition_theta(Quiver::loop_quiver(2), d, split, CentralWeight::multiple_of_tau(1, d)), 1);
  for (std::int64_t v = -3; v <= 3; ++v) {
    const DimVector d2{2, 1};
    const VectorPartition whole({d2});
    const Quiver q(M{{1, 2}, {2, 1}});
    const auto delta = CentralWeight::multiple_of_tau(Rational(v), d2);
    EXPECT_EQ(epsilon_partition(q, d2, whole, delta), 1);
    EXPECT_EQ(epsilon_partition_theta(q, d2, whole, delta), 1);
  }
}

TEST(Partitions, EpsilonAgreesWithThetaAndSampling) {
  const std::vector<Quiver> quivers{Quiver::loop_quiver(2), Quiver::loop_quiver(3), Quiver::loop_quiver(4),
                                    Quiver(M{{1, 2}, {2, 1}}), Quiver(M{{0, 1}, {1, 2}})};
  for (const auto& q : quivers)
    for (std::int64_t a = 0; a <= 4; ++a)
      for (std::int64_t b = 0; b <= (q.num_vertices() > 1 ? 4 - a : 0); ++b) {
        DimVector d = q.num_vertices() == 1 ? DimVector{a} : DimVector{a, b};
        if (d.is_zero()) continue;
        for (const auto& part : enumerate_vector_partitions(d))
          for (std::int64_t v = 0; v <= 2; ++v) {
            const auto delta = CentralWeight::multiple_of_tau(Rational(v), d);
            const int e = epsilon_partition(q, d, part, delta);
            EXPECT_EQ(e, epsilon_partition_theta(q, d, part, delta)) << to_string(part);
            const auto s = oracle::epsilon_sampling(q, d, part, delta, 6);
            if (e == 1) EXPECT_NE(s, oracle::SamplingVerdict::refuted) << to_string(part);
          }
      }
}

TEST(Partitions, OrderingsAgreeOnClosedFormFamilies) {
  for (const auto& q : {Quiver::loop_quiver(3), Quiver::loop_quiver(2), Quiver::loop_quiver(4)})
    for (std::int64_t n = 1; n <= 5; ++n)
      for (const auto& a : enumerate_vector_partitions(DimVector{n}))
        for (std::int64_t v = 0; v < n; ++v) {
          const auto det = epsilon_partition_detail(q, DimVector{n}, a, CentralWeight::multiple_of_tau(v, DimVector{n}));
          EXPECT_FALSE(det.orderings_disagree) << to_string(a);
        }
}

TEST(Partitions, SSetExamples) {
  const auto q3 = Quiver::loop_quiver(3);
  for (std::int64_t d = 1; d <= 6; ++d)
    for (std::int64_t v = 0; v < d; ++v)
      if (std::gcd(d, v) == 1) {
        const auto s = s_set_v(q3, DimVector{d}, v);
        ASSERT_EQ(s.size(), 1U);
        EXPECT_EQ(s.front().length(), 1U);
      }
  EXPECT_EQ(s_set_v(q3, DimVector{4}, 0).size(), 5U);
  EXPECT_EQ(names(s_set_v(Quiver::loop_quiver(2), DimVector{2}, 1)), (std::set<std::string>{"{(2)}", "{(1), (1)}"}));
}

TEST(Partitions, ClosedFormsMatchGeneric) {
  for (const auto& q : {Quiver::loop_quiver(3), Quiver(M{{1, 2}, {2, 3}}), Quiver(M{{1, 0}, {0, 1}})})
    for (std::int64_t a = 0; a <= 5; ++a)
      for (std::int64_t b = 0; b <= (q.num_vertices() > 1 ? 5 - a : 0); ++b) {
        DimVector d = q.num_vertices() == 1 ? DimVector{a} : DimVector{a, b};
        if (d.is_zero()) continue;
        for (std::int64_t v = 0; v <= d.total(); ++v)
          EXPECT_EQ(names(s_set_v(q, d, v)), names(s_set_closed_form(q, d, v))) << to_string(d) << " v=" << v;
      }
  for (const auto& q : {Quiver::loop_quiver(2), Quiver::loop_quiver(4)})
    for (std::int64_t d = 1; d <= 5; ++d)
      for (std::int64_t v = 0; v <= d; ++v)
        EXPECT_EQ(names(s_set_v(q, DimVector{d}, v)), names(s_set_closed_form(q, DimVector{d}, v)));
  // Shifting v by d leaves the set unchanged.
  for (std::int64_t d = 1; d <= 5; ++d)
    for (std::int64_t v = 0; v < d; ++v)
      EXPECT_EQ(names(s_set_closed_form(Quiver::loop_quiver(2), DimVector{d}, v)),
                names(s_set_closed_form(Quiver::loop_quiver(2), DimVector{d}, v + d)));
  EXPECT_THROW(s_set_closed_form(Quiver(M{{1, 1}, {1, 1}}), DimVector{1, 1}, 0), UnsupportedInput);
}

TEST(Partitions, ScaledPartitionBijection) {
  // Odd loops, gcd(d, v) = 1: |S^{nd}_{nv}| = p2(n).
  for (std::int64_t g = 0; g <= 1; ++g) {
    const auto q = Quiver::loop_quiver(2 * g + 1);
    for (std::int64_t n = 1; n <= 8; ++n) {
      EXPECT_EQ(s_set_v(q, DimVector{n}, 0).size(), partition_count_p2(n));
      if (2 * n <= 16) EXPECT_EQ(s_set_v(q, DimVector{2 * n}, n).size(), partition_count_p2(n));
    }
  }
}

TEST(Partitions, TwoPartCoarseningStaysInSet) {
  for (const auto& q : {Quiver::loop_quiver(2), Quiver::loop_quiver(3)})
    for (std::int64_t d = 1; d <= 6; ++d)
      for (std::int64_t v = 0; v < d; ++v) {
        const auto s = s_set_v(q, DimVector{d}, v);
        const auto present = names(s);
        for (const auto& a : s)
          for (const auto& p : a.parts) {
            if (p[0] == d) continue;
            const auto coarse = to_string(one_vertex({p[0], d - p[0]}));
            EXPECT_TRUE(present.count(coarse)) << to_string(a) << " d=" << d << " v=" << v;
          }
      }
}

TEST(Partitions, FindDelta) {
  const auto q3 = Quiver::loop_quiver(3);
  // Odd loops: S = {d} exactly when gcd(d, v) = 1, so v = 1 for d >= 2.
  for (std::int64_t d = 1; d <= 8; ++d) {
    const auto r = find_delta(q3, DimVector{d});
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(r->multiple_of_tau);
    EXPECT_EQ(r->v, d == 1 ? 0 : 1);
    EXPECT_EQ(s_set(q3, DimVector{d}, r->delta).size(), 1U);
  }
  // v = 0 does not isolate {d} for d = 2, 6.
  EXPECT_EQ(s_set_v(q3, DimVector{2}, 0).size(), 2U);
  EXPECT_GT(s_set_v(q3, DimVector{6}, 0).size(), 1U);
  // Two loops, d = 6 needs v = 2.
  const auto r = find_delta(Quiver::loop_quiver(2), DimVector{6});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->v, 2);
  EXPECT_EQ(s_set(Quiver::loop_quiver(2), DimVector{6}, r->delta).size(), 1U);
}

TEST(Partitions, FindDeltaTwoVertices) {
  const Quiver q(M{{1, 2}, {2, 1}});
  for (const auto& d : {DimVector{1, 1}, DimVector{2, 1}, DimVector{2, 2}}) {
    const auto r = find_delta(q, d);
    ASSERT_TRUE(r.has_value()) << to_string(d);
    EXPECT_TRUE(is_integer(r->delta.total(d)));
    const auto s = s_set(q, d, r->delta);
    ASSERT_EQ(s.size(), 1U);
    EXPECT_EQ(s.front().length(), 1U);
  }
}
