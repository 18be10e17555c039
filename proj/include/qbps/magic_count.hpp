#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qbps/errors.hpp"
#include "qbps/quiver.hpp"
#include "qbps/rational.hpp"
#include "qbps/weights.hpp"
#include "qbps/zonotope.hpp"

namespace qbps {

enum class MembershipMode {
  off,      // exact simplex on every candidate
  on,       // indicator filter alone
  checked,  // indicator filter rejects; simplex confirms every acceptance
  audit,    // both on every candidate; disagreements are recorded
};

inline constexpr std::int64_t kCountCutoff = 12;

struct CountOptions {
  MembershipMode membership = MembershipMode::checked;
  unsigned threads = 1;
  std::int64_t cutoff = kCountCutoff;  // on total(d)
  bool force = false;
};

struct CountResult {
  std::uint64_t count = 0;
  std::uint64_t candidates = 0;     // dominant, in-box tuples with the right total
  std::uint64_t disagreements = 0;  // indicator vs simplex verdicts that differ
  std::vector<Weight> disagreeing;  // the offending weights chi (capped)
};

namespace detail {

struct CountContext {
  const Zonotope* zonotope;
  std::optional<IndicatorFilter> filter;
  MembershipMode mode;
  RationalVector shift;  // rho - delta, so x = chi + shift
  std::vector<std::int64_t> lo, hi;
  std::vector<bool> block_start;
  std::int64_t target;
};

inline void merge(CountResult& into, const CountResult& from) {
  into.count += from.count;
  into.candidates += from.candidates;
  into.disagreements += from.disagreements;
  for (const auto& w : from.disagreeing)
    if (into.disagreeing.size() < 32) into.disagreeing.push_back(w);
}

inline void visit_candidate(const CountContext& ctx, const std::vector<std::int64_t>& chi, CountResult& out) {
  ++out.candidates;
  RationalVector x(chi.size());
  for (std::size_t p = 0; p < chi.size(); ++p) x[p] = Rational(chi[p]) + ctx.shift[p];
  bool member = false;
  switch (ctx.mode) {
    case MembershipMode::off:
      member = ctx.zonotope->contains(x);
      break;
    case MembershipMode::on:
      member = ctx.filter->passes(x);
      break;
    case MembershipMode::checked:
      member = ctx.filter->passes(x) && ctx.zonotope->contains(x);
      // A filter acceptance the simplex refutes is a disagreement.
      if (!member && ctx.filter->passes(x)) {
        ++out.disagreements;
        if (out.disagreeing.size() < 32) out.disagreeing.push_back({chi});
      }
      break;
    case MembershipMode::audit: {
      const bool fast = ctx.filter->passes(x);
      member = ctx.zonotope->contains(x);
      if (fast != member) {
        ++out.disagreements;
        if (out.disagreeing.size() < 32) out.disagreeing.push_back({chi});
      }
      break;
    }
  }
  if (member) ++out.count;
}

// Depth-first over slots; within a vertex block values are nondecreasing, so
// only dominant weights are ever generated. rest_min/rest_max bound the sum
// still reachable by the remaining slots.
inline void descend(const CountContext& ctx, std::vector<std::int64_t>& chi, std::size_t slot, std::int64_t sum,
                    CountResult& out) {
  const std::size_t n = chi.size();
  if (slot == n) {
    if (sum == ctx.target) visit_candidate(ctx, chi, out);
    return;
  }
  std::int64_t lower = ctx.lo[slot];
  if (!ctx.block_start[slot]) lower = std::max(lower, chi[slot - 1]);
  for (std::int64_t c = lower; c <= ctx.hi[slot]; ++c) {
    // Bound the remaining sum given chi[slot] = c.
    std::int64_t rest_min = 0, rest_max = 0;
    std::int64_t running = c;
    bool feasible = true;
    for (std::size_t r = slot + 1; r < n; ++r) {
      if (ctx.block_start[r]) running = ctx.lo[r];
      running = std::max(running, ctx.lo[r]);
      if (running > ctx.hi[r]) {
        feasible = false;
        break;
      }
      rest_min += running;
      rest_max += ctx.hi[r];
    }
    if (!feasible) break;  // larger c only raises the block floor
    const std::int64_t s = sum + c;
    if (s + rest_min > ctx.target) break;
    if (s + rest_max < ctx.target) continue;
    chi[slot] = c;
    descend(ctx, chi, slot + 1, s, out);
  }
}

}  // namespace detail

/// Number of dominant integer weights chi with chi + rho - delta in W(d).
inline CountResult magic_count(const Quiver& quiver, const DimVector& d, const CentralWeight& delta,
                               const CountOptions& opts = {}) {
  require_symmetric(quiver);
  check_dimension(quiver, d);
  if (d.is_zero()) throw SchemaError("zero dimension vector");
  if (d.total() > opts.cutoff && !opts.force)
    throw CutoffExceeded("total dimension " + std::to_string(d.total()) + " exceeds the counting cutoff " +
                         std::to_string(opts.cutoff) + " (use force to override)");
  CountResult result;
  const Rational v = delta.total(d);
  // W(d) lies in the hyperplane of coordinate sum zero, so sum(chi) = <1_d, delta>.
  if (!is_integer(v)) return result;

  const auto z = Zonotope::from_quiver(quiver, d);
  detail::CountContext ctx{&z, std::nullopt, opts.membership, {}, {}, {}, {}, to_int64(floor_of(v))};
  if (ctx.mode != MembershipMode::off) {
    if (z.dimension() <= kIndicatorCutoff)
      ctx.filter.emplace(z);
    else
      ctx.mode = MembershipMode::off;
  }
  const auto r = rho(d);
  const auto dl = delta.expand(d);
  const auto box = z.bounding_box();
  SlotLayout slots(d);
  for (std::size_t p = 0; p < slots.size(); ++p) {
    ctx.shift.push_back(r[p] - dl[p]);
    ctx.lo.push_back(to_int64(ceil_of(box[p].first - ctx.shift[p])));
    ctx.hi.push_back(to_int64(floor_of(box[p].second - ctx.shift[p])));
    ctx.block_start.push_back(p == slots.begin(slots.vertex_of(p)));
  }
  const std::size_t n = slots.size();

  // Split on the leading coefficient; each worker takes every k-th value.
  const unsigned workers = std::max(1U, opts.threads);
  std::vector<CountResult> partial(workers);
  auto work = [&](unsigned w) {
    std::vector<std::int64_t> chi(n);
    std::size_t idx = 0;
    for (std::int64_t c = ctx.lo[0]; c <= ctx.hi[0]; ++c, ++idx) {
      if (idx % workers != w) continue;
      chi[0] = c;
      std::int64_t rest_min = 0, rest_max = 0, running = c;
      bool feasible = true;
      for (std::size_t r2 = 1; r2 < n; ++r2) {
        if (ctx.block_start[r2]) running = ctx.lo[r2];
        running = std::max(running, ctx.lo[r2]);
        if (running > ctx.hi[r2]) {
          feasible = false;
          break;
        }
        rest_min += running;
        rest_max += ctx.hi[r2];
      }
      if (!feasible || c + rest_min > ctx.target || c + rest_max < ctx.target) continue;
      detail::descend(ctx, chi, 1, c, partial[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& p : partial) detail::merge(result, p);
  return result;
}

inline std::uint64_t magic_dimension(const Quiver& quiver, const DimVector& d, const CentralWeight& delta,
                                     const CountOptions& opts = {}) {
  return magic_count(quiver, d, delta, opts).count;
}

/// magic_dimension with delta = v * tau_d.
inline std::uint64_t magic_dimension_v(const Quiver& quiver, const DimVector& d, std::int64_t v,
                                       const CountOptions& opts = {}) {
  check_dimension(quiver, d);
  if (d.is_zero()) throw SchemaError("zero dimension vector");
  return magic_dimension(quiver, d, CentralWeight::multiple_of_tau(Rational(v), d), opts);
}

}  // namespace qbps
