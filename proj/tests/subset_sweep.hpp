#ifndef DOMVAL_TESTS_SUBSET_SWEEP_HPP
#define DOMVAL_TESTS_SUBSET_SWEEP_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "domval/graph.hpp"
#include "domval/report.hpp"

// Test-only ground truth: a full 2^n subset sweep, deliberately independent
// of the combination-enumeration path used by the production oracle. Only
// sensible for graphs with at most ~20 vertices.

namespace domval_tests {

inline domval::DominationReport subset_sweep_report(const domval::Graph& g,
                                                    bool keep_sets = false) {
  const int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("subset sweep limited to 24 vertices");

  std::vector<std::uint32_t> closed(static_cast<size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    closed[static_cast<size_t>(v - 1)] |= std::uint32_t{1} << (v - 1);
    for (int u : g.neighbors(v))
      closed[static_cast<size_t>(v - 1)] |= std::uint32_t{1} << (u - 1);
  }
  const std::uint32_t full = n == 32 ? ~std::uint32_t{0}
                                     : (std::uint32_t{1} << n) - 1;

  auto dominates = [&](std::uint32_t mask) {
    std::uint32_t covered = 0;
    for (std::uint32_t rest = mask; rest;) {
      const int bit = __builtin_ctz(rest);
      covered |= closed[static_cast<size_t>(bit)];
      rest &= rest - 1;
    }
    return covered == full;
  };

  int best = n + 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < best && dominates(mask)) best = size;
  }

  domval::DominationReport report;
  report.gamma = static_cast<domval::Count>(best);
  report.dv.assign(static_cast<size_t>(n), 0);
  std::vector<domval::VertexSet> sets;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (__builtin_popcount(mask) != best || !dominates(mask)) continue;
    report.tau += 1;
    std::vector<int> members;
    for (std::uint32_t rest = mask; rest;) {
      const int bit = __builtin_ctz(rest);
      members.push_back(bit + 1);
      report.dv[static_cast<size_t>(bit)] += 1;
      rest &= rest - 1;
    }
    if (keep_sets) sets.emplace_back(domval::VertexSet{std::move(members)});
  }
  if (keep_sets) {
    std::sort(sets.begin(), sets.end(),
              [](const domval::VertexSet& a, const domval::VertexSet& b) {
                return a.members < b.members;
              });
    report.sets = std::move(sets);
  }
  return report;
}

}  // namespace domval_tests

#endif
