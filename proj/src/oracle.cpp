#include "domval/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace domval::oracle {

namespace {

// Coverage bitmap over vertex ids 1..n, one bit per vertex.
class Coverage {
public:
  explicit Coverage(int n)
      : n_(n), words_(static_cast<size_t>(n + 64) / 64, 0) {}

  void set(int v) { words_[idx(v)] |= bit(v); }

  void or_with(const Coverage& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }

  int popcount() const {
    int total = 0;
    for (std::uint64_t w : words_) total += __builtin_popcountll(w);
    return total;
  }

  bool full() const { return popcount() == n_; }

private:
  static size_t idx(int v) { return static_cast<size_t>(v - 1) / 64; }
  static std::uint64_t bit(int v) {
    return std::uint64_t{1} << (static_cast<unsigned>(v - 1) % 64);
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

struct SearchContext {
  const Graph* g = nullptr;
  int n = 0;
  std::vector<Coverage> closed;     // closed[v]: bitmap of N[v]
  std::vector<int> suffix_max_nbr;  // max |N[u]| over u >= v
  std::vector<int> chosen;
  std::vector<VertexSet> found;
};

void extend(SearchContext& ctx, int first, int remaining, const Coverage& covered) {
  const int uncovered = ctx.n - covered.popcount();
  if (remaining == 0) {
    if (uncovered == 0) ctx.found.emplace_back(VertexSet{std::vector<int>(ctx.chosen)});
    return;
  }
  if (first > ctx.n) return;
  // Admissible cut: each future pick covers at most the largest closed
  // neighborhood still available, so short coverage can never catch up.
  if (static_cast<long long>(uncovered) >
      static_cast<long long>(remaining) * ctx.suffix_max_nbr[static_cast<size_t>(first)])
    return;
  for (int v = first; v <= ctx.n - remaining + 1; ++v) {
    ctx.chosen.push_back(v);
    Coverage next = covered;
    next.or_with(ctx.closed[static_cast<size_t>(v)]);
    extend(ctx, v + 1, remaining - 1, next);
    ctx.chosen.pop_back();
  }
}

}  // namespace

std::vector<VertexSet> enumerate_gamma_sets(const Graph& g, std::optional<int> size_cap) {
  const int n = g.num_vertices();

  SearchContext ctx;
  ctx.g = &g;
  ctx.n = n;
  ctx.closed.assign(static_cast<size_t>(n) + 1, Coverage(n));
  for (int v = 1; v <= n; ++v) {
    ctx.closed[static_cast<size_t>(v)].set(v);
    for (int u : g.neighbors(v)) ctx.closed[static_cast<size_t>(v)].set(u);
  }
  ctx.suffix_max_nbr.assign(static_cast<size_t>(n) + 2, 0);
  for (int v = n; v >= 1; --v)
    ctx.suffix_max_nbr[static_cast<size_t>(v)] =
        std::max(ctx.suffix_max_nbr[static_cast<size_t>(v) + 1], g.degree(v) + 1);

  const int lower = (n + g.max_degree()) / (g.max_degree() + 1);  // ceil(n / (1+maxdeg))
  for (int k = std::max(lower, 1); k <= n; ++k) {
    if (size_cap && k > *size_cap)
      throw BudgetError("minimum dominating set needs more than " +
                        std::to_string(*size_cap) + " picks");
    extend(ctx, 1, k, Coverage(n));
    if (!ctx.found.empty()) return std::move(ctx.found);
  }
  // V(g) always dominates, so the loop cannot fall through.
  throw BudgetError("no dominating set within the vertex count");
}

DominationReport domination_report(const Graph& g, bool keep_sets,
                                   std::optional<int> size_cap) {
  std::vector<VertexSet> sets = enumerate_gamma_sets(g, size_cap);

  DominationReport report;
  report.gamma = static_cast<Count>(sets.front().members.size());
  report.tau = static_cast<Count>(sets.size());
  report.dv.assign(static_cast<size_t>(g.num_vertices()), 0);
  for (const VertexSet& d : sets)
    for (int v : d.members) report.dv[static_cast<size_t>(v - 1)] += 1;
  if (keep_sets) report.sets = std::move(sets);
  return report;
}

}  // namespace domval::oracle
