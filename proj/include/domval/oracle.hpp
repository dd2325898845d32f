#ifndef DOMVAL_ORACLE_HPP
#define DOMVAL_ORACLE_HPP

#include <optional>
#include <vector>

#include "domval/graph.hpp"
#include "domval/report.hpp"

// Exact brute-force enumeration of all minimum dominating sets of an
// arbitrary graph; the ground truth the other engines are checked against.

namespace domval::oracle {

inline constexpr int kDefaultPickBudget = 12;

// Finds the minimum cardinality k admitting a dominating set (ascending
// search from ceil(n / (1 + max_degree))) and returns ALL dominating sets of
// that size, in lexicographic order of their sorted member lists. A partial
// selection is cut only when the undominated vertices provably cannot be
// covered: undominated > remaining picks * max |N[u]| over the candidates
// still available. Raises BudgetError once the search cardinality would
// exceed size_cap (nullopt = unlimited).
std::vector<VertexSet> enumerate_gamma_sets(
    const Graph& g, std::optional<int> size_cap = kDefaultPickBudget);

DominationReport domination_report(
    const Graph& g, bool keep_sets = false,
    std::optional<int> size_cap = kDefaultPickBudget);

}  // namespace domval::oracle

#endif
