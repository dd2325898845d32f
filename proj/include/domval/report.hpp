#ifndef DOMVAL_REPORT_HPP
#define DOMVAL_REPORT_HPP

#include <optional>
#include <vector>

#include "domval/count.hpp"
#include "domval/graph.hpp"

namespace domval {

// Common output of all three engines: the domination number, the number of
// minimum dominating sets, and per-vertex membership counts (dv[v-1] is the
// number of minimum dominating sets containing vertex v). The set family
// itself is retained only when explicitly requested.
struct DominationReport {
  Count gamma = 0;
  Count tau = 0;
  std::vector<Count> dv;
  std::optional<std::vector<VertexSet>> sets;
};

}  // namespace domval

#endif
