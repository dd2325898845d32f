#ifndef DOMVAL_VERIFY_HPP
#define DOMVAL_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domval/family.hpp"
#include "domval/graph.hpp"
#include "domval/oracle.hpp"
#include "domval/report.hpp"

// Cross-engine equivalence harness plus set-level property checks.

namespace domval::verify {

enum class Engine { formula, oracle, dp };

const char* engine_name(Engine e);
Engine parse_engine(std::string_view s);

// One engine's full report for a family instance. The dp engine covers
// ladders and prisms only; formula domains are those of report_family.
DominationReport report_for(Family family, int n, Engine engine,
                            std::optional<int> oracle_cap = oracle::kDefaultPickBudget);

struct Verdict {
  enum class Status { pass, fail, skipped };

  std::string check;
  std::string family;  // family name, or a free-form instance tag
  int n = 0;
  Status status = Status::pass;
  // fail: the conflicting field with both values and their engines;
  // skipped: the reason. Empty on pass.
  std::string detail;
};

// Compares gamma, tau, and the full dv vector of two engines for every
// order in [min_n, max_n]; one verdict per order. An oracle budget error
// becomes a skipped verdict, never a silent gap.
std::vector<Verdict> cross_check(Family family, int min_n, int max_n,
                                 Engine a, Engine b,
                                 std::optional<int> oracle_cap = oracle::kDefaultPickBudget);

// Closed catalog of named set predicates over two-row strips:
//   "corner-free"        {x1,y1} and D disjoint
//   "has-x1"             x1 in D
//   "has-y1"             y1 in D
//   "contains-{x2,y2}"   {x2,y2} subset of D
//   "contains-rung-pair" some column has both its vertices in D
//   "no-adjacent-pair"   no two members of D are adjacent (any graph)
bool satisfies_predicate(const Graph& g, std::string_view predicate,
                         const VertexSet& d);

// Number of minimum dominating sets containing v that satisfy the predicate.
Count filtered_dv(const Graph& g, std::string_view predicate, int v,
                  std::optional<int> oracle_cap = oracle::kDefaultPickBudget);

// Component size multisets (ascending) of the subgraph induced by D
// restricted to each side of a ladder or prism.
struct ComponentProfile {
  std::vector<int> side_x;
  std::vector<int> side_y;
};

ComponentProfile component_profile(const Graph& g, const VertexSet& d);

// Set-level lemma checks, quantified over ALL enumerated minimum dominating
// sets of each order in range:
//   ladder: "corner-lemma"       if no corner of an end column is in D, the
//                                next column's rung pair is
//           "corner-free-3-6"    a set avoiding all four degree-two
//                                vertices exists iff n is 3 or 6
//   prism (n = 2 mod 4 only):
//           "component-max-3"    no side component has 4+ vertices
//           "no-lone-pair"       no set whose largest component has exactly
//                                2 vertices has only one such pair overall
std::vector<Verdict> check_structural_lemmas(Family family, int min_n, int max_n,
                                             std::optional<int> oracle_cap = oracle::kDefaultPickBudget);

// Pass iff sum(dv) == tau * gamma and 0 <= dv(v) <= tau for every vertex.
Verdict check_observations(const DominationReport& r,
                           std::string_view family = "report", int n = 0);

}  // namespace domval::verify

#endif
