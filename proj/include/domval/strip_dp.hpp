#ifndef DOMVAL_STRIP_DP_HPP
#define DOMVAL_STRIP_DP_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "domval/count.hpp"
#include "domval/graph.hpp"
#include "domval/report.hpp"

// Linear-time exact gamma/tau/DV for the two-row strips (ladders and
// prisms) via a column-sweep frontier DP.
//
// The frontier records, for each row of the most recently processed column,
// one of three statuses:
//
//   selected - the vertex is in D
//   covered  - dominated but not in D
//   open     - not yet dominated; only a same-row selection in the NEXT
//              column can still cover it
//
// which gives 9 combined states for the 2-row strip. A column-selection
// pattern (one of {}, {x}, {y}, {x,y}) is admissible from a state iff every
// open row gets its same-row selection; the new statuses derive from own
// selection, rung-partner selection, and previous-column same-row selection.
// Cyclic instances close by conditioning on a boundary profile for column 1
// (its selection pattern plus wrap-coverage credits) and accepting only
// terminal states that exactly justify the credits taken.

namespace domval::strip_dp {

enum class CellStatus : std::uint8_t { selected = 0, covered = 1, open = 2 };

inline constexpr int kNumStates = 9;    // indexed 3*status(x) + status(y)
inline constexpr int kNumPatterns = 4;  // bit 0 selects x, bit 1 selects y

int state_index(CellStatus x, CellStatus y);
CellStatus state_row(int state, Row r);
bool pattern_legal(int state, int pattern);
int next_state(int state, int pattern);

inline constexpr int kUnreachableCost = std::numeric_limits<int>::max();

// Minimum partial selection size reaching a state, and how many partial
// selections achieve it. Unreachable states keep the explicit bottom marker
// (kUnreachableCost, 0), never a zero-cost default.
struct CostCount {
  int best = kUnreachableCost;
  Count ways = 0;

  bool reachable() const { return best != kUnreachableCost; }
};

// Tie handling: equal best adds ways, smaller best replaces, larger is
// discarded. Pure integers, counts checked.
void merge(CostCount& into, int cost, Count ways);

using StateRow = std::array<CostCount, kNumStates>;

// forward[i]: partial selections of columns 1..i, by frontier state of
// column i (forward[0] is the virtual boundary column of the ladder;
// unused for prisms, whose chain starts at column 1).
// backward[i]: completions over columns i+1..n given the state at column i,
// including the terminal acceptance rule.
struct Tables {
  int n = 0;
  std::vector<StateRow> forward;
  std::vector<StateRow> backward;
};

DominationReport dp_ladder(int n);  // n >= 1
DominationReport dp_prism(int n);   // n >= 3

// --- verification hooks -------------------------------------------------
// The property suites recombine the tables themselves; exposing them keeps
// those checks independent of the report assembly above.

Tables ladder_tables(int n);
// f_i (x) b_i over all states; equals (gamma, tau) at every column 0..n.
CostCount ladder_total_at(const Tables& t, int column);
// Forward rerun with the selection at `column` forced to include `row`;
// the ways at global minimum must equal DV of that vertex.
CostCount ladder_forced(int n, int column, Row row);

// Boundary profile of a cyclic run: column 1's selection pattern crossed
// with which rows of column 1 take coverage credit from column n.
struct PrismBoundary {
  int pattern = 0;
  int credits = 0;
};

inline constexpr int kNumBoundaries = 16;

int boundary_initial_state(PrismBoundary b);
bool boundary_accepts(PrismBoundary b, int final_state);

struct PrismRun {
  int n = 0;
  std::array<Tables, kNumBoundaries> profile;  // indexed pattern*4 + credits
  int gamma = kUnreachableCost;
  Count tau = 0;
};

PrismRun prism_tables(int n);
// Sum over boundary profiles of f_i (x) b_i; equals (gamma, tau) at every
// column 1..n.
CostCount prism_total_at(const PrismRun& run, int column);
CostCount prism_forced(int n, int column, Row row);

}  // namespace domval::strip_dp

#endif
