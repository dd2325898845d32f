#include "domval/strip_dp.hpp"

namespace domval::strip_dp {

namespace {

constexpr int kSelected = 0;
constexpr int kCovered = 1;
constexpr int kOpen = 2;

constexpr int status_of(int state, int row) {
  return row == 0 ? state / 3 : state % 3;
}

constexpr int make_state(int sx, int sy) { return sx * 3 + sy; }

constexpr bool selects(int pattern, int row) { return (pattern >> row) & 1; }

constexpr bool legal_impl(int state, int pattern) {
  for (int r = 0; r < 2; ++r)
    if (status_of(state, r) == kOpen && !selects(pattern, r)) return false;
  return true;
}

constexpr int transition_impl(int state, int pattern) {
  int status[2];
  for (int r = 0; r < 2; ++r) {
    if (selects(pattern, r))
      status[r] = kSelected;
    else if (selects(pattern, 1 - r))  // rung partner
      status[r] = kCovered;
    else if (status_of(state, r) == kSelected)  // previous column, same row
      status[r] = kCovered;
    else
      status[r] = kOpen;
  }
  return make_state(status[0], status[1]);
}

constexpr bool no_open(int state) {
  return status_of(state, 0) != kOpen && status_of(state, 1) != kOpen;
}

constexpr int kVirtualState = make_state(kCovered, kCovered);

// The 9x4 machine is small enough to tabulate once; the sweeps below touch
// it billions of times at scale.
struct Machine {
  std::array<std::array<std::uint8_t, kNumPatterns>, kNumStates> next{};
  std::array<std::array<bool, kNumPatterns>, kNumStates> legal{};
  std::array<std::uint8_t, kNumPatterns> cost{};
};

constexpr Machine build_machine() {
  Machine m;
  for (int s = 0; s < kNumStates; ++s)
    for (int p = 0; p < kNumPatterns; ++p) {
      m.next[s][p] = static_cast<std::uint8_t>(transition_impl(s, p));
      m.legal[s][p] = legal_impl(s, p);
    }
  for (int p = 0; p < kNumPatterns; ++p)
    m.cost[p] = static_cast<std::uint8_t>(((p >> 1) & 1) + (p & 1));
  return m;
}

constexpr Machine kMachine = build_machine();

// forced_column == 0 means unconstrained; otherwise the pattern at that
// column must select forced_row.
bool pattern_allowed(int column, int pattern, int forced_column, int forced_row) {
  return column != forced_column || selects(pattern, forced_row);
}

void forward_sweep(std::vector<StateRow>& fwd, int first_column, int n,
                   int forced_column, int forced_row) {
  for (int i = first_column; i <= n; ++i) {
    const StateRow& prev = fwd[static_cast<size_t>(i - 1)];
    StateRow& cur = fwd[static_cast<size_t>(i)];
    for (int s = 0; s < kNumStates; ++s) {
      const CostCount& from = prev[static_cast<size_t>(s)];
      if (!from.reachable()) continue;
      for (int p = 0; p < kNumPatterns; ++p) {
        if (!kMachine.legal[s][p]) continue;
        if (i == forced_column && !selects(p, forced_row)) continue;
        merge(cur[kMachine.next[s][p]], from.best + kMachine.cost[p], from.ways);
      }
    }
  }
}

// Backward recurrence, optionally fused with the per-column DV combination:
// while b[i] is built from b[i+1], the triples (f_i(s), pattern p, b_{i+1})
// are exactly the minimum-set decompositions at column i+1, so the ways
// selecting each row can be tallied in the same walk.
struct DvAccumulator {
  const std::vector<StateRow>* forward = nullptr;
  int gamma = 0;
  Count* dvx = nullptr;  // indexed by column 1..n
  Count* dvy = nullptr;
};

void backward_sweep(std::vector<StateRow>& bwd, int last_column,
                    const DvAccumulator* dv) {
  const int n = static_cast<int>(bwd.size()) - 1;
  for (int i = n - 1; i >= last_column; --i) {
    const StateRow& next = bwd[static_cast<size_t>(i + 1)];
    StateRow& cur = bwd[static_cast<size_t>(i)];
    const StateRow* fwd_row =
        dv ? &(*dv->forward)[static_cast<size_t>(i)] : nullptr;
    for (int s = 0; s < kNumStates; ++s) {
      for (int p = 0; p < kNumPatterns; ++p) {
        if (!kMachine.legal[s][p]) continue;
        const CostCount& tail = next[kMachine.next[s][p]];
        if (!tail.reachable()) continue;
        const int step = tail.best + kMachine.cost[p];
        merge(cur[static_cast<size_t>(s)], step, tail.ways);
        if (fwd_row) {
          const CostCount& head = (*fwd_row)[static_cast<size_t>(s)];
          if (head.reachable() && head.best + step == dv->gamma) {
            const Count ways = checked_mul(head.ways, tail.ways);
            if (selects(p, 0)) dv->dvx[i + 1] = checked_add(dv->dvx[i + 1], ways);
            if (selects(p, 1)) dv->dvy[i + 1] = checked_add(dv->dvy[i + 1], ways);
          }
        }
      }
    }
  }
}

CostCount combine_states(const StateRow& f, const StateRow& b) {
  CostCount total;
  for (int s = 0; s < kNumStates; ++s) {
    const CostCount& left = f[static_cast<size_t>(s)];
    const CostCount& right = b[static_cast<size_t>(s)];
    if (left.reachable() && right.reachable())
      merge(total, left.best + right.best, checked_mul(left.ways, right.ways));
  }
  return total;
}

void seed_ladder_acceptance(StateRow& row) {
  for (int s = 0; s < kNumStates; ++s)
    if (no_open(s)) row[static_cast<size_t>(s)] = {0, 1};
}

Tables ladder_tables_impl(int n, int forced_column, int forced_row) {
  if (n < 1) throw DomainError("strip length must be >= 1");
  Tables t;
  t.n = n;
  t.forward.assign(static_cast<size_t>(n) + 1, StateRow{});
  t.forward[0][kVirtualState] = {0, 1};
  forward_sweep(t.forward, 1, n, forced_column, forced_row);
  t.backward.assign(static_cast<size_t>(n) + 1, StateRow{});
  seed_ladder_acceptance(t.backward[static_cast<size_t>(n)]);
  backward_sweep(t.backward, 0, nullptr);
  return t;
}

void seed_prism_forward(std::vector<StateRow>& fwd, PrismBoundary b,
                        int forced_column, int forced_row) {
  std::fill(fwd.begin(), fwd.end(), StateRow{});
  if (pattern_allowed(1, b.pattern, forced_column, forced_row))
    fwd[1][static_cast<size_t>(boundary_initial_state(b))] = {
        kMachine.cost[b.pattern], 1};
}

void seed_prism_acceptance(StateRow& row, PrismBoundary b) {
  for (int s = 0; s < kNumStates; ++s)
    if (boundary_accepts(b, s)) row[static_cast<size_t>(s)] = {0, 1};
}

Tables prism_profile_tables(int n, PrismBoundary b, int forced_column,
                            int forced_row) {
  Tables t;
  t.n = n;
  t.forward.resize(static_cast<size_t>(n) + 1);
  seed_prism_forward(t.forward, b, forced_column, forced_row);
  forward_sweep(t.forward, 2, n, forced_column, forced_row);
  t.backward.assign(static_cast<size_t>(n) + 1, StateRow{});
  seed_prism_acceptance(t.backward[static_cast<size_t>(n)], b);
  backward_sweep(t.backward, 1, nullptr);
  return t;
}

PrismRun prism_tables_impl(int n, int forced_column, int forced_row) {
  if (n < 3) throw DomainError("circular strip length must be >= 3");
  PrismRun run;
  run.n = n;
  CostCount total;
  for (int pattern = 0; pattern < kNumPatterns; ++pattern) {
    for (int credits = 0; credits < kNumPatterns; ++credits) {
      Tables& t = run.profile[static_cast<size_t>(pattern * 4 + credits)];
      t = prism_profile_tables(n, {pattern, credits}, forced_column, forced_row);
      const CostCount closed = combine_states(t.forward[static_cast<size_t>(n)],
                                              t.backward[static_cast<size_t>(n)]);
      if (closed.reachable()) merge(total, closed.best, closed.ways);
    }
  }
  run.gamma = total.best;
  run.tau = total.ways;
  return run;
}

}  // namespace

int state_index(CellStatus x, CellStatus y) {
  return make_state(static_cast<int>(x), static_cast<int>(y));
}

CellStatus state_row(int state, Row r) {
  return static_cast<CellStatus>(status_of(state, static_cast<int>(r)));
}

bool pattern_legal(int state, int pattern) { return legal_impl(state, pattern); }

int next_state(int state, int pattern) { return transition_impl(state, pattern); }

void merge(CostCount& into, int cost, Count ways) {
  if (cost < into.best) {
    into.best = cost;
    into.ways = ways;
  } else if (cost == into.best) {
    into.ways = checked_add(into.ways, ways);
  }
}

Tables ladder_tables(int n) { return ladder_tables_impl(n, 0, 0); }

CostCount ladder_total_at(const Tables& t, int column) {
  if (column < 0 || column > t.n) throw DomainError("column out of range");
  return combine_states(t.forward[static_cast<size_t>(column)],
                        t.backward[static_cast<size_t>(column)]);
}

CostCount ladder_forced(int n, int column, Row row) {
  if (column < 1 || column > n) throw DomainError("column out of range");
  Tables t = ladder_tables_impl(n, column, static_cast<int>(row));
  return combine_states(t.forward[static_cast<size_t>(n)],
                        t.backward[static_cast<size_t>(n)]);
}

DominationReport dp_ladder(int n) {
  if (n < 1) throw DomainError("strip length must be >= 1");
  std::vector<StateRow> fwd(static_cast<size_t>(n) + 1);
  fwd[0][kVirtualState] = {0, 1};
  forward_sweep(fwd, 1, n, 0, 0);

  std::vector<StateRow> bwd(static_cast<size_t>(n) + 1);
  seed_ladder_acceptance(bwd[static_cast<size_t>(n)]);
  const CostCount total = combine_states(fwd[static_cast<size_t>(n)],
                                         bwd[static_cast<size_t>(n)]);

  std::vector<Count> dvx(static_cast<size_t>(n) + 1, 0);
  std::vector<Count> dvy(static_cast<size_t>(n) + 1, 0);
  DvAccumulator acc{&fwd, total.best, dvx.data(), dvy.data()};
  backward_sweep(bwd, 0, &acc);

  DominationReport report;
  report.gamma = static_cast<Count>(total.best);
  report.tau = total.ways;
  report.dv.assign(static_cast<size_t>(2 * n), 0);
  for (int i = 1; i <= n; ++i) {
    report.dv[static_cast<size_t>(i - 1)] = dvx[static_cast<size_t>(i)];
    report.dv[static_cast<size_t>(n + i - 1)] = dvy[static_cast<size_t>(i)];
  }
  return report;
}

int boundary_initial_state(PrismBoundary b) {
  int status[2];
  for (int r = 0; r < 2; ++r) {
    if (selects(b.pattern, r))
      status[r] = kSelected;
    else if (selects(b.pattern, 1 - r))
      status[r] = kCovered;
    else if (selects(b.credits, r))  // pre-covered by column n, same row
      status[r] = kCovered;
    else
      status[r] = kOpen;
  }
  return make_state(status[0], status[1]);
}

bool boundary_accepts(PrismBoundary b, int final_state) {
  for (int r = 0; r < 2; ++r) {
    const int status = status_of(final_state, r);
    // A still-open row of column n must be covered by the wrap edge.
    if (status == kOpen && !selects(b.pattern, r)) return false;
    // Credits must be justified exactly, or wrap coverage double-counts.
    if (selects(b.credits, r) != (status == kSelected)) return false;
  }
  return true;
}

PrismRun prism_tables(int n) { return prism_tables_impl(n, 0, 0); }

CostCount prism_total_at(const PrismRun& run, int column) {
  if (column < 1 || column > run.n) throw DomainError("column out of range");
  CostCount total;
  for (const Tables& t : run.profile) {
    const CostCount part = combine_states(t.forward[static_cast<size_t>(column)],
                                          t.backward[static_cast<size_t>(column)]);
    if (part.reachable()) merge(total, part.best, part.ways);
  }
  return total;
}

CostCount prism_forced(int n, int column, Row row) {
  if (column < 1 || column > n) throw DomainError("column out of range");
  const PrismRun run = prism_tables_impl(n, column, static_cast<int>(row));
  CostCount total;
  if (run.gamma != kUnreachableCost) merge(total, run.gamma, run.tau);
  return total;
}

DominationReport dp_prism(int n) {
  if (n < 3) throw DomainError("circular strip length must be >= 3");

  // Phase 1: forward tables for all boundary profiles; the acceptance rows
  // alone fix the global optimum.
  std::array<std::vector<StateRow>, kNumBoundaries> forwards;
  std::array<StateRow, kNumBoundaries> acceptance{};
  std::array<CostCount, kNumBoundaries> closed{};
  CostCount total;
  for (int pattern = 0; pattern < kNumPatterns; ++pattern) {
    for (int credits = 0; credits < kNumPatterns; ++credits) {
      const PrismBoundary b{pattern, credits};
      const size_t slot = static_cast<size_t>(pattern * 4 + credits);
      forwards[slot].resize(static_cast<size_t>(n) + 1);
      seed_prism_forward(forwards[slot], b, 0, 0);
      forward_sweep(forwards[slot], 2, n, 0, 0);
      seed_prism_acceptance(acceptance[slot], b);
      closed[slot] = combine_states(forwards[slot][static_cast<size_t>(n)],
                                    acceptance[slot]);
      if (closed[slot].reachable())
        merge(total, closed[slot].best, closed[slot].ways);
    }
  }

  DominationReport report;
  report.gamma = static_cast<Count>(total.best);
  report.tau = total.ways;
  report.dv.assign(static_cast<size_t>(2 * n), 0);

  // Phase 2: one backward sweep per profile, fused with the DV combination
  // for columns 2..n; column 1 is fixed by the profile's own pattern.
  // Profiles closing above the global optimum hold no minimum set at all,
  // so they add nothing to any DV and are skipped outright.
  std::vector<Count> dvx(static_cast<size_t>(n) + 1, 0);
  std::vector<Count> dvy(static_cast<size_t>(n) + 1, 0);
  std::vector<StateRow> bwd(static_cast<size_t>(n) + 1);
  for (int pattern = 0; pattern < kNumPatterns; ++pattern) {
    for (int credits = 0; credits < kNumPatterns; ++credits) {
      const size_t slot = static_cast<size_t>(pattern * 4 + credits);
      if (!closed[slot].reachable() || closed[slot].best != total.best) continue;
      std::fill(bwd.begin(), bwd.end(), StateRow{});
      bwd[static_cast<size_t>(n)] = acceptance[slot];

      if (selects(pattern, 0)) dvx[1] = checked_add(dvx[1], closed[slot].ways);
      if (selects(pattern, 1)) dvy[1] = checked_add(dvy[1], closed[slot].ways);

      DvAccumulator acc{&forwards[slot], total.best, dvx.data(), dvy.data()};
      backward_sweep(bwd, 1, &acc);
    }
  }
  for (int i = 1; i <= n; ++i) {
    report.dv[static_cast<size_t>(i - 1)] = dvx[static_cast<size_t>(i)];
    report.dv[static_cast<size_t>(n + i - 1)] = dvy[static_cast<size_t>(i)];
  }
  return report;
}

}  // namespace domval::strip_dp
