#include "domval/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "domval/formulas.hpp"
#include "domval/strip_dp.hpp"

namespace domval::verify {

namespace {

// Two-row structure recovered from a graph: which strip family it is and
// how many columns it has (ids follow the canonical x_i -> i, y_i -> n+i).
struct StripShape {
  Family family;  // ladder or prism
  int n;
};

bool edges_match(const Graph& g, const Graph& expected) {
  return g.num_vertices() == expected.num_vertices() &&
         g.edge_list() == expected.edge_list();
}

StripShape detect_strip(const Graph& g) {
  const int verts = g.num_vertices();
  if (verts >= 2 && verts % 2 == 0) {
    const int n = verts / 2;
    if (edges_match(g, make_ladder(n))) return {Family::ladder, n};
    if (n >= 3 && edges_match(g, make_prism(n))) return {Family::prism, n};
  }
  throw DomainError("graph is not a canonical two-row strip");
}

bool has_rung_pair(const Graph& g, const VertexSet& d) {
  const int n = detect_strip(g).n;
  for (int i = 1; i <= n; ++i)
    if (d.contains(i) && d.contains(n + i)) return true;
  return false;
}

bool has_adjacent_pair(const Graph& g, const VertexSet& d) {
  for (int u : d.members)
    for (int v : g.neighbors(u))
      if (v > u && d.contains(v)) return true;
  return false;
}

std::string count_mismatch(const char* field, Engine a, Count va, Engine b, Count vb) {
  std::ostringstream out;
  out << field << ": " << engine_name(a) << "=" << va << " vs " << engine_name(b)
      << "=" << vb;
  return out.str();
}

// Component sizes (ascending) of the selected columns of one side, under
// that side's own path or cycle adjacency.
std::vector<int> side_components(const std::vector<bool>& picked, bool cyclic) {
  const int n = static_cast<int>(picked.size());
  std::vector<int> sizes;
  int run = 0;
  for (int i = 0; i < n; ++i) {
    if (picked[static_cast<size_t>(i)]) {
      ++run;
    } else if (run > 0) {
      sizes.push_back(run);
      run = 0;
    }
  }
  if (run > 0) sizes.push_back(run);
  // On a cycle a run touching both ends is one component.
  if (cyclic && sizes.size() > 1 && picked.front() && picked.back()) {
    sizes.front() += sizes.back();
    sizes.pop_back();
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::formula: return "formula";
    case Engine::oracle: return "oracle";
    case Engine::dp: return "dp";
  }
  return "?";
}

Engine parse_engine(std::string_view s) {
  if (s == "formula") return Engine::formula;
  if (s == "oracle") return Engine::oracle;
  if (s == "dp") return Engine::dp;
  throw DomainError("unknown engine: " + std::string(s));
}

DominationReport report_for(Family family, int n, Engine engine,
                            std::optional<int> oracle_cap) {
  switch (engine) {
    case Engine::formula:
      return formulas::report_family({family, n});
    case Engine::oracle: {
      Graph g = [&] {
        switch (family) {
          case Family::path: return make_path(n);
          case Family::cycle: return make_cycle(n);
          case Family::ladder: return make_ladder(n);
          case Family::prism: return make_prism(n);
        }
        throw DomainError("unknown family");
      }();
      return oracle::domination_report(g, false, oracle_cap);
    }
    case Engine::dp:
      switch (family) {
        case Family::ladder: return strip_dp::dp_ladder(n);
        case Family::prism: return strip_dp::dp_prism(n);
        default:
          throw DomainError("dp engine covers ladder and prism only");
      }
  }
  throw DomainError("unknown engine");
}

namespace {

Verdict cross_check_one(Family family, int n, Engine a, Engine b,
                        std::optional<int> oracle_cap) {
  Verdict v{"cross-check", family_name(family), n, Verdict::Status::pass, ""};
  try {
    const DominationReport ra = report_for(family, n, a, oracle_cap);
    const DominationReport rb = report_for(family, n, b, oracle_cap);
    if (ra.gamma != rb.gamma) {
      v.status = Verdict::Status::fail;
      v.detail = count_mismatch("gamma", a, ra.gamma, b, rb.gamma);
    } else if (ra.tau != rb.tau) {
      v.status = Verdict::Status::fail;
      v.detail = count_mismatch("tau", a, ra.tau, b, rb.tau);
    } else {
      for (size_t i = 0; i < ra.dv.size(); ++i) {
        if (ra.dv[i] != rb.dv[i]) {
          v.status = Verdict::Status::fail;
          v.detail = count_mismatch(
              ("dv[" + std::to_string(i + 1) + "]").c_str(), a, ra.dv[i], b,
              rb.dv[i]);
          break;
        }
      }
    }
  } catch (const BudgetError& e) {
    v.status = Verdict::Status::skipped;
    v.detail = std::string("oracle budget: ") + e.what();
  }
  return v;
}

}  // namespace

std::vector<Verdict> cross_check(Family family, int min_n, int max_n, Engine a,
                                 Engine b, std::optional<int> oracle_cap) {
  if (min_n > max_n) return {};
  const int total = max_n - min_n + 1;
  std::vector<Verdict> verdicts(static_cast<size_t>(total));

  // Orders are independent; fan them out and assemble by index so the
  // result order never depends on scheduling.
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(total));
  std::atomic<int> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_guard;
  auto run = [&] {
    for (int idx; (idx = cursor.fetch_add(1)) < total;) {
      try {
        verdicts[static_cast<size_t>(idx)] =
            cross_check_one(family, min_n + idx, a, b, oracle_cap);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_guard);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return verdicts;
}

bool satisfies_predicate(const Graph& g, std::string_view predicate,
                         const VertexSet& d) {
  if (predicate == "no-adjacent-pair") return !has_adjacent_pair(g, d);
  if (predicate == "contains-rung-pair") return has_rung_pair(g, d);
  const int n = detect_strip(g).n;
  const int x1 = 1, y1 = n + 1;
  if (predicate == "corner-free") return !d.contains(x1) && !d.contains(y1);
  if (predicate == "has-x1") return d.contains(x1);
  if (predicate == "has-y1") return d.contains(y1);
  if (predicate == "contains-{x2,y2}") {
    if (n < 2) return false;
    return d.contains(2) && d.contains(n + 2);
  }
  throw DomainError("unknown predicate: " + std::string(predicate));
}

Count filtered_dv(const Graph& g, std::string_view predicate, int v,
                  std::optional<int> oracle_cap) {
  if (v < 1 || v > g.num_vertices()) throw DomainError("vertex id out of range");
  Count total = 0;
  for (const VertexSet& d : oracle::enumerate_gamma_sets(g, oracle_cap))
    if (d.contains(v) && satisfies_predicate(g, predicate, d))
      total = checked_add(total, 1);
  return total;
}

ComponentProfile component_profile(const Graph& g, const VertexSet& d) {
  const StripShape shape = detect_strip(g);
  const bool cyclic = shape.family == Family::prism;
  std::vector<bool> x_picked(static_cast<size_t>(shape.n), false);
  std::vector<bool> y_picked(static_cast<size_t>(shape.n), false);
  for (int m : d.members) {
    if (m < 1 || m > g.num_vertices()) throw DomainError("set member out of range");
    if (m <= shape.n)
      x_picked[static_cast<size_t>(m - 1)] = true;
    else
      y_picked[static_cast<size_t>(m - shape.n - 1)] = true;
  }
  return {side_components(x_picked, cyclic), side_components(y_picked, cyclic)};
}

std::vector<Verdict> check_structural_lemmas(Family family, int min_n, int max_n,
                                             std::optional<int> oracle_cap) {
  std::vector<Verdict> verdicts;
  auto emit = [&](const char* check, int n, bool ok, std::string detail) {
    verdicts.push_back({check, family_name(family), n,
                        ok ? Verdict::Status::pass : Verdict::Status::fail,
                        ok ? "" : std::move(detail)});
  };

  for (int n = min_n; n <= max_n; ++n) {
    try {
      if (family == Family::ladder) {
        const Graph g = make_ladder(n);
        const auto sets = oracle::enumerate_gamma_sets(g, oracle_cap);
        const int x1 = 1, y1 = n + 1, xn = n, yn = 2 * n;

        bool corner_ok = true;
        bool corner_free_found = false;
        for (const VertexSet& d : sets) {
          if (!d.contains(x1) && !d.contains(y1) &&
              !(d.contains(2) && d.contains(n + 2)))
            corner_ok = false;
          if (!d.contains(xn) && !d.contains(yn) &&
              !(d.contains(n - 1) && d.contains(2 * n - 1)))
            corner_ok = false;
          if (!d.contains(x1) && !d.contains(y1) && !d.contains(xn) &&
              !d.contains(yn))
            corner_free_found = true;
        }
        emit("corner-lemma", n, corner_ok,
             "a minimum set misses an end column without selecting the next rung pair");
        if (n >= 3) {
          const bool expected = n == 3 || n == 6;
          emit("corner-free-3-6", n, corner_free_found == expected,
               corner_free_found ? "unexpected corner-free minimum set"
                                 : "expected corner-free minimum set missing");
        }
      } else if (family == Family::prism && n % 4 == 2) {
        const Graph g = make_prism(n);
        const auto sets = oracle::enumerate_gamma_sets(g, oracle_cap);

        bool max_ok = true;
        bool lone_pair_ok = true;
        for (const VertexSet& d : sets) {
          const ComponentProfile profile = component_profile(g, d);
          int largest = 0, pairs = 0;
          for (int s : profile.side_x) {
            largest = std::max(largest, s);
            if (s == 2) ++pairs;
          }
          for (int s : profile.side_y) {
            largest = std::max(largest, s);
            if (s == 2) ++pairs;
          }
          if (largest >= 4) max_ok = false;
          if (largest == 2 && pairs == 1) lone_pair_ok = false;
        }
        emit("component-max-3", n, max_ok, "a side component has 4+ vertices");
        emit("no-lone-pair", n, lone_pair_ok,
             "a minimum set has exactly one adjacent pair and nothing larger");
      }
    } catch (const BudgetError& e) {
      verdicts.push_back({"structural", family_name(family), n,
                          Verdict::Status::skipped,
                          std::string("oracle budget: ") + e.what()});
    }
  }
  return verdicts;
}

Verdict check_observations(const DominationReport& r, std::string_view family,
                           int n) {
  Verdict v{"observation-identity", std::string(family),
            n > 0 ? n : static_cast<int>(r.dv.size()), Verdict::Status::pass, ""};
  Count sum = 0;
  for (Count dv : r.dv) {
    if (dv > r.tau) {
      v.status = Verdict::Status::fail;
      std::ostringstream out;
      out << "dv value " << dv << " exceeds tau " << r.tau;
      v.detail = out.str();
      return v;
    }
    sum = checked_add(sum, dv);
  }
  const Count expected = checked_mul(r.tau, r.gamma);
  if (sum != expected) {
    v.status = Verdict::Status::fail;
    std::ostringstream out;
    out << "sum(dv)=" << sum << " vs tau*gamma=" << expected;
    v.detail = out.str();
  }
  return v;
}

}  // namespace domval::verify
