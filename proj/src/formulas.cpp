#include "domval/formulas.hpp"

#include <cassert>

namespace domval::formulas {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw DomainError(msg);
}

Count as_count(long long v) {
  assert(v >= 0);
  return static_cast<Count>(v);
}

}  // namespace

Count gamma_path_cycle(int n) {
  require(n >= 1, "gamma(P_n)/gamma(C_n) needs n >= 1");
  return as_count((n + 2) / 3);
}

Count tau_path(int n) {
  require(n >= 2, "tau(P_n) is stated for n >= 2");
  const Count k = as_count(n / 3);
  switch (n % 3) {
    case 0: return 1;
    case 1: return checked_add(as_count(n), half_of_even(checked_mul(k, k - 1)));
    default: return checked_add(2, k);
  }
}

Count dv_path(int n, int v) {
  require(n >= 2, "DV(P_n) is stated for n >= 2");
  require(v >= 1 && v <= n, "vertex index out of range");
  const long long k = n / 3;
  const long long q = v / 3;
  switch (n % 3) {
    case 0:
      return v % 3 == 2 ? 1 : 0;
    case 1:
      if (v % 3 == 0) return half_of_even(checked_mul(as_count(q), as_count(q + 3)));
      if (v % 3 == 1) return checked_mul(as_count(q + 1), as_count(k - q + 1));
      return half_of_even(checked_mul(as_count(k - q), as_count(k - q + 3)));
    default:
      if (v % 3 == 0) return 0;
      if (v % 3 == 1) return as_count(1 + q);
      return as_count(k + 1 - q);
  }
}

Count tau_cycle(int n) {
  require(n >= 3, "tau(C_n) needs n >= 3");
  const Count k = as_count(n / 3);
  switch (n % 3) {
    case 0: return 3;
    case 1: return half_of_even(checked_mul(as_count(n), k + 2));  // n(1 + k/2)
    default: return as_count(n);
  }
}

Count dv_cycle(int n) {
  require(n >= 3, "DV(C_n) needs n >= 3");
  const Count c = gamma_path_cycle(n);  // ceil(n/3)
  switch (n % 3) {
    case 0: return 1;
    case 1: return half_of_even(checked_mul(c, c + 1));
    default: return c;
  }
}

Count gamma_ladder(int n) {
  require(n >= 2, "gamma of the 2xn strip needs n >= 2");
  return as_count((n + 2) / 2);  // ceil((n+1)/2)
}

Count tau_ladder(int n) {
  require(n >= 2, "tau of the 2xn strip needs n >= 2");
  if (n == 2) return 6;
  if (n == 3) return 3;
  if (n == 6) return 17;
  if (n % 2 == 1) return 2;
  return as_count(2LL * n + 4);
}

Count dv_ladder_even_regular(int n, int i) {
  require(n >= 4 && n % 2 == 0, "regular even case needs even n >= 4");
  require(i >= 1 && i <= n, "column index out of range");
  if (i % 2 == 1) return i <= n - 3 ? as_count(n + 2 - i) : 4;  // i = n-1 otherwise
  if (i == 2) return 4;
  return as_count(i + 1);
}

Count dv_ladder(int n, int i) {
  require(n >= 2, "DV of the 2xn strip needs n >= 2");
  require(i >= 1 && i <= n, "column index out of range");
  if (n == 2) return 3;
  if (n == 3) return 1;
  if (n % 2 == 1) return i % 2 == 1 ? 1 : 0;
  if (n == 6) return (i == 1 || i == 6) ? 7 : 5;
  return dv_ladder_even_regular(n, i);
}

Count gamma_prism(int n) {
  require(n >= 3, "gamma of the circular strip needs n >= 3");
  if (n % 4 == 0) return as_count(n / 2);
  return as_count((n + 2) / 2);  // ceil((n+1)/2)
}

Count dv_prism(int n) {
  require(n >= 3, "DV of the circular strip needs n >= 3");
  if (n == 3) return 3;
  if (n == 6) return 17;
  switch (n % 4) {
    case 0: return 1;
    case 2: {
      const Count half = as_count((n + 2) / 2);  // ceil((n+1)/2), n even
      return checked_mul(half, half);
    }
    default: return as_count((n + 1) / 2);  // n odd
  }
}

Count tau_prism(int n) {
  require(n >= 3, "tau of the circular strip needs n >= 3");
  if (n == 3) return 9;
  if (n == 6) return 51;
  switch (n % 4) {
    case 0: return 4;
    case 2: return checked_mul(as_count(n), as_count(n + 2));
    default: return as_count(2LL * n);
  }
}

Count gamma_of(FamilyId id) {
  switch (id.family) {
    case Family::path: return gamma_path_cycle(id.n);
    case Family::cycle:
      require(id.n >= 3, "cycle order must be >= 3");
      return gamma_path_cycle(id.n);
    case Family::ladder: return gamma_ladder(id.n);
    case Family::prism: return gamma_prism(id.n);
  }
  throw DomainError("unknown family");
}

Count tau_of(FamilyId id) {
  switch (id.family) {
    case Family::path: return tau_path(id.n);
    case Family::cycle: return tau_cycle(id.n);
    case Family::ladder: return tau_ladder(id.n);
    case Family::prism: return tau_prism(id.n);
  }
  throw DomainError("unknown family");
}

std::vector<Count> dv_vector(FamilyId id) {
  const int n = id.n;
  std::vector<Count> dv;
  switch (id.family) {
    case Family::path:
      dv.reserve(static_cast<size_t>(n));
      for (int v = 1; v <= n; ++v) dv.push_back(dv_path(n, v));
      break;
    case Family::cycle:
      dv.assign(static_cast<size_t>(n), dv_cycle(n));
      break;
    case Family::ladder:
      // shared row value replicated to both rows
      dv.assign(static_cast<size_t>(2 * n), 0);
      for (int i = 1; i <= n; ++i) {
        const Count value = dv_ladder(n, i);
        dv[static_cast<size_t>(i - 1)] = value;
        dv[static_cast<size_t>(n + i - 1)] = value;
      }
      break;
    case Family::prism:
      dv.assign(static_cast<size_t>(2 * n), dv_prism(n));
      break;
  }
  return dv;
}

DominationReport report_family(FamilyId id) {
  if (id.family == Family::path)
    require(id.n >= 2, "path report needs n >= 2");
  DominationReport report;
  report.gamma = gamma_of(id);
  report.tau = tau_of(id);
  report.dv = dv_vector(id);
  return report;
}

}  // namespace domval::formulas
