#include "gmpd/factor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gmpd {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Classic O(n^3) potentials formulation, 1-based internally.
std::optional<AssignmentResult> hungarian(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return AssignmentResult{0, {}};
  long long big = 1;
  for (const auto& row : a)
    for (long long x : row)
      if (x != kForbidden) big += std::max<long long>(x, 0);
  big *= (n + 1);
  auto cost = [&](int i, int j) { return a[i][j] == kForbidden ? big : a[i][j]; };

  std::vector<long long> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long long> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = p[j0], j1 = 0;
      long long delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        long long cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  AssignmentResult r;
  r.column_of.assign(n, -1);
  for (int j = 1; j <= n; ++j) r.column_of[p[j] - 1] = j - 1;
  for (int i = 0; i < n; ++i) {
    if (a[i][r.column_of[i]] == kForbidden) return std::nullopt;
    r.cost += a[i][r.column_of[i]];
  }
  return r;
}

}  // namespace

std::optional<AssignmentResult> solve_assignment(const std::vector<std::vector<long long>>& cost) {
  return hungarian(cost);
}

std::optional<AssignmentResult> solve_assignment_lex(const std::vector<std::vector<long long>>& cost) {
  auto best = hungarian(cost);
  if (!best) return std::nullopt;
  const int n = static_cast<int>(cost.size());
  long long remaining = best->cost;
  std::vector<bool> col_used(n, false);
  AssignmentResult out{best->cost, std::vector<int>(n, -1)};
  for (int r = 0; r < n; ++r) {
    bool fixed = false;
    for (int c = 0; c < n && !fixed; ++c) {
      if (col_used[c] || cost[r][c] == kForbidden) continue;
      // Optimum of the rows below r over the columns still free.
      std::vector<int> cols;
      for (int k = 0; k < n; ++k)
        if (!col_used[k] && k != c) cols.push_back(k);
      std::vector<std::vector<long long>> sub;
      for (int rr = r + 1; rr < n; ++rr) {
        std::vector<long long> row;
        for (int k : cols) row.push_back(cost[rr][k]);
        sub.push_back(std::move(row));
      }
      auto rest = hungarian(sub);
      if (rest && cost[r][c] + rest->cost == remaining) {
        out.column_of[r] = c;
        col_used[c] = true;
        remaining -= cost[r][c];
        fixed = true;
      }
    }
    if (!fixed) throw std::logic_error("solve_assignment_lex: lost optimality");
  }
  return out;
}

std::vector<std::vector<long long>> completion_costs(const PartitionedDigraph& d, bool dummy) {
  const int n = d.order();
  const int size = dummy ? n + 1 : n;
  std::vector<std::vector<long long>> cost(size, std::vector<long long>(size, kForbidden));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (d.has_arc(u, v)) {
        cost[u][v] = 0;
      } else if (d.same_part(u, v)) {
        cost[u][v] = 1;
      }
    }
  if (dummy)
    for (Vertex v = 0; v < n; ++v) cost[n][v] = cost[v][n] = 0;
  return cost;
}

std::vector<std::vector<Vertex>> permutation_cycles(const std::vector<int>& succ, int count) {
  std::vector<bool> seen(count, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < count; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> cyc;
    for (Vertex v = s; v < count && !seen[v]; v = succ[v]) {
      seen[v] = true;
      cyc.push_back(v);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

GFactor make_factor(const PartitionedDigraph& d, std::vector<GWalk> cycles) {
  GFactor f;
  for (auto& c : cycles) {
    f.arc_count += walk_length(d, c);
    f.cycles.push_back(canonical(c));
  }
  std::sort(f.cycles.begin(), f.cycles.end(),
            [](const GWalk& a, const GWalk& b) { return a.seq.front() < b.seq.front(); });
  return f;
}

GFactor max_arc_gcycle_factor(const PartitionedDigraph& d) {
  require_smd(d, "max_arc_gcycle_factor");
  const int n = d.order();
  if (n < 2) throw Error(ErrorCode::Degenerate, "a G-cycle factor needs at least 2 vertices");
  auto res = solve_assignment_lex(completion_costs(d, false));
  if (!res) throw Error(ErrorCode::NoFactor, "D has no G-cycle factor");
  std::vector<GWalk> cycles;
  for (auto& cyc : permutation_cycles(res->column_of, n)) cycles.push_back(GWalk::cycle(cyc));
  GFactor f = make_factor(d, std::move(cycles));
  if (f.arc_count != n - res->cost) throw std::logic_error("factor decoding mismatch");
  return f;
}

int c_f(const PartitionedDigraph& d) { return max_arc_gcycle_factor(d).arc_count; }

PathCycleSubdigraph max_arc_path_cycle_subdigraph(const PartitionedDigraph& d) {
  require_smd(d, "max_arc_path_cycle_subdigraph");
  const int n = d.order();
  if (n < 1) throw Error(ErrorCode::Degenerate, "empty digraph");
  auto res = solve_assignment_lex(completion_costs(d, true));
  if (!res) throw std::logic_error("path-cycle assignment infeasible");
  const auto& succ = res->column_of;
  PathCycleSubdigraph out;
  std::vector<Vertex> path;
  for (Vertex v = succ[n]; v != n; v = succ[v]) path.push_back(v);
  out.path = GWalk::path(path);
  std::vector<bool> on_path(n, false);
  for (Vertex v : path) on_path[v] = true;
  std::vector<int> rest(succ.begin(), succ.begin() + n);
  for (auto& cyc : permutation_cycles(rest, n))
    if (!on_path[cyc.front()]) out.cycles.push_back(GWalk::cycle(cyc));
  out.total_arcs = walk_length(d, out.path);
  for (const auto& c : out.cycles) out.total_arcs += walk_length(d, c);
  // n+1 pairs, two of them at the dummy; every other pair costs 1 iff JUMP.
  if (out.total_arcs != n - 1 - res->cost)
    throw std::logic_error("path-cycle decoding mismatch");
  return out;
}

}  // namespace gmpd
