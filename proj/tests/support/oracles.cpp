#include "oracles.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace oracle {

namespace {

constexpr int kNeg = INT_MIN / 4;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// best[mask][v]: max value of a sequence over exactly `mask` ending at v,
// started from the vertices allowed by `starts`.
std::vector<std::vector<int>> held_karp(int n, std::uint64_t starts, const std::function<int(int, int)>& value) {
  std::vector<std::vector<int>> best(std::size_t{1} << n, std::vector<int>(n, kNeg));
  for (int v = 0; v < n; ++v)
    if (starts & bit(v)) best[bit(v)][v] = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
    for (int v = 0; v < n; ++v) {
      const int cur = best[mask][v];
      if (cur == kNeg) continue;
      for (int w = 0; w < n; ++w) {
        if (mask & bit(w)) continue;
        const int add = value(v, w);
        if (add < 0) continue;
        int& slot = best[mask | bit(w)][w];
        slot = std::max(slot, cur + add);
      }
    }
  return best;
}

}  // namespace

int pair_value(const PartitionedDigraph& d, Vertex a, Vertex b) {
  if (a == b) return -1;
  if (d.has_arc(a, b)) return 1;
  if (d.part_of(a) == d.part_of(b)) return 0;
  return -1;
}

std::optional<int> longest_spanning_gcycle(const PartitionedDigraph& d) {
  const int n = d.order();
  if (n < 2) return std::nullopt;
  auto best = held_karp(n, 1, [&](int a, int b) { return pair_value(d, a, b); });
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  int out = kNeg;
  for (int v = 1; v < n; ++v) {
    if (best[full][v] == kNeg) continue;
    const int close = pair_value(d, v, 0);
    if (close >= 0) out = std::max(out, best[full][v] + close);
  }
  if (out == kNeg) return std::nullopt;
  return out;
}

int longest_gpath(const PartitionedDigraph& d) {
  const int n = d.order();
  auto best = held_karp(n, (std::uint64_t{1} << n) - 1, [&](int a, int b) { return pair_value(d, a, b); });
  int out = 0;
  for (const auto& row : best)
    for (int x : row) out = std::max(out, x);
  return out;
}

std::optional<int> longest_xy_gpath(const PartitionedDigraph& d, Vertex x, Vertex y) {
  const int n = d.order();
  auto best = held_karp(n, bit(x), [&](int a, int b) { return pair_value(d, a, b); });
  const int v = best[(std::uint64_t{1} << n) - 1][y];
  if (v == kNeg) return std::nullopt;
  return v;
}

std::optional<int> max_factor_arcs(const PartitionedDigraph& d) {
  // Row-by-row assignment over bit masks of used successors.
  const int n = d.order();
  std::vector<int> dp(std::size_t{1} << n, kNeg);
  dp[0] = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (dp[mask] == kNeg) continue;
    const int row = __builtin_popcountll(mask);
    if (row == n) continue;
    for (int col = 0; col < n; ++col) {
      if (mask & bit(col)) continue;
      const int val = pair_value(d, row, col);
      if (val < 0) continue;
      dp[mask | bit(col)] = std::max(dp[mask | bit(col)], dp[mask] + val);
    }
  }
  const int out = dp[(std::uint64_t{1} << n) - 1];
  if (out == kNeg) return std::nullopt;
  return out;
}

bool has_ham_cycle(const PartitionedDigraph& d) {
  const int n = d.order();
  if (n < 2) return false;
  auto best = held_karp(n, 1, [&](int a, int b) { return d.has_arc(a, b) ? 0 : -1; });
  for (int v = 1; v < n; ++v)
    if (best[(std::uint64_t{1} << n) - 1][v] == 0 && d.has_arc(v, 0)) return true;
  return false;
}

bool has_real_good_cycle_of_length(const PartitionedDigraph& d, int len) {
  const int n = d.order();
  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  std::function<bool(Vertex)> grow = [&](Vertex v) {
    if (static_cast<int>(path.size()) == len) {
      if (!d.has_arc(v, path.front())) return false;
      std::vector<bool> met(d.part_count(), false);
      for (Vertex w : path) met[d.part_of(w)] = true;
      return std::all_of(met.begin(), met.end(), [](bool b) { return b; });
    }
    for (Vertex w = path.front() + 1; w < n; ++w) {
      if (used[w] || !d.has_arc(v, w)) continue;
      used[w] = true;
      path.push_back(w);
      if (grow(w)) return true;
      path.pop_back();
      used[w] = false;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    if (grow(s)) return true;
  }
  return false;
}

bool strongly_connected(const PartitionedDigraph& d, std::uint64_t removed) {
  const int n = d.order();
  int root = -1;
  for (int v = 0; v < n && root < 0; ++v)
    if (!(removed & bit(v))) root = v;
  if (root < 0) return true;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (seen[w] || (removed & bit(w))) continue;
        if (dir == 0 ? d.has_arc(v, w) : d.has_arc(w, v)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (!(removed & bit(v)) && !seen[v]) return false;
  }
  return true;
}

bool k_strong(const PartitionedDigraph& d, int k) {
  const int n = d.order();
  if (n < k + 1) return false;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (__builtin_popcountll(s) < k && !strongly_connected(d, s)) return false;
  return true;
}

int max_min_jumps(const PartitionedDigraph& d) {
  const int n = d.order();
  const int inf = INT_MAX / 4;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
  for (int a = 0; a < n; ++a) {
    dist[a][a] = 0;
    for (int b = 0; b < n; ++b) {
      const int v = pair_value(d, a, b);
      if (v >= 0) dist[a][b] = v == 1 ? 0 : 1;
    }
  }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) dist[a][b] = std::min(dist[a][b], dist[a][k] + dist[k][b]);
  int out = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && dist[a][b] < inf) out = std::max(out, dist[a][b]);
  return out;
}

bool satisfiable(const gmpd::CNF3& f) {
  // DPLL with unit propagation; value 0 unset, 1 true, -1 false.
  std::vector<int> val(f.num_vars + 1, 0);
  std::function<bool()> solve = [&]() -> bool {
    std::vector<int> trail;
    auto undo = [&] {
      for (int v : trail) val[v] = 0;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& cl : f.clauses) {
        std::vector<int> open;  // distinct unset literals
        bool sat = false;
        for (const auto& lit : cl) {
          const int v = val[lit.var];
          const int signed_lit = lit.negated ? -lit.var : lit.var;
          if (v == 0) {
            if (std::find(open.begin(), open.end(), signed_lit) == open.end()) open.push_back(signed_lit);
          } else if ((v == 1) != lit.negated) {
            sat = true;
          }
        }
        if (sat) continue;
        if (open.empty()) {
          undo();
          return false;
        }
        if (open.size() == 1) {
          val[std::abs(open[0])] = open[0] > 0 ? 1 : -1;
          trail.push_back(std::abs(open[0]));
          changed = true;
        }
      }
    }
    int pick = 0;
    for (int v = 1; v <= f.num_vars && !pick; ++v)
      if (val[v] == 0) pick = v;
    if (!pick) return true;
    for (int choice : {1, -1}) {
      val[pick] = choice;
      if (solve()) return true;
    }
    val[pick] = 0;
    undo();
    return false;
  };
  return solve();
}

namespace {

std::vector<std::vector<int>> weights_of(const gmpd::ZotspInstance& inst) {
  std::vector<std::vector<int>> w(inst.n, std::vector<int>(inst.n, -1));
  for (std::size_t i = 0; i < inst.arcs.size(); ++i) w[inst.arcs[i].first][inst.arcs[i].second] = inst.weights[i];
  return w;
}

}  // namespace

std::optional<int> tsp_tour(const gmpd::ZotspInstance& inst) {
  const int n = inst.n;
  if (n < 2) return std::nullopt;
  const auto w = weights_of(inst);
  // Maximise the negated cost.
  auto best = held_karp(n, 1, [&](int a, int b) { return w[a][b] < 0 ? -1 : 1 - w[a][b]; });
  int out = kNeg;
  for (int v = 1; v < n; ++v) {
    const int b = best[(std::uint64_t{1} << n) - 1][v];
    if (b != kNeg && w[v][0] >= 0) out = std::max(out, b + 1 - w[v][0]);
  }
  if (out == kNeg) return std::nullopt;
  return n - out;
}

int tsp_path(const gmpd::ZotspInstance& inst) {
  const int n = inst.n;
  const auto w = weights_of(inst);
  auto best = held_karp(n, (std::uint64_t{1} << n) - 1, [&](int a, int b) { return w[a][b] < 0 ? -1 : 1 - w[a][b]; });
  int out = kNeg;
  for (int v = 0; v < n; ++v) out = std::max(out, best[(std::uint64_t{1} << n) - 1][v]);
  return n - 1 - out;
}

}  // namespace oracle
