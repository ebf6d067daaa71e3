#include "gmpd/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <string>

#include "gmpd/factor.hpp"

namespace gmpd {

int exact_limit(int fallback) {
  if (const char* env = std::getenv("GMPD_EXACT_THRESHOLD")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      return fallback;
    }
  }
  return fallback;
}

namespace {

void check_size(int n, int limit, const char* op) {
  if (n > limit)
    throw Error(ErrorCode::TooLarge, std::string(op) + ": n=" + std::to_string(n) + " exceeds threshold " +
                                         std::to_string(limit));
}

// Out-arc step cost on D*: 0 for an arc, 1 for a same-partite pair, -1 otherwise.
int step_cost(const PartitionedDigraph& d, Vertex u, Vertex v) {
  if (u == v) return -1;
  if (d.has_arc(u, v)) return 0;
  return d.same_part(u, v) ? 1 : -1;
}

constexpr std::uint8_t kInf8 = 255;

struct MinJumpTable {
  int m = 0;
  std::vector<std::uint8_t> cost;  // [mask * m + i]
  std::uint8_t& at(std::uint32_t mask, int i) { return cost[static_cast<std::size_t>(mask) * m + i]; }
};

// Min-JUMP walk DP over subsets of `vs`; `starts` are the admissible first indices.
MinJumpTable min_jump_table(const PartitionedDigraph& d, const std::vector<Vertex>& vs, std::uint32_t starts) {
  MinJumpTable t;
  t.m = static_cast<int>(vs.size());
  const std::uint32_t full = t.m == 32 ? ~0u : ((1u << t.m) - 1);
  t.cost.assign((static_cast<std::size_t>(full) + 1) * t.m, kInf8);
  for (int i = 0; i < t.m; ++i)
    if (starts >> i & 1u) t.at(1u << i, i) = 0;
  std::vector<int> w(t.m * t.m);
  for (int i = 0; i < t.m; ++i)
    for (int j = 0; j < t.m; ++j) w[i * t.m + j] = step_cost(d, vs[i], vs[j]);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int i = 0; i < t.m; ++i) {
      if (!(mask >> i & 1u)) continue;
      const std::uint8_t c = t.at(mask, i);
      if (c == kInf8) continue;
      for (int j = 0; j < t.m; ++j) {
        if (mask >> j & 1u) continue;
        const int s = w[i * t.m + j];
        if (s < 0) continue;
        std::uint8_t& dst = t.at(mask | (1u << j), j);
        if (c + s < dst) dst = static_cast<std::uint8_t>(c + s);
      }
    }
    if (mask == full) break;
  }
  return t;
}

// Walks back from (mask, last) choosing the smallest consistent predecessor.
std::vector<Vertex> backtrack(const PartitionedDigraph& d, MinJumpTable& t, const std::vector<Vertex>& vs,
                              std::uint32_t mask, int last) {
  std::vector<Vertex> rev{vs[last]};
  while (std::popcount(mask) > 1) {
    const std::uint32_t prev = mask & ~(1u << last);
    int found = -1;
    for (int p = 0; p < t.m && found < 0; ++p) {
      if (!(prev >> p & 1u) || t.at(prev, p) == kInf8) continue;
      const int s = step_cost(d, vs[p], vs[last]);
      if (s >= 0 && t.at(prev, p) + s == t.at(mask, last)) found = p;
    }
    mask = prev;
    last = found;
    rev.push_back(vs[last]);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::optional<std::pair<int, std::vector<Vertex>>> min_jump_cycle(const PartitionedDigraph& d,
                                                                 const std::vector<Vertex>& vs) {
  const int m = static_cast<int>(vs.size());
  if (m < 2) return std::nullopt;
  auto t = min_jump_table(d, vs, 1u);
  const std::uint32_t full = (1u << m) - 1;
  int best = -1, best_cost = 1 << 20;
  for (int i = 1; i < m; ++i) {
    const std::uint8_t c = t.at(full, i);
    const int s = step_cost(d, vs[i], vs[0]);
    if (c == kInf8 || s < 0) continue;
    if (c + s < best_cost) {
      best_cost = c + s;
      best = i;
    }
  }
  if (best < 0) return std::nullopt;
  return std::make_pair(best_cost, backtrack(d, t, vs, full, best));
}

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  return vs;
}

// Reachability DP over subsets: reach[mask] holds the possible last vertices
// of a Hamiltonian path of `mask` starting at `start`. pred_mask(w) lists
// allowed predecessors of w.
template <class Pred>
std::vector<std::uint32_t> reach_table(int n, Vertex start, Pred pred_mask) {
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1u << start] = 1u << start;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t r = reach[mask];
    if (r == 0) continue;
    for (int w = 0; w < n; ++w)
      if (!(mask >> w & 1u) && (r & pred_mask(w))) reach[mask | (1u << w)] |= 1u << w;
    if (mask == full) break;
  }
  return reach;
}

template <class Pred>
std::vector<Vertex> reach_backtrack(const std::vector<std::uint32_t>& reach, std::uint32_t mask, Vertex last,
                                    Pred pred_mask) {
  std::vector<Vertex> rev{last};
  while (std::popcount(mask) > 1) {
    const std::uint32_t prev = mask & ~(1u << last);
    const std::uint32_t cand = reach[prev] & pred_mask(last);
    last = std::countr_zero(cand);
    mask = prev;
    rev.push_back(last);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace

std::optional<GWalk> exact_ham_cycle(const PartitionedDigraph& d) {
  const int n = d.order();
  check_size(n, std::min(exact_limit(kHamThreshold), 24), "exact_ham_cycle");
  if (n < 2) return std::nullopt;
  auto pred = [&](Vertex w) { return static_cast<std::uint32_t>(d.in_mask(w)); };
  const auto reach = reach_table(n, 0, pred);
  const std::uint32_t full = (1u << n) - 1;
  const std::uint32_t ends = reach[full] & static_cast<std::uint32_t>(d.in_mask(0));
  if (ends == 0) return std::nullopt;
  return GWalk::cycle(reach_backtrack(reach, full, std::countr_zero(ends), pred));
}

std::optional<GWalk> spanning_gcycle_at_least(const PartitionedDigraph& d, int k) {
  require_smd(d, "spanning_gcycle_at_least");
  const int n = d.order();
  check_size(n, std::min(exact_limit(kHamThreshold), 24), "spanning_gcycle_at_least");
  if (k > exact_limit(kMaxTerminalSet))
    throw Error(ErrorCode::TooLarge, "k=" + std::to_string(k) + " exceeds the terminal-set cap");
  if (n < 2 || k < 0) return std::nullopt;
  for (int size = 0; size <= std::min(k, n); ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Vertex> x(idx.begin(), idx.end());
      if (auto h = exact_ham_cycle(augment_terminals(d, x))) {
        GWalk w = canonical(*h);
        if (walk_length_or_invalid(d, w) < n - size) throw std::logic_error("spanning_gcycle_at_least: decode below bound");
        return w;
      }
      // Next combination in lexicographic order.
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<GWalk> exact_xy_spanning_gpath(const PartitionedDigraph& d, Vertex x, Vertex y) {
  require_smd(d, "exact_xy_spanning_gpath");
  const int n = d.order();
  check_size(n, std::min(exact_limit(kHamThreshold), 24), "exact_xy_spanning_gpath");
  if (x < 0 || y < 0 || x >= n || y >= n) throw Error(ErrorCode::InvalidInstance, "endpoint out of range");
  if (x == y) throw Error(ErrorCode::PreconditionUnmet, "x and y must differ");
  std::vector<std::uint32_t> star_in(n, 0);
  for (Vertex w = 0; w < n; ++w)
    for (Vertex u = 0; u < n; ++u)
      if (step_cost(d, u, w) >= 0) star_in[w] |= 1u << u;
  auto pred = [&](Vertex w) { return star_in[w]; };
  const auto reach = reach_table(n, x, pred);
  const std::uint32_t full = (1u << n) - 1;
  if (!(reach[full] >> y & 1u)) return std::nullopt;
  return GWalk::path(reach_backtrack(reach, full, y, pred));
}

std::optional<OracleResult> oracle_longest_spanning_gcycle(const PartitionedDigraph& d) {
  require_smd(d, "oracle_longest_spanning_gcycle");
  check_size(d.order(), std::min(exact_limit(kCycleOracleThreshold), 20), "oracle_longest_spanning_gcycle");
  auto r = min_jump_cycle(d, all_vertices(d.order()));
  if (!r) return std::nullopt;
  return OracleResult{d.order() - r->first, canonical(GWalk::cycle(r->second))};
}

std::optional<OracleResult> longest_gcycle_on(const PartitionedDigraph& d, const std::vector<Vertex>& vertices) {
  check_size(static_cast<int>(vertices.size()), 20, "longest_gcycle_on");
  auto r = min_jump_cycle(d, vertices);
  if (!r) return std::nullopt;
  return OracleResult{static_cast<int>(vertices.size()) - r->first, canonical(GWalk::cycle(r->second))};
}

OracleResult oracle_longest_gpath(const PartitionedDigraph& d) {
  require_smd(d, "oracle_longest_gpath");
  const int n = d.order();
  check_size(n, std::min(exact_limit(kPathOracleThreshold), 20), "oracle_longest_gpath");
  if (n == 0) throw Error(ErrorCode::Degenerate, "empty digraph");
  const auto vs = all_vertices(n);
  auto t = min_jump_table(d, vs, (1u << n) - 1);
  const std::uint32_t full = (1u << n) - 1;
  int best = -1;
  std::uint32_t best_mask = 0;
  int best_last = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1u) || t.at(mask, i) == kInf8) continue;
      const int len = std::popcount(mask) - 1 - t.at(mask, i);
      if (len > best) {
        best = len;
        best_mask = mask;
        best_last = i;
      }
    }
    if (mask == full) break;
  }
  return OracleResult{best, GWalk::path(backtrack(d, t, vs, best_mask, best_last))};
}

JumpMetrics jump_metrics(const PartitionedDigraph& d) {
  require_smd(d, "jump_metrics");
  const int n = d.order();
  JumpMetrics m;
  m.n_xy.assign(n, std::vector<int>(n, JumpMetrics::kUnreachable));
  for (Vertex x = 0; x < n; ++x) {
    auto& dist = m.n_xy[x];
    dist[x] = 0;
    std::deque<Vertex> q{x};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex v = 0; v < n; ++v) {
        const int s = step_cost(d, u, v);
        if (s < 0) continue;
        if (dist[v] == JumpMetrics::kUnreachable || dist[u] + s < dist[v]) {
          dist[v] = dist[u] + s;
          if (s == 0) q.push_front(v);
          else q.push_back(v);
        }
      }
    }
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      if (m.n_xy[x][y] == JumpMetrics::kUnreachable) ++m.unreachable_pairs;
      else m.n_max = std::max(m.n_max, m.n_xy[x][y]);
    }
  try {
    m.c_f = c_f(d);
  } catch (const Error&) {
    m.c_f = std::nullopt;
  }
  m.bound = m.c_f ? std::min(n - m.n_max, *m.c_f) : n - m.n_max;
  return m;
}

}  // namespace gmpd
