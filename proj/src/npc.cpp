#include "gmpd/npc.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "gmpd/search.hpp"

namespace gmpd {

void validate_cnf(const CNF3& f) {
  if (f.num_vars < 1) throw Error(ErrorCode::InvalidInstance, "formula needs at least one variable");
  if (f.clauses.empty()) throw Error(ErrorCode::InvalidInstance, "formula needs at least one clause");
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (const auto& lit : f.clauses[j])
      if (lit.var < 1 || lit.var > f.num_vars)
        throw Error(ErrorCode::InvalidInstance, "clause " + std::to_string(j + 1) + " uses an unknown variable",
                    static_cast<int>(j) + 1);
}

namespace {

struct Builder {
  std::vector<int> part;
  std::vector<std::string> names;
  std::vector<std::vector<int>> order_pos;  // positions in the gadget order
  std::set<Arc> arcs;
  Reduction red;

  Vertex add_vertex(std::string name) {
    part.push_back(-1);
    names.push_back(std::move(name));
    order_pos.emplace_back();
    return static_cast<Vertex>(part.size()) - 1;
  }

  void arc(Vertex a, Vertex b) {
    if (a != b && part[a] != part[b]) arcs.insert({a, b});
  }

  void d1_arc(Vertex a, Vertex b) {
    red.d1_arcs.push_back({a, b});
    if (part[a] == part[b]) {
      red.dropped_arcs.push_back({a, b});
    } else {
      arcs.insert({a, b});
    }
  }

  bool share_position(Vertex a, Vertex b) const {
    for (int p : order_pos[a])
      for (int q : order_pos[b])
        if (p == q) return true;
    return false;
  }

  int last_position(Vertex a) const { return *std::max_element(order_pos[a].begin(), order_pos[a].end()); }
};

std::string sup(const std::string& base, int sub, int super) {
  return base + "_" + std::to_string(sub) + "^" + std::to_string(super);
}

// Gadget vertices in the order u_i, y_0^i..y_p^i, z_1^i..z_{q+1}^i, then v_n;
// occurrence vertices recorded per clause.
void build_gadgets(Builder& b, const CNF3& f) {
  validate_cnf(f);
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  std::vector<int> p(n + 1, 0), q(n + 1, 0);
  for (const auto& c : f.clauses)
    for (const auto& lit : c) ++(lit.negated ? q : p)[lit.var];
  Vertex u = b.add_vertex("u_1");
  for (int i = 1; i <= n; ++i) {
    Gadget g;
    g.u = u;
    b.order_pos[u].push_back(i - 1);
    for (int j = 0; j <= p[i]; ++j) g.y.push_back(b.add_vertex(sup("y", j, i)));
    for (int j = 1; j <= q[i] + 1; ++j) g.z.push_back(b.add_vertex(sup("z", j, i)));
    for (Vertex w : g.y) b.order_pos[w].push_back(i - 1);
    for (Vertex w : g.z) b.order_pos[w].push_back(i - 1);
    g.v = b.add_vertex(i == n ? "v_" + std::to_string(n) : "u_" + std::to_string(i + 1));
    b.order_pos[g.v].push_back(i - 1);
    u = g.v;
    b.red.gadgets.push_back(g);
  }
  // The vertex ids above interleave v_i = u_{i+1} with the next gadget; the
  // allocation order already matches u_i, y's, z's of each gadget.
  std::vector<int> next_y(n + 1, 1), next_z(n + 1, 0);
  b.red.occurrences.assign(m, {});
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < 3; ++k) {
      const auto& lit = f.clauses[j][k];
      const Gadget& g = b.red.gadgets[lit.var - 1];
      b.red.occurrences[j][k] = lit.negated ? g.z[next_z[lit.var]++] : g.y[next_y[lit.var]++];
    }
}

void set_plain_paths(Builder& b) {
  for (auto& g : b.red.gadgets) {
    g.y_path = {g.u};
    g.y_path.insert(g.y_path.end(), g.y.begin(), g.y.end());
    g.y_path.push_back(g.v);
    g.z_path = {g.u};
    g.z_path.insert(g.z_path.end(), g.z.begin(), g.z.end());
    g.z_path.push_back(g.v);
  }
}

// Spacer pairs for same-clause neighbours on a path; returns the pairs
// (y-side, z-side) per gadget. Partites are assigned by the caller.
std::vector<std::vector<std::pair<Vertex, Vertex>>> insert_spacers(Builder& b) {
  std::vector<int> clause_of(b.part.size(), -1);
  for (std::size_t j = 0; j < b.red.occurrences.size(); ++j)
    for (Vertex w : b.red.occurrences[j]) clause_of[w] = static_cast<int>(j);
  const auto repeats = [&](const std::vector<Vertex>& path) {
    std::vector<std::size_t> at;
    for (std::size_t k = 1; k + 2 < path.size(); ++k)
      if (clause_of[path[k]] >= 0 && clause_of[path[k]] == clause_of[path[k + 1]]) at.push_back(k);
    return at;
  };
  std::vector<std::vector<std::pair<Vertex, Vertex>>> pairs(b.red.gadgets.size());
  for (std::size_t i = 0; i < b.red.gadgets.size(); ++i) {
    Gadget& g = b.red.gadgets[i];
    const auto ya = repeats(g.y_path), za = repeats(g.z_path);
    const int gi = static_cast<int>(i) + 1;
    int k = 0;
    const auto spacer = [&](const char* side) {
      const Vertex w = b.add_vertex(sup(side, k, gi));
      b.order_pos[w].push_back(static_cast<int>(i));
      return w;
    };
    std::vector<Vertex> ynew(g.y_path.begin(), g.y_path.end() - 1), znew(g.z_path.begin(), g.z_path.end() - 1);
    std::vector<std::pair<Vertex, Vertex>> inside_y, inside_z;
    for (std::size_t r = 0; r < ya.size(); ++r) {
      ++k;
      inside_y.push_back({spacer("a"), spacer("b")});
    }
    for (std::size_t r = 0; r < za.size(); ++r) {
      ++k;
      inside_z.push_back({spacer("a"), spacer("b")});
    }
    // Path spacers go between the repeats. Partners follow y_0 on the y-path
    // and precede z_{q+1} on the z-path, so leaving the y-path for the
    // z-path still meets V_i^* twice.
    for (std::size_t r = ya.size(); r-- > 0;) ynew.insert(ynew.begin() + ya[r] + 1, inside_y[r].first);
    for (std::size_t r = za.size(); r-- > 0;) znew.insert(znew.begin() + za[r] + 1, inside_z[r].second);
    for (std::size_t r = inside_z.size(); r-- > 0;) ynew.insert(ynew.begin() + 2, inside_z[r].first);
    for (const auto& pr : inside_y) znew.insert(znew.end() - 1, pr.second);
    ynew.push_back(g.v);
    znew.push_back(g.v);
    g.y_path = std::move(ynew);
    g.z_path = std::move(znew);
    pairs[i] = inside_y;
    pairs[i].insert(pairs[i].end(), inside_z.begin(), inside_z.end());
  }
  return pairs;
}

void gadget_paths(Builder& b) {
  for (const auto& g : b.red.gadgets)
    for (const auto* path : {&g.y_path, &g.z_path})
      for (std::size_t i = 0; i + 1 < path->size(); ++i) b.d1_arc((*path)[i], (*path)[i + 1]);
}

// y-side (with v_i) to z-side (with u_i), then backward arcs along both paths;
// `all_backward` includes consecutive pairs.
void gadget_completion(Builder& b, bool all_backward) {
  for (const auto& g : b.red.gadgets) {
    for (auto a = g.y_path.begin() + 1; a != g.y_path.end(); ++a)
      for (auto c = g.z_path.begin(); c + 1 != g.z_path.end(); ++c) b.arc(*a, *c);
    for (const auto* path : {&g.y_path, &g.z_path})
      for (std::size_t i = 0; i < path->size(); ++i)
        for (std::size_t j = i + (all_backward ? 1 : 2); j < path->size(); ++j) b.arc((*path)[j], (*path)[i]);
  }
}

// Arcs from later to earlier blocks of the order for pairs in no common block.
void order_completion(Builder& b) {
  const int n = static_cast<int>(b.part.size());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = 0; c < n; ++c) {
      if (a == c || b.order_pos[a].empty() || b.order_pos[c].empty() || b.share_position(a, c)) continue;
      if (b.last_position(a) > b.last_position(c)) b.arc(a, c);
    }
}

Reduction finish(Builder& b) {
  std::vector<Arc> arcs(b.arcs.begin(), b.arcs.end());
  b.red.d = PartitionedDigraph(b.part, arcs, b.names);
  return std::move(b.red);
}

}  // namespace

Reduction build_np1(const CNF3& f, bool separate_repeats) {
  Builder b;
  build_gadgets(b, f);
  set_plain_paths(b);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> spacers;
  if (separate_repeats) spacers = insert_spacers(b);
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  const Vertex s1 = b.add_vertex("s_1"), s2 = b.add_vertex("s_2");
  const Vertex t1 = b.add_vertex("t_1"), t2 = b.add_vertex("t_2");
  const Vertex ustar = b.add_vertex("u*");

  // Partite sets: V^start, V_1..V_m, V_1^*..V_n^*, V^u, V^end.
  const int p_vu = m + n + 1, p_end = m + n + 2;
  b.red.part_names.push_back("V^start");
  for (int j = 1; j <= m; ++j) b.red.part_names.push_back("V_" + std::to_string(j));
  for (int i = 1; i <= n; ++i) b.red.part_names.push_back("V_" + std::to_string(i) + "^*");
  b.red.part_names.push_back("V^u");
  b.red.part_names.push_back("V^end");
  int next_part = p_end + 1;
  for (std::size_t i = 0; i < spacers.size(); ++i)
    for (std::size_t k = 0; k < spacers[i].size(); ++k) {
      b.red.part_names.push_back(sup("S", static_cast<int>(k) + 1, static_cast<int>(i) + 1));
      b.part[spacers[i][k].first] = b.part[spacers[i][k].second] = next_part++;
    }
  b.part[s1] = b.part[s2] = 0;
  b.part[t1] = b.part[t2] = p_end;
  b.part[ustar] = p_vu;
  for (int i = 0; i < n; ++i) {
    const Gadget& g = b.red.gadgets[i];
    b.part[g.u] = b.part[g.v] = p_vu;
    b.part[g.y.front()] = b.part[g.z.back()] = m + 1 + i;
  }
  for (int j = 0; j < m; ++j)
    for (Vertex w : b.red.occurrences[j]) b.part[w] = 1 + j;

  gadget_paths(b);
  const Vertex u1 = b.red.gadgets.front().u, vn = b.red.gadgets.back().v;
  const std::vector<Vertex> starts{s1, s2, ustar}, ends{t1, t2};
  for (Vertex s : starts) b.arc(s, u1);  // u* -> u_1 lies inside V^u and is skipped
  for (Vertex s : {s1, s2}) b.arc(s, ustar);  // keeps V^start and u* adjacent; u* stays a sink
  for (Vertex t : ends) {
    b.arc(vn, t);
    for (Vertex s : starts) b.arc(t, s);
  }
  // W_k -> W_j for j < k, pairs inside one gadget excluded.
  order_completion(b);
  const int gadget_end = static_cast<int>(b.part.size()) - 5;
  for (Vertex w = 0; w < gadget_end; ++w) {
    for (Vertex t : ends) b.arc(t, w);
    for (Vertex s : starts) b.arc(w, s);
  }
  gadget_completion(b, /*all_backward=*/false);
  return finish(b);
}

Reduction build_np2(const CNF3& f) {
  Builder b;
  build_gadgets(b, f);
  set_plain_paths(b);
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  std::vector<std::array<Vertex, 3>> qv(m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < 3; ++i) {
      qv[j][i] = b.add_vertex(sup("q", i + 1, j + 1));
      b.order_pos[qv[j][i]].push_back(n + j);
    }
  const Vertex x = b.add_vertex("x");
  b.order_pos[x].push_back(n + m);

  // Partite sets: U_1..U_{n+1}, V_1^*..V_n^*, Q_i^j (j-major), X.
  for (int i = 1; i <= n + 1; ++i) b.red.part_names.push_back("U_" + std::to_string(i));
  for (int i = 1; i <= n; ++i) b.red.part_names.push_back("V_" + std::to_string(i) + "^*");
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= 3; ++i) b.red.part_names.push_back(sup("Q", i, j));
  b.red.part_names.push_back("X");
  for (int i = 0; i < n; ++i) {
    const Gadget& g = b.red.gadgets[i];
    b.part[g.u] = i;
    b.part[g.v] = i + 1;
    b.part[g.y.front()] = b.part[g.z.back()] = n + 1 + i;
  }
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < 3; ++i) b.part[b.red.occurrences[j][i]] = b.part[qv[j][i]] = 2 * n + 1 + 3 * j + i;
  b.part[x] = 2 * n + 1 + 3 * m;

  gadget_paths(b);
  const Vertex u1 = b.red.gadgets.front().u, vn = b.red.gadgets.back().v;
  for (Vertex w : qv[0]) b.arc(vn, w);
  for (int j = 0; j + 1 < m; ++j)
    for (Vertex a : qv[j])
      for (Vertex c : qv[j + 1]) b.arc(a, c);
  for (Vertex w : qv[m - 1]) b.arc(w, x);
  b.arc(x, u1);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < 3; ++i) b.arc(qv[j][i], qv[j][(i + 1) % 3]);

  gadget_completion(b, /*all_backward=*/true);
  order_completion(b);
  return finish(b);
}

namespace {

struct StateHash {
  std::size_t operator()(const std::pair<std::uint64_t, int>& s) const {
    return std::hash<std::uint64_t>()(s.first * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(s.second));
  }
};

// DFS over real cycles through `start` with per-part count caps; dead states
// (visited set, current vertex) are memoised.
class CycleSearch {
 public:
  CycleSearch(const PartitionedDigraph& d, std::vector<int> cap) : d_(d), cap_(std::move(cap)) {}

  std::optional<std::vector<Vertex>> run(Vertex start, std::uint64_t allowed) {
    start_ = start;
    allowed_ = allowed;
    dead_.clear();
    count_.assign(d_.part_count(), 0);
    path_ = {start};
    ++count_[d_.part_of(start)];
    if (dfs(start, std::uint64_t{1} << start)) return path_;
    return std::nullopt;
  }

 private:
  bool open(Vertex w, std::uint64_t mask) const {
    return (allowed_ >> w & 1u) && !(mask >> w & 1u) && count_[d_.part_of(w)] < cap_[d_.part_of(w)];
  }

  bool all_met() const {
    return std::all_of(count_.begin(), count_.end(), [](int c) { return c >= 1; });
  }

  // Start reachable and every unmet partite set reachable through open vertices.
  bool promising(Vertex v, std::uint64_t mask) const {
    std::uint64_t seen = std::uint64_t{1} << v, frontier = seen;
    bool closes = false;
    while (frontier) {
      const Vertex a = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if (d_.has_arc(a, start_)) closes = true;
      for (Vertex w : d_.out_neighbors(a))
        if (!(seen >> w & 1u) && open(w, mask)) {
          seen |= std::uint64_t{1} << w;
          frontier |= std::uint64_t{1} << w;
        }
    }
    if (!closes) return false;
    std::vector<bool> reachable(d_.part_count(), false);
    for (std::uint64_t s = seen; s; s &= s - 1) reachable[d_.part_of(std::countr_zero(s))] = true;
    for (int p = 0; p < d_.part_count(); ++p)
      if (count_[p] == 0 && !reachable[p]) return false;
    return true;
  }

  bool dfs(Vertex v, std::uint64_t mask) {
    if (path_.size() >= 2 && d_.has_arc(v, start_) && all_met()) return true;
    const std::pair<std::uint64_t, int> key{mask, v};
    if (dead_.count(key)) return false;
    if (promising(v, mask)) {
      for (Vertex w : d_.out_neighbors(v)) {
        if (!open(w, mask)) continue;
        path_.push_back(w);
        ++count_[d_.part_of(w)];
        if (dfs(w, mask | (std::uint64_t{1} << w))) return true;
        --count_[d_.part_of(w)];
        path_.pop_back();
      }
    }
    dead_.insert(key);
    return false;
  }

  const PartitionedDigraph& d_;
  std::vector<int> cap_;
  Vertex start_ = 0;
  std::uint64_t allowed_ = 0;
  std::vector<int> count_;
  std::vector<Vertex> path_;
  std::unordered_set<std::pair<std::uint64_t, int>, StateHash> dead_;
};

std::optional<GWalk> partite_cycle(const PartitionedDigraph& d, std::vector<int> cap, const char* op) {
  const int n = d.order();
  if (n > std::min(exact_limit(kWitnessThreshold), 64))
    throw Error(ErrorCode::TooLarge, std::string(op) + ": n=" + std::to_string(n) + " exceeds the search cap");
  if (n < 2) return std::nullopt;
  for (int c : cap)
    if (c < 1) return std::nullopt;
  int smallest = 0;
  for (int p = 1; p < d.part_count(); ++p)
    if (d.part_size(p) < d.part_size(smallest)) smallest = p;
  std::uint64_t allowed = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  CycleSearch search(d, std::move(cap));
  for (Vertex s : d.part_members(smallest)) {
    if (auto cyc = search.run(s, allowed)) return canonical(GWalk::cycle(*cyc));
    allowed &= ~(std::uint64_t{1} << s);  // cycles through s are exhausted
  }
  return std::nullopt;
}

}  // namespace

std::optional<GWalk> witness_np1(const PartitionedDigraph& d) {
  std::vector<int> cap(d.part_count());
  for (int p = 0; p < d.part_count(); ++p) cap[p] = d.part_size(p) - 1;
  return partite_cycle(d, std::move(cap), "witness_np1");
}

std::optional<GWalk> witness_np2(const PartitionedDigraph& d) {
  return partite_cycle(d, std::vector<int>(d.part_count(), 1), "witness_np2");
}

}  // namespace gmpd
