#include "gmpd/construct.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

#include "gmpd/factor.hpp"

namespace gmpd {

namespace {

void require_semicomplete(const PartitionedDigraph& s) {
  for (Vertex u = 0; u < s.order(); ++u)
    for (Vertex v = u + 1; v < s.order(); ++v)
      if (!s.adjacent(u, v))
        throw Error(ErrorCode::NotSemicomplete, s.name(u) + " and " + s.name(v) + " are not adjacent");
}

std::vector<Vertex> concat(std::initializer_list<std::vector<Vertex>> parts) {
  std::vector<Vertex> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// seq[from], seq[from+1], ... for `count` entries, cyclically.
std::vector<Vertex> cyclic_slice(const std::vector<Vertex>& seq, int from, int count) {
  const int t = static_cast<int>(seq.size());
  std::vector<Vertex> out;
  for (int k = 0; k < count; ++k) out.push_back(seq[static_cast<std::size_t>(((from + k) % t + t) % t)]);
  return out;
}

std::vector<Vertex> slice(const std::vector<Vertex>& seq, int from, int to) {  // [from, to)
  return std::vector<Vertex>(seq.begin() + from, seq.begin() + to);
}

}  // namespace

std::vector<Vertex> tournament_ham_path(const PartitionedDigraph& s) {
  require_semicomplete(s);
  std::vector<Vertex> path;
  for (Vertex v = 0; v < s.order(); ++v) {
    if (path.empty()) {
      path.push_back(v);
      continue;
    }
    bool placed = false;
    for (std::size_t i = 0; i + 1 < path.size() && !placed; ++i)
      if (s.has_arc(path[i], v) && s.has_arc(v, path[i + 1])) {
        path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, v);
        placed = true;
      }
    if (placed) continue;
    if (s.has_arc(path.back(), v)) {
      path.push_back(v);
    } else {
      path.insert(path.begin(), v);  // v -> path.front() by semicompleteness
    }
  }
  return path;
}

std::vector<Vertex> tournament_ham_cycle(const PartitionedDigraph& s) {
  require_semicomplete(s);
  const int n = s.order();
  if (n < 2) throw Error(ErrorCode::Degenerate, "a cycle needs at least 2 vertices");
  if (!is_strong(s)) throw Error(ErrorCode::NotStrong, "semicomplete digraph is not strong");

  // Shortest cycle through vertex 0.
  std::vector<int> prev(n, -1);
  std::deque<Vertex> q{0};
  prev[0] = 0;
  Vertex closing = -1;
  while (!q.empty() && closing < 0) {
    Vertex u = q.front();
    q.pop_front();
    for (Vertex w : s.out_neighbors(u)) {
      if (w == 0) {
        closing = u;
        break;
      }
      if (prev[w] < 0) {
        prev[w] = u;
        q.push_back(w);
      }
    }
  }
  std::vector<Vertex> cyc;
  for (Vertex v = closing; v != 0; v = prev[v]) cyc.push_back(v);
  cyc.push_back(0);
  std::reverse(cyc.begin(), cyc.end());

  std::vector<bool> on(n, false);
  for (Vertex v : cyc) on[v] = true;
  while (static_cast<int>(cyc.size()) < n) {
    bool grew = false;
    for (Vertex v = 0; v < n && !grew; ++v) {
      if (on[v]) continue;
      const int m = static_cast<int>(cyc.size());
      for (int i = 0; i < m; ++i)
        if (s.has_arc(cyc[i], v) && s.has_arc(v, cyc[(i + 1) % m])) {
          cyc.insert(cyc.begin() + i + 1, v);
          on[v] = true;
          grew = true;
          break;
        }
    }
    if (grew) continue;
    // Every missing vertex is dominated by the cycle or dominates it; strongness
    // yields an arc x->w with cycle=>x and w=>cycle.
    auto dominated = [&](Vertex v) {
      for (Vertex c : cyc)
        if (s.has_arc(v, c)) return false;
      return true;
    };
    Vertex x = -1, w = -1;
    for (Vertex a = 0; a < n && x < 0; ++a) {
      if (on[a] || !dominated(a)) continue;
      for (Vertex b : s.out_neighbors(a))
        if (!on[b] && !dominated(b)) {
          x = a;
          w = b;
          break;
        }
    }
    if (x < 0) throw std::logic_error("tournament_ham_cycle: no bridging arc");
    Vertex dropped = cyc[1 % cyc.size()];
    std::vector<Vertex> next{cyc[0], x, w};
    for (std::size_t i = 2; i < cyc.size(); ++i) next.push_back(cyc[i]);
    on[dropped] = false;
    on[x] = on[w] = true;
    cyc = std::move(next);
  }
  return cyc;
}

namespace {

// Lexicographically smallest arc from partite set a to partite set b.
Arc first_arc_between(const PartitionedDigraph& d, int a, int b) {
  for (Vertex u = 0; u < d.order(); ++u) {
    if (d.part_of(u) != a) continue;
    for (Vertex v : d.out_neighbors(u))
      if (d.part_of(v) == b) return {u, v};
  }
  throw std::logic_error("contraction arc without a witness");
}

void push_unique(std::vector<Vertex>& seq, Vertex v) {
  if (seq.empty() || seq.back() != v) seq.push_back(v);
}

}  // namespace

GWalk good_gcycle_length_c(const PartitionedDigraph& d) {
  require_smd(d, "good_gcycle_length_c");
  if (d.order() < 2) throw Error(ErrorCode::Degenerate, "a G-cycle needs at least 2 vertices");
  if (!is_strong(d)) throw Error(ErrorCode::NotStrong, "good_gcycle_length_c requires a strong digraph");
  const auto order = tournament_ham_cycle(contract_partite(d));
  const int c = static_cast<int>(order.size());
  std::vector<Arc> link(c);
  for (int i = 0; i < c; ++i) link[i] = first_arc_between(d, order[i], order[(i + 1) % c]);
  std::vector<Vertex> seq;
  for (int i = 0; i < c; ++i) {
    push_unique(seq, link[(i + c - 1) % c].second);
    push_unique(seq, link[i].first);
  }
  GWalk w = canonical(GWalk::cycle(seq));
  if (walk_length(d, w) != c) throw std::logic_error("good G-cycle length mismatch");
  return w;
}

GWalk good_gpath_length_c_minus_1(const PartitionedDigraph& d) {
  require_smd(d, "good_gpath_length_c_minus_1");
  if (d.order() < 1) throw Error(ErrorCode::Degenerate, "empty digraph");
  const auto order = tournament_ham_path(contract_partite(d));
  const int c = static_cast<int>(order.size());
  if (c == 1) return GWalk::path({d.part_members(order[0]).front()});
  std::vector<Arc> link(c - 1);
  for (int i = 0; i + 1 < c; ++i) link[i] = first_arc_between(d, order[i], order[i + 1]);
  std::vector<Vertex> seq{link[0].first};
  for (int i = 0; i + 1 < c; ++i) {
    push_unique(seq, link[i].second);
    if (i + 2 < c) push_unique(seq, link[i + 1].first);
  }
  GWalk w = GWalk::path(seq);
  if (walk_length(d, w) != c - 1) throw std::logic_error("good G-path length mismatch");
  return w;
}

GWalk merge_path_cycle(const PartitionedDigraph& d, const GWalk& p, const GWalk& c) {
  const auto& x = p.seq;
  const auto& y = c.seq;
  const int s = p.size(), t = c.size();
  const int target = walk_length(d, p) + walk_length(d, c);
  auto good = [&](const std::vector<Vertex>& q) { return walk_length_or_invalid(d, GWalk::path(q)) >= target; };

  // C opened so that it ends at y[i]: C[y_{i+1}, y_i].
  auto ending_at = [&](int i) { return cyclic_slice(y, i + 1, t); };

  // Prepend C before P through an arc y_i -> x_1; append after P through x_s -> y_i.
  for (int i = 0; i < t; ++i)
    if (d.has_arc(y[i], x.front()))
      if (auto q = concat({ending_at(i), x}); good(q)) return GWalk::path(q);
  for (int i = 0; i < t; ++i)
    if (d.has_arc(x.back(), y[i]))
      if (auto q = concat({x, cyclic_slice(y, i, t)}); good(q)) return GWalk::path(q);

  // Single crossover P[x_1,x_a] C[y_{b+1},y_b] P[x_{a+1},x_s].
  for (int a = 1; a < s; ++a)
    for (int b = 0; b < t; ++b)
      if (auto q = concat({slice(x, 0, a), ending_at(b), slice(x, a, s)}); good(q)) return GWalk::path(q);

  // Double crossover: y_{j+1} moves in front of x_i, the rest of C follows x_i.
  if (t >= 2) {
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < t; ++j) {
        Vertex lone = y[(j + 1) % t];
        auto rest = cyclic_slice(y, j + 2, t - 1);
        auto q1 = concat({slice(x, 0, i), {lone, x[i]}, rest, slice(x, i + 1, s)});
        if (good(q1)) return GWalk::path(q1);
        auto q2 = concat({slice(x, 0, i), rest, {x[i], lone}, slice(x, i + 1, s)});
        if (good(q2)) return GWalk::path(q2);
      }
  }

  // Junctions through same-partite pairs at either end.
  for (int i = 0; i < t; ++i)
    if (auto q = concat({x, cyclic_slice(y, i, t)}); good(q)) return GWalk::path(q);
  for (int i = 0; i < t; ++i)
    if (auto q = concat({ending_at(i), x}); good(q)) return GWalk::path(q);

  throw std::logic_error("merge_path_cycle: no splice reaches the arc bound");
}

GWalk longest_gpath(const PartitionedDigraph& d) {
  auto pc = max_arc_path_cycle_subdigraph(d);
  GWalk q = pc.path;
  for (const auto& c : pc.cycles) q = merge_path_cycle(d, q, c);
  if (walk_length(d, q) != pc.total_arcs) throw std::logic_error("longest_gpath certificate failed");
  return q;
}

namespace {

// Shortest path from `from` to the cycle through vertices off the cycle.
// forward: v -> ... -> u (u on cycle); backward: u -> ... -> v.
std::vector<Vertex> path_to_cycle(const PartitionedDigraph& d, Vertex from, const std::vector<bool>& on_cycle,
                                  bool forward) {
  const int n = d.order();
  std::vector<int> prev(n, -1);
  std::deque<Vertex> q{from};
  prev[from] = from;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (Vertex w : forward ? d.out_neighbors(u) : d.in_neighbors(u)) {
      if (prev[w] >= 0) continue;
      prev[w] = u;
      if (on_cycle[w]) {
        std::vector<Vertex> path;
        for (Vertex z = w; z != from; z = prev[z]) path.push_back(z);
        path.push_back(from);
        std::reverse(path.begin(), path.end());  // from, ..., w
        return path;
      }
      q.push_back(w);
    }
  }
  return {};
}

// First position i where inserting `piece` between seq[i] and seq[i+1] keeps
// at least `floor` arcs.
std::optional<std::vector<Vertex>> insert_piece(const PartitionedDigraph& d, const std::vector<Vertex>& seq,
                                                const std::vector<Vertex>& piece, int floor) {
  const int t = static_cast<int>(seq.size());
  for (int i = 0; i < t; ++i) {
    auto cand = seq;
    cand.insert(cand.begin() + i + 1, piece.begin(), piece.end());
    if (walk_length_or_invalid(d, GWalk::cycle(cand)) >= floor) return cand;
  }
  return std::nullopt;
}

}  // namespace

GWalk absorb_to_spanning(const PartitionedDigraph& d, const GWalk& c) {
  require_smd(d, "absorb_to_spanning");
  if (!is_strong(d)) throw Error(ErrorCode::NotStrong, "absorb_to_spanning requires a strong digraph");
  validate_walk(d, c);
  const int n = d.order();
  std::vector<Vertex> seq = c.seq;
  std::vector<bool> on(n, false);
  for (Vertex v : seq) on[v] = true;
  int len = walk_length(d, c);
  int steps = 0;
  while (static_cast<int>(seq.size()) < n) {
    if (++steps > n) throw std::logic_error("absorb_to_spanning: no progress");
    Vertex v = 0;
    while (on[v]) ++v;
    bool has_in = false, has_out = false;
    for (Vertex u : seq) {
      has_in = has_in || d.has_arc(u, v);
      has_out = has_out || d.has_arc(v, u);
    }
    std::vector<Vertex> next;
    if (has_in == has_out) {
      // In- and out-neighbours on C, or all of C inside v's partite set.
      auto r = insert_piece(d, seq, {v}, len);
      if (!r) throw std::logic_error("absorb_to_spanning: single insertion failed");
      next = std::move(*r);
    } else {
      const auto path = path_to_cycle(d, v, on, /*forward=*/!has_out);
      if (path.empty()) throw std::logic_error("absorb_to_spanning: no path to the cycle");
      const int t = static_cast<int>(seq.size());
      const int pos = static_cast<int>(std::find(seq.begin(), seq.end(), path.back()) - seq.begin());
      if (!has_out) {
        // C[u, u^-] v ... : the piece goes between u^- and u.
        std::vector<Vertex> piece(path.begin(), path.end() - 1);
        next = concat({cyclic_slice(seq, pos, t), piece});
      } else {
        // C[u^+, u] ... v : the piece (reversed path minus u) follows u.
        std::vector<Vertex> piece(path.rbegin() + 1, path.rend());
        next = concat({cyclic_slice(seq, pos + 1, t), piece});
      }
    }
    int next_len = walk_length_or_invalid(d, GWalk::cycle(next));
    if (next_len < len) throw std::logic_error("absorb_to_spanning: length decreased");
    len = next_len;
    seq = std::move(next);
    std::fill(on.begin(), on.end(), false);
    for (Vertex u : seq) on[u] = true;
  }
  return canonical(GWalk::cycle(seq));
}

GFactor grow_factor(const PartitionedDigraph& d, const std::vector<GWalk>& f0) {
  require_smd(d, "grow_factor");
  if (!is_strong(d)) throw Error(ErrorCode::NotStrong, "grow_factor requires a strong digraph");
  if (f0.empty()) return max_arc_gcycle_factor(d);
  const int n = d.order();
  std::vector<std::vector<Vertex>> cycles;
  std::vector<int> lens;
  std::vector<bool> covered(n, false);
  for (const auto& c : f0) {
    if (!c.is_cycle()) throw Error(ErrorCode::PreconditionUnmet, "grow_factor expects cycles");
    validate_walk(d, c);
    for (Vertex v : c.seq) {
      if (covered[v]) throw Error(ErrorCode::PreconditionUnmet, "cycles of F0 overlap");
      covered[v] = true;
    }
    cycles.push_back(c.seq);
    lens.push_back(walk_length(d, c));
  }
  auto uncovered = [&] {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
      if (!covered[v]) out.push_back(v);
    return out;
  };
  while (true) {
    const auto rest = uncovered();
    if (rest.empty()) break;
    bool changed = false;
    // Single-vertex insertion keeping each cycle's arc count.
    for (Vertex v : rest) {
      for (std::size_t k = 0; k < cycles.size() && !changed; ++k)
        if (auto r = insert_piece(d, cycles[k], {v}, lens[k])) {
          cycles[k] = std::move(*r);
          lens[k] = walk_length(d, GWalk::cycle(cycles[k]));
          covered[v] = true;
          changed = true;
        }
      if (changed) break;
    }
    if (changed) continue;
    // Uncovered vertices sharing a partite set form a trivial G-cycle.
    for (Vertex v : rest) {
      std::vector<Vertex> group;
      for (Vertex w : rest)
        if (d.same_part(v, w)) group.push_back(w);
      if (group.size() >= 2) {
        for (Vertex w : group) covered[w] = true;
        cycles.push_back(group);
        lens.push_back(0);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // Path of uncovered vertices spliced between consecutive cycle vertices.
    for (std::size_t k = 0; k < cycles.size() && !changed; ++k) {
      const auto& seq = cycles[k];
      const int t = static_cast<int>(seq.size());
      for (int i = 0; i < t && !changed; ++i) {
        Vertex a = seq[i], b = seq[(i + 1) % t];
        std::vector<int> prev(n, -2);
        std::deque<Vertex> q;
        for (Vertex w : d.out_neighbors(a))
          if (!covered[w]) {
            prev[w] = -1;
            q.push_back(w);
          }
        Vertex end = -1;
        while (!q.empty() && end < 0) {
          Vertex u = q.front();
          q.pop_front();
          if (d.has_arc(u, b)) {
            end = u;
            break;
          }
          for (Vertex w : d.out_neighbors(u))
            if (!covered[w] && prev[w] == -2) {
              prev[w] = u;
              q.push_back(w);
            }
        }
        if (end < 0) continue;
        std::vector<Vertex> piece;
        for (Vertex z = end; z != -1; z = prev[z]) piece.push_back(z);
        std::reverse(piece.begin(), piece.end());
        auto next = seq;
        next.insert(next.begin() + i + 1, piece.begin(), piece.end());
        for (Vertex z : piece) covered[z] = true;
        lens[k] = walk_length(d, GWalk::cycle(next));
        cycles[k] = std::move(next);
        changed = true;
      }
    }
    if (!changed) throw std::logic_error("grow_factor: uncovered vertices cannot be absorbed");
  }
  std::vector<GWalk> out;
  for (auto& c : cycles) out.push_back(GWalk::cycle(c));
  return make_factor(d, std::move(out));
}

}  // namespace gmpd
