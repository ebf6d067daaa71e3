#include "gmpd/core.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace gmpd {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::IllegalPair: return "IllegalPair";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::WalkTooShort: return "WalkTooShort";
    case ErrorCode::AugmentedInput: return "AugmentedInput";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NoFactor: return "NoFactor";
    case ErrorCode::NotSmd: return "NotSmd";
    case ErrorCode::NotSemicomplete: return "NotSemicomplete";
    case ErrorCode::NotStrong: return "NotStrong";
    case ErrorCode::NotExtended: return "NotExtended";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NoSharedPartite: return "NoSharedPartite";
    case ErrorCode::OneDirectional: return "OneDirectional";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CliqueViolation: return "CliqueViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
  }
  return "Unknown";
}

PartitionedDigraph::PartitionedDigraph(std::vector<int> part, const std::vector<Arc>& arcs,
                                       std::vector<std::string> names, bool augmented)
    : n_(static_cast<int>(part.size())), part_(std::move(part)), names_(std::move(names)),
      augmented_(augmented) {
  for (int p : part_) {
    if (p < 0) throw Error(ErrorCode::InvalidInstance, "negative partite index");
    c_ = std::max(c_, p + 1);
  }
  part_sizes_.assign(c_, 0);
  for (int p : part_) ++part_sizes_[p];
  for (int p = 0; p < c_; ++p)
    if (part_sizes_[p] == 0)
      throw Error(ErrorCode::InvalidInstance, "partite index " + std::to_string(p + 1) + " unused");
  if (!names_.empty() && static_cast<int>(names_.size()) != n_)
    throw Error(ErrorCode::InvalidInstance, "legend size differs from vertex count");

  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (auto [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw Error(ErrorCode::InvalidInstance, "arc endpoint out of range");
    if (u == v) throw Error(ErrorCode::InvalidInstance, "loop at vertex " + std::to_string(u + 1));
    if (adj_[index(u, v)])
      throw Error(ErrorCode::InvalidInstance,
                  "duplicate arc " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    adj_[index(u, v)] = 1;
    ++m_;
  }
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (adj_[index(u, v)]) {
        out_[u].push_back(v);
        in_[v].push_back(u);
      }
  if (n_ <= 64) {
    out_mask_.assign(n_, 0);
    in_mask_.assign(n_, 0);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : out_[u]) out_mask_[u] |= std::uint64_t{1} << v;
      for (Vertex v : in_[u]) in_mask_[u] |= std::uint64_t{1} << v;
    }
  }
}

std::vector<Vertex> PartitionedDigraph::part_members(int p) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (part_[v] == p) out.push_back(v);
  return out;
}

std::vector<Arc> PartitionedDigraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out_[u]) out.emplace_back(u, v);
  return out;
}

std::string PartitionedDigraph::name(Vertex v) const {
  return names_.empty() ? std::to_string(v + 1) : names_[v];
}

namespace {

std::vector<bool> reach_from(const PartitionedDigraph& d, Vertex s, bool forward) {
  std::vector<bool> seen(d.order(), false);
  std::vector<Vertex> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : forward ? d.out_neighbors(u) : d.in_neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace

bool is_strong(const PartitionedDigraph& d) {
  if (d.order() <= 1) return true;
  auto f = reach_from(d, 0, true);
  auto b = reach_from(d, 0, false);
  return std::all_of(f.begin(), f.end(), [](bool x) { return x; }) &&
         std::all_of(b.begin(), b.end(), [](bool x) { return x; });
}

std::vector<std::vector<Vertex>> strong_components(const PartitionedDigraph& d) {
  // Tarjan; components come out in reverse topological order.
  const int n = d.order();
  std::vector<int> idx(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> comps;
  int counter = 0;
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Vertex w : d.out_neighbors(v)) {
      if (idx[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      std::vector<Vertex> comp;
      Vertex w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (idx[v] < 0) dfs(v);
  std::reverse(comps.begin(), comps.end());
  return comps;
}

namespace {

// Max number of internally vertex-disjoint (s,t)-paths, capped at `cap`.
// A direct arc s->t counts as one path.
int disjoint_paths(const PartitionedDigraph& d, Vertex s, Vertex t, int cap) {
  const int n = d.order();
  // Split v into v_in = 2v, v_out = 2v+1 with unit capacity (infinite for s,t).
  const int nodes = 2 * n;
  std::vector<std::vector<int>> cap_m(nodes, std::vector<int>(nodes, 0));
  for (Vertex v = 0; v < n; ++v) cap_m[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : d.out_neighbors(u)) cap_m[2 * u + 1][2 * v] = 1;
  const int src = 2 * s + 1, snk = 2 * t;
  int flow = 0;
  while (flow < cap) {
    std::vector<int> prev(nodes, -1);
    std::deque<int> q{src};
    prev[src] = src;
    while (!q.empty() && prev[snk] < 0) {
      int u = q.front();
      q.pop_front();
      for (int w = 0; w < nodes; ++w)
        if (prev[w] < 0 && cap_m[u][w] > 0) {
          prev[w] = u;
          q.push_back(w);
        }
    }
    if (prev[snk] < 0) break;
    for (int w = snk; w != src; w = prev[w]) {
      --cap_m[prev[w]][w];
      ++cap_m[w][prev[w]];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool is_k_strong(const PartitionedDigraph& d, int k) {
  const int n = d.order();
  if (k <= 0) return true;
  if (n < k + 1) return false;
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = 0; t < n; ++t)
      if (s != t && disjoint_paths(d, s, t, k) < k) return false;
  return true;
}

bool is_smd(const PartitionedDigraph& d) {
  const int n = d.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (d.same_part(u, v)) {
        if (d.has_arc(u, v)) return false;
      } else if (!d.adjacent(u, v)) {
        return false;
      }
    }
  return true;
}

namespace {

// 0: no arcs, 1: only i->j, 2: only j->i, 3: complete both ways, 4: mixed.
std::optional<std::pair<int, int>> first_extended_violation(const PartitionedDigraph& d) {
  const int c = d.part_count();
  std::vector<std::vector<Vertex>> members(c);
  for (Vertex v = 0; v < d.order(); ++v) members[d.part_of(v)].push_back(v);
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      bool all_fwd = true, all_bwd = true, no_fwd = true, no_bwd = true;
      for (Vertex a : members[i])
        for (Vertex b : members[j]) {
          bool f = d.has_arc(a, b), r = d.has_arc(b, a);
          all_fwd = all_fwd && f;
          all_bwd = all_bwd && r;
          no_fwd = no_fwd && !f;
          no_bwd = no_bwd && !r;
        }
      bool ok = (all_fwd && no_bwd) || (all_bwd && no_fwd) || (all_fwd && all_bwd);
      if (!ok) return std::make_pair(i, j);
    }
  return std::nullopt;
}

}  // namespace

bool is_extended(const PartitionedDigraph& d) {
  return !d.augmented() && is_smd(d) && !first_extended_violation(d);
}

ValidationReport validate(const PartitionedDigraph& d) {
  ValidationReport r;
  const int n = d.order();
  for (Vertex u = 0; u < n && !r.internal_arc; ++u)
    for (Vertex v : d.out_neighbors(u))
      if (d.same_part(u, v)) {
        r.internal_arc = Arc{u, v};
        break;
      }
  for (Vertex u = 0; u < n && !r.missing_pair; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!d.same_part(u, v) && !d.adjacent(u, v)) {
        r.missing_pair = std::make_pair(u, v);
        break;
      }
  r.is_smd = !r.internal_arc && !r.missing_pair;
  if (r.is_smd) {
    r.extended_violation = first_extended_violation(d);
    r.is_extended = !r.extended_violation;
  }
  r.is_strong = is_strong(d);
  if (!r.is_strong) {
    for (Vertex x = 0; x < n && !r.unreachable; ++x) {
      auto seen = reach_from(d, x, true);
      for (Vertex y = 0; y < n; ++y)
        if (!seen[y]) {
          r.unreachable = std::make_pair(x, y);
          break;
        }
    }
  }
  return r;
}

void require_smd(const PartitionedDigraph& d, const char* op) {
  if (d.augmented())
    throw Error(ErrorCode::AugmentedInput, std::string(op) + " rejects augmented instances");
  if (!is_smd(d))
    throw Error(ErrorCode::NotSmd, std::string(op) + " requires a semicomplete multipartite digraph");
}

PartitionedDigraph contract_partite(const PartitionedDigraph& d) {
  const int c = d.part_count();
  std::vector<int> part(c);
  for (int i = 0; i < c; ++i) part[i] = i;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(c) * c, 0);
  std::vector<Arc> arcs;
  for (auto [u, v] : d.arcs()) {
    int a = d.part_of(u), b = d.part_of(v);
    if (a == b) continue;
    auto& s = seen[static_cast<std::size_t>(a) * c + b];
    if (!s) {
      s = 1;
      arcs.emplace_back(a, b);
    }
  }
  return PartitionedDigraph(std::move(part), arcs);
}

std::vector<std::pair<Arc, int>> WeightedCompletion::weighted_arcs() const {
  std::vector<std::pair<Arc, int>> out;
  const int n = base_.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (has_arc(u, v)) out.push_back({{u, v}, weight(u, v)});
  return out;
}

WeightedCompletion weighted_completion(const PartitionedDigraph& d) { return WeightedCompletion(d); }

PartitionedDigraph augment_terminals(const PartitionedDigraph& d, const std::vector<Vertex>& x) {
  auto arcs = d.arcs();
  std::vector<bool> in_x(d.order(), false);
  for (Vertex v : x) in_x.at(v) = true;
  bool added = false;
  for (Vertex u = 0; u < d.order(); ++u) {
    if (!in_x[u]) continue;
    for (Vertex w = 0; w < d.order(); ++w)
      if (w != u && d.same_part(u, w) && !d.has_arc(u, w)) {
        arcs.emplace_back(u, w);
        added = true;
      }
  }
  return PartitionedDigraph(d.parts(), arcs, d.names(), d.augmented() || added);
}

PartitionedDigraph induced_subdigraph(const PartitionedDigraph& d, const std::vector<Vertex>& vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<int> local(d.order(), -1);
  for (int i = 0; i < k; ++i) local[vertices[i]] = i;
  std::vector<int> remap(d.part_count(), -1);
  std::vector<int> part(k);
  int next = 0;
  for (int i = 0; i < k; ++i) {
    int p = d.part_of(vertices[i]);
    if (remap[p] < 0) remap[p] = next++;
    part[i] = remap[p];
  }
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i)
    for (Vertex w : d.out_neighbors(vertices[i]))
      if (local[w] >= 0) arcs.emplace_back(i, local[w]);
  std::vector<std::string> names;
  if (d.has_names())
    for (Vertex v : vertices) names.push_back(d.name(v));
  return PartitionedDigraph(std::move(part), arcs, std::move(names), d.augmented());
}

int nontrivial_part_count(const PartitionedDigraph& d) {
  int count = 0;
  for (int p = 0; p < d.part_count(); ++p)
    if (d.part_size(p) >= 2) ++count;
  return count;
}

}  // namespace gmpd
