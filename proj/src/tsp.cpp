#include "gmpd/tsp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gmpd/construct.hpp"
#include "gmpd/extsd.hpp"
#include "gmpd/gwalk.hpp"
#include "gmpd/irreducible.hpp"
#include "gmpd/search.hpp"

namespace gmpd {

namespace {

std::string pair_text(Vertex u, Vertex v) { return std::to_string(u + 1) + " " + std::to_string(v + 1); }

// -1 where no arc, otherwise the weight.
std::vector<std::vector<int>> weight_matrix(const ZotspInstance& inst) {
  std::vector<std::vector<int>> w(inst.n, std::vector<int>(inst.n, -1));
  for (std::size_t i = 0; i < inst.arcs.size(); ++i) w[inst.arcs[i].first][inst.arcs[i].second] = inst.weights[i];
  return w;
}

}  // namespace

ZotspReport validate_zotsp(const ZotspInstance& inst) {
  ZotspReport rep;
  auto fail = [&rep](std::string why) {
    rep.violation = std::move(why);
    return rep;
  };
  const int n = inst.n;
  if (n < 1) return fail("empty instance");
  if (inst.weights.size() != inst.arcs.size()) return fail("weight count differs from arc count");
  std::vector<std::vector<int>> w(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < inst.arcs.size(); ++i) {
    auto [u, v] = inst.arcs[i];
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) return fail("bad arc " + pair_text(u, v));
    if (w[u][v] != -1) return fail("duplicate arc " + pair_text(u, v));
    if (inst.weights[i] != 0 && inst.weights[i] != 1) return fail("weight outside {0,1} on " + pair_text(u, v));
    w[u][v] = inst.weights[i];
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (w[u][v] == -1 && w[v][u] == -1) return fail("not semicomplete: " + pair_text(u, v));

  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&root](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (w[u][v] == 1) root[find(u)] = find(v);
  std::vector<int> index(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    const int r = find(v);
    if (index[r] == -1) {
      index[r] = static_cast<int>(rep.cliques.size());
      rep.cliques.emplace_back();
    }
    rep.cliques[index[r]].push_back(v);
  }
  for (const auto& clique : rep.cliques)
    for (Vertex u : clique)
      for (Vertex v : clique)
        if (u != v && w[u][v] != 1) return fail("weight-1 arcs do not form a clique: missing " + pair_text(u, v));
  rep.ok = true;
  return rep;
}

PartitionedDigraph to_smd(const ZotspInstance& inst) {
  const ZotspReport rep = validate_zotsp(inst);
  if (!rep.ok) throw Error(ErrorCode::CliqueViolation, rep.violation);
  std::vector<int> part(inst.n);
  for (std::size_t i = 0; i < rep.cliques.size(); ++i)
    for (Vertex v : rep.cliques[i]) part[v] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < inst.arcs.size(); ++i)
    if (inst.weights[i] == 0) arcs.push_back(inst.arcs[i]);
  std::sort(arcs.begin(), arcs.end());
  return PartitionedDigraph(part, arcs, inst.names);
}

int sequence_weight(const ZotspInstance& inst, const std::vector<Vertex>& seq, bool closed) {
  const auto w = weight_matrix(inst);
  int total = 0;
  const std::size_t steps = closed ? seq.size() : seq.size() - 1;
  for (std::size_t i = 0; i < steps && seq.size() > 1; ++i) {
    const Vertex a = seq[i], b = seq[(i + 1) % seq.size()];
    if (w[a][b] == -1) throw std::logic_error("sequence uses a missing arc " + pair_text(a, b));
    total += w[a][b];
  }
  return total;
}

TourPath min_cost_ham_path(const ZotspInstance& inst) {
  const PartitionedDigraph d0 = to_smd(inst);
  if (inst.n == 1) return {{0}, 0};
  const GWalk q = longest_gpath(d0);
  TourPath out{q.seq, inst.n - 1 - walk_length(d0, q)};
  // JUMPs of Q are same-clique pairs, i.e. the weight-1 arcs.
  if (sequence_weight(inst, out.path, false) != out.cost) throw std::logic_error("min_cost_ham_path: weight mismatch");
  return out;
}

TourResult tour_cost(const ZotspInstance& inst, TourMode mode, int k) {
  const PartitionedDigraph d0 = to_smd(inst);
  const int n = inst.n;
  TourResult res;
  res.mode = mode;
  auto attach = [&](const GWalk& c) {
    res.tour = c.seq;
    res.tour_cost = sequence_weight(inst, c.seq, true);
    if (*res.tour_cost != n - walk_length(d0, c)) throw std::logic_error("tour_cost: weight mismatch");
  };
  switch (mode) {
    case TourMode::ExtendedExact: {
      if (!is_extended(d0)) throw Error(ErrorCode::NotExtended, "tour_cost: D_0 is not extended semicomplete");
      if (n < 2) return res;
      if (d0.part_count() == 1) {
        // Every arc has weight 1; any ordering is an optimal tour.
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), 0);
        res.tour = all;
        res.cost = res.tour_cost = n;
        res.lower = res.upper = n;
        return res;
      }
      if (auto c = spanning_gcycle_extsd(d0)) {
        attach(*c);
        res.cost = res.tour_cost;
        res.lower = res.upper = *res.cost;
      }
      return res;
    }
    case TourMode::AtMostK: {
      if (k < 0) throw Error(ErrorCode::PreconditionUnmet, "tour_cost: k must be nonnegative");
      auto c = spanning_gcycle_at_least(d0, std::min(k, n));
      res.decision = c.has_value();
      if (c) attach(*c);
      return res;
    }
    case TourMode::StrongBound: {
      if (!is_strong(d0)) throw Error(ErrorCode::NotStrong, "tour_cost: D_0 is not strong");
      const JumpMetrics jm = jump_metrics(d0);
      const StrongCycleResult sc = spanning_gcycle_strong(d0);
      res.lower = n - jm.bound;
      res.upper = n - sc.bound;
      attach(sc.cycle);
      return res;
    }
  }
  return res;
}

}  // namespace gmpd
