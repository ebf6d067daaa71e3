#include "gmpd/irreducible.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gmpd/extsd.hpp"
#include "gmpd/factor.hpp"
#include "gmpd/search.hpp"

namespace gmpd {

namespace {

// Exact fallbacks run only on unions up to this size.
constexpr int kExactUnion = 18;

std::vector<Vertex> opened_at(const GWalk& c, int i) {
  std::vector<Vertex> out;
  for (int k = 0; k < c.size(); ++k) out.push_back(c.at(i + k));
  return out;
}

std::vector<Vertex> union_of(std::initializer_list<const GWalk*> cs) {
  std::vector<Vertex> out;
  for (const GWalk* c : cs) out.insert(out.end(), c->seq.begin(), c->seq.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool accept(const PartitionedDigraph& d, const std::vector<Vertex>& seq, int target) {
  return walk_length_or_invalid(d, GWalk::cycle(seq)) >= target;
}

std::optional<GWalk> splice_patterns(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2, int target) {
  // Single crossover C1[u_{a+1}, u_a] C2[v_{b+1}, v_b].
  for (int a = 0; a < c1.size(); ++a)
    for (int b = 0; b < c2.size(); ++b) {
      auto seq = opened_at(c1, a + 1);
      auto tail = opened_at(c2, b + 1);
      seq.insert(seq.end(), tail.begin(), tail.end());
      if (accept(d, seq, target)) return GWalk::cycle(seq);
    }
  // Partner insertion of one cycle, opened anywhere, into the other.
  for (int pass = 0; pass < 2; ++pass) {
    const GWalk& host = pass == 0 ? c1 : c2;
    const GWalk& piece = pass == 0 ? c2 : c1;
    for (int i = 0; i < piece.size(); ++i) {
      try {
        GWalk out = insert_by_partners(d, GWalk::path(opened_at(piece, i)), host);
        if (walk_length_or_invalid(d, out) >= target) return out;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisUnmet) throw;
      }
    }
  }
  // One vertex moved out of a cycle, the remainder crossed over, the vertex
  // placed in any gap of the result.
  for (int pass = 0; pass < 2; ++pass) {
    const GWalk& keep = pass == 0 ? c1 : c2;
    const GWalk& cut = pass == 0 ? c2 : c1;
    if (cut.size() < 2) continue;
    for (int z = 0; z < cut.size(); ++z) {
      std::vector<Vertex> rest = opened_at(cut, z + 1);
      rest.pop_back();
      const Vertex lone = cut.seq[z];
      for (int a = 0; a < keep.size(); ++a)
        for (int b = 0; b < static_cast<int>(rest.size()); ++b) {
          auto base = opened_at(keep, a + 1);
          for (std::size_t k = 0; k < rest.size(); ++k) base.push_back(rest[(b + k) % rest.size()]);
          for (std::size_t g = 0; g < base.size(); ++g) {
            auto seq = base;
            seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(g) + 1, lone);
            if (accept(d, seq, target)) return GWalk::cycle(seq);
          }
        }
    }
  }
  return std::nullopt;
}

std::optional<GWalk> exact_merge(const PartitionedDigraph& d, const std::vector<Vertex>& verts, int target) {
  if (static_cast<int>(verts.size()) > kExactUnion) return std::nullopt;
  auto r = longest_gcycle_on(d, verts);
  if (r && r->length >= target) return r->witness;
  return std::nullopt;
}

bool is_out(SingularStatus s) { return s == SingularStatus::OutSingular || s == SingularStatus::Isolated; }
bool is_in(SingularStatus s) { return s == SingularStatus::InSingular || s == SingularStatus::Isolated; }

// C1 ≃> C2 by raw scans.
bool over(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2) {
  bool any1 = false, any2 = false;
  for (Vertex v : c1.seq) {
    auto s = singular_status(d, v, c2);
    if (s == SingularStatus::NonSingular) continue;
    any1 = true;
    if (!is_out(s)) return false;
  }
  for (Vertex v : c2.seq) {
    auto s = singular_status(d, v, c1);
    if (s == SingularStatus::NonSingular) continue;
    any2 = true;
    if (!is_in(s)) return false;
  }
  return any1 && any2;
}

bool has_singular(const PartitionedDigraph& d, const GWalk& c, const GWalk& other) {
  for (Vertex v : c.seq)
    if (singular_status(d, v, other) != SingularStatus::NonSingular) return true;
  return false;
}

int total_length(const PartitionedDigraph& d, const std::vector<GWalk>& cs) {
  int s = 0;
  for (const auto& c : cs) s += walk_length(d, c);
  return s;
}

}  // namespace

const char* singular_status_name(SingularStatus s) {
  switch (s) {
    case SingularStatus::OutSingular: return "out-singular";
    case SingularStatus::InSingular: return "in-singular";
    case SingularStatus::NonSingular: return "non-singular";
    case SingularStatus::Isolated: return "isolated";
  }
  return "?";
}

const char* pair_relation_name(PairRelation r) {
  switch (r) {
    case PairRelation::LeftOver: return "left-over";
    case PairRelation::RightOver: return "right-over";
    case PairRelation::Feasible: return "feasible";
    case PairRelation::Mergeable: return "mergeable";
  }
  return "?";
}

SingularStatus singular_status(const PartitionedDigraph& d, Vertex v, const GWalk& c) {
  bool out = false, in = false;
  for (Vertex w : c.seq) {
    out = out || d.has_arc(v, w);
    in = in || d.has_arc(w, v);
  }
  if (out && in) return SingularStatus::NonSingular;
  if (out) return SingularStatus::OutSingular;
  if (in) return SingularStatus::InSingular;
  return SingularStatus::Isolated;
}

PairRelation relation(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2) {
  const bool left = over(d, c1, c2), right = over(d, c2, c1);
  if (left && !right) return PairRelation::LeftOver;
  if (right && !left) return PairRelation::RightOver;
  if (!left && !right && has_singular(d, c1, c2) && has_singular(d, c2, c1)) return PairRelation::Feasible;
  return PairRelation::Mergeable;
}

std::optional<GWalk> merge_pair_no_loss(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2) {
  const int target = walk_length(d, c1) + walk_length(d, c2);
  if (auto r = splice_patterns(d, c1, c2, target)) return canonical(*r);
  return exact_merge(d, union_of({&c1, &c2}), target);
}

bool verify_irreducible(const PartitionedDigraph& d, const IrreducibleFactor& f) {
  GFactor as_factor{f.cycles, f.arc_count};
  if (!is_valid_factor(d, as_factor)) return false;
  for (std::size_t i = 0; i < f.cycles.size(); ++i)
    for (std::size_t j = i + 1; j < f.cycles.size(); ++j)
      if (!over(d, f.cycles[i], f.cycles[j])) return false;
  return true;
}

IrreducibleFactor make_irreducible(const PartitionedDigraph& d, const GFactor& f) {
  require_smd(d, "make_irreducible");
  if (!is_valid_factor(d, f)) throw Error(ErrorCode::PreconditionUnmet, "input is not a valid G-cycle factor");
  std::vector<GWalk> cycles = f.cycles;
  while (true) {
    bool merged = false;
    for (std::size_t i = 0; i < cycles.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < cycles.size() && !merged; ++j)
        if (auto m = merge_pair_no_loss(d, cycles[i], cycles[j])) {
          cycles[i] = *m;
          cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
    if (merged) continue;

    const int k = static_cast<int>(cycles.size());
    std::vector<std::vector<bool>> beats(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const auto r = relation(d, cycles[i], cycles[j]);
        if (r == PairRelation::LeftOver) beats[i][j] = true;
        else if (r == PairRelation::RightOver) beats[j][i] = true;
        else throw std::logic_error("make_irreducible: unrelated pair survived the merge loop");
      }
    // A directed triangle in the ≃> tournament: merge the three cycles.
    for (int a = 0; a < k && !merged; ++a)
      for (int b = 0; b < k && !merged; ++b)
        for (int c = 0; c < k && !merged; ++c) {
          if (!beats[a][b] || !beats[b][c] || !beats[c][a] || a > b || a > c) continue;
          const int target = walk_length(d, cycles[a]) + walk_length(d, cycles[b]) + walk_length(d, cycles[c]);
          auto m = exact_merge(d, union_of({&cycles[a], &cycles[b], &cycles[c]}), target);
          if (!m) throw std::logic_error("make_irreducible: ≃> triangle without a no-loss merge");
          std::vector<GWalk> next{*m};
          for (int t = 0; t < k; ++t)
            if (t != a && t != b && t != c) next.push_back(cycles[t]);
          cycles = std::move(next);
          merged = true;
        }
    if (merged) continue;

    std::vector<int> wins(k, 0), order(k);
    for (int i = 0; i < k; ++i) {
      order[i] = i;
      for (int j = 0; j < k; ++j) wins[i] += beats[i][j] ? 1 : 0;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return wins[a] > wins[b]; });
    IrreducibleFactor out;
    for (int i : order) out.cycles.push_back(canonical(cycles[i]));
    out.arc_count = total_length(d, out.cycles);
    if (out.arc_count < f.arc_count) throw std::logic_error("make_irreducible: arc count decreased");
    if (!verify_irreducible(d, out)) throw std::logic_error("make_irreducible: certificate failed");
    return out;
  }
}

BackarcReport check_backarc_structure(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2) {
  require_smd(d, "check_backarc_structure");
  if (relation(d, c1, c2) != PairRelation::LeftOver)
    throw Error(ErrorCode::PreconditionUnmet, "C1 ≃> C2 does not hold");
  BackarcReport rep;
  for (Vertex u : c2.seq)
    for (Vertex v : c1.seq)
      if (d.has_arc(u, v)) rep.back_arcs.push_back({u, v});
  std::sort(rep.back_arcs.begin(), rep.back_arcs.end());
  if (rep.back_arcs.empty()) throw Error(ErrorCode::PreconditionUnmet, "C1 => C2 entirely");
  const auto verts = union_of({&c1, &c2});
  if (static_cast<int>(verts.size()) > kExactUnion) throw Error(ErrorCode::TooLarge, "union too large for the exact check");
  if (exact_merge(d, verts, walk_length(d, c1) + walk_length(d, c2)))
    throw Error(ErrorCode::PreconditionUnmet, "the pair has a no-loss merge");

  auto succ = [](const GWalk& c, Vertex x) {
    const int i = static_cast<int>(std::find(c.seq.begin(), c.seq.end(), x) - c.seq.begin());
    return c.at(i + 1);
  };
  auto pred = [](const GWalk& c, Vertex x) {
    const int i = static_cast<int>(std::find(c.seq.begin(), c.seq.end(), x) - c.seq.begin());
    return c.at(i - 1);
  };
  auto arc_name = [&](Vertex a, Vertex b) { return d.name(a) + "->" + d.name(b); };
  for (const auto& [u, v] : rep.back_arcs) {
    const Vertex up = succ(c2, u), vm = pred(c1, v);
    const std::string tag = "back arc " + arc_name(u, v) + ": ";
    if (!d.same_part(up, vm)) {
      rep.violations.push_back(tag + "u+ and v- in different partite sets");
    } else if (!rep.shared_part) {
      rep.shared_part = d.part_of(up);
    } else if (*rep.shared_part != d.part_of(up)) {
      rep.violations.push_back(tag + "partite set differs from the other back arcs");
    }
    if (!d.has_arc(vm, v)) rep.violations.push_back(tag + "v-v is not an arc");
    if (!d.has_arc(u, up)) rep.violations.push_back(tag + "uu+ is not an arc");
    if (!d.has_arc(vm, u)) rep.violations.push_back(tag + "v- does not dominate u");
    if (!d.has_arc(v, up)) rep.violations.push_back(tag + "v does not dominate u+");
  }
  // A same-partite consecutive pair on one cycle excludes that partite set
  // from the other cycle.
  for (int side = 0; side < 2; ++side) {
    const GWalk& c = side == 0 ? c1 : c2;
    const GWalk& other = side == 0 ? c2 : c1;
    for (int i = 0; i < c.size(); ++i) {
      if (!d.same_part(c.at(i), c.at(i + 1))) continue;
      for (Vertex w : other.seq)
        if (d.same_part(w, c.at(i))) {
          rep.violations.push_back("jump " + d.name(c.at(i)) + "~" + d.name(c.at(i + 1)) + " shares its partite set with " +
                                   d.name(w) + " on the other cycle");
          break;
        }
    }
  }
  return rep;
}

std::optional<GWalk> chain_merge(const PartitionedDigraph& d, const std::vector<GWalk>& group) {
  if (group.empty()) return std::nullopt;
  if (group.size() == 1) return canonical(group.front());
  constexpr int kNone = std::numeric_limits<int>::min() / 2;
  const int k = static_cast<int>(group.size());
  // Arcs kept inside cycle i when it is read from position p.
  auto inner = [&](int i, int p) {
    const GWalk& c = group[i];
    return walk_length(d, c) - (d.has_arc(c.at(p - 1), c.at(p)) ? 1 : 0);
  };
  auto junction = [&](Vertex a, Vertex b) {
    if (d.has_arc(a, b)) return 1;
    return d.same_part(a, b) ? 0 : kNone;
  };
  int best = kNone;
  std::vector<int> best_open;
  for (int p0 = 0; p0 < group[0].size(); ++p0) {
    std::vector<std::vector<int>> val(k), from(k);
    val[0].assign(group[0].size(), kNone);
    val[0][p0] = inner(0, p0);
    for (int i = 1; i < k; ++i) {
      val[i].assign(group[i].size(), kNone);
      from[i].assign(group[i].size(), -1);
      for (int p = 0; p < group[i].size(); ++p)
        for (int q = 0; q < group[i - 1].size(); ++q) {
          if (val[i - 1][q] == kNone) continue;
          const int j = junction(group[i - 1].at(q - 1), group[i].at(p));
          if (j == kNone) continue;
          const int cand = val[i - 1][q] + j + inner(i, p);
          if (cand > val[i][p]) {
            val[i][p] = cand;
            from[i][p] = q;
          }
        }
    }
    for (int p = 0; p < group[k - 1].size(); ++p) {
      if (val[k - 1][p] == kNone) continue;
      const int j = junction(group[k - 1].at(p - 1), group[0].at(p0));
      if (j == kNone || val[k - 1][p] + j <= best) continue;
      best = val[k - 1][p] + j;
      best_open.assign(k, 0);
      best_open[k - 1] = p;
      for (int i = k - 1; i > 0; --i) best_open[i - 1] = from[i][best_open[i]];
    }
  }
  if (best == kNone) return std::nullopt;
  std::vector<Vertex> seq;
  for (int i = 0; i < k; ++i) {
    auto part = opened_at(group[i], best_open[i]);
    seq.insert(seq.end(), part.begin(), part.end());
  }
  return canonical(GWalk::cycle(seq));
}

StrongCycleResult spanning_gcycle_strong(const PartitionedDigraph& d) {
  require_smd(d, "spanning_gcycle_strong");
  if (d.order() < 2) throw Error(ErrorCode::Degenerate, "a spanning G-cycle needs at least 2 vertices");
  if (!is_strong(d)) throw Error(ErrorCode::NotStrong, "spanning_gcycle_strong requires a strong digraph");
  StrongCycleResult res;
  res.c_prime = nontrivial_part_count(d);
  const GFactor f = max_arc_gcycle_factor(d);
  res.c_f = f.arc_count;
  res.bound = res.c_prime == 0 ? res.c_f : res.c_prime == 1 ? res.c_f - 1 : res.c_f - 2 * res.c_prime;
  if (is_extended(d)) {
    res.cycle = *spanning_gcycle_extsd(d);
  } else {
    std::vector<GWalk> cycles = make_irreducible(d, f).cycles;
    const int loss = res.c_prime <= 1 ? 1 : 2;
    while (cycles.size() > 1) {
      std::size_t j = 0;
      for (std::size_t t = 1; t < cycles.size(); ++t)
        for (Vertex a : cycles[0].seq)
          for (Vertex b : cycles[t].seq)
            if (d.same_part(a, b)) j = t;
      if (j == 0) j = cycles.size() - 1;
      std::vector<GWalk> group(cycles.begin(), cycles.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      const int sum = total_length(d, group);
      auto merged = chain_merge(d, group);
      if (!merged || walk_length(d, *merged) < sum - loss) {
        std::vector<Vertex> verts;
        for (const auto& c : group) verts.insert(verts.end(), c.seq.begin(), c.seq.end());
        std::sort(verts.begin(), verts.end());
        if (static_cast<int>(verts.size()) <= kExactUnion)
          if (auto r = longest_gcycle_on(d, verts); r && (!merged || r->length > walk_length(d, *merged)))
            merged = r->witness;
      }
      if (!merged) throw std::logic_error("spanning_gcycle_strong: group has no spanning G-cycle");
      std::vector<GWalk> next{*merged};
      next.insert(next.end(), cycles.begin() + static_cast<std::ptrdiff_t>(j) + 1, cycles.end());
      cycles = std::move(next);
    }
    res.cycle = canonical(cycles.front());
  }
  res.length = walk_length(d, res.cycle);
  if (res.length < res.bound) throw std::logic_error("spanning_gcycle_strong: bound c_f - 2c' missed");
  return res;
}

BipartiteStructureReport bipartite_factor_structure(const PartitionedDigraph& d, const IrreducibleFactor& f) {
  if (d.part_count() != 2 || !is_smd(d)) throw Error(ErrorCode::NotBipartite, "expected a semicomplete bipartite digraph");
  if (f.cycles.size() < 2) throw Error(ErrorCode::PreconditionUnmet, "at least two cycles are required");
  BipartiteStructureReport rep;
  rep.dominance = true;
  for (std::size_t i = 0; i < f.cycles.size(); ++i)
    for (std::size_t j = i + 1; j < f.cycles.size(); ++j)
      for (Vertex a : f.cycles[j].seq)
        for (Vertex b : f.cycles[i].seq)
          if (d.has_arc(a, b) && rep.dominance) {
            rep.dominance = false;
            rep.violations.push_back("arc " + d.name(a) + "->" + d.name(b) + " goes against the order");
          }
  auto whole_part = [&](const GWalk& c) {
    const int p = d.part_of(c.seq.front());
    for (Vertex v : c.seq)
      if (d.part_of(v) != p) return false;
    return c.size() == d.part_size(p);
  };
  const bool all_real = std::all_of(f.cycles.begin(), f.cycles.end(),
                                    [&](const GWalk& c) { return walk_length(d, c) == c.size(); });
  if (f.cycles.size() == 2 && whole_part(f.cycles[0]) && whole_part(f.cycles[1])) {
    rep.alternative = 1;
  } else if (all_real) {
    rep.alternative = 2;
    rep.cycle = chain_merge(d, f.cycles);
    if (!rep.cycle || walk_length(d, *rep.cycle) < f.arc_count - 2)
      rep.violations.push_back("no spanning G-cycle with |A(F)|-2 arcs from the ordered chain");
  } else {
    rep.violations.push_back("neither alternative holds");
  }
  return rep;
}

}  // namespace gmpd
