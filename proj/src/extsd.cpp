#include "gmpd/extsd.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmpd/construct.hpp"
#include "gmpd/factor.hpp"

namespace gmpd {

namespace {

void require_extended(const PartitionedDigraph& d, const char* op) {
  if (!is_extended(d)) throw Error(ErrorCode::NotExtended, std::string(op) + " requires an extended semicomplete digraph");
}

bool arc_between(const PartitionedDigraph& d, const GWalk& from, const GWalk& to) {
  for (Vertex u : from.seq)
    for (Vertex v : to.seq)
      if (d.has_arc(u, v)) return true;
  return false;
}

bool share_part(const PartitionedDigraph& d, const GWalk& a, const GWalk& b) {
  for (Vertex u : a.seq)
    for (Vertex v : b.seq)
      if (d.same_part(u, v)) return true;
  return false;
}

// The cycle read from position i: seq[i], seq[i+1], ..., seq[i-1].
std::vector<Vertex> opened_at(const GWalk& c, int i) {
  std::vector<Vertex> out;
  for (int k = 0; k < c.size(); ++k) out.push_back(c.at(i + k));
  return out;
}

}  // namespace

GWalk merge_same_partite(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2) {
  require_extended(d, "merge_same_partite");
  for (int i = 0; i < c1.size(); ++i)
    for (int j = 0; j < c2.size(); ++j) {
      if (!d.same_part(c1.seq[i], c2.seq[j])) continue;
      // C1[u, u^-] C2[v, v^-] u: u^- now precedes v and v^- precedes u;
      // similar vertices keep both pair kinds.
      auto seq = opened_at(c1, i);
      auto tail = opened_at(c2, j);
      seq.insert(seq.end(), tail.begin(), tail.end());
      GWalk out = canonical(GWalk::cycle(seq));
      if (walk_length_or_invalid(d, out) != walk_length(d, c1) + walk_length(d, c2))
        throw std::logic_error("merge_same_partite: length not preserved");
      return out;
    }
  throw Error(ErrorCode::NoSharedPartite, "the cycles share no partite set");
}

GWalk merge_bidirectional(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2) {
  require_extended(d, "merge_bidirectional");
  if (!arc_between(d, c1, c2) || !arc_between(d, c2, c1))
    throw Error(ErrorCode::OneDirectional, "all arcs between the cycles point one way");
  if (share_part(d, c1, c2)) return merge_same_partite(d, c1, c2);
  const int target = walk_length(d, c1) + walk_length(d, c2);

  // u_a -> v_{b+1} and v_b -> u_{a+1}: C1[u_{a+1}, u_a] C2[v_{b+1}, v_b].
  for (int a = 0; a < c1.size(); ++a)
    for (int b = 0; b < c2.size(); ++b) {
      if (!d.has_arc(c1.at(a), c2.at(b + 1)) || !d.has_arc(c2.at(b), c1.at(a + 1))) continue;
      auto seq = opened_at(c1, a + 1);
      auto tail = opened_at(c2, b + 1);
      seq.insert(seq.end(), tail.begin(), tail.end());
      GWalk out = GWalk::cycle(seq);
      if (walk_length_or_invalid(d, out) >= target) return canonical(out);
    }

  // Partner insertion of one cycle, opened anywhere, into the other.
  for (int pass = 0; pass < 2; ++pass) {
    const GWalk& host = pass == 0 ? c1 : c2;
    const GWalk& piece = pass == 0 ? c2 : c1;
    for (int i = 0; i < piece.size(); ++i) {
      try {
        GWalk out = insert_by_partners(d, GWalk::path(opened_at(piece, i)), host);
        if (walk_length_or_invalid(d, out) >= target) return canonical(out);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisUnmet) throw;
      }
    }
  }
  throw std::logic_error("merge_bidirectional: no splice reaches the arc bound");
}

std::optional<GWalk> spanning_gcycle_extsd(const PartitionedDigraph& d) {
  require_extended(d, "spanning_gcycle_extsd");
  if (d.order() < 2 || !is_strong(d)) return std::nullopt;
  const GFactor f = max_arc_gcycle_factor(d);
  std::vector<GWalk> cycles = f.cycles;

  auto merge_pass = [&](bool same_part_only) {
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        GWalk merged;
        if (share_part(d, cycles[i], cycles[j])) {
          merged = merge_same_partite(d, cycles[i], cycles[j]);
        } else if (!same_part_only && arc_between(d, cycles[i], cycles[j]) && arc_between(d, cycles[j], cycles[i])) {
          merged = merge_bidirectional(d, cycles[i], cycles[j]);
        } else {
          continue;
        }
        cycles[i] = merged;
        cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(j));
        return true;
      }
    return false;
  };
  while (merge_pass(true) || merge_pass(false)) {
  }

  // Remaining cycles are pairwise ⇒-related; contract them to a tournament.
  const int k = static_cast<int>(cycles.size());
  std::vector<GWalk> ordered;
  if (k == 1) {
    ordered = cycles;
  } else {
    std::vector<int> part(k);
    for (int i = 0; i < k; ++i) part[i] = i;
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && arc_between(d, cycles[i], cycles[j])) arcs.push_back({i, j});
    const auto order = tournament_ham_cycle(PartitionedDigraph(part, arcs));
    for (int i : order) ordered.push_back(canonical(cycles[i]));
  }
  std::vector<Vertex> seq;
  for (const auto& c : ordered) seq.insert(seq.end(), c.seq.begin(), c.seq.end());
  GWalk out = canonical(GWalk::cycle(seq));
  if (walk_length_or_invalid(d, out) != f.arc_count) throw std::logic_error("spanning_gcycle_extsd: length differs from c_f");
  return out;
}

}  // namespace gmpd
