#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmpd/core.hpp"

namespace gmpd {

enum class WalkKind { Path, Cycle };
enum class PairKind { Real, Jump };

// A G-path or G-cycle. For cycles the pair (seq.back(), seq.front()) is
// also consecutive.
struct GWalk {
  WalkKind kind = WalkKind::Path;
  std::vector<Vertex> seq;

  static GWalk path(std::vector<Vertex> s) { return {WalkKind::Path, std::move(s)}; }
  static GWalk cycle(std::vector<Vertex> s) { return {WalkKind::Cycle, std::move(s)}; }

  bool is_cycle() const { return kind == WalkKind::Cycle; }
  int size() const { return static_cast<int>(seq.size()); }
  int pair_count() const;
  Vertex at(int i) const;  // cyclic indexing for cycles
  bool operator==(const GWalk& o) const = default;
};

struct ClassifiedWalk {
  GWalk walk;
  std::vector<PairKind> pairs;  // pairs[i] is (seq[i], seq[i+1]) (cyclically)
  int length = 0;               // REAL count
};

// Throws Error(IllegalPair, index = 1-based pair), DuplicateVertex,
// WalkTooShort or AugmentedInput.
ClassifiedWalk validate_walk(const PartitionedDigraph& d, const GWalk& w);
bool is_valid_walk(const PartitionedDigraph& d, const GWalk& w);

// ℓ(w) for a walk already known to be valid.
int walk_length(const PartitionedDigraph& d, const GWalk& w);
// ℓ(w), or -1 when some consecutive pair is neither REAL nor JUMP.
int walk_length_or_invalid(const PartitionedDigraph& d, const GWalk& w);
std::optional<PairKind> pair_kind(const PartitionedDigraph& d, Vertex u, Vertex v);

bool is_good(const PartitionedDigraph& d, const GWalk& w);
bool is_spanning(const PartitionedDigraph& d, const GWalk& w);

// Rotation with the smallest vertex first; paths are returned unchanged.
GWalk canonical(const GWalk& w);

struct Partner {
  int host_index = 0;  // 0-based; the pair (host[i], host[i+1])
};

// Smallest host index i with host[i] -> start(piece) and end(piece) -> host[i+1].
std::optional<Partner> find_partner(const PartitionedDigraph& d, const GWalk& piece, const GWalk& host);

// Greedy insertion of path P into cycle C. Requires that every u_i (i<r) or
// the pair u_i u_{i+1} has a partner on C and that u_r has one; otherwise
// throws HypothesisUnmet naming the first failing 1-based index.
GWalk insert_by_partners(const PartitionedDigraph& d, const GWalk& p, const GWalk& c);

// Maximal REAL subpaths. Cycles with JUMPs are opened after a JUMP; all-REAL
// cycles yield one segment in canonical rotation.
std::vector<std::vector<Vertex>> decompose_segments(const PartitionedDigraph& d, const GWalk& w);

// "a->b~c" for paths, "c->y->b->x->a->(c)" for cycles (canonical rotation).
std::string render_walk(const PartitionedDigraph& d, const GWalk& w);

struct GFactor {
  std::vector<GWalk> cycles;
  int arc_count = 0;
};

// Checks disjointness, coverage of V(D), member validity and arc_count.
bool is_valid_factor(const PartitionedDigraph& d, const GFactor& f);

}  // namespace gmpd
