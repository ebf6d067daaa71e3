#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmpd/error.hpp"

namespace gmpd {

// Vertices are 0-based internally; files and rendered output use 1-based ids.
using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

// Digraph with a partite index per vertex. Immutable after construction.
// The constructor checks only structural sanity (ids in range, no loops, no
// duplicate arcs, every partite index used); internal arcs and missing
// cross-partite adjacencies are reported by validate().
class PartitionedDigraph {
 public:
  PartitionedDigraph() = default;
  PartitionedDigraph(std::vector<int> part, const std::vector<Arc>& arcs,
                     std::vector<std::string> names = {}, bool augmented = false);

  int order() const { return n_; }
  int part_count() const { return c_; }
  int part_of(Vertex v) const { return part_[v]; }
  const std::vector<int>& parts() const { return part_; }
  std::vector<Vertex> part_members(int p) const;
  int part_size(int p) const { return part_sizes_[p]; }

  bool has_arc(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }
  bool same_part(Vertex u, Vertex v) const { return part_[u] == part_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }
  // Bit masks of neighbourhoods; only valid when order() <= 64.
  std::uint64_t out_mask(Vertex v) const { return out_mask_[v]; }
  std::uint64_t in_mask(Vertex v) const { return in_mask_[v]; }

  std::vector<Arc> arcs() const;  // lexicographic order
  int arc_count() const { return m_; }

  bool augmented() const { return augmented_; }
  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(Vertex v) const;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  int c_ = 0;
  int m_ = 0;
  std::vector<int> part_;
  std::vector<int> part_sizes_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::uint64_t> out_mask_;
  std::vector<std::uint64_t> in_mask_;
  std::vector<std::string> names_;
  bool augmented_ = false;
};

struct ValidationReport {
  bool is_smd = false;
  bool is_extended = false;
  bool is_strong = false;
  std::optional<Arc> internal_arc;                 // arc inside a partite set
  std::optional<std::pair<Vertex, Vertex>> missing_pair;  // non-adjacent cross pair
  std::optional<std::pair<int, int>> extended_violation;  // partite pair breaking the extended rule
  std::optional<std::pair<Vertex, Vertex>> unreachable;   // (x,y) with no (x,y)-path
};

ValidationReport validate(const PartitionedDigraph& d);

// True when every cross-partite pair is adjacent and no arc lies inside a set.
bool is_smd(const PartitionedDigraph& d);
bool is_extended(const PartitionedDigraph& d);

bool is_strong(const PartitionedDigraph& d);
// Components in topological order of the condensation (sources first);
// vertices inside a component are sorted.
std::vector<std::vector<Vertex>> strong_components(const PartitionedDigraph& d);
bool is_k_strong(const PartitionedDigraph& d, int k);

// D^c: one vertex per partite set, arc i->j iff some arc from V_i to V_j.
PartitionedDigraph contract_partite(const PartitionedDigraph& d);

// D*: D plus every same-partite arc at weight 1. Cross-partite pairs keep
// exactly the arcs of D (weight 0).
class WeightedCompletion {
 public:
  explicit WeightedCompletion(PartitionedDigraph base) : base_(std::move(base)) {}
  const PartitionedDigraph& base() const { return base_; }
  bool has_arc(Vertex u, Vertex v) const {
    return u != v && (base_.same_part(u, v) || base_.has_arc(u, v));
  }
  // Requires has_arc(u, v).
  int weight(Vertex u, Vertex v) const { return base_.same_part(u, v) ? 1 : 0; }
  std::vector<std::pair<Arc, int>> weighted_arcs() const;

 private:
  PartitionedDigraph base_;
};

WeightedCompletion weighted_completion(const PartitionedDigraph& d);

// D_X: adds arcs from each x in X to its partite-set mates; tagged augmented.
PartitionedDigraph augment_terminals(const PartitionedDigraph& d, const std::vector<Vertex>& x);

// D[S] with partite indices renumbered densely in order of first use.
// `vertices` must be sorted; result vertex i is vertices[i].
PartitionedDigraph induced_subdigraph(const PartitionedDigraph& d, const std::vector<Vertex>& vertices);

// Number of partite sets with at least two vertices.
int nontrivial_part_count(const PartitionedDigraph& d);

void require_smd(const PartitionedDigraph& d, const char* op);

}  // namespace gmpd
