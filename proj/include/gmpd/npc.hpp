#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gmpd/core.hpp"
#include "gmpd/gwalk.hpp"

namespace gmpd {

struct Literal {
  int var = 1;  // 1-based
  bool negated = false;
  bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

struct CNF3 {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

// Throws InvalidInstance when a variable is out of range or there are no clauses.
void validate_cnf(const CNF3& f);

// Vertex layout of the variable gadgets shared by both reductions.
struct Gadget {
  Vertex u = 0, v = 0;
  std::vector<Vertex> y;  // y_0 .. y_p
  std::vector<Vertex> z;  // z_1 .. z_{q+1}
  // Full (u,v)-paths, including any spacer vertices.
  std::vector<Vertex> y_path, z_path;
};

struct Reduction {
  PartitionedDigraph d;
  std::vector<std::string> part_names;
  std::vector<Gadget> gadgets;
  // Clause j -> its three occurrence vertices in literal order.
  std::vector<std::array<Vertex, 3>> occurrences;
  std::vector<Arc> d1_arcs;        // the two paths of every gadget
  std::vector<Arc> dropped_arcs;   // D_1 arcs joining a partite set to itself
};

// With separate_repeats, two occurrences of one clause that would be adjacent
// on a gadget path get a spacer between them. Each spacer is paired with a
// partner on the other path of the same gadget, in a partite set of its own,
// so the pair behaves like V_i^*. Without it, such arcs are dropped.
Reduction build_np1(const CNF3& f, bool separate_repeats = true);
Reduction build_np2(const CNF3& f);

// Real cycle C with 1 <= |V(C) ∩ V_i| < |V_i| for every partite set.
std::optional<GWalk> witness_np1(const PartitionedDigraph& d);
// Real cycle C with |V(C) ∩ V_i| == 1 for every partite set.
std::optional<GWalk> witness_np2(const PartitionedDigraph& d);

inline constexpr int kWitnessThreshold = 64;

}  // namespace gmpd
