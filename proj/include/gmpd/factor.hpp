#pragma once

#include <optional>
#include <vector>

#include "gmpd/core.hpp"
#include "gmpd/gwalk.hpp"

namespace gmpd {

// Square min-cost assignment. Entries equal to kForbidden may not be used.
struct AssignmentResult {
  long long cost = 0;
  std::vector<int> column_of;  // row -> column
};

inline constexpr long long kForbidden = -1;

// Hungarian method; absent when no perfect assignment avoids forbidden cells.
std::optional<AssignmentResult> solve_assignment(const std::vector<std::vector<long long>>& cost);

// Optimal assignment whose row->column map is lexicographically smallest
// among all optimal ones.
std::optional<AssignmentResult> solve_assignment_lex(const std::vector<std::vector<long long>>& cost);

// Cost grid of the cycle-factor model on D*: 0 for arcs, 1 for same-partite
// pairs, forbidden otherwise (and on the diagonal). With `dummy`, an extra
// vertex n with 0-cost arcs to and from every vertex is appended.
std::vector<std::vector<long long>> completion_costs(const PartitionedDigraph& d, bool dummy);

// Throws Degenerate for n < 2 and NoFactor when D has no G-cycle factor.
GFactor max_arc_gcycle_factor(const PartitionedDigraph& d);
int c_f(const PartitionedDigraph& d);

struct PathCycleSubdigraph {
  GWalk path;
  std::vector<GWalk> cycles;
  int total_arcs = 0;
};

PathCycleSubdigraph max_arc_path_cycle_subdigraph(const PartitionedDigraph& d);

// Cycles of a successor permutation restricted to `count` vertices, each
// started at its smallest vertex, ordered by that vertex.
std::vector<std::vector<Vertex>> permutation_cycles(const std::vector<int>& succ, int count);

GFactor make_factor(const PartitionedDigraph& d, std::vector<GWalk> cycles);

}  // namespace gmpd
