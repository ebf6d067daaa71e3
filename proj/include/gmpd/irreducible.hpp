#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmpd/core.hpp"
#include "gmpd/gwalk.hpp"

namespace gmpd {

// Isolated: every vertex of C lies in v's partite set, so v is vacuously
// both out- and in-singular.
enum class SingularStatus { OutSingular, InSingular, NonSingular, Isolated };

// LeftOver: C1 ≃> C2. RightOver: C2 ≃> C1. Feasible: both cycles have
// singular vertices but neither direction holds. Mergeable: at most one side
// has singular vertices.
enum class PairRelation { LeftOver, RightOver, Feasible, Mergeable };

const char* singular_status_name(SingularStatus s);
const char* pair_relation_name(PairRelation r);

SingularStatus singular_status(const PartitionedDigraph& d, Vertex v, const GWalk& c);
PairRelation relation(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2);

// Cycle on V(C1) ∪ V(C2) with ℓ >= ℓ(C1) + ℓ(C2), or absent. Splice patterns
// first, then an exact subset DP on the union.
std::optional<GWalk> merge_pair_no_loss(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2);

// Cycles ordered so that cycles[i] ≃> cycles[j] for all i < j.
struct IrreducibleFactor {
  std::vector<GWalk> cycles;
  int arc_count = 0;
};

IrreducibleFactor make_irreducible(const PartitionedDigraph& d, const GFactor& f);

// Raw-scan check of the ordering certificate and the arc count.
bool verify_irreducible(const PartitionedDigraph& d, const IrreducibleFactor& f);

struct BackarcReport {
  std::vector<Arc> back_arcs;           // arcs from C2 to C1
  std::optional<int> shared_part;       // the partite set V of the back arcs
  std::vector<std::string> violations;  // empty when the structure holds
};

// Requires C1 ≃> C2, some arc from C2 to C1 and no no-loss merge; otherwise
// throws PreconditionUnmet.
BackarcReport check_backarc_structure(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2);

// Best concatenation of the cycles in the given order, each opened at some
// position; absent when no choice of openings yields a valid G-cycle.
std::optional<GWalk> chain_merge(const PartitionedDigraph& d, const std::vector<GWalk>& group);

struct StrongCycleResult {
  GWalk cycle;
  int length = 0;
  int c_f = 0;
  int c_prime = 0;  // partite sets with at least two vertices
  int bound = 0;    // c_f - 2c', or c_f - 1 when c' == 1
};

// Throws NotStrong, Degenerate (n < 2).
StrongCycleResult spanning_gcycle_strong(const PartitionedDigraph& d);

struct BipartiteStructureReport {
  bool dominance = false;  // C_i ⇒ C_j for every i < j
  int alternative = 0;     // 1: two trivial cycles V_t, V_{3-t}; 2: all real; 0: neither
  std::optional<GWalk> cycle;
  std::vector<std::string> violations;
};

// Throws NotBipartite, PreconditionUnmet (fewer than two cycles).
BipartiteStructureReport bipartite_factor_structure(const PartitionedDigraph& d, const IrreducibleFactor& f);

}  // namespace gmpd
