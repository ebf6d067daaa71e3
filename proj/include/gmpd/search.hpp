#pragma once

#include <optional>
#include <vector>

#include "gmpd/core.hpp"
#include "gmpd/gwalk.hpp"

namespace gmpd {

// Default size caps of the exponential engines. GMPD_EXACT_THRESHOLD, when
// set, replaces every cap (including the k cap of spanning_gcycle_at_least).
inline constexpr int kHamThreshold = 20;
inline constexpr int kCycleOracleThreshold = 16;
inline constexpr int kPathOracleThreshold = 18;
inline constexpr int kMaxTerminalSet = 6;

int exact_limit(int fallback);

// Bitmask DP on real arcs; also accepts augmented instances.
// Absent for n < 2 or when no Hamiltonian cycle exists. Throws TooLarge.
std::optional<GWalk> exact_ham_cycle(const PartitionedDigraph& d);

// Tries |X| = 0..k in lexicographic order of X and decodes the first
// Hamiltonian cycle of D_X. Throws TooLarge.
std::optional<GWalk> spanning_gcycle_at_least(const PartitionedDigraph& d, int k);

// Hamiltonian (x,y)-path of D*, decoded with same-partite steps as JUMPs.
// Throws TooLarge, PreconditionUnmet (x == y).
std::optional<GWalk> exact_xy_spanning_gpath(const PartitionedDigraph& d, Vertex x, Vertex y);

struct OracleResult {
  int length = 0;
  GWalk witness;
};

// Maximum ℓ over spanning G-cycles (min-JUMP subset DP). Absent when no
// spanning G-cycle exists. Throws TooLarge.
std::optional<OracleResult> oracle_longest_spanning_gcycle(const PartitionedDigraph& d);
// Maximum ℓ over all G-paths of D, spanning or not.
OracleResult oracle_longest_gpath(const PartitionedDigraph& d);

// Best G-cycle whose vertex set is exactly `vertices` (no size cap check
// beyond 64; callers keep the set small).
std::optional<OracleResult> longest_gcycle_on(const PartitionedDigraph& d, const std::vector<Vertex>& vertices);

struct JumpMetrics {
  static constexpr int kUnreachable = -1;
  std::vector<std::vector<int>> n_xy;  // kUnreachable when no (x,y)-G-path
  int n_max = 0;                       // over reachable ordered pairs x != y
  int unreachable_pairs = 0;
  std::optional<int> c_f;              // absent when D has no G-cycle factor
  int bound = 0;                       // min{n - N, c_f}
};

JumpMetrics jump_metrics(const PartitionedDigraph& d);

}  // namespace gmpd
