#pragma once

#include <optional>

#include "gmpd/core.hpp"
#include "gmpd/gwalk.hpp"

namespace gmpd {

// Swaps in the other cycle at a pair of similar vertices; ℓ is exactly
// ℓ(C1) + ℓ(C2). Throws NotExtended, NoSharedPartite.
GWalk merge_same_partite(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2);

// ℓ >= ℓ(C1) + ℓ(C2) when arcs go both ways between the cycles.
// Throws NotExtended, OneDirectional.
GWalk merge_bidirectional(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2);

// Spanning G-cycle with ℓ == c_f(D); absent when D is not strong or n < 2.
// Throws NotExtended.
std::optional<GWalk> spanning_gcycle_extsd(const PartitionedDigraph& d);

}  // namespace gmpd
