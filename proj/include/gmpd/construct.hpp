#pragma once

#include <vector>

#include "gmpd/core.hpp"
#include "gmpd/gwalk.hpp"

namespace gmpd {

// Insertion algorithm; throws NotSemicomplete.
std::vector<Vertex> tournament_ham_path(const PartitionedDigraph& s);
// Moon-style extension; throws NotSemicomplete, NotStrong, Degenerate (n < 2).
std::vector<Vertex> tournament_ham_cycle(const PartitionedDigraph& s);

// ℓ == c, one entry and one exit vertex per partite set.
GWalk good_gcycle_length_c(const PartitionedDigraph& d);
// ℓ == c-1 along a Hamiltonian path of D^c.
GWalk good_gpath_length_c_minus_1(const PartitionedDigraph& d);

// Q with V(Q) = V(P) ∪ V(C) and ℓ(Q) >= ℓ(P) + ℓ(C).
GWalk merge_path_cycle(const PartitionedDigraph& d, const GWalk& p, const GWalk& c);

// Spanning G-path of maximum length.
GWalk longest_gpath(const PartitionedDigraph& d);

// Spanning G-cycle C' with ℓ(C') >= ℓ(C). Requires D strong.
GWalk absorb_to_spanning(const PartitionedDigraph& d, const GWalk& c);

// Spanning factor with at least as many arcs as the partial factor f0.
GFactor grow_factor(const PartitionedDigraph& d, const std::vector<GWalk>& f0);

}  // namespace gmpd
