#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmpd/core.hpp"

namespace gmpd {

// Semicomplete digraph with a {0,1} weight per arc.
struct ZotspInstance {
  int n = 0;
  std::vector<Arc> arcs;
  std::vector<int> weights;  // parallel to arcs
  std::vector<std::string> names;
};

struct ZotspReport {
  bool ok = false;
  std::string violation;                     // first failing condition
  std::vector<std::vector<Vertex>> cliques;  // weight-1 classes incl. singletons, by smallest vertex
};

ZotspReport validate_zotsp(const ZotspInstance& inst);

// D_0: weight-1 arcs removed, partite sets = the cliques. Throws CliqueViolation.
PartitionedDigraph to_smd(const ZotspInstance& inst);

struct TourPath {
  std::vector<Vertex> path;
  int cost = 0;
};

TourPath min_cost_ham_path(const ZotspInstance& inst);

enum class TourMode { ExtendedExact, AtMostK, StrongBound };

struct TourResult {
  TourMode mode = TourMode::ExtendedExact;
  // ExtendedExact: exact minimum (absent when D has no Hamiltonian cycle).
  std::optional<int> cost;
  // AtMostK: YES/NO.
  std::optional<bool> decision;
  // StrongBound: certified interval containing the optimum.
  int lower = 0;
  int upper = 0;
  std::optional<std::vector<Vertex>> tour;  // witness cycle, when one is known
  std::optional<int> tour_cost;             // its weight
};

// Throws NotExtended (ExtendedExact), TooLarge (AtMostK), NotStrong (StrongBound).
TourResult tour_cost(const ZotspInstance& inst, TourMode mode, int k = 0);

// Weight of a closed tour or of a path through the given order.
int sequence_weight(const ZotspInstance& inst, const std::vector<Vertex>& seq, bool closed);

}  // namespace gmpd
