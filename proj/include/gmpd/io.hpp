#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmpd/core.hpp"
#include "gmpd/gwalk.hpp"
#include "gmpd/npc.hpp"
#include "gmpd/tsp.hpp"

namespace gmpd {

// One instance file: the digraph (names = vertex legend), optional weights
// parallel to d.arcs(), optional partite-set names.
struct InstanceFile {
  PartitionedDigraph d;
  std::optional<std::vector<int>> weights;
  std::vector<std::string> part_names;
};

// Text format (LF, ASCII):
//   gmpd 1
//   n c
//   p_1 .. p_n          (1-based partite indices)
//   m
//   u v                 (m lines, 1-based, lexicographic)
//   weights             (optional; then m lines, one weight per arc)
//   legend              (optional; then n lines "id name")
//   parts               (optional, after legend; then c lines "index name")
// Throws ParseError with the 1-based line in index().
InstanceFile parse_text(const std::string& text);
std::string emit_text(const InstanceFile& f);

// JSON mirror with keys format, version, n, c, parts, arcs and optional
// weights, names, part_names.
InstanceFile parse_json(const std::string& text);
std::string emit_json(const InstanceFile& f);

// JSON when the first non-space character is '{', text otherwise.
InstanceFile parse_instance(const std::string& text);

ZotspInstance to_zotsp(const InstanceFile& f);
InstanceFile from_zotsp(const ZotspInstance& inst);
InstanceFile from_reduction(const Reduction& r);

// DIMACS CNF; every clause must have exactly three literals.
CNF3 parse_dimacs(const std::string& text);
std::string emit_dimacs(const CNF3& f);

std::string read_file(const std::string& path);

// Inverse of render_walk: "a->b~c" is a path, "a->b~c->(a)" a cycle. Each
// separator must match the pair ("->" an arc, "~" a same-partite pair).
// Throws ParseError.
GWalk parse_walk(const PartitionedDigraph& d, const std::string& text);

}  // namespace gmpd
