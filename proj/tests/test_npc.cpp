#include <algorithm>

#include "doctest.h"
#include "gmpd/gwalk.hpp"
#include "gmpd/npc.hpp"
#include "gmpd/generators.hpp"
#include "oracles.hpp"

using namespace gmpd;

namespace {

CNF3 single_positive() { return {1, {{Literal{1, false}, Literal{1, false}, Literal{1, false}}}}; }

CNF3 contradiction() {
  CNF3 f = single_positive();
  f.clauses.push_back({Literal{1, true}, Literal{1, true}, Literal{1, true}});
  return f;
}

CNF3 three_clause_formula() {
  return {3,
          {{Literal{1, false}, Literal{2, true}, Literal{3, false}},
           {Literal{1, true}, Literal{2, false}, Literal{3, true}},
           {Literal{1, false}, Literal{2, true}, Literal{3, false}}}};
}

Vertex by_name(const PartitionedDigraph& d, const std::string& name) {
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.name(v) == name) return v;
  FAIL("missing vertex " << name);
  return -1;
}

void check_witness1(const PartitionedDigraph& d, const GWalk& c) {
  CHECK(walk_length(d, c) == c.size());
  std::vector<int> count(d.part_count(), 0);
  for (Vertex v : c.seq) ++count[d.part_of(v)];
  for (int p = 0; p < d.part_count(); ++p) {
    CHECK(count[p] >= 1);
    CHECK(count[p] < d.part_size(p));
  }
}

}  // namespace

TEST_CASE("CNF validation") {
  CHECK_THROWS_AS(validate_cnf(CNF3{1, {}}), Error);
  CHECK_THROWS_AS(validate_cnf(CNF3{1, {{Literal{2, false}, Literal{1, false}, Literal{1, false}}}}), Error);
  CHECK_NOTHROW(validate_cnf(three_clause_formula()));
}

TEST_CASE("hand counts for a single clause") {
  const auto r1 = build_np1(single_positive(), /*separate_repeats=*/false);
  // u1, y0..y3, z1, v1, s1, s2, t1, t2, u*.
  CHECK(r1.d.order() == 12);
  CHECK(r1.d.part_count() == 5);
  CHECK(r1.gadgets.size() == 1);
  CHECK(r1.gadgets[0].y.size() == 4);
  CHECK(r1.gadgets[0].z.size() == 1);
  CHECK(r1.d1_arcs.size() == 5 + 2);
  // y1->y2 and y2->y3 lie inside V_1.
  CHECK(r1.dropped_arcs.size() == 2);
  CHECK(is_smd(r1.d));
  const auto r2 = build_np2(single_positive());
  CHECK(r2.d.order() == 11);
  CHECK(r2.d.part_count() == 2 + 1 + 3 + 1);
  CHECK(is_smd(r2.d));
}

TEST_CASE("repeated literals get spacer pairs") {
  const auto r = build_np1(single_positive());
  CHECK(r.d.order() == 12 + 4);
  CHECK(r.dropped_arcs.empty());
  CHECK(r.part_names.back() == "S_2^1");
  const auto& g = r.gadgets[0];
  CHECK(g.y_path.size() == 2 + 4 + 2);
  CHECK(g.z_path.size() == 2 + 1 + 2);
  // One vertex of every spacer pair on each path.
  for (int p = 0; p < r.d.part_count(); ++p) {
    if (r.part_names[p][0] != 'S') continue;
    const auto in = [&](const std::vector<Vertex>& path) {
      return std::count_if(path.begin(), path.end(), [&](Vertex w) { return r.d.part_of(w) == p; });
    };
    CHECK(in(g.y_path) == 1);
    CHECK(in(g.z_path) == 1);
  }
  const auto plain = build_np1(three_clause_formula());
  CHECK(plain.d.order() == build_np1(three_clause_formula(), false).d.order());
  // The literal construction loses the reduction on this pair.
  CNF3 f{1, {{Literal{1, false}, Literal{1, false}, Literal{1, false}},
             {Literal{1, false}, Literal{1, true}, Literal{1, true}}}};
  CHECK(oracle::satisfiable(f));
  CHECK(witness_np1(build_np1(f).d).has_value());
  CHECK_FALSE(witness_np1(build_np1(f, false).d).has_value());
}

TEST_CASE("three-clause inventory") {
  const auto r1 = build_np1(three_clause_formula());
  const std::vector<std::pair<int, int>> pq{{2, 1}, {1, 2}, {2, 1}};
  for (int i = 0; i < 3; ++i) {
    CHECK(static_cast<int>(r1.gadgets[i].y.size()) == pq[i].first + 1);
    CHECK(static_cast<int>(r1.gadgets[i].z.size()) == pq[i].second + 1);
  }
  CHECK(r1.d1_arcs.size() == 21);
  CHECK(r1.dropped_arcs.empty());
  CHECK(r1.d.order() == 24);
  CHECK(r1.part_names.front() == "V^start");
  CHECK(r1.part_names.back() == "V^end");
  CHECK(r1.d.name(r1.gadgets[0].u) == "u_1");
  CHECK(r1.d.name(r1.gadgets[2].v) == "v_3");
  // Gadget chaining: v_i = u_{i+1}.
  CHECK(r1.gadgets[0].v == r1.gadgets[1].u);

  const auto r2 = build_np2(three_clause_formula());
  CHECK(r2.d.order() == 29);
  const auto& d = r2.d;
  const Vertex y11 = by_name(d, "y_1^1"), q11 = by_name(d, "q_1^1");
  CHECK(d.same_part(y11, q11));
  CHECK(r2.part_names[d.part_of(q11)] == "Q_1^1");
  for (int j = 1; j <= 3; ++j) {
    std::vector<Vertex> q;
    for (int i = 1; i <= 3; ++i) q.push_back(by_name(d, "q_" + std::to_string(i) + "^" + std::to_string(j)));
    int inside = 0;
    for (Vertex a : q)
      for (Vertex b : q) inside += d.has_arc(a, b);
    CHECK(inside == 3);
    CHECK(d.has_arc(q[0], q[1]));
    CHECK(d.has_arc(q[1], q[2]));
    CHECK(d.has_arc(q[2], q[0]));
  }
  CHECK(d.has_arc(by_name(d, "x"), by_name(d, "u_1")));
}

TEST_CASE("reductions decide the small formulas") {
  const auto sat1 = witness_np1(build_np1(single_positive()).d);
  REQUIRE(sat1);
  check_witness1(build_np1(single_positive()).d, *sat1);
  CHECK_FALSE(witness_np1(build_np1(contradiction()).d).has_value());
  const auto r2 = build_np2(single_positive());
  const auto sat2 = witness_np2(r2.d);
  REQUIRE(sat2);
  CHECK(sat2->size() == r2.d.part_count());
  CHECK_FALSE(witness_np2(build_np2(contradiction()).d).has_value());
  CHECK(oracle::satisfiable(single_positive()));
  CHECK_FALSE(oracle::satisfiable(contradiction()));
}

TEST_CASE("outputs are SMDs and witnesses match DPLL on random formulas") {
  Rng rng(91);
  for (int t = 0; t < 150; ++t) {
    CNF3 f;
    f.num_vars = 1 + rng.below(3);
    const int m = 1 + rng.below(3);
    for (int j = 0; j < m; ++j) {
      Clause c;
      for (auto& lit : c) lit = Literal{1 + rng.below(f.num_vars), rng.below(2) == 1};
      f.clauses.push_back(c);
    }
    const auto r1 = build_np1(f), r2 = build_np2(f);
    CHECK(is_smd(r1.d));
    CHECK(is_smd(r2.d));
    const bool sat = oracle::satisfiable(f);
    if (r1.d.order() <= 40) CHECK(witness_np1(r1.d).has_value() == sat);
    if (r2.d.order() <= 40) CHECK(witness_np2(r2.d).has_value() == sat);
  }
}
