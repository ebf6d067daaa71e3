#include "doctest.h"
#include "families.hpp"
#include "gmpd/core.hpp"
#include "gmpd/generators.hpp"
#include "oracles.hpp"

using namespace gmpd;

namespace {

PartitionedDigraph transitive3() { return PartitionedDigraph({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}}); }

PartitionedDigraph complete(int n) {
  std::vector<int> part(n);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    part[u] = u;
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  }
  return PartitionedDigraph(part, arcs);
}

}  // namespace

TEST_CASE("construction rejects structural errors") {
  CHECK_THROWS_AS(PartitionedDigraph({0, 2}, {}), Error);
  CHECK_THROWS_AS(PartitionedDigraph({0, 1}, {{0, 0}}), Error);
  CHECK_THROWS_AS(PartitionedDigraph({0, 1}, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(PartitionedDigraph({0, 1}, {{0, 5}}), Error);
}

TEST_CASE("validate on the fig1 instance") {
  const auto d = gen_fig1();
  const auto rep = validate(d);
  CHECK(rep.is_smd);
  CHECK(rep.is_strong);
  CHECK_FALSE(rep.is_extended);
}

TEST_CASE("validate degenerate and broken inputs") {
  const auto single = validate(PartitionedDigraph({0}, {}));
  CHECK(single.is_smd);
  CHECK(single.is_strong);
  const auto bad = validate(PartitionedDigraph({0, 0}, {{0, 1}}));
  CHECK_FALSE(bad.is_smd);
  REQUIRE(bad.internal_arc);
  CHECK(*bad.internal_arc == Arc{0, 1});
  const auto gap = validate(PartitionedDigraph({0, 1, 2}, {{0, 1}, {1, 2}}));
  CHECK_FALSE(gap.is_smd);
  CHECK(gap.missing_pair.has_value());
}

TEST_CASE("strong components") {
  CHECK(is_strong(gen_fig1()));
  CHECK_FALSE(is_strong(transitive3()));
  const auto comps = strong_components(transitive3());
  REQUIRE(comps.size() == 3);
  CHECK(comps.front() == std::vector<Vertex>{0});
  CHECK(is_strong(PartitionedDigraph({0, 1}, {{0, 1}, {1, 0}})));
}

TEST_CASE("k-strong examples") {
  CHECK(is_k_strong(gen_noclose(1, 3), 1));
  CHECK_FALSE(is_k_strong(transitive3(), 1));
  CHECK(is_k_strong(complete(5), 4));
  CHECK_FALSE(is_k_strong(complete(5), 5));
}

TEST_CASE("k-strong agrees with brute force") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    auto d = family::random_smd(rng, 2, 8);
    for (int k = 1; k <= 3; ++k) CHECK(is_k_strong(d, k) == oracle::k_strong(d, k));
  }
}

TEST_CASE("partite contraction") {
  const auto dc = contract_partite(gen_fig1());
  CHECK(dc.order() == 4);
  CHECK(dc.part_count() == 4);
  CHECK(is_strong(dc));
  const auto tr = contract_partite(transitive3());
  CHECK(tr.arcs() == transitive3().arcs());
  const auto one = contract_partite(PartitionedDigraph({0, 0, 0}, {}));
  CHECK(one.order() == 1);
  CHECK(one.arc_count() == 0);
}

TEST_CASE("weighted completion adds only same-partite pairs") {
  const auto d = gen_fig1();
  const auto w = weighted_completion(d);
  int heavy = 0;
  for (auto [arc, weight] : w.weighted_arcs()) {
    CHECK((weight == 1) == d.same_part(arc.first, arc.second));
    heavy += weight;
  }
  CHECK(heavy == 2);
  CHECK(w.has_arc(3, 4));
  CHECK(w.has_arc(4, 3));
  CHECK(w.weighted_arcs().size() == static_cast<std::size_t>(d.arc_count() + 2));
}

TEST_CASE("terminal augmentation") {
  const auto d = gen_fig1();
  CHECK(augment_terminals(d, {}).arcs() == d.arcs());
  const auto dx = augment_terminals(d, {3});
  CHECK(dx.augmented());
  CHECK(dx.has_arc(3, 4));
  CHECK_FALSE(dx.has_arc(4, 3));
  CHECK(augment_terminals(d, {0, 1, 2}).arcs() == d.arcs());
}

TEST_CASE("induced subdigraph renumbers parts") {
  const auto s = induced_subdigraph(gen_fig1(), {1, 3, 4});
  CHECK(s.order() == 3);
  CHECK(s.part_count() == 2);
  CHECK(s.name(1) == "x");
  CHECK(nontrivial_part_count(s) == 1);
}
