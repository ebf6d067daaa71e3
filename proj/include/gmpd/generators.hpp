#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gmpd/core.hpp"
#include "gmpd/io.hpp"

namespace gmpd {

// Bounded draws on top of mt19937_64 so output is identical across standard
// libraries (the std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int below(int bound);  // uniform in [0, bound)
  double unit();         // uniform in [0, 1)
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 eng_;
};

// Order 5: a b c x y with {x,y} one partite set.
PartitionedDigraph gen_fig1();
// 16 vertices x1 y1 .. x8 y8 in column order.
PartitionedDigraph gen_fig2();
// |V_i| = k+1 for i < c, |V_c| = k; arcs left to right except V_c -> V_1.
PartitionedDigraph gen_noclose(int k, int c);
// Vertex i < c gets part i, the rest uniform parts; every cross pair gets a
// 2-cycle with probability `density`, otherwise one arc of random direction.
PartitionedDigraph gen_random(int n, int c, double density, std::uint64_t seed);

// Dispatch by name: fig1, fig2, noclose K C, random N C DENSITY SEED,
// sat1 FILE, sat2 FILE. Throws UnknownGenerator.
InstanceFile generate(const std::string& name, const std::vector<std::string>& params);

}  // namespace gmpd
