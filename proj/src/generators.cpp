#include "gmpd/generators.hpp"

#include <algorithm>
#include <set>

namespace gmpd {

int Rng::below(int bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t b = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % b);
  std::uint64_t x;
  do x = eng_(); while (x >= limit);
  return static_cast<int>(x % b);
}

double Rng::unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

PartitionedDigraph gen_fig1() {
  enum { a, b, c, x, y };
  return PartitionedDigraph({0, 1, 2, 3, 3},
                            {{a, b}, {b, c}, {a, c}, {x, a}, {x, c}, {b, x}, {a, y}, {c, y}, {y, b}},
                            {"a", "b", "c", "x", "y"});
}

PartitionedDigraph gen_fig2() {
  auto X = [](int i) { return 2 * (i - 1); };
  auto Y = [](int i) { return 2 * (i - 1) + 1; };
  std::vector<int> part(16);
  const std::vector<std::vector<Vertex>> classes{{X(1), Y(4), X(7)},
                                                 {X(2), Y(5), X(8)},
                                                 {Y(1), Y(2), Y(3)},
                                                 {X(3), X(4), X(5), X(6)},
                                                 {Y(6), Y(7), Y(8)}};
  for (std::size_t p = 0; p < classes.size(); ++p)
    for (Vertex v : classes[p]) part[v] = static_cast<int>(p);
  const std::set<Arc> backward{{X(2), X(1)}, {X(3), X(2)}, {Y(4), Y(3)}, {Y(5), Y(4)},
                               {Y(6), Y(5)}, {X(7), X(6)}, {X(8), X(7)}};
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < 16; ++u)
    for (Vertex v = 0; v < 16; ++v) {
      if (u == v || part[u] == part[v]) continue;
      const int cu = u / 2, cv = v / 2;
      if (cu == cv || backward.count({u, v}) || (cu < cv && !backward.count({v, u}))) arcs.push_back({u, v});
    }
  std::vector<std::string> names;
  for (int i = 1; i <= 8; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  return PartitionedDigraph(part, arcs, names);
}

PartitionedDigraph gen_noclose(int k, int c) {
  if (k < 1 || c < 2) throw Error(ErrorCode::InvalidInstance, "noclose needs k >= 1 and c >= 2");
  std::vector<int> part;
  for (int i = 0; i < c; ++i) part.insert(part.end(), i + 1 < c ? k + 1 : k, i);
  const int n = static_cast<int>(part.size());
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (part[u] == part[v]) continue;
      const bool closing = part[u] == c - 1 && part[v] == 0;
      const bool forward = part[u] < part[v] && !(part[u] == 0 && part[v] == c - 1);
      if (closing || forward) arcs.push_back({u, v});
    }
  return PartitionedDigraph(part, arcs);
}

PartitionedDigraph gen_random(int n, int c, double density, std::uint64_t seed) {
  if (n < 1 || c < 1 || c > n) throw Error(ErrorCode::InvalidInstance, "random needs 1 <= c <= n");
  if (density < 0.0 || density > 1.0) throw Error(ErrorCode::InvalidInstance, "density must lie in [0, 1]");
  Rng rng(seed);
  std::vector<int> part(n);
  for (int v = 0; v < n; ++v) part[v] = v < c ? v : rng.below(c);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (part[u] == part[v]) continue;
      if (rng.chance(density)) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
      } else if (rng.below(2) == 0) {
        arcs.push_back({u, v});
      } else {
        arcs.push_back({v, u});
      }
    }
  std::sort(arcs.begin(), arcs.end());
  return PartitionedDigraph(part, arcs);
}

namespace {

int int_param(const std::vector<std::string>& p, std::size_t i, const std::string& gen) {
  if (i >= p.size()) throw Error(ErrorCode::InvalidInstance, gen + ": missing parameter " + std::to_string(i + 1));
  try {
    std::size_t used = 0;
    const int v = std::stoi(p[i], &used);
    if (used == p[i].size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidInstance, gen + ": bad integer '" + p[i] + "'");
}

}  // namespace

InstanceFile generate(const std::string& name, const std::vector<std::string>& params) {
  InstanceFile f;
  if (name == "fig1") {
    f.d = gen_fig1();
  } else if (name == "fig2") {
    f.d = gen_fig2();
  } else if (name == "noclose") {
    f.d = gen_noclose(int_param(params, 0, name), int_param(params, 1, name));
  } else if (name == "random") {
    const int n = int_param(params, 0, name), c = int_param(params, 1, name);
    if (params.size() < 4) throw Error(ErrorCode::InvalidInstance, "random: needs N C DENSITY SEED");
    double density = 0;
    std::uint64_t seed = 0;
    try {
      density = std::stod(params[2]);
      seed = std::stoull(params[3]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInstance, "random: bad DENSITY or SEED");
    }
    f.d = gen_random(n, c, density, seed);
  } else if (name == "sat1" || name == "sat2") {
    if (params.empty()) throw Error(ErrorCode::InvalidInstance, name + ": needs a DIMACS file");
    const CNF3 cnf = parse_dimacs(read_file(params[0]));
    f = from_reduction(name == "sat1" ? build_np1(cnf) : build_np2(cnf));
  } else {
    throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'");
  }
  return f;
}

}  // namespace gmpd
