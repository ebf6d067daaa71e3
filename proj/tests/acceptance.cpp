// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "families.hpp"
#include "gmpd/construct.hpp"
#include "gmpd/extsd.hpp"
#include "gmpd/factor.hpp"
#include "gmpd/generators.hpp"
#include "gmpd/io.hpp"
#include "gmpd/irreducible.hpp"
#include "gmpd/npc.hpp"
#include "gmpd/search.hpp"
#include "gmpd/tsp.hpp"
#include "oracles.hpp"

using namespace gmpd;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  std::vector<std::string> problems;
  void fail(const std::string& why) {
    pass = false;
    problems.push_back(why);
  }
  std::string text() const {
    std::string out;
    for (const auto& p : problems) out += p + "; ";
    return out + note.str();
  }
};

int cf_bound(int c_f, int c_prime) {
  if (c_prime == 0) return c_f;
  if (c_prime == 1) return c_f - 1;
  return c_f - 2 * c_prime;
}

int nontrivial(const PartitionedDigraph& d) {
  int k = 0;
  for (int p = 0; p < d.part_count(); ++p) k += d.part_size(p) >= 2;
  return k;
}

// C1 ≃> C2 recomputed from raw adjacency.
bool over_raw(const PartitionedDigraph& d, const GWalk& c1, const GWalk& c2) {
  auto status = [&](Vertex v, const GWalk& c) {
    bool out = false, in = false;
    for (Vertex w : c.seq) {
      out |= d.has_arc(v, w);
      in |= d.has_arc(w, v);
    }
    return std::pair{out, in};
  };
  bool s1 = false, s2 = false;
  for (Vertex v : c1.seq) {
    auto [out, in] = status(v, c2);
    if (out && in) continue;
    s1 = true;
    if (in) return false;
  }
  for (Vertex v : c2.seq) {
    auto [out, in] = status(v, c1);
    if (out && in) continue;
    s2 = true;
    if (out) return false;
  }
  return s1 && s2;
}

void c1_fig1(Outcome& o) {
  const auto d = gen_fig1();
  auto hc = exact_ham_cycle(d);
  if (!hc || walk_length(d, *hc) != 5 || !is_spanning(d, *hc)) o.fail("no length-5 Hamiltonian cycle");
  else o.note << "ham " << render_walk(d, *hc) << "; ";
  if (oracle::has_real_good_cycle_of_length(d, 4)) o.fail("oracle found a real good 4-cycle");
  auto g = good_gcycle_length_c(d);
  if (walk_length(d, g) != 4 || !is_good(d, g)) o.fail("good G-cycle length " + std::to_string(walk_length(d, g)));
  else o.note << "good G-cycle l=4";
}

void c2_longest_gpath(Outcome& o) {
  Rng rng(2002);
  for (int t = 0; t < 300; ++t) {
    auto d = family::random_smd(rng, 2, 9);
    const GWalk q = longest_gpath(d);
    const int l = is_spanning(d, q) ? walk_length(d, q) : -1;
    const int pcs = max_arc_path_cycle_subdigraph(d).total_arcs;
    const int dp = oracle_longest_gpath(d).length;
    const int brute = oracle::longest_gpath(d);
    if (l != pcs || l != dp || l != brute) {
      o.fail("instance " + std::to_string(t) + ": " + std::to_string(l) + "/" + std::to_string(pcs) + "/" +
             std::to_string(dp) + "/" + std::to_string(brute));
      return;
    }
  }
  o.note << "300 instances agree";
}

void c3_extended(Outcome& o) {
  Rng rng(3003);
  int strong = 0, weak = 0;
  while (strong < 200 || weak < 50) {
    auto d = family::random_extended(rng, 2, 10);
    const bool s = oracle::strongly_connected(d);
    if (s && strong >= 200) continue;
    if (!s && weak >= 50) continue;
    auto c = spanning_gcycle_extsd(d);
    if (!s) {
      ++weak;
      if (c) o.fail("non-strong instance returned a cycle");
      continue;
    }
    ++strong;
    const auto cf = oracle::max_factor_arcs(d);
    const auto lib = oracle_longest_spanning_gcycle(d);
    const auto brute = oracle::longest_spanning_gcycle(d);
    if (!c || !is_spanning(d, *c) || !cf || !lib || !brute || walk_length(d, *c) != *cf || lib->length != *cf ||
        *brute != *cf) {
      o.fail("strong instance " + std::to_string(strong) + " disagrees");
      return;
    }
  }
  o.note << "200 strong equal c_f, 50 non-strong absent";
}

void c4_fig2(Outcome& o) {
  const auto d = gen_fig2();
  const int n = d.order();
  const int cf = c_f(d);
  const auto jm = jump_metrics(d);
  const auto lib = oracle_longest_spanning_gcycle(d);
  const auto brute = oracle::longest_spanning_gcycle(d);
  const bool k3 = spanning_gcycle_at_least(d, 3).has_value();
  const auto k2w = spanning_gcycle_at_least(d, 2);
  o.note << "c_f=" << cf << " N=" << jm.n_max << " oracle=" << (lib ? lib->length : -1)
         << " brute=" << (brute ? *brute : -1) << " k3=" << (k3 ? "YES" : "NO") << " k2=" << (k2w ? "YES" : "NO");
  if (lib) o.note << " witness " << render_walk(d, lib->witness);
  if (cf != 16) o.fail("c_f != 16");
  if (jm.n_max != 0) o.fail("N != 0");
  if (!lib || lib->length != 13 || lib->length > n - 3) o.fail("oracle max != 13");
  if (!k3) o.fail("k=3 not YES");
  if (k2w) o.fail("k=2 not NO");
}

void c5_irreducible(Outcome& o) {
  Rng rng(5005);
  int done = 0, witnesses = 0, violations = 0;
  // Factors past the first 200 come from two-block digraphs seeded with back
  // arcs, where multi-cycle irreducible factors with (C*) witnesses occur.
  while (done < 2200) {
    const bool seeded = done >= 200;
    auto tb = seeded ? family::two_block_backarcs(rng, 0.2 + 0.6 * rng.unit()) : family::TwoBlock{};
    auto d = seeded ? tb.d : family::random_smd(rng, 2, 10);
    std::vector<GWalk> cycles = seeded ? tb.cycles
                                : done % 2 == 0 ? family::random_factor(rng, d)
                                                : std::vector<GWalk>{};
    if (!seeded && done % 2 == 1) {
      try {
        cycles = max_arc_gcycle_factor(d).cycles;
      } catch (const Error&) {
        continue;
      }
    }
    if (cycles.empty()) continue;
    GFactor f;
    try {
      f = make_factor(d, cycles);
    } catch (const Error&) {
      continue;
    }
    ++done;
    IrreducibleFactor irr;
    try {
      irr = make_irreducible(d, f);
    } catch (const std::exception& e) {
      o.fail(std::string("make_irreducible threw: ") + e.what());
      return;
    }
    if (!verify_irreducible(d, irr) || irr.arc_count < f.arc_count) {
      o.fail("certificate or arc count failed");
      return;
    }
    for (std::size_t i = 0; i < irr.cycles.size(); ++i)
      for (std::size_t j = i + 1; j < irr.cycles.size(); ++j) {
        if (!over_raw(d, irr.cycles[i], irr.cycles[j])) {
          o.fail("independent ≃> check failed");
          return;
        }
        try {
          auto rep = check_backarc_structure(d, irr.cycles[i], irr.cycles[j]);
          ++witnesses;
          violations += static_cast<int>(rep.violations.size());
          if (!rep.violations.empty()) o.fail("violation: " + rep.violations.front());
        } catch (const Error& e) {
          if (e.code() != ErrorCode::PreconditionUnmet) throw;
        }
      }
  }
  if (witnesses == 0) o.fail("no (C*) witness exercised");
  o.note << "2200 factors certified, " << witnesses << " back-arc witnesses, " << violations << " violations";
}

void c6_strong(Outcome& o) {
  Rng rng(6006);
  int tighter = 0;
  for (int t = 0; t < 200; ++t) {
    auto d = family::random_strong_smd(rng, 2, 10);
    const auto cf = oracle::max_factor_arcs(d);
    StrongCycleResult r;
    try {
      r = spanning_gcycle_strong(d);
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
      return;
    }
    const int cp = nontrivial(d);
    if (!cf || !is_spanning(d, r.cycle) || walk_length(d, r.cycle) != r.length || r.length < *cf - 2 * cp) {
      o.fail("instance " + std::to_string(t) + " below c_f - 2c'");
      return;
    }
    if (r.length < cf_bound(*cf, cp)) {
      o.fail("instance " + std::to_string(t) + " below the sharper bound");
      return;
    }
    tighter += r.length > *cf - 2 * cp;
  }
  for (int t = 0; t < 100; ++t) {
    auto d = family::strong_split_with_cycle_factor(rng, 3, 10);
    auto r = spanning_gcycle_strong(d);
    if (r.length < d.order() - 1) {
      o.fail("split instance " + std::to_string(t) + " below n-1");
      return;
    }
  }
  o.note << "200 strong SMDs meet c_f-2c' (" << tighter << " strictly above), 100 split >= n-1";
}

void c7_observation(Outcome& o) {
  Rng rng(7007);
  int checked = 0, strict_bip = 0;
  auto check = [&](const PartitionedDigraph& d) -> std::optional<int> {
    const auto jm = jump_metrics(d);
    const auto opt = oracle::longest_spanning_gcycle(d);
    ++checked;
    if (jm.n_max != oracle::max_min_jumps(d)) o.fail("N disagrees with brute force");
    if (opt && jm.c_f && *opt > jm.bound) o.fail("optimum above min{n-N, c_f}");
    if (opt && !jm.c_f) o.fail("cycle without a factor");
    return opt;
  };
  for (int t = 0; t < 300; ++t) check(family::random_smd(rng, 2, 9));
  check(gen_fig1());
  const auto f2 = gen_fig2();
  auto opt2 = check(f2);
  const bool fig2_strict = opt2 && *opt2 < jump_metrics(f2).bound;
  if (!fig2_strict) o.fail("fig2 bound not strict");
  for (int t = 0; t < 50; ++t) {
    auto d = family::bipartite_two_block(rng, 1, 4);
    const auto jm = jump_metrics(d);
    auto opt = check(d);
    const int n = d.order();
    if (jm.n_max != 1 || !jm.c_f || *jm.c_f != n || jm.bound != n - 1) {
      o.fail("bipartite family shape (N=" + std::to_string(jm.n_max) + ")");
      break;
    }
    if (opt && *opt >= n - 1) {
      o.fail("bipartite optimum not below n-1");
      break;
    }
    ++strict_bip;
  }
  o.note << checked << " instances within bound; strict on fig2 and " << strict_bip << " bipartite";
}

void c8_tsp(Outcome& o) {
  Rng rng(8008);
  for (int t = 0; t < 200; ++t) {
    auto d = family::random_smd(rng, 1, 9);
    auto inst = family::tsp_from(d);
    auto path = min_cost_ham_path(inst);
    const int l = walk_length(d, longest_gpath(d));
    if (path.cost + l != d.order() - 1 || path.cost != oracle::tsp_path(inst) ||
        sequence_weight(inst, path.path, false) != path.cost) {
      o.fail("path instance " + std::to_string(t));
      return;
    }
  }
  int with_tour = 0;
  for (int t = 0; t < 100; ++t) {
    auto d = family::random_extended(rng, 2, 10);
    auto inst = family::tsp_from(d);
    auto r = tour_cost(inst, TourMode::ExtendedExact);
    auto brute = oracle::tsp_tour(inst);
    if (r.cost != brute) {
      o.fail("tour instance " + std::to_string(t) + ": " + (r.cost ? std::to_string(*r.cost) : "none") + " vs " +
             (brute ? std::to_string(*brute) : "none"));
      return;
    }
    with_tour += r.cost.has_value();
  }
  o.note << "200 path identities, 100 extended tours (" << with_tour << " Hamiltonian) match brute force";
}

std::vector<CNF3> sat_corpus() {
  std::vector<CNF3> out;
  for (int nv = 1; nv <= 2; ++nv) {
    std::vector<Literal> lits;
    for (int v = 1; v <= nv; ++v) {
      lits.push_back({v, false});
      lits.push_back({v, true});
    }
    std::vector<Clause> clauses;
    for (auto a : lits)
      for (auto b : lits)
        for (auto c : lits) clauses.push_back({a, b, c});
    for (const auto& c1 : clauses) {
      out.push_back({nv, {c1}});
      for (const auto& c2 : clauses) out.push_back({nv, {c1, c2}});
    }
  }
  out.push_back({3,
                 {{Literal{1, false}, Literal{2, true}, Literal{3, false}},
                  {Literal{1, true}, Literal{2, false}, Literal{3, true}},
                  {Literal{1, false}, Literal{2, true}, Literal{3, false}}}});
  return out;
}

void c9_npc(Outcome& o) {
  int count = 0, sat = 0, bad1 = 0, bad2 = 0, not_smd = 0;
  std::string first1, first2;
  for (const auto& f : sat_corpus()) {
    ++count;
    const bool truth = oracle::satisfiable(f);
    sat += truth;
    auto r1 = build_np1(f);
    auto r2 = build_np2(f);
    if (!is_smd(r1.d) || !is_smd(r2.d)) ++not_smd;
    auto w1 = witness_np1(r1.d);
    auto w2 = witness_np2(r2.d);
    if (w1.has_value() != truth) {
      if (!bad1++) first1 = emit_dimacs(f);
    }
    if (w2.has_value() != truth) {
      if (!bad2++) first2 = emit_dimacs(f);
    }
  }
  o.note << count << " formulas (" << sat << " satisfiable); np1 mismatches " << bad1 << ", np2 mismatches " << bad2
         << ", non-SMD outputs " << not_smd;
  if (bad1) o.fail("np1 mismatch on " + first1);
  if (bad2) o.fail("np2 mismatch on " + first2);
  if (not_smd) o.fail("non-SMD output");
}

void c10_four_strong(Outcome& o) {
  Rng rng(1010);
  int pairs = 0;
  for (int t = 0; t < 25; ++t) {
    auto d = family::k_strong_smd(rng, 4, 5, 10);
    for (Vertex x = 0; x < d.order(); ++x)
      for (Vertex y = 0; y < d.order(); ++y) {
        if (x == y) continue;
        auto p = exact_xy_spanning_gpath(d, x, y);
        ++pairs;
        if (!p || p->seq.front() != x || p->seq.back() != y || !is_spanning(d, *p) ||
            !oracle::longest_xy_gpath(d, x, y)) {
          o.fail("instance " + std::to_string(t) + " pair " + std::to_string(x + 1) + "," + std::to_string(y + 1));
          return;
        }
      }
  }
  o.note << "25 4-strong SMDs, " << pairs << " ordered pairs all present";
}

void c11_serialization(Outcome& o) {
  namespace fs = std::filesystem;
  int files = 0;
  for (const auto& entry : fs::directory_iterator(GMPD_GOLDEN_DIR)) {
    const auto ext = entry.path().extension();
    if (ext != ".gmpd" && ext != ".json") continue;
    const std::string text = read_file(entry.path().string());
    const auto f = parse_instance(text);
    const std::string again = ext == ".json" ? emit_json(f) : emit_text(f);
    if (again != text) o.fail("round trip differs: " + entry.path().filename().string());
    if (emit_text(parse_json(emit_json(f))) != emit_text(f)) o.fail("JSON mirror differs: " + entry.path().filename().string());
    ++files;
  }
  if (files == 0) o.fail("no golden files");
  const std::vector<std::pair<std::string, std::vector<std::string>>> gens{
      {"fig1", {}}, {"fig2", {}}, {"noclose", {"1", "3"}}, {"random", {"8", "3", "0.5", "42"}}};
  for (const auto& [name, params] : gens) {
    const std::string a = emit_text(generate(name, params)), b = emit_text(generate(name, params));
    if (a != b) o.fail("generator " + name + " not deterministic");
    std::string stem = name;
    for (const auto& p : params) stem += "_" + p;
    const fs::path golden = fs::path(GMPD_GOLDEN_DIR) / (stem + ".gmpd");
    if (!fs::exists(golden) || read_file(golden.string()) != a) o.fail("generator " + name + " differs from " + stem + ".gmpd");
  }
  o.note << files << " golden files round-trip; generators byte-identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 fig1 suite", c1_fig1},
      {"2 longest G-path equality", c2_longest_gpath},
      {"3 extended SD spanning G-cycle", c3_extended},
      {"4 fig2 suite", c4_fig2},
      {"5 irreducible factor certificate", c5_irreducible},
      {"6 strong SMD cycle bound", c6_strong},
      {"7 observation bound", c7_observation},
      {"8 TSP bridge", c8_tsp},
      {"9 reduction soundness corpus", c9_npc},
      {"10 4-strong spanning G-paths", c10_four_strong},
      {"11 serialization", c11_serialization},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("%s criterion %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.text().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
