// gmpd: command-line front end. Exit codes: 0 ok / YES, 1 NO, 2 error.

#include <iostream>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gmpd/construct.hpp"
#include "gmpd/extsd.hpp"
#include "gmpd/factor.hpp"
#include "gmpd/generators.hpp"
#include "gmpd/io.hpp"
#include "gmpd/irreducible.hpp"
#include "gmpd/npc.hpp"
#include "gmpd/search.hpp"
#include "gmpd/tsp.hpp"
#include "json.hpp"

using namespace gmpd;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNo = 1, kError = 2 };

struct Options {
  bool json_out = false;
};

std::string load(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return read_file(path);
}

InstanceFile load_instance(const std::string& path) { return parse_instance(load(path)); }

// Result block: "key: value" lines, or one JSON object.
class Report {
 public:
  explicit Report(const Options& opt) : opt_(opt) {}
  template <typename T>
  Report& set(const std::string& key, const T& value) {
    j_[key] = value;
    return *this;
  }
  Report& walk(const PartitionedDigraph& d, const std::string& key, const GWalk& w) {
    return set(key, render_walk(d, w));
  }
  int print(int code) const {
    if (opt_.json_out) {
      std::cout << j_.dump(2) << '\n';
      return code;
    }
    for (const auto& [k, v] : j_.items()) {
      std::cout << k << ": ";
      if (v.is_string()) {
        std::cout << v.get<std::string>();
      } else if (v.is_array()) {
        bool first = true;
        for (const auto& e : v) {
          std::cout << (first ? "" : " ") << (e.is_string() ? e.get<std::string>() : e.dump());
          first = false;
        }
      } else {
        std::cout << v.dump();
      }
      std::cout << '\n';
    }
    return code;
  }

 private:
  const Options& opt_;
  json j_ = json::object();
};

int emit_instance(const Options& opt, const InstanceFile& f) {
  std::cout << (opt.json_out ? emit_json(f) : emit_text(f));
  return kOk;
}

int decision(Report& r, bool yes) {
  r.set("status", yes ? "yes" : "no");
  return r.print(yes ? kOk : kNo);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized paths and cycles in semicomplete multipartite digraphs"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_out, "JSON output");
  std::function<int()> action;
  std::string file;

  auto* validate_cmd = app.add_subcommand("validate", "Check the SMD, extended and strong properties");
  validate_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();
  validate_cmd->callback([&] {
    action = [&] {
      const auto f = load_instance(file);
      const auto rep = validate(f.d);
      Report r(opt);
      r.set("n", f.d.order()).set("c", f.d.part_count()).set("m", f.d.arc_count());
      r.set("smd", rep.is_smd).set("extended", rep.is_extended).set("strong", rep.is_strong);
      auto pair_text = [&](Vertex a, Vertex b) { return f.d.name(a) + " " + f.d.name(b); };
      if (rep.internal_arc) r.set("internal_arc", pair_text(rep.internal_arc->first, rep.internal_arc->second));
      if (rep.missing_pair) r.set("missing_pair", pair_text(rep.missing_pair->first, rep.missing_pair->second));
      if (rep.unreachable) r.set("unreachable", pair_text(rep.unreachable->first, rep.unreachable->second));
      r.set("status", rep.is_smd ? "yes" : "no");
      return r.print(rep.is_smd ? kOk : kNo);
    };
  });

  auto* factor_cmd = app.add_subcommand("factor", "Maximum-arc G-cycle factor");
  factor_cmd->add_option("file", file)->required();
  factor_cmd->callback([&] {
    action = [&] {
      const auto f = load_instance(file);
      const auto fac = max_arc_gcycle_factor(f.d);
      std::vector<std::string> cycles;
      for (const auto& c : fac.cycles) cycles.push_back(render_walk(f.d, c));
      Report r(opt);
      r.set("status", "ok").set("c_f", fac.arc_count).set("cycles", cycles);
      return r.print(kOk);
    };
  });

  auto* lgp_cmd = app.add_subcommand("longest-gpath", "Spanning G-path of maximum length");
  lgp_cmd->add_option("file", file)->required();
  lgp_cmd->callback([&] {
    action = [&] {
      const auto f = load_instance(file);
      require_smd(f.d, "longest-gpath");
      const auto q = longest_gpath(f.d);
      Report r(opt);
      r.set("status", "ok").set("length", walk_length(f.d, q)).walk(f.d, "walk", q);
      return r.print(kOk);
    };
  });

  bool ext = false, strong = false;
  int atleast = -1;
  auto* sgc_cmd = app.add_subcommand("spanning-gcycle", "Long spanning G-cycles");
  sgc_cmd->add_option("file", file)->required();
  auto* ext_flag = sgc_cmd->add_flag("--ext", ext, "Extended semicomplete digraphs (exact)");
  auto* strong_flag = sgc_cmd->add_flag("--strong", strong, "Strong SMDs (length >= c_f - 2c')");
  auto* atleast_opt = sgc_cmd->add_option("--atleast", atleast, "Decide length >= n - K");
  ext_flag->excludes(strong_flag)->excludes(atleast_opt);
  strong_flag->excludes(atleast_opt);
  sgc_cmd->callback([&] {
    action = [&]() -> int {
      const auto f = load_instance(file);
      const auto& d = f.d;
      Report r(opt);
      if (ext) {
        auto c = spanning_gcycle_extsd(d);
        if (c) r.set("length", walk_length(d, *c)).walk(d, "walk", *c);
        return decision(r, c.has_value());
      }
      if (strong) {
        const auto res = spanning_gcycle_strong(d);
        r.set("status", "ok").set("length", res.length).set("c_f", res.c_f).set("c_prime", res.c_prime);
        r.set("bound", res.bound).walk(d, "walk", res.cycle);
        return r.print(kOk);
      }
      if (atleast < 0) throw CLI::ValidationError("spanning-gcycle", "one of --ext, --strong, --atleast K is required");
      auto c = spanning_gcycle_at_least(d, atleast);
      r.set("k", atleast);
      if (c) r.set("length", walk_length(d, *c)).walk(d, "walk", *c);
      return decision(r, c.has_value());
    };
  });

  int x = 0, y = 0;
  auto* xy_cmd = app.add_subcommand("xy-gpath", "Spanning (x,y)-G-path (1-based ids)");
  xy_cmd->add_option("file", file)->required();
  xy_cmd->add_option("x", x)->required();
  xy_cmd->add_option("y", y)->required();
  xy_cmd->callback([&] {
    action = [&] {
      const auto f = load_instance(file);
      auto p = exact_xy_spanning_gpath(f.d, x - 1, y - 1);
      Report r(opt);
      if (p) r.set("length", walk_length(f.d, *p)).walk(f.d, "walk", *p);
      return decision(r, p.has_value());
    };
  });

  auto* bound_cmd = app.add_subcommand("bound", "N, c_f and min{n - N, c_f}");
  bound_cmd->add_option("file", file)->required();
  bound_cmd->callback([&] {
    action = [&] {
      const auto f = load_instance(file);
      const auto jm = jump_metrics(f.d);
      Report r(opt);
      r.set("status", "ok").set("N", jm.n_max);
      if (jm.c_f) r.set("c_f", *jm.c_f);
      else r.set("c_f", "none");
      r.set("bound", jm.bound).set("unreachable_pairs", jm.unreachable_pairs);
      return r.print(kOk);
    };
  });

  auto* tsp_cmd = app.add_subcommand("tsp", "{0,1}-weighted semicomplete TSP");
  tsp_cmd->require_subcommand(1);
  auto* tsp_path = tsp_cmd->add_subcommand("path", "Minimum-cost Hamiltonian path");
  tsp_path->add_option("file", file)->required();
  tsp_path->callback([&] {
    action = [&] {
      const auto inst = to_zotsp(load_instance(file));
      const auto p = min_cost_ham_path(inst);
      std::vector<std::string> names;
      for (Vertex v : p.path) names.push_back(inst.names.empty() ? std::to_string(v + 1) : inst.names[v]);
      Report r(opt);
      r.set("status", "ok").set("cost", p.cost).set("path", names);
      return r.print(kOk);
    };
  });
  std::string mode;
  int tsp_k = 0;
  auto* tsp_tour = tsp_cmd->add_subcommand("tour", "Tour cost: MODE is exact, atmost or strong");
  tsp_tour->add_option("mode", mode)->required()->check(CLI::IsMember({"exact", "atmost", "strong"}));
  tsp_tour->add_option("file", file)->required();
  tsp_tour->add_option("-k,--k", tsp_k, "Budget for atmost");
  tsp_tour->callback([&] {
    action = [&] {
      const auto inst = to_zotsp(load_instance(file));
      const TourMode m = mode == "exact" ? TourMode::ExtendedExact
                         : mode == "atmost" ? TourMode::AtMostK
                                            : TourMode::StrongBound;
      const auto res = tour_cost(inst, m, tsp_k);
      Report r(opt);
      r.set("mode", mode);
      if (res.tour) {
        std::vector<std::string> names;
        for (Vertex v : *res.tour) names.push_back(inst.names.empty() ? std::to_string(v + 1) : inst.names[v]);
        r.set("tour", names).set("tour_cost", *res.tour_cost);
      }
      if (m == TourMode::ExtendedExact) {
        if (res.cost) r.set("cost", *res.cost);
        return decision(r, res.cost.has_value());
      }
      if (m == TourMode::AtMostK) {
        r.set("k", tsp_k);
        return decision(r, *res.decision);
      }
      r.set("status", "ok").set("lower", res.lower).set("upper", res.upper);
      return r.print(kOk);
    };
  });

  auto* npc_cmd = app.add_subcommand("npc", "Reductions from 3-SAT and witness searches");
  npc_cmd->require_subcommand(1);
  for (const char* name : {"build1", "build2"}) {
    auto* sub = npc_cmd->add_subcommand(name, "Build the reduction digraph from a DIMACS CNF");
    sub->add_option("cnf", file)->required();
    const std::string which = name;
    sub->callback([&, which] {
      action = [&, which] {
        const CNF3 cnf = parse_dimacs(load(file));
        return emit_instance(opt, from_reduction(which == "build1" ? build_np1(cnf) : build_np2(cnf)));
      };
    });
  }
  for (const char* name : {"witness1", "witness2"}) {
    auto* sub = npc_cmd->add_subcommand(name, "Search for the partite-constrained cycle");
    sub->add_option("file", file)->required();
    const std::string which = name;
    sub->callback([&, which] {
      action = [&, which] {
        const auto f = load_instance(file);
        auto c = which == "witness1" ? witness_np1(f.d) : witness_np2(f.d);
        Report r(opt);
        if (c) r.set("length", walk_length(f.d, *c)).walk(f.d, "walk", *c);
        return decision(r, c.has_value());
      };
    });
  }

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact subset-DP oracles");
  oracle_cmd->require_subcommand(1);
  auto* oracle_gc = oracle_cmd->add_subcommand("gcycle", "Longest spanning G-cycle");
  oracle_gc->add_option("file", file)->required();
  oracle_gc->callback([&] {
    action = [&] {
      const auto f = load_instance(file);
      auto res = oracle_longest_spanning_gcycle(f.d);
      Report r(opt);
      if (res) r.set("length", res->length).walk(f.d, "walk", res->witness);
      return decision(r, res.has_value());
    };
  });
  auto* oracle_gp = oracle_cmd->add_subcommand("gpath", "Longest G-path");
  oracle_gp->add_option("file", file)->required();
  oracle_gp->callback([&] {
    action = [&] {
      const auto f = load_instance(file);
      auto res = oracle_longest_gpath(f.d);
      Report r(opt);
      r.set("status", "ok").set("length", res.length).walk(f.d, "walk", res.witness);
      return r.print(kOk);
    };
  });

  std::string gen_name;
  std::vector<std::string> gen_params;
  auto* gen_cmd = app.add_subcommand("gen", "Generators: fig1, fig2, noclose K C, random N C DENSITY SEED, sat1/sat2 CNF");
  gen_cmd->add_option("name", gen_name)->required();
  gen_cmd->add_option("params", gen_params);
  gen_cmd->callback([&] {
    action = [&] { return emit_instance(opt, generate(gen_name, gen_params)); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kError;
  }
}
