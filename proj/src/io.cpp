#include "gmpd/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace gmpd {

namespace {

using json = nlohmann::json;

[[noreturn]] void parse_fail(int line, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why, line);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (unsigned char ch : lines[i])
      if (ch == '\r' || ch > 127) parse_fail(static_cast<int>(i) + 1, "non-ASCII or CR character");
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int to_int(const std::string& t, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) parse_fail(line, "expected an integer, got '" + t + "'");
  return value;
}

// Checks shared by both formats; arcs are 0-based here.
InstanceFile assemble(int n, int c, const std::vector<int>& parts1, std::vector<std::pair<Arc, int>> arcs,
                      bool weighted, std::vector<std::string> names, std::vector<std::string> part_names,
                      const std::vector<int>& arc_lines) {
  std::vector<int> part(n);
  std::vector<bool> used(c, false);
  for (int i = 0; i < n; ++i) {
    if (parts1[i] < 1 || parts1[i] > c) parse_fail(3, "partite index out of range at vertex " + std::to_string(i + 1));
    part[i] = parts1[i] - 1;
    used[part[i]] = true;
  }
  for (int p = 0; p < c; ++p)
    if (!used[p]) parse_fail(3, "partite index " + std::to_string(p + 1) + " unused");
  std::map<Arc, int> seen;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto [u, v] = arcs[i].first;
    const int line = arc_lines.empty() ? 0 : arc_lines[i];
    if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(line, "arc endpoint out of range");
    if (u == v) parse_fail(line, "loop");
    if (!seen.emplace(arcs[i].first, arcs[i].second).second) parse_fail(line, "duplicate arc");
    if (weighted && arcs[i].second != 0 && arcs[i].second != 1) parse_fail(line, "weight must be 0 or 1");
  }
  std::vector<Arc> plain;
  std::vector<int> weights;
  for (const auto& [a, w] : seen) {
    plain.push_back(a);
    weights.push_back(w);
  }
  InstanceFile f;
  f.d = PartitionedDigraph(part, plain, std::move(names));
  if (weighted) f.weights = std::move(weights);
  f.part_names = std::move(part_names);
  return f;
}

}  // namespace

InstanceFile parse_text(const std::string& text) {
  const auto lines = split_lines(text);
  std::size_t at = 0;
  auto next = [&](const char* what) -> std::vector<std::string> {
    if (at >= lines.size()) parse_fail(static_cast<int>(at) + 1, std::string("unexpected end of file, expected ") + what);
    return tokens(lines[at++]);
  };
  auto line_no = [&] { return static_cast<int>(at); };

  auto head = next("header");
  if (head.size() != 2 || head[0] != "gmpd" || head[1] != "1") parse_fail(1, "header must be 'gmpd 1'");
  auto nc = next("'n c'");
  if (nc.size() != 2) parse_fail(2, "expected 'n c'");
  const int n = to_int(nc[0], 2), c = to_int(nc[1], 2);
  if (n < 1 || c < 1 || c > n) parse_fail(2, "need 1 <= c <= n");
  auto pl = next("partite line");
  if (static_cast<int>(pl.size()) != n) parse_fail(3, "partite line needs n entries");
  std::vector<int> parts1;
  for (const auto& t : pl) parts1.push_back(to_int(t, 3));
  auto ml = next("arc count");
  if (ml.size() != 1) parse_fail(4, "expected the arc count");
  const int m = to_int(ml[0], 4);
  if (m < 0) parse_fail(4, "negative arc count");
  std::vector<std::pair<Arc, int>> arcs;
  std::vector<int> arc_lines;
  for (int i = 0; i < m; ++i) {
    auto t = next("arc");
    if (t.size() != 2) parse_fail(line_no(), "expected 'u v'");
    arcs.push_back({{to_int(t[0], line_no()) - 1, to_int(t[1], line_no()) - 1}, 0});
    arc_lines.push_back(line_no());
  }
  bool weighted = false;
  std::vector<std::string> names, part_names;
  std::string section;
  while (at < lines.size()) {
    auto t = next("section");
    if (t.size() != 1) parse_fail(line_no(), "expected a section name");
    if (t[0] == "weights" && section.empty()) {
      weighted = true;
      for (int i = 0; i < m; ++i) {
        auto w = next("weight");
        if (w.size() != 1) parse_fail(line_no(), "expected one weight");
        arcs[i].second = to_int(w[0], line_no());
      }
      section = "weights";
    } else if (t[0] == "legend" && section != "legend" && section != "parts") {
      for (int i = 0; i < n; ++i) {
        auto e = next("legend entry");
        if (e.size() != 2 || to_int(e[0], line_no()) != i + 1) parse_fail(line_no(), "expected 'id name' in order");
        names.push_back(e[1]);
      }
      section = "legend";
    } else if (t[0] == "parts" && section == "legend") {
      for (int i = 0; i < c; ++i) {
        auto e = next("part name");
        if (e.size() != 2 || to_int(e[0], line_no()) != i + 1) parse_fail(line_no(), "expected 'index name' in order");
        part_names.push_back(e[1]);
      }
      section = "parts";
    } else {
      parse_fail(line_no(), "unexpected section '" + t[0] + "'");
    }
  }
  return assemble(n, c, parts1, std::move(arcs), weighted, std::move(names), std::move(part_names), arc_lines);
}

std::string emit_text(const InstanceFile& f) {
  const auto& d = f.d;
  std::ostringstream out;
  out << "gmpd 1\n" << d.order() << ' ' << d.part_count() << '\n';
  for (Vertex v = 0; v < d.order(); ++v) out << (v ? " " : "") << d.part_of(v) + 1;
  out << '\n';
  const auto arcs = d.arcs();
  out << arcs.size() << '\n';
  for (auto [u, v] : arcs) out << u + 1 << ' ' << v + 1 << '\n';
  if (f.weights) {
    out << "weights\n";
    for (int w : *f.weights) out << w << '\n';
  }
  if (d.has_names()) {
    out << "legend\n";
    for (Vertex v = 0; v < d.order(); ++v) out << v + 1 << ' ' << d.names()[v] << '\n';
    if (!f.part_names.empty()) {
      out << "parts\n";
      for (std::size_t p = 0; p < f.part_names.size(); ++p) out << p + 1 << ' ' << f.part_names[p] << '\n';
    }
  }
  return out.str();
}

InstanceFile parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(0, std::string("malformed JSON: ") + e.what());
  }
  try {
    if (j.value("format", "") != "gmpd" || j.value("version", 0) != 1) parse_fail(0, "expected format gmpd version 1");
    const int n = j.at("n").get<int>(), c = j.at("c").get<int>();
    if (n < 1 || c < 1 || c > n) parse_fail(0, "need 1 <= c <= n");
    auto parts1 = j.at("parts").get<std::vector<int>>();
    if (static_cast<int>(parts1.size()) != n) parse_fail(0, "parts needs n entries");
    std::vector<std::pair<Arc, int>> arcs;
    for (const auto& a : j.at("arcs")) {
      auto uv = a.get<std::vector<int>>();
      if (uv.size() != 2) parse_fail(0, "arc needs two endpoints");
      arcs.push_back({{uv[0] - 1, uv[1] - 1}, 0});
    }
    const bool weighted = j.contains("weights");
    if (weighted) {
      auto w = j.at("weights").get<std::vector<int>>();
      if (w.size() != arcs.size()) parse_fail(0, "weights must parallel arcs");
      for (std::size_t i = 0; i < w.size(); ++i) arcs[i].second = w[i];
    }
    std::vector<std::string> names, part_names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    if (j.contains("part_names")) part_names = j.at("part_names").get<std::vector<std::string>>();
    if (!names.empty() && static_cast<int>(names.size()) != n) parse_fail(0, "names needs n entries");
    if (!part_names.empty() && (names.empty() || static_cast<int>(part_names.size()) != c))
      parse_fail(0, "part_names needs names and c entries");
    return assemble(n, c, parts1, std::move(arcs), weighted, std::move(names), std::move(part_names), {});
  } catch (const json::exception& e) {
    parse_fail(0, std::string("bad JSON field: ") + e.what());
  }
}

std::string emit_json(const InstanceFile& f) {
  const auto& d = f.d;
  nlohmann::ordered_json j;
  j["format"] = "gmpd";
  j["version"] = 1;
  j["n"] = d.order();
  j["c"] = d.part_count();
  std::vector<int> parts;
  for (int p : d.parts()) parts.push_back(p + 1);
  j["parts"] = parts;
  auto arcs = nlohmann::ordered_json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u + 1, v + 1});
  j["arcs"] = arcs;
  if (f.weights) j["weights"] = *f.weights;
  if (d.has_names()) j["names"] = d.names();
  if (d.has_names() && !f.part_names.empty()) j["part_names"] = f.part_names;
  return j.dump(2) + "\n";
}

InstanceFile parse_instance(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

ZotspInstance to_zotsp(const InstanceFile& f) {
  ZotspInstance inst;
  inst.n = f.d.order();
  inst.arcs = f.d.arcs();
  inst.weights = f.weights ? *f.weights : std::vector<int>(inst.arcs.size(), 0);
  inst.names = f.d.names();
  return inst;
}

InstanceFile from_zotsp(const ZotspInstance& inst) {
  std::vector<std::pair<Arc, int>> sorted;
  for (std::size_t i = 0; i < inst.arcs.size(); ++i) sorted.push_back({inst.arcs[i], inst.weights[i]});
  std::sort(sorted.begin(), sorted.end());
  std::vector<Arc> arcs;
  std::vector<int> weights;
  for (const auto& [a, w] : sorted) {
    arcs.push_back(a);
    weights.push_back(w);
  }
  std::vector<int> part(inst.n);
  for (int v = 0; v < inst.n; ++v) part[v] = v;
  InstanceFile f;
  f.d = PartitionedDigraph(part, arcs, inst.names);
  f.weights = std::move(weights);
  return f;
}

InstanceFile from_reduction(const Reduction& r) {
  InstanceFile f;
  f.d = r.d;
  f.part_names = r.part_names;
  return f;
}

CNF3 parse_dimacs(const std::string& text) {
  const auto lines = split_lines(text);
  CNF3 f;
  int declared = -1;
  std::vector<int> pending;
  int pending_line = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    auto t = tokens(lines[i]);
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "p") {
      if (declared >= 0 || t.size() != 4 || t[1] != "cnf") parse_fail(line, "expected 'p cnf V C' once");
      f.num_vars = to_int(t[2], line);
      declared = to_int(t[3], line);
      continue;
    }
    if (declared < 0) parse_fail(line, "clause before the problem line");
    for (const auto& tok : t) {
      const int lit = to_int(tok, line);
      if (pending.empty()) pending_line = line;
      if (lit != 0) {
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) parse_fail(pending_line, "clause must have exactly 3 literals");
      Clause cl;
      for (int k = 0; k < 3; ++k) {
        const int var = std::abs(pending[k]);
        if (var > f.num_vars) parse_fail(pending_line, "literal uses an undeclared variable");
        cl[k] = Literal{var, pending[k] < 0};
      }
      f.clauses.push_back(cl);
      pending.clear();
    }
  }
  if (declared < 0) parse_fail(static_cast<int>(lines.size()), "missing problem line");
  if (!pending.empty()) parse_fail(pending_line, "unterminated clause");
  if (static_cast<int>(f.clauses.size()) != declared)
    parse_fail(static_cast<int>(lines.size()), "clause count differs from the problem line");
  try {
    validate_cnf(f);
  } catch (const Error& e) {
    parse_fail(0, e.what());
  }
  return f;
}

std::string emit_dimacs(const CNF3& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& cl : f.clauses) {
    for (const auto& lit : cl) out << (lit.negated ? -lit.var : lit.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

GWalk parse_walk(const PartitionedDigraph& d, const std::string& text) {
  std::map<std::string, Vertex> ids;
  for (Vertex v = 0; v < d.order(); ++v) ids[d.name(v)] = v;
  auto lookup = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) parse_fail(0, "unknown vertex '" + name + "' in walk");
    return it->second;
  };
  std::vector<Vertex> seq;
  std::vector<bool> real;  // separator after seq[i]
  std::size_t at = 0;
  std::optional<Vertex> closing;
  while (at < text.size()) {
    if (text[at] == '(') {
      const auto end = text.find(')', at);
      if (end == std::string::npos || end + 1 != text.size()) parse_fail(0, "malformed cycle closing");
      closing = lookup(text.substr(at + 1, end - at - 1));
      break;
    }
    std::size_t end = at;
    while (end < text.size() && text[end] != '~' && text.compare(end, 2, "->") != 0) ++end;
    seq.push_back(lookup(text.substr(at, end - at)));
    if (end == text.size()) break;
    real.push_back(text[end] == '-');
    at = end + (text[end] == '-' ? 2 : 1);
    if (at == text.size()) parse_fail(0, "walk ends with a separator");
  }
  if (seq.empty()) parse_fail(0, "empty walk");
  if (closing) {
    if (*closing != seq.front() || real.size() != seq.size()) parse_fail(0, "cycle must close at its first vertex");
  } else if (real.size() + 1 != seq.size()) {
    parse_fail(0, "malformed walk");
  }
  for (std::size_t i = 0; i < real.size(); ++i) {
    const Vertex a = seq[i], b = seq[(i + 1) % seq.size()];
    const bool ok = real[i] ? d.has_arc(a, b) : (!d.has_arc(a, b) && d.same_part(a, b) && a != b);
    if (!ok) parse_fail(0, "separator " + std::to_string(i + 1) + " does not match the digraph");
  }
  return closing ? GWalk::cycle(seq) : GWalk::path(seq);
}

}  // namespace gmpd
