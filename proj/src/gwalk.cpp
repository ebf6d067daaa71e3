#include "gmpd/gwalk.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmpd {

int GWalk::pair_count() const {
  if (seq.empty()) return 0;
  return is_cycle() ? size() : size() - 1;
}

Vertex GWalk::at(int i) const {
  const int s = size();
  return seq[static_cast<std::size_t>(((i % s) + s) % s)];
}

std::optional<PairKind> pair_kind(const PartitionedDigraph& d, Vertex u, Vertex v) {
  if (d.has_arc(u, v)) return PairKind::Real;
  if (d.same_part(u, v)) return PairKind::Jump;
  return std::nullopt;
}

ClassifiedWalk validate_walk(const PartitionedDigraph& d, const GWalk& w) {
  if (d.augmented()) throw Error(ErrorCode::AugmentedInput, "walks are defined on plain instances only");
  const int min_size = w.is_cycle() ? 2 : 1;
  if (w.size() < min_size)
    throw Error(ErrorCode::WalkTooShort, w.is_cycle() ? "cycle needs at least 2 vertices" : "empty path");
  std::vector<bool> seen(d.order(), false);
  for (Vertex v : w.seq) {
    if (v < 0 || v >= d.order()) throw Error(ErrorCode::InvalidInstance, "vertex id out of range");
    if (seen[v]) throw Error(ErrorCode::DuplicateVertex, "vertex " + d.name(v) + " repeats");
    seen[v] = true;
  }
  ClassifiedWalk out{w, {}, 0};
  for (int i = 0; i < w.pair_count(); ++i) {
    Vertex u = w.at(i), v = w.at(i + 1);
    auto k = pair_kind(d, u, v);
    if (!k)
      throw Error(ErrorCode::IllegalPair,
                  "pair " + std::to_string(i + 1) + " (" + d.name(u) + "," + d.name(v) + ")", i + 1);
    out.pairs.push_back(*k);
    if (*k == PairKind::Real) ++out.length;
  }
  return out;
}

bool is_valid_walk(const PartitionedDigraph& d, const GWalk& w) {
  try {
    validate_walk(d, w);
    return true;
  } catch (const Error&) {
    return false;
  }
}

int walk_length_or_invalid(const PartitionedDigraph& d, const GWalk& w) {
  int len = 0;
  for (int i = 0; i < w.pair_count(); ++i) {
    Vertex u = w.at(i), v = w.at(i + 1);
    if (d.has_arc(u, v)) {
      ++len;
    } else if (!d.same_part(u, v)) {
      return -1;
    }
  }
  return len;
}

int walk_length(const PartitionedDigraph& d, const GWalk& w) {
  int len = walk_length_or_invalid(d, w);
  if (len < 0) throw std::logic_error("walk_length on an invalid walk");
  return len;
}

bool is_good(const PartitionedDigraph& d, const GWalk& w) {
  std::vector<bool> hit(d.part_count(), false);
  for (Vertex v : w.seq) hit[d.part_of(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_spanning(const PartitionedDigraph& d, const GWalk& w) {
  std::vector<bool> hit(d.order(), false);
  for (Vertex v : w.seq) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GWalk canonical(const GWalk& w) {
  if (!w.is_cycle() || w.seq.empty()) return w;
  auto it = std::min_element(w.seq.begin(), w.seq.end());
  GWalk out = w;
  std::rotate(out.seq.begin(), out.seq.begin() + (it - w.seq.begin()), out.seq.end());
  return out;
}

std::optional<Partner> find_partner(const PartitionedDigraph& d, const GWalk& piece, const GWalk& host) {
  if (piece.seq.empty()) return std::nullopt;
  const Vertex s = piece.seq.front(), e = piece.seq.back();
  for (int i = 0; i < host.pair_count(); ++i)
    if (d.has_arc(host.at(i), s) && d.has_arc(e, host.at(i + 1))) return Partner{i};
  return std::nullopt;
}

GWalk insert_by_partners(const PartitionedDigraph& d, const GWalk& p, const GWalk& c) {
  const auto& u = p.seq;
  const int r = p.size();
  for (int i = 0; i < r; ++i) {
    bool ok = static_cast<bool>(find_partner(d, GWalk::path({u[i]}), c));
    if (!ok && i + 1 < r) ok = static_cast<bool>(find_partner(d, GWalk::path({u[i], u[i + 1]}), c));
    if (!ok) throw Error(ErrorCode::HypothesisUnmet, "no partner for piece index " + std::to_string(i + 1), i + 1);
  }
  const int target = walk_length(d, p) + walk_length(d, c) + 1;

  std::vector<Vertex> host = c.seq;
  std::size_t next = 0;
  while (next < u.size()) {
    const Vertex u1 = u[next];
    const bool has_pair = next + 1 < u.size();
    const int h = static_cast<int>(host.size());
    int pos = -1;
    for (int j = 0; j < h && pos < 0; ++j) {
      Vertex x = host[j], y = host[(j + 1) % h];
      if (!d.has_arc(x, u1)) continue;
      if (d.has_arc(u1, y) || (has_pair && d.has_arc(u[next + 1], y))) pos = j;
    }
    if (pos < 0) throw std::logic_error("insert_by_partners: partner vanished");
    const Vertex y = host[(pos + 1) % h];
    std::size_t last = next;
    for (std::size_t t = next; t < u.size(); ++t)
      if (d.has_arc(u[t], y)) last = t;
    host.insert(host.begin() + pos + 1, u.begin() + static_cast<std::ptrdiff_t>(next),
                u.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    next = last + 1;
  }
  GWalk out = GWalk::cycle(std::move(host));
  if (walk_length_or_invalid(d, out) < target)
    throw std::logic_error("insert_by_partners: arc bound not met");
  return out;
}

std::vector<std::vector<Vertex>> decompose_segments(const PartitionedDigraph& d, const GWalk& w) {
  GWalk v = canonical(w);
  std::vector<std::vector<Vertex>> segs;
  if (v.seq.empty()) return segs;
  int start = 0;
  if (v.is_cycle()) {
    for (int i = 0; i < v.size(); ++i)
      if (!d.has_arc(v.at(i), v.at(i + 1))) {
        start = i + 1;
        break;
      }
  }
  const int s = v.size();
  std::vector<Vertex> cur{v.at(start)};
  for (int k = 1; k < s; ++k) {
    Vertex prev = v.at(start + k - 1), x = v.at(start + k);
    if (!d.has_arc(prev, x)) {
      segs.push_back(std::move(cur));
      cur.clear();
    }
    cur.push_back(x);
  }
  segs.push_back(std::move(cur));
  return segs;
}

std::string render_walk(const PartitionedDigraph& d, const GWalk& w) {
  GWalk v = canonical(w);
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    out += d.name(v.seq[i]);
    if (i + 1 < v.size()) out += d.has_arc(v.seq[i], v.seq[i + 1]) ? "->" : "~";
  }
  if (v.is_cycle() && !v.seq.empty()) {
    out += d.has_arc(v.seq.back(), v.seq.front()) ? "->" : "~";
    out += "(" + d.name(v.seq.front()) + ")";
  }
  return out;
}

bool is_valid_factor(const PartitionedDigraph& d, const GFactor& f) {
  std::vector<int> cover(d.order(), 0);
  int total = 0;
  for (const auto& c : f.cycles) {
    if (!c.is_cycle() || !is_valid_walk(d, c)) return false;
    for (Vertex v : c.seq) ++cover[v];
    total += walk_length(d, c);
  }
  return total == f.arc_count && std::all_of(cover.begin(), cover.end(), [](int k) { return k == 1; });
}

}  // namespace gmpd
