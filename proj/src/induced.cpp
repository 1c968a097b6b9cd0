#include <algorithm>
#include <functional>

#include "pisg/blocks.hpp"
#include "pisg/error.hpp"
#include "pisg/patterns.hpp"

namespace pisg {

std::string to_string(InducedPattern p) {
  switch (p) {
    case InducedPattern::P4: return "P4";
    case InducedPattern::C4: return "C4";
    case InducedPattern::C5: return "C5";
    case InducedPattern::TwoK2: return "2K2";
  }
  return "?";
}

std::optional<InducedPattern> parse_induced_pattern(const std::string& name) {
  if (name == "P4") return InducedPattern::P4;
  if (name == "C4") return InducedPattern::C4;
  if (name == "C5") return InducedPattern::C5;
  if (name == "2K2") return InducedPattern::TwoK2;
  return std::nullopt;
}

Graph pattern_graph(InducedPattern p) {
  switch (p) {
    case InducedPattern::P4: return path_graph(4);
    case InducedPattern::C4: return cycle_graph(4);
    case InducedPattern::C5: return cycle_graph(5);
    case InducedPattern::TwoK2: return Graph(4, {{0, 1}, {2, 3}});
  }
  return Graph();
}

std::optional<PatternWitness> find_induced(const Graph& g, InducedPattern p) {
  const Graph pat = pattern_graph(p);
  const int k = pat.vertex_count();
  const int n = g.vertex_count();
  std::vector<int> map(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  // Pattern vertices are assigned in index order and host vertices in
  // ascending order, so the first hit is the lexicographically smallest map.
  std::function<bool(int)> extend = [&](int i) {
    if (i == k) return true;
    for (int h = 0; h < n; ++h) {
      if (used[h] || g.degree(h) < pat.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = pat.adjacent(i, j) == g.adjacent(h, map[j]);
      if (!ok) continue;
      map[i] = h;
      used[h] = 1;
      if (extend(i + 1)) return true;
      used[h] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  PatternWitness w;
  w.kind = WitnessKind::Induced;
  w.pattern = to_string(p);
  w.vertex_map = map;
  w.pattern_edges = pat.edges();
  return w;
}

bool check_induced_witness(const Graph& g, const PatternWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  auto p = parse_induced_pattern(w.pattern);
  if (!p) return fail("unknown induced pattern " + w.pattern);
  const Graph pat = pattern_graph(*p);
  if (static_cast<int>(w.vertex_map.size()) != pat.vertex_count()) return fail("vertex map has wrong size");
  for (std::size_t i = 0; i < w.vertex_map.size(); ++i) {
    int h = w.vertex_map[i];
    if (h < 0 || h >= g.vertex_count()) return fail("vertex out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (w.vertex_map[j] == h) return fail("vertex map not injective");
      if (pat.adjacent(static_cast<int>(i), static_cast<int>(j)) != g.adjacent(h, w.vertex_map[j]))
        return fail("adjacency not preserved between pattern vertices " + std::to_string(j) + " and " + std::to_string(i));
    }
  }
  return true;
}

namespace {

ClassMembership first_obstruction(const Graph& g, std::initializer_list<InducedPattern> forbidden) {
  for (auto p : forbidden)
    if (auto w = find_induced(g, p)) return {false, std::move(w)};
  return {true, std::nullopt};
}

}  // namespace

ClassMembership is_split(const Graph& g) {
  return first_obstruction(g, {InducedPattern::C4, InducedPattern::C5, InducedPattern::TwoK2});
}

ClassMembership is_threshold(const Graph& g) {
  return first_obstruction(g, {InducedPattern::P4, InducedPattern::C4, InducedPattern::TwoK2});
}

ClassMembership is_cograph(const Graph& g) { return first_obstruction(g, {InducedPattern::P4}); }

bool is_cactus(const Graph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) return false;
  for (const auto& b : blocks(g)) {
    const int v = b.graph.vertex_count(), e = b.graph.edge_count();
    if (!(e == 1 || e == v)) return false;
  }
  return true;
}

bool is_unicyclic(const Graph& g) {
  return g.vertex_count() > 0 && is_connected(g) && g.edge_count() == g.vertex_count();
}

}  // namespace pisg
