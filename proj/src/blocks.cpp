#include "pisg/blocks.hpp"

#include <algorithm>
#include <set>

namespace pisg {

namespace {

struct Tarjan {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> comps;
  std::set<int> cuts;
  int timer = 0;

  explicit Tarjan(const Graph& graph)
      : g(graph), disc(static_cast<std::size_t>(graph.vertex_count()), -1), low(static_cast<std::size_t>(graph.vertex_count()), 0) {}

  // Iterative DFS; frame = (vertex, parent, next neighbour position).
  void run(int root) {
    struct Frame {
      int v, parent;
      std::size_t next;
    };
    std::vector<Frame> st{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        int w = nb[f.next++];
        if (disc[w] < 0) {
          stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          st.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const int v = f.v, parent = f.parent;
      st.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        if (parent != root) cuts.insert(parent);
        std::vector<Edge> comp;
        while (true) {
          Edge e = stack.back();
          stack.pop_back();
          comp.push_back(e);
          if (e.first == parent && e.second == v) break;
        }
        comps.push_back(std::move(comp));
      }
    }
    if (root_children > 1) cuts.insert(root);
  }
};

}  // namespace

std::vector<Block> blocks(const Graph& g) {
  Tarjan t(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (t.disc[v] < 0 && g.degree(v) > 0) t.run(v);

  std::vector<std::pair<Edge, Block>> keyed;
  for (auto& comp : t.comps) {
    std::vector<int> verts;
    for (auto [u, v] : comp) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    Block b{verts, Graph(static_cast<int>(verts.size()))};
    Edge smallest{g.vertex_count(), g.vertex_count()};
    auto local = [&](int x) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin()); };
    for (auto [u, v] : comp) {
      b.graph.add_edge(local(u), local(v));
      smallest = std::min(smallest, Edge{std::min(u, v), std::max(u, v)});
    }
    keyed.emplace_back(smallest, std::move(b));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Block> out;
  for (auto& kb : keyed) out.push_back(std::move(kb.second));
  return out;
}

std::vector<int> articulation_points(const Graph& g) {
  Tarjan t(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (t.disc[v] < 0 && g.degree(v) > 0) t.run(v);
  return {t.cuts.begin(), t.cuts.end()};
}

}  // namespace pisg
