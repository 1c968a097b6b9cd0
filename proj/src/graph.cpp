#include "pisg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

#include "pisg/error.hpp"

namespace pisg {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0), nbr_(static_cast<std::size_t>(n)) {
  if (n < 0) throw Error(ErrorKind::BadInput, "negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorKind::BadInput, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  if (u == v) throw Error(ErrorKind::BadInput, "self-loop at " + std::to_string(u));
  if (adjacent(u, v)) return;
  adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = 1;
  adj_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u)] = 1;
  auto& nu = nbr_[static_cast<std::size_t>(u)];
  auto& nv = nbr_[static_cast<std::size_t>(v)];
  nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

std::optional<int> LabeledGraph::find(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<int>(it - labels.begin());
}

LabeledGraph unlabeled(Graph g) {
  LabeledGraph lg;
  lg.labels.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) lg.labels.push_back(std::to_string(v));
  lg.graph = std::move(g);
  return lg;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int w : g.neighbors(members[i]))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.v = g.vertex_count();
  s.e = g.edge_count();
  for (int v = 0; v < s.v; ++v) s.degree_sequence.push_back(g.degree(v));
  std::sort(s.degree_sequence.begin(), s.degree_sequence.end(), std::greater<>());
  s.girth = girth(g);
  s.components = static_cast<int>(connected_components(g).size());
  return s;
}

std::string export_dot(const LabeledGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (int v = 0; v < g.graph.vertex_count(); ++v) {
    std::string label = v < static_cast<int>(g.labels.size()) ? g.labels[v] : std::to_string(v);
    os << "  n" << v << " [label=\"" << label << "\"];\n";
  }
  for (auto [u, v] : g.graph.edges()) os << "  n" << u << " -- n" << v << ";\n";
  os << "}\n";
  return os.str();
}

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest) || u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
      throw Error(ErrorKind::BadInput, "edge list line " + std::to_string(lineno) + " is not a 'u v' pair");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max<int>(max_id, static_cast<int>(std::max(u, v)));
  }
  Graph g(max_id + 1);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open graph file '" + path + "'");
  return parse_edge_list(in);
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int m, int n) {
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph with_apex(const Graph& g) {
  const int n = g.vertex_count();
  Graph h(n + 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (int v = 0; v < n; ++v) h.add_edge(v, n);
  return h;
}

}  // namespace pisg
