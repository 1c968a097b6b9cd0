#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pisg/ring.hpp"

namespace pisg {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with adjacency lists kept sorted
/// and a dense adjacency matrix for O(1) lookups.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0; }
  const std::vector<int>& neighbors(int v) const { return nbr_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(nbr_[static_cast<std::size_t>(v)].size()); }

  /// Adds {u,v}; ignores duplicates. Throws Error(BadInput) on loops or bad ids.
  void add_edge(int u, int v);

  /// Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph; vertex i of the result is `vertices[i]`.
  Graph induced(const std::vector<int>& vertices) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nbr_;
};

/// The PIS(R) object: a graph whose vertex i is the ideal `ideals[i]`.
struct LabeledGraph {
  Graph graph;
  std::vector<IdealTuple> ideals;
  std::vector<std::string> labels;

  std::optional<int> find(const std::string& label) const;
};

LabeledGraph unlabeled(Graph g);

struct GraphStats {
  int v = 0;
  int e = 0;
  std::vector<int> degree_sequence;  // nonincreasing
  std::optional<int> girth;          // empty for forests
  int components = 0;
};

GraphStats graph_stats(const Graph& g);

/// Connected components; each list sorted ascending, components ordered by
/// smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
std::optional<int> girth(const Graph& g);

std::string export_dot(const LabeledGraph& g, const std::string& name = "PIS");

/// Edge-list text: one "u v" pair per line, 0-based; '#' starts a comment.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// G plus one vertex adjacent to everything (index n).
Graph with_apex(const Graph& g);

}  // namespace pisg
