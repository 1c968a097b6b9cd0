#pragma once

#include <vector>

#include "pisg/graph.hpp"

namespace pisg {

/// A biconnected component. `graph` uses local indices; local vertex i is
/// host vertex `vertices[i]` (ascending).
struct Block {
  std::vector<int> vertices;
  Graph graph;
};

/// Biconnected components. Isolated vertices are dropped; a bridge is a
/// two-vertex block. Blocks are ordered by their smallest edge.
std::vector<Block> blocks(const Graph& g);

/// Cut vertices in ascending order.
std::vector<int> articulation_points(const Graph& g);

}  // namespace pisg
