#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pisg/graph.hpp"
#include "pisg/patterns.hpp"

namespace pisg {

/// Cyclic order of neighbours around every vertex (one dart per neighbour,
/// since graphs are simple).
struct RotationSystem {
  std::vector<std::vector<int>> rotation;
};

/// Rotation system plus an edge signature. Edges absent from `signs` are
/// untwisted (+1); keys are (u, v) with u < v.
struct SignedRotationSystem {
  std::vector<std::vector<int>> rotation;
  std::map<Edge, int> signs;

  int sign(int u, int v) const;
  static SignedRotationSystem from(const RotationSystem& rot);
};

struct FaceTrace {
  int faces = 0;
  std::vector<std::vector<int>> walks;  // vertex sequence of each face
  bool orientable = true;
  int euler_genus = 0;  // 2 - v + e - f
};

/// Orientable face tracing. Throws Error(MalformedRotation) if some rotation
/// is not a permutation of that vertex's neighbours, Error(Disconnected) if g
/// has more than one component with edges.
FaceTrace trace_faces(const Graph& g, const RotationSystem& rot);

/// Face tracing with side flips across twisted edges. `orientable` is
/// decided by switching vertices along a spanning tree.
FaceTrace trace_faces_signed(const Graph& g, const SignedRotationSystem& srot);

/// Splices per-block embeddings into one embedding of the host graph by
/// concatenating rotations at shared vertices. Block vertex i maps to host
/// vertex `vertex_maps[b][i]`.
SignedRotationSystem splice_embeddings(const Graph& host, const std::vector<std::vector<int>>& vertex_maps,
                                       const std::vector<SignedRotationSystem>& parts);

// ---------------------------------------------------------------------------
// Embedding search

struct EmbedSearchOptions {
  int max_euler_genus = 0;      // accept embeddings with Euler genus <= this
  bool nonorientable = false;   // require a non-orientable embedding
  std::uint64_t budget = 5'000'000;
};

struct EmbedSearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<SignedRotationSystem> embedding;
  int euler_genus = -1;
  std::uint64_t nodes = 0;
};

/// Exhaustive edge-insertion search over (signed) rotation systems of a
/// connected graph. Edges are inserted one at a time into corners of the
/// current partial embedding; a leaf edge attaches a new vertex. Spanning
/// tree edges (those that attach a new vertex) stay untwisted.
///
/// Pruning: the partial Euler genus never decreases; every remaining edge
/// must still have an admissible placement; faces that can no longer be
/// split must fit in the face-length slack of the target surface.
/// `Absent` means no embedding within the bound exists.
EmbedSearchResult search_embedding(const Graph& g, const EmbedSearchOptions& opts);

}  // namespace pisg
