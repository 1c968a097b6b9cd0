#include "pisg/embedding.hpp"

#include <algorithm>
#include <set>

#include "pisg/error.hpp"

namespace pisg {

int SignedRotationSystem::sign(int u, int v) const {
  auto it = signs.find({std::min(u, v), std::max(u, v)});
  return it == signs.end() ? 1 : it->second;
}

SignedRotationSystem SignedRotationSystem::from(const RotationSystem& rot) { return {rot.rotation, {}}; }

namespace {

void check_rotation(const Graph& g, const std::vector<std::vector<int>>& rotation) {
  if (static_cast<int>(rotation.size()) != g.vertex_count())
    throw Error(ErrorKind::MalformedRotation, "rotation has " + std::to_string(rotation.size()) + " vertices, graph has " +
                                                  std::to_string(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw Error(ErrorKind::MalformedRotation, "rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
  }
}

void check_single_component(const Graph& g) {
  int with_edges = 0;
  for (const auto& c : connected_components(g))
    if (c.size() > 1) ++with_edges;
  if (with_edges > 1) throw Error(ErrorKind::Disconnected, "face tracing needs a connected graph");
}

}  // namespace

FaceTrace trace_faces_signed(const Graph& g, const SignedRotationSystem& srot) {
  check_rotation(g, srot.rotation);
  check_single_component(g);
  for (const auto& [e, s] : srot.signs)
    if ((s != 1 && s != -1) || !g.adjacent(e.first, e.second))
      throw Error(ErrorKind::MalformedRotation, "edge signature refers to a non-edge or a sign other than +-1");

  const int n = g.vertex_count();
  // position[v][w] = index of w in rotation[v]
  std::vector<std::map<int, int>> position(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < srot.rotation[v].size(); ++i) position[v][srot.rotation[v][i]] = static_cast<int>(i);

  FaceTrace out;
  // Flag = (tail, neighbour index at tail, local orientation). Every face is
  // traced once per direction, so orbit count / 2 is the face count.
  std::set<std::tuple<int, int, int>> seen;
  int orbits = 0;
  std::set<std::tuple<int, int, int>> first_pass_corners;
  for (int o0 : {1, -1})
    for (int v = 0; v < n; ++v)
      for (std::size_t i = 0; i < srot.rotation[v].size(); ++i) {
        auto start = std::make_tuple(v, static_cast<int>(i), o0);
        if (seen.count(start)) continue;
        ++orbits;
        std::vector<int> walk;
        bool reverse_of_known = false;
        std::vector<std::tuple<int, int, int>> corners;
        auto cur = start;
        do {
          seen.insert(cur);
          auto [x, idx, o] = cur;
          const int y = srot.rotation[x][idx];
          walk.push_back(x);
          const int o2 = o * srot.sign(x, y);
          const int deg = static_cast<int>(srot.rotation[y].size());
          const int p = position[y].at(x);
          const int nidx = o2 > 0 ? (p + 1) % deg : (p - 1 + deg) % deg;
          // corner at y between positions (p, p+1) or (p-1, p)
          const int corner = o2 > 0 ? p : (p - 1 + deg) % deg;
          corners.emplace_back(y, corner, 0);
          cur = std::make_tuple(y, nidx, o2);
        } while (cur != start);
        for (const auto& c : corners)
          if (first_pass_corners.count(c)) reverse_of_known = true;
        if (!reverse_of_known) {
          for (const auto& c : corners) first_pass_corners.insert(c);
          out.walks.push_back(std::move(walk));
        }
      }
  int edges = g.edge_count();
  int verts = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 0) ++verts;
  if (edges == 0) {
    out.faces = 1;
    verts = std::min(n, 1);
  } else {
    out.faces = orbits / 2;
  }
  out.euler_genus = 2 - verts + edges - out.faces;

  // Orientability: switch vertices along a BFS forest so tree edges become
  // untwisted; orientable iff every remaining edge is then untwisted too.
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    if (side[r]) continue;
    side[r] = 1;
    std::vector<int> q{r};
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
      int u = q[qi];
      for (int w : g.neighbors(u))
        if (!side[w]) {
          side[w] = side[u] * srot.sign(u, w);
          q.push_back(w);
        }
    }
  }
  out.orientable = true;
  for (auto [u, v] : g.edges())
    if (side[u] * side[v] * srot.sign(u, v) < 0) out.orientable = false;
  return out;
}

FaceTrace trace_faces(const Graph& g, const RotationSystem& rot) {
  return trace_faces_signed(g, SignedRotationSystem::from(rot));
}

SignedRotationSystem splice_embeddings(const Graph& host, const std::vector<std::vector<int>>& vertex_maps,
                                       const std::vector<SignedRotationSystem>& parts) {
  SignedRotationSystem out;
  out.rotation.assign(static_cast<std::size_t>(host.vertex_count()), {});
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const auto& map = vertex_maps.at(b);
    const auto& part = parts[b];
    for (std::size_t v = 0; v < part.rotation.size(); ++v)
      for (int w : part.rotation[v]) out.rotation[map[v]].push_back(map[w]);
    for (const auto& [e, s] : part.signs) {
      if (s == 1) continue;
      int u = map[e.first], v = map[e.second];
      out.signs[{std::min(u, v), std::max(u, v)}] = s;
    }
  }
  return out;
}

}  // namespace pisg
