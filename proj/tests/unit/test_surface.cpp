#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pisg/blocks.hpp"
#include "pisg/embedding.hpp"
#include "pisg/error.hpp"
#include "pisg/pis.hpp"
#include "pisg/surface.hpp"

using namespace pisg;

namespace {

const SurfaceOptions kOpts{5'000'000, std::nullopt};

// Two graphs glued at one vertex: b's vertex 0 becomes a's vertex `at`.
Graph glue(const Graph& a, const Graph& b, int at) {
  const int na = a.vertex_count();
  Graph g(na + b.vertex_count() - 1);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  auto map = [&](int x) { return x == 0 ? at : na + x - 1; };
  for (auto [u, v] : b.edges()) g.add_edge(map(u), map(v));
  return g;
}

Graph random_connected(std::mt19937& rng, int n, double p) {
  for (;;) {
    Graph g = oracle::random_graph(rng, n, p);
    if (oracle::connected(g)) return g;
  }
}

// Euler identity for the embedding a certificate carries.
void check_euler(const Graph& g, const SurfaceCertificate& c) {
  if (!c.embedding) return;
  auto ft = trace_faces_signed(g, *c.embedding);
  CHECK(g.vertex_count() - g.edge_count() + ft.faces == 2 - ft.euler_genus);
  if (c.measure == Measure::Genus) {
    CHECK(ft.orientable);
    CHECK(ft.euler_genus == 2 * c.upper);
  } else if (c.upper > 0) {
    CHECK_FALSE(ft.orientable);
    CHECK(ft.euler_genus == c.upper);
  }
}

LabeledGraph pis(std::vector<IdealLattice> f) { return build_pis(product_ring(std::move(f))); }

}  // namespace

TEST_CASE("closed forms") {
  CHECK(formula_genus_complete(7) == 1);
  CHECK(formula_genus_complete(8) == 2);
  CHECK(formula_crosscap_complete(7) == 3);
  CHECK(formula_crosscap_complete(6) == 1);
  CHECK(formula_genus_bipartite(5, 5) == 3);
  CHECK(formula_crosscap_bipartite(3, 5) == 2);
  CHECK_THROWS_AS(formula_genus_complete(2), Error);
  CHECK_THROWS_AS(formula_crosscap_bipartite(1, 4), Error);
}

TEST_CASE("face tracing") {
  // K4 drawn as a triangle with a centre vertex 3
  RotationSystem k4{{{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}};
  auto ft = trace_faces(complete_graph(4), k4);
  CHECK(ft.faces == 4);
  CHECK(ft.euler_genus == 0);

  RotationSystem c4{{{1, 3}, {0, 2}, {1, 3}, {0, 2}}};
  CHECK(trace_faces(cycle_graph(4), c4).faces == 2);

  // every rotation of K3,3 has at most 3 faces; compare with the oracle count
  const Graph k33 = complete_bipartite(3, 3);
  int seen = 0;
  oracle::for_each_rotation(k33, [&](const oracle::Rot& r) {
    const int f = trace_faces(k33, RotationSystem{r.order}).faces;
    CHECK(f <= 3);
    CHECK(f == oracle::count_faces(k33, r, nullptr));
    auto signed_ft = trace_faces_signed(k33, SignedRotationSystem::from(RotationSystem{r.order}));
    CHECK(signed_ft.faces == f);
    CHECK(signed_ft.orientable);
    ++seen;
  });
  CHECK(seen == 64);

  RotationSystem bad{{{1}, {0}, {1}}};
  CHECK_THROWS_AS(trace_faces(path_graph(3), bad), Error);
}

TEST_CASE("signed face tracing matches the flag-orbit oracle") {
  std::mt19937 rng(3);
  const Graph g = complete_graph(5);
  const auto co = oracle::cotree_edges(g);
  std::uniform_int_distribution<int> bit(0, 1);
  int checked = 0;
  oracle::for_each_rotation(g, [&](const oracle::Rot& r) {
    if (checked >= 3000 || rng() % 3) return;
    SignedRotationSystem s;
    s.rotation = r.order;
    std::map<Edge, int> signs;
    for (auto e : co)
      if (bit(rng)) signs[e] = -1;
    for (auto e : g.edges()) s.signs[e] = signs.count(e) ? -1 : 1;
    auto ft = trace_faces_signed(g, s);
    CHECK(ft.faces == oracle::count_faces(g, r, &signs));
    CHECK(ft.orientable == oracle::orientable(g, signs));
    ++checked;
  });
  CHECK(checked > 1000);
}

TEST_CASE("Euler lower bounds") {
  auto f4 = pis(std::vector<IdealLattice>(4, make_field())).graph;
  auto lb = euler_lower_bounds(f4);
  CHECK(lb.genus_lb == 2);
  // ceil(48 * (1 - 2/3) - 14 + 2) = 4
  CHECK(lb.crosscap_lb == 4);
  auto tree = euler_lower_bounds(path_graph(6));
  CHECK(tree.genus_lb == 0);
  CHECK(tree.crosscap_lb == 0);
  CHECK(euler_lower_bounds(complete_bipartite(5, 5)).genus_lb == 3);
}

TEST_CASE("exact search on small complete graphs") {
  CHECK(genus_exact(complete_graph(5), kOpts).value() == 1);
  CHECK(genus_exact(complete_bipartite(5, 4), kOpts).value() == 2);
  CHECK(crosscap_exact(complete_graph(6), kOpts).value() == 1);
  CHECK(crosscap_exact(complete_bipartite(3, 5), kOpts).value() == 2);
  auto k7 = crosscap_exact(complete_graph(7), kOpts);
  CHECK(k7.value() == 3);
  CHECK(check_certificate(complete_graph(7), k7));
  check_euler(complete_graph(7), k7);
  CHECK_THROWS_AS(genus_exact(Graph(4, {{0, 1}, {2, 3}}), kOpts), Error);
}

TEST_CASE("exact search agrees with rotation enumeration") {
  std::vector<Graph> fixed{complete_graph(4), complete_graph(5), complete_bipartite(3, 3), complete_bipartite(3, 4), cycle_graph(5)};
  // Petersen graph
  Graph pet(10);
  for (int i = 0; i < 5; ++i) {
    pet.add_edge(i, (i + 1) % 5);
    pet.add_edge(i, i + 5);
    pet.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  fixed.push_back(pet);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> size(4, 7);
  std::vector<Graph> graphs = fixed;
  while (graphs.size() < fixed.size() + 25) {
    Graph g = random_connected(rng, size(rng), 0.6);
    if (oracle::rotation_count(g) > 4000 || oracle::cotree_edges(g).size() > 7) continue;
    graphs.push_back(g);
  }
  for (const auto& g : graphs) {
    const int gen = oracle::min_genus(g);
    auto gc = genus_exact(g, kOpts);
    REQUIRE(gc.exact());
    CHECK(gc.value() == gen);
    CHECK(check_certificate(g, gc));
    check_euler(g, gc);
    if (oracle::rotation_count(g) * std::pow(2.0, oracle::cotree_edges(g).size()) > 3e5) continue;
    const int cr = oracle::min_crosscap(g);
    auto cc = crosscap_exact(g, kOpts);
    REQUIRE(cc.exact());
    CHECK(cc.value() == cr);
    CHECK(check_certificate(g, cc));
    check_euler(g, cc);
  }
}

TEST_CASE("genus-one and crosscap-two PIS examples") {
  auto c1ff = pis({make_chain(1), make_field(), make_field()}).graph;
  auto g1 = genus_of(c1ff, kOpts);
  CHECK(g1.value() == 1);
  CHECK(check_certificate(c1ff, g1));
  check_euler(c1ff, g1);

  auto c2c1 = pis({make_chain(2), make_chain(1)}).graph;
  auto g2 = genus_of(c2c1, kOpts);
  CHECK(g2.value() == 1);
  CHECK(check_certificate(c2c1, g2));

  for (const auto* g : {&c1ff, &c2c1}) {
    auto cr = crosscap_of(*g, kOpts);
    CHECK(cr.value() == 2);
    CHECK(check_certificate(*g, cr));
  }
}

TEST_CASE("blocks") {
  CHECK(blocks(path_graph(3)).size() == 2);
  CHECK(blocks(cycle_graph(5)).size() == 1);
  const Graph two = glue(complete_bipartite(3, 3), complete_bipartite(3, 3), 0);
  auto bs = blocks(two);
  REQUIRE(bs.size() == 2);
  CHECK(bs[0].graph.edge_count() == 9);
  CHECK(bs[1].graph.edge_count() == 9);
  CHECK(articulation_points(two) == std::vector<int>{0});
}

TEST_CASE("block composition") {
  const Graph two = glue(complete_bipartite(3, 3), complete_bipartite(3, 3), 0);
  auto g = genus_of(two, kOpts);
  CHECK(g.value() == 2);
  CHECK(g.kind == CertificateKind::BlockComposition);
  CHECK(check_certificate(two, g));
  check_euler(two, g);
  auto c = crosscap_of(two, kOpts);
  CHECK(c.value() == 2);
  CHECK(check_certificate(two, c));

  CHECK(genus_of(path_graph(5), kOpts).value() == 0);
  CHECK(crosscap_of(path_graph(3), kOpts).value() == 0);
  CHECK(crosscap_of(complete_graph(6), kOpts).value() == 1);
  CHECK_THROWS_AS(genus_of(Graph(4, {{0, 1}, {2, 3}}), kOpts), Error);

  // K7 with a triangle hanging off a vertex: the triangle cannot lower the
  // crosscap of K7, and the K7 block cannot be drawn with one crosscap.
  const Graph k7t = glue(complete_graph(7), cycle_graph(3), 6);
  auto c7 = crosscap_of(k7t, kOpts);
  CHECK(c7.value() == 3);
  CHECK(check_certificate(k7t, c7));
  // torus-embedded K7 plus a projective K5 gives three crosscaps
  const Graph mix = glue(complete_graph(7), complete_graph(5), 0);
  CHECK(genus_of(mix, kOpts).value() == 2);
  CHECK(crosscap_of(mix, kOpts).value() == 3);
}

TEST_CASE("tampered certificates are rejected") {
  const Graph k5 = complete_graph(5);
  auto c = genus_exact(k5, kOpts);
  REQUIRE(check_certificate(k5, c));
  auto low = c;
  low.lower = low.upper = 0;
  CHECK_FALSE(check_certificate(k5, low));
  auto rot = c;
  std::swap(rot.embedding->rotation[0][0], rot.embedding->rotation[0][1]);
  std::string why;
  const bool still = check_certificate(k5, rot, &why);
  // a swapped rotation may still be a genus-1 embedding; if it is not, the
  // checker has to say so
  if (!still) CHECK_FALSE(why.empty());
  auto bound = euler_lower_bounds(k5);
  SurfaceCertificate lie;
  lie.kind = CertificateKind::EulerBound;
  lie.lower = bound.genus_lb + 1;
  lie.upper = -1;
  lie.euler = EulerWitness{5, 10, 3};
  CHECK_FALSE(check_certificate(k5, lie));
}

TEST_CASE("adding an edge never lowers genus or crosscap") {
  std::mt19937 rng(5);
  int pairs = 0;
  while (pairs < 25) {
    Graph g = random_connected(rng, 6, 0.45);
    std::vector<Edge> missing;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (!g.adjacent(u, v)) missing.emplace_back(u, v);
    if (missing.empty()) continue;
    Graph h = g;
    auto [u, v] = missing[rng() % missing.size()];
    h.add_edge(u, v);
    CHECK(genus_exact(g, kOpts).value() <= genus_exact(h, kOpts).value());
    CHECK(crosscap_exact(g, kOpts).value() <= crosscap_exact(h, kOpts).value());
    ++pairs;
  }
}

TEST_CASE("block-wise genus equals whole-graph genus") {
  std::mt19937 rng(9);
  std::vector<Graph> parts{complete_graph(5), complete_bipartite(3, 3), cycle_graph(4), complete_graph(4), complete_graph(3)};
  for (int it = 0; it < 15; ++it) {
    Graph g = parts[rng() % parts.size()];
    const int k = 1 + static_cast<int>(rng() % 2);
    for (int j = 0; j < k; ++j) g = glue(g, parts[rng() % parts.size()], static_cast<int>(rng() % g.vertex_count()));
    auto whole = genus_exact(g, kOpts);
    auto split = genus_of(g, kOpts);
    if (whole.exact() && split.exact()) CHECK(whole.value() == split.value());
    CHECK(whole.lower >= euler_lower_bounds(g).genus_lb);
  }
}

TEST_CASE("search results are deterministic") {
  const Graph g = pis({make_chain(1), make_field(), make_field()}).graph;
  auto a = genus_of(g, kOpts), b = genus_of(g, kOpts);
  REQUIRE(a.embedding);
  CHECK(a.embedding->rotation == b.embedding->rotation);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("budget exhaustion yields an interval") {
  const Graph f4 = pis(std::vector<IdealLattice>(4, make_field())).graph;
  auto c = genus_exact(f4, SurfaceOptions{200, std::nullopt});
  CHECK_FALSE(c.exact());
  CHECK(c.lower >= 2);
  CHECK_THROWS_AS(c.value(), Error);
  CHECK(check_certificate(f4, c));
}
