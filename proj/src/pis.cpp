#include "pisg/pis.hpp"

#include <algorithm>
#include <thread>

#include "pisg/error.hpp"

namespace pisg {

LabeledGraph build_pis(const RingSpec& ring, unsigned workers) {
  if (ring.factor_count() < 2)
    throw Error(ErrorKind::LocalRing, "PIS(R) is built for non-local rings (at least two factors)");

  LabeledGraph out;
  out.ideals = enumerate_vertices(ring);
  const int n = static_cast<int>(out.ideals.size());
  for (const auto& t : out.ideals) out.labels.push_back(ring.format(t));

  // Each worker scans rows u = w, w + workers, ...; edges are merged in row
  // order afterwards so the graph does not depend on scheduling.
  workers = std::clamp(workers, 1u, 64u);
  std::vector<std::vector<Edge>> found(workers);
  auto scan = [&](unsigned w) {
    IdealTuple sum;
    sum.coords.resize(ring.factor_count());
    for (int u = static_cast<int>(w); u < n; u += static_cast<int>(workers))
      for (int v = u + 1; v < n; ++v) {
        const auto& a = out.ideals[u].coords;
        const auto& b = out.ideals[v].coords;
        for (std::size_t k = 0; k < a.size(); ++k) sum.coords[k] = ring.factor(k).join(a[k], b[k]);
        if (is_prime_ideal(ring, sum)) found[w].emplace_back(u, v);
      }
  };
  if (workers == 1 || n < 64) {
    workers = 1;
    found.resize(1);
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  out.graph = Graph(n);
  std::vector<Edge> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  for (auto [u, v] : all) out.graph.add_edge(u, v);
  return out;
}

}  // namespace pisg
