#include "pisg/surface.hpp"

#include <algorithm>
#include <limits>

#include "pisg/blocks.hpp"
#include "pisg/error.hpp"

namespace pisg {

const char* to_string(Measure m) { return m == Measure::Genus ? "genus" : "crosscap"; }

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Embedding: return "embedding";
    case CertificateKind::EulerBound: return "euler_bound";
    case CertificateKind::SubdivisionBound: return "subdivision_bound";
    case CertificateKind::BlockComposition: return "block_composition";
  }
  return "?";
}

int SurfaceCertificate::value() const {
  if (!exact())
    throw Error(ErrorKind::OutOfRange, std::string(to_string(measure)) + " is only known to lie in [" + std::to_string(lower) + ", " +
                                           (upper < 0 ? std::string("?") : std::to_string(upper)) + "]");
  return lower;
}

namespace {

long long ceil_div(long long a, long long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

void require_connected(const Graph& g, const char* what) {
  int with_edges = 0;
  for (const auto& c : connected_components(g))
    if (c.size() > 1) ++with_edges;
  if (with_edges > 1) throw Error(ErrorKind::Disconnected, std::string(what) + " needs a connected graph; compose per component");
}

EulerWitness euler_witness(const Graph& g) {
  int v = 0;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (g.degree(x) > 0) ++v;
  return {v, g.edge_count(), girth(g).value_or(0)};
}

// Cheap upper bound: the first leaf of the search tree with an unbounded
// genus target. Cost-0 placements come first, so this is a greedy embedding.
std::optional<SignedRotationSystem> greedy_orientable(const Graph& g, std::uint64_t* nodes) {
  EmbedSearchOptions o;
  o.max_euler_genus = 2 * std::max(0, g.edge_count() - g.vertex_count() + 1) + 2;
  o.budget = 1000 + 20ULL * static_cast<std::uint64_t>(g.edge_count());
  auto r = search_embedding(g, o);
  *nodes += r.nodes;
  return r.embedding;
}

// Best non-orientable embedding reachable by twisting one edge of an
// orientable one.
std::optional<std::pair<SignedRotationSystem, int>> twist_one_edge(const Graph& g, const SignedRotationSystem& base) {
  std::optional<std::pair<SignedRotationSystem, int>> best;
  for (auto e : g.edges()) {
    SignedRotationSystem s = base;
    s.signs[e] = -s.sign(e.first, e.second);
    auto t = trace_faces_signed(g, s);
    if (t.orientable) continue;
    if (!best || t.euler_genus < best->second) best = std::make_pair(std::move(s), t.euler_genus);
  }
  return best;
}

std::uint64_t remaining(std::uint64_t budget, std::uint64_t used) { return used >= budget ? 0 : budget - used; }

}  // namespace

EulerBounds euler_lower_bounds(const Graph& g) {
  auto gam = girth(g);
  if (!gam || g.edge_count() == 0) return {0, 0};
  const auto w = euler_witness(g);
  const long long x = static_cast<long long>(w.e) * (w.girth - 2) - static_cast<long long>(w.girth) * (w.v - 2);
  EulerBounds b;
  b.crosscap_lb = static_cast<int>(std::max(0LL, ceil_div(x, w.girth)));
  b.genus_lb = static_cast<int>(std::max(0LL, ceil_div(x, 2LL * w.girth)));
  return b;
}

SurfaceCertificate genus_exact(const Graph& g, const SurfaceOptions& opts) {
  require_connected(g, "genus_exact");
  SurfaceCertificate c;
  c.measure = Measure::Genus;
  c.euler = euler_witness(g);
  const int lb = euler_lower_bounds(g).genus_lb;

  std::uint64_t greedy_nodes = 0;
  auto ub_emb = greedy_orientable(g, &greedy_nodes);
  int ub = -1;
  if (ub_emb) ub = trace_faces_signed(g, *ub_emb).euler_genus / 2;

  std::uint64_t used = 0;
  for (int t = lb;; ++t) {
    if (ub >= 0 && t >= ub) {
      c.kind = CertificateKind::Embedding;
      c.status = SearchStatus::Found;
      c.lower = c.upper = ub;
      c.embedding = ub_emb;
      break;
    }
    if (opts.max_target && t > *opts.max_target) {
      c.kind = t == lb ? CertificateKind::EulerBound : CertificateKind::Embedding;
      c.status = SearchStatus::Absent;
      c.lower = t;
      c.upper = ub;
      c.embedding = ub_emb;
      break;
    }
    EmbedSearchOptions o;
    o.max_euler_genus = 2 * t;
    o.budget = remaining(opts.budget, used);
    auto r = search_embedding(g, o);
    used += r.nodes;
    if (r.status == SearchStatus::Found) {
      c.kind = CertificateKind::Embedding;
      c.status = SearchStatus::Found;
      c.lower = c.upper = r.euler_genus / 2;
      c.embedding = std::move(r.embedding);
      break;
    }
    if (r.status == SearchStatus::BudgetExhausted) {
      c.kind = t == lb ? CertificateKind::EulerBound : CertificateKind::Embedding;
      c.status = SearchStatus::BudgetExhausted;
      c.lower = t;
      c.upper = ub;
      c.embedding = ub_emb;
      break;
    }
  }
  c.nodes = used + greedy_nodes;
  return c;
}

SurfaceCertificate crosscap_exact(const Graph& g, const SurfaceOptions& opts) {
  require_connected(g, "crosscap_exact");
  SurfaceCertificate c;
  c.measure = Measure::Crosscap;
  c.euler = euler_witness(g);

  std::uint64_t used = 0;
  {
    EmbedSearchOptions o;
    o.max_euler_genus = 0;
    o.budget = opts.budget;
    auto r = search_embedding(g, o);
    used += r.nodes;
    if (r.status == SearchStatus::Found) {
      c.kind = CertificateKind::Embedding;
      c.lower = c.upper = 0;
      c.embedding = std::move(r.embedding);
      c.nodes = used;
      return c;
    }
    if (r.status == SearchStatus::BudgetExhausted) {
      c.kind = CertificateKind::Embedding;
      c.status = SearchStatus::BudgetExhausted;
      c.lower = 0;
      c.upper = -1;
      c.nodes = used;
      return c;
    }
  }
  const int lb = std::max(1, euler_lower_bounds(g).crosscap_lb);

  std::uint64_t greedy_nodes = 0;
  std::optional<SignedRotationSystem> ub_emb;
  int ub = -1;
  if (auto base = greedy_orientable(g, &greedy_nodes)) {
    if (auto tw = twist_one_edge(g, *base)) {
      ub_emb = std::move(tw->first);
      ub = tw->second;
    }
  }

  for (int k = lb;; ++k) {
    if (ub >= 0 && k >= ub) {
      c.kind = CertificateKind::Embedding;
      c.status = SearchStatus::Found;
      c.lower = c.upper = ub;
      c.embedding = ub_emb;
      break;
    }
    if (opts.max_target && k > *opts.max_target) {
      c.kind = k == lb && lb > 1 ? CertificateKind::EulerBound : CertificateKind::Embedding;
      c.status = SearchStatus::Absent;
      c.lower = k;
      c.upper = ub;
      c.embedding = ub_emb;
      break;
    }
    EmbedSearchOptions o;
    o.max_euler_genus = k;
    o.nonorientable = true;
    o.budget = remaining(opts.budget, used);
    auto r = search_embedding(g, o);
    used += r.nodes;
    if (r.status == SearchStatus::Found) {
      c.kind = CertificateKind::Embedding;
      c.status = SearchStatus::Found;
      c.lower = c.upper = r.euler_genus;
      c.embedding = std::move(r.embedding);
      break;
    }
    if (r.status == SearchStatus::BudgetExhausted) {
      c.kind = k == lb && lb > 1 ? CertificateKind::EulerBound : CertificateKind::Embedding;
      c.status = SearchStatus::BudgetExhausted;
      c.lower = k;
      c.upper = ub;
      c.embedding = ub_emb;
      break;
    }
  }
  c.nodes = used + greedy_nodes;
  return c;
}

namespace {

SearchStatus combine_status(const std::vector<SurfaceCertificate>& parts) {
  bool cut = false;
  for (const auto& p : parts) {
    if (p.status == SearchStatus::BudgetExhausted) return SearchStatus::BudgetExhausted;
    if (!p.exact()) cut = true;
  }
  return cut ? SearchStatus::Absent : SearchStatus::Found;
}

bool is_bridge(const Block& b) { return b.graph.vertex_count() == 2; }

SignedRotationSystem bridge_rotation() { return {{{1}, {0}}, {}}; }

// Vertex count of g's non-isolated part equals that of its only block.
bool single_block(const Graph& g, const std::vector<Block>& bl) {
  if (bl.size() != 1) return false;
  int v = 0;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (g.degree(x) > 0) ++v;
  return static_cast<int>(bl[0].vertices.size()) == v;
}

}  // namespace

SurfaceCertificate genus_of(const Graph& g, const SurfaceOptions& opts) {
  require_connected(g, "genus_of");
  const auto bl = blocks(g);
  if (single_block(g, bl)) return genus_exact(g, opts);

  SurfaceCertificate c;
  c.measure = Measure::Genus;
  c.kind = CertificateKind::BlockComposition;
  c.euler = euler_witness(g);
  std::vector<SurfaceCertificate> parts;
  std::vector<std::vector<int>> maps;
  std::vector<SignedRotationSystem> embs;
  bool all_embedded = true;
  for (const auto& b : bl) {
    SurfaceCertificate p;
    if (is_bridge(b)) {
      p.lower = p.upper = 0;
      p.embedding = bridge_rotation();
    } else {
      p = genus_exact(b.graph, opts);
    }
    c.nodes += p.nodes;
    c.lower += p.lower;
    if (c.upper >= 0) c.upper = p.upper < 0 ? -1 : c.upper + p.upper;
    BlockEntry entry;
    entry.vertices = b.vertices;
    entry.genus_lower = p.lower;
    entry.genus_upper = p.upper;
    c.blocks.push_back(std::move(entry));
    if (p.embedding) {
      maps.push_back(b.vertices);
      embs.push_back(*p.embedding);
    } else {
      all_embedded = false;
    }
    parts.push_back(std::move(p));
  }
  c.status = combine_status(parts);
  if (bl.empty()) c.embedding = SignedRotationSystem{std::vector<std::vector<int>>(static_cast<std::size_t>(g.vertex_count())), {}};
  else if (all_embedded) c.embedding = splice_embeddings(g, maps, embs);
  return c;
}

namespace {

struct BlockSurface {
  int g_lo = 0, g_hi = 0;
  int cr_lo = 0, cr_hi = 0;
  std::optional<SignedRotationSystem> orientable;     // realises g_hi
  std::optional<SignedRotationSystem> nonorientable;  // realises max(cr_hi, 1)
  bool bridge = false;
};

// Non-orientable genus with planar graphs counted as 1: the genus of the
// smallest non-orientable surface holding the graph.
int nonorientable_genus(int cr) { return std::max(cr, 1); }

}  // namespace

SurfaceCertificate crosscap_of(const Graph& g, const SurfaceOptions& opts) {
  require_connected(g, "crosscap_of");
  const auto bl = blocks(g);
  if (single_block(g, bl)) return crosscap_exact(g, opts);

  SurfaceCertificate c;
  c.measure = Measure::Crosscap;
  c.kind = CertificateKind::BlockComposition;
  c.euler = euler_witness(g);
  if (bl.empty()) {
    c.embedding = SignedRotationSystem{std::vector<std::vector<int>>(static_cast<std::size_t>(g.vertex_count())), {}};
    return c;
  }

  std::vector<BlockSurface> bs;
  std::vector<SurfaceCertificate> parts;
  for (const auto& b : bl) {
    BlockSurface s;
    if (is_bridge(b)) {
      s.bridge = true;
      s.orientable = bridge_rotation();
    } else {
      auto gc = genus_exact(b.graph, opts);
      auto cc = crosscap_exact(b.graph, opts);
      c.nodes += gc.nodes + cc.nodes;
      s.g_lo = gc.lower;
      s.g_hi = gc.upper;
      s.cr_lo = cc.lower;
      s.cr_hi = cc.upper;
      s.orientable = gc.embedding;
      if (cc.embedding && cc.upper >= 1) {
        s.nonorientable = cc.embedding;
      } else if (gc.embedding) {
        if (auto tw = twist_one_edge(b.graph, *gc.embedding); tw && tw->second <= 1) s.nonorientable = tw->first;
      }
      parts.push_back(gc);
      parts.push_back(cc);
    }
    BlockEntry entry;
    entry.vertices = b.vertices;
    entry.genus_lower = s.g_lo;
    entry.genus_upper = s.g_hi;
    entry.crosscap_lower = s.cr_lo;
    entry.crosscap_upper = s.cr_hi;
    if (s.g_lo == s.g_hi && s.cr_lo == s.cr_hi) entry.mu = std::max(2 - 2 * s.g_lo, 2 - s.cr_lo);
    c.blocks.push_back(std::move(entry));
    bs.push_back(std::move(s));
  }
  c.status = combine_status(parts);

  const int inf = std::numeric_limits<int>::max() / 4;
  auto eg = [&](int g2, int n) { return std::min(2 * g2, n); };
  // A non-orientable embedding of the whole graph puts exactly one block j on
  // a non-orientable surface (a twisted block can absorb the others'
  // twists) and every other block at its least Euler genus.
  auto best = [&](bool upper, int* arg) {
    int sum = 0;
    for (const auto& s : bs) {
      if (s.bridge) continue;
      const int gv = upper ? s.g_hi : s.g_lo;
      const int cv = upper ? s.cr_hi : s.cr_lo;
      if (gv < 0 || cv < 0) return inf;
      sum += eg(gv, nonorientable_genus(cv));
    }
    int value = inf;
    for (std::size_t j = 0; j < bs.size(); ++j) {
      const auto& s = bs[j];
      if (s.bridge) continue;
      const int gv = upper ? s.g_hi : s.g_lo;
      const int nj = nonorientable_genus(upper ? s.cr_hi : s.cr_lo);
      const int v = sum - eg(gv, nj) + nj;
      if (v < value) {
        value = v;
        if (arg) *arg = static_cast<int>(j);
      }
    }
    return value;
  };

  bool planar_lo = true, planar_hi = true;  // planar possible / planar proven
  for (const auto& s : bs) {
    if (s.bridge) continue;
    if (s.g_lo > 0) planar_lo = false;
    if (s.g_hi != 0) planar_hi = false;
  }
  if (planar_hi) {
    c.lower = c.upper = 0;
    std::vector<std::vector<int>> maps;
    std::vector<SignedRotationSystem> embs;
    for (std::size_t i = 0; i < bl.size(); ++i) {
      maps.push_back(bl[i].vertices);
      embs.push_back(*bs[i].orientable);
    }
    c.embedding = splice_embeddings(g, maps, embs);
    return c;
  }
  int arg = -1;
  const int lo = best(false, nullptr);
  const int hi = best(true, &arg);
  c.lower = planar_lo ? 0 : lo;
  c.upper = hi >= inf ? -1 : hi;

  if (arg >= 0) {
    std::vector<std::vector<int>> maps;
    std::vector<SignedRotationSystem> embs;
    bool ok = true;
    for (std::size_t i = 0; i < bl.size() && ok; ++i) {
      const auto& s = bs[i];
      maps.push_back(bl[i].vertices);
      const bool twisted = static_cast<int>(i) == arg ||
                           (!s.bridge && nonorientable_genus(s.cr_hi) < 2 * s.g_hi);
      const auto& e = twisted ? s.nonorientable : s.orientable;
      if (!e) ok = false;
      else embs.push_back(*e);
    }
    if (ok) c.embedding = splice_embeddings(g, maps, embs);
  }
  return c;
}

bool check_certificate(const Graph& g, const SurfaceCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (cert.upper >= 0 && cert.lower > cert.upper) return fail("lower bound exceeds upper bound");
  if (cert.embedding) {
    FaceTrace t;
    try {
      t = trace_faces_signed(g, *cert.embedding);
    } catch (const Error& e) {
      return fail(e.what());
    }
    if (cert.measure == Measure::Genus) {
      if (!t.orientable) return fail("genus certificate is not orientable");
      if (t.euler_genus != 2 * cert.upper)
        return fail("embedding has Euler genus " + std::to_string(t.euler_genus) + ", claimed genus " + std::to_string(cert.upper));
    } else {
      const int got = t.orientable ? (t.euler_genus == 0 ? 0 : -1) : t.euler_genus;
      if (got != cert.upper)
        return fail("embedding realises " + std::string(t.orientable ? "an orientable" : "a non-orientable") + " surface of Euler genus " +
                    std::to_string(t.euler_genus) + ", claimed crosscap " + std::to_string(cert.upper));
    }
  } else if (cert.exact() && g.edge_count() > 0) {
    return fail("point value without an embedding");
  }
  if (cert.kind == CertificateKind::EulerBound) {
    const auto b = euler_lower_bounds(g);
    const int lb = cert.measure == Measure::Genus ? b.genus_lb : std::max(b.crosscap_lb, 0);
    if (cert.lower > std::max(lb, cert.measure == Measure::Crosscap ? 1 : 0)) return fail("lower bound exceeds the Euler bound");
  }
  if (cert.subdivision) {
    auto pat = parse_subdivision_pattern(cert.subdivision->pattern);
    std::string w;
    if (!check_subdivision_witness(g, pat, *cert.subdivision, &w)) return fail("subdivision witness: " + w);
  }
  if (cert.kind == CertificateKind::BlockComposition && cert.measure == Measure::Genus) {
    int lo = 0;
    for (const auto& b : cert.blocks) lo += b.genus_lower;
    if (lo != cert.lower) return fail("block genera do not add up to the lower bound");
  }
  return true;
}

int formula_genus_complete(int n) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "genus formula for K_n needs n >= 3");
  return static_cast<int>(ceil_div(static_cast<long long>(n - 3) * (n - 4), 12));
}

int formula_genus_bipartite(int m, int n) {
  if (m < 2 || n < 2) throw Error(ErrorKind::OutOfRange, "genus formula for K_{m,n} needs m, n >= 2");
  return static_cast<int>(ceil_div(static_cast<long long>(m - 2) * (n - 2), 4));
}

int formula_crosscap_complete(int n) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "crosscap formula for K_n needs n >= 3");
  if (n == 7) return 3;
  return static_cast<int>(ceil_div(static_cast<long long>(n - 3) * (n - 4), 6));
}

int formula_crosscap_bipartite(int m, int n) {
  if (m < 2 || n < 2) throw Error(ErrorKind::OutOfRange, "crosscap formula for K_{m,n} needs m, n >= 2");
  return static_cast<int>(ceil_div(static_cast<long long>(m - 2) * (n - 2), 2));
}

}  // namespace pisg
