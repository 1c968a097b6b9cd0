#include <algorithm>
#include <numeric>

#include "pisg/embedding.hpp"
#include "pisg/error.hpp"

namespace pisg {

namespace {

// Darts: edge e = (u < v) owns dart 2e (u -> v) and 2e+1 (v -> u). A corner is
// named by the dart after which a new dart would be inserted.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& g, const EmbedSearchOptions& opts)
      : g_(g), opts_(opts), edges_(g.edges()), n_(g.vertex_count()), m_(static_cast<int>(edges_.size())) {
    const std::size_t darts = static_cast<std::size_t>(2 * m_);
    next_.assign(darts, -1);
    prev_.assign(darts, -1);
    sign_.assign(static_cast<std::size_t>(m_), 1);
    inserted_.assign(static_cast<std::size_t>(m_), 0);
    tree_edge_.assign(static_cast<std::size_t>(m_), 0);
    first_.assign(static_cast<std::size_t>(n_), -1);
    deg_.assign(static_cast<std::size_t>(n_), 0);
    embedded_.assign(static_cast<std::size_t>(n_), 0);
    rem_deg_.assign(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : edges_) {
      ++rem_deg_[u];
      ++rem_deg_[v];
    }
    visited_.assign(2 * darts, 0);
    corner_face_.assign(darts, -1);
    corner_or_.assign(darts, 1);
    corner_stamp_.assign(darts, 0);
    face_count_scratch_.assign(darts + 2, 0);
    girth_ = girth(g).value_or(3);
    const long long K = opts.max_euler_genus;
    max_waste_ = 2LL * m_ - static_cast<long long>(girth_) * (2 - n_ + m_ - K);
  }

  EmbedSearchResult run() {
    EmbedSearchResult res;
    if (m_ == 0) {
      res.status = opts_.nonorientable ? SearchStatus::Absent : SearchStatus::Found;
      if (!opts_.nonorientable) {
        res.embedding = SignedRotationSystem{std::vector<std::vector<int>>(static_cast<std::size_t>(n_)), {}};
        res.euler_genus = 0;
      }
      return res;
    }
    // Start from a vertex of maximum degree.
    int root = 0;
    for (int v = 1; v < n_; ++v)
      if (g_.degree(v) > g_.degree(root)) root = v;
    embedded_[root] = 1;
    embedded_count_ = 1;
    const bool found = dfs();
    res.nodes = nodes_;
    if (found) {
      res.status = SearchStatus::Found;
      res.embedding = solution_;
      res.euler_genus = solution_genus_;
    } else {
      res.status = exhausted_ ? SearchStatus::BudgetExhausted : SearchStatus::Absent;
    }
    return res;
  }

 private:
  int tail(int d) const { return (d & 1) ? edges_[d >> 1].second : edges_[d >> 1].first; }

  void insert_dart(int d, int after) {
    const int x = tail(d);
    if (after < 0) {
      next_[d] = prev_[d] = d;
      first_[x] = d;
    } else {
      const int nx = next_[after];
      next_[after] = d;
      prev_[d] = after;
      next_[d] = nx;
      prev_[nx] = d;
    }
    ++deg_[x];
    darts_.push_back(d);
  }

  void remove_dart(int d) {
    const int x = tail(d);
    if (next_[d] == d) {
      first_[x] = -1;
    } else {
      const int p = prev_[d], nx = next_[d];
      next_[p] = nx;
      prev_[nx] = p;
      if (first_[x] == d) first_[x] = nx;
    }
    next_[d] = prev_[d] = -1;
    --deg_[x];
    darts_.pop_back();
  }

  // Rebuilds faces of the current partial embedding: corner -> (face,
  // orientation of the canonical traversal), face lengths.
  void trace() {
    ++stamp_;
    face_len_.clear();
    if (darts_.empty()) {
      faces_ = 1;
      face_len_.push_back(0);
      return;
    }
    for (int d : darts_) visited_[2 * d] = visited_[2 * d + 1] = 0;
    faces_ = 0;
    for (int o0 : {1, -1})
      for (int d0 : darts_) {
        if (visited_[2 * d0 + (o0 < 0)]) continue;
        orbit_.clear();
        int d = d0, o = o0;
        do {
          visited_[2 * d + (o < 0)] = 1;
          const int o2 = o * sign_[d >> 1];
          const int r = d ^ 1;
          int corner, nd;
          if (o2 > 0) {
            corner = r;
            nd = next_[r];
          } else {
            corner = prev_[r];
            nd = prev_[r];
          }
          orbit_.emplace_back(corner, o2);
          d = nd;
          o = o2;
        } while (d != d0 || o != o0);
        if (corner_stamp_[orbit_.front().first] == stamp_) continue;  // reverse of a face already labelled
        const int f = faces_++;
        face_len_.push_back(static_cast<int>(orbit_.size()));
        for (auto [c, oc] : orbit_) {
          corner_stamp_[c] = stamp_;
          corner_face_[c] = f;
          corner_or_[c] = oc;
        }
      }
  }

  int euler_genus_now() const {
    return 2 - embedded_count_ + static_cast<int>(darts_.size() / 2) - faces_;
  }

  struct Option {
    int a, b, sign, cost;
  };

  bool tick() {
    if (++nodes_ > opts_.budget) exhausted_ = true;
    return !exhausted_;
  }

  bool dfs() {
    if (!tick()) return false;
    trace();
    const int eg = euler_genus_now();
    const int K = opts_.max_euler_genus;
    if (eg > K) return false;
    const int inserted_edges = static_cast<int>(darts_.size() / 2);
    if (inserted_edges == m_) {
      if (opts_.nonorientable && twisted_ == 0) return false;
      record_solution(eg);
      return true;
    }
    const int budget_left = K - eg;
    if (opts_.nonorientable && twisted_ == 0 && budget_left == 0) return false;

    // Per-face bookkeeping for the slack test.
    const int F = faces_;
    alive_.assign(static_cast<std::size_t>(F), 0);
    touched_.assign(static_cast<std::size_t>(F), 0);
    for (int d : darts_)
      if (rem_deg_[tail(d)] > 0) touched_[corner_face_[d]] = 1;

    long long best_opts = -1;
    int best_edge = -1;
    for (int e = 0; e < m_; ++e) {
      if (inserted_[e]) continue;
      const auto [u, v] = edges_[e];
      const bool eu = embedded_[u], ev = embedded_[v];
      if (!eu && !ev) continue;
      long long opts;
      if (eu != ev) {
        const int x = eu ? u : v;
        opts = std::max(1, deg_[x]);
        if (first_[x] >= 0) mark_alive_at(x);
      } else {
        long long same = 0;
        if (first_[u] >= 0) {
          int a = first_[u];
          do {
            ++face_count_scratch_[corner_face_[a]];
            a = next_[a];
          } while (a != first_[u]);
          int b = first_[v];
          do {
            const int f = corner_face_[b];
            if (face_count_scratch_[f] > 0) {
              same += face_count_scratch_[f];
              alive_[f] = 1;
            }
            b = next_[b];
          } while (b != first_[v]);
          a = first_[u];
          do {
            face_count_scratch_[corner_face_[a]] = 0;
            a = next_[a];
          } while (a != first_[u]);
        }
        const long long diff = static_cast<long long>(deg_[u]) * deg_[v] - same;
        opts = same;
        if (opts_.nonorientable && budget_left >= 1) opts += same;
        if (budget_left >= 2) opts += diff * (opts_.nonorientable ? 2 : 1);
        if (opts == 0) return false;
      }
      if (best_edge < 0 || opts < best_opts) {
        best_opts = opts;
        best_edge = e;
      }
    }
    if (best_edge < 0) return false;  // disconnected input
    if (!slack_ok(eg)) return false;

    const auto [u, v] = edges_[best_edge];
    const int du = 2 * best_edge, dv = 2 * best_edge + 1;
    --rem_deg_[u];
    --rem_deg_[v];
    inserted_[best_edge] = 1;
    bool found = false;
    if (embedded_[u] != embedded_[v]) {
      // Leaf edge: the new endpoint gets its first dart.
      const int x = embedded_[u] ? u : v;
      const int dx = x == u ? du : dv;
      const int dn = x == u ? dv : du;
      const int w = x == u ? v : u;
      tree_edge_[best_edge] = 1;
      embedded_[w] = 1;
      ++embedded_count_;
      std::vector<int> corners;
      if (first_[x] < 0) {
        corners.push_back(-1);
      } else {
        int a = first_[x];
        do {
          corners.push_back(a);
          a = next_[a];
        } while (a != first_[x]);
      }
      for (int a : corners) {
        insert_dart(dx, a);
        insert_dart(dn, -1);
        found = dfs();
        remove_dart(dn);
        remove_dart(dx);
        if (found || exhausted_) break;
      }
      embedded_[w] = 0;
      --embedded_count_;
      tree_edge_[best_edge] = 0;
    } else {
      std::vector<Option> options;
      std::vector<std::pair<int, int>> cu, cv;  // (dart, face)
      int a = first_[u];
      do {
        cu.emplace_back(a, corner_face_[a]);
        a = next_[a];
      } while (a != first_[u]);
      int b = first_[v];
      do {
        cv.emplace_back(b, corner_face_[b]);
        b = next_[b];
      } while (b != first_[v]);
      for (auto [ca, fa] : cu)
        for (auto [cb, fb] : cv) {
          if (fa == fb) {
            const int s = corner_or_[ca] * corner_or_[cb];
            options.push_back({ca, cb, s, 0});
            if (opts_.nonorientable && budget_left >= 1) options.push_back({ca, cb, -s, 1});
          } else if (budget_left >= 2) {
            options.push_back({ca, cb, 1, 2});
            if (opts_.nonorientable) options.push_back({ca, cb, -1, 2});
          }
        }
      std::stable_sort(options.begin(), options.end(), [](const Option& x, const Option& y) { return x.cost < y.cost; });
      for (const auto& op : options) {
        sign_[best_edge] = op.sign;
        if (op.sign < 0) ++twisted_;
        insert_dart(du, op.a);
        insert_dart(dv, op.b);
        found = dfs();
        remove_dart(dv);
        remove_dart(du);
        if (op.sign < 0) --twisted_;
        sign_[best_edge] = 1;
        if (found || exhausted_) break;
      }
    }
    inserted_[best_edge] = 0;
    ++rem_deg_[u];
    ++rem_deg_[v];
    return found;
  }

  void mark_alive_at(int x) {
    int a = first_[x];
    do {
      alive_[corner_face_[a]] = 1;
      a = next_[a];
    } while (a != first_[x]);
  }

  // A face that no remaining edge can split either survives (its excess over
  // the girth is wasted face length) or is merged away, which costs Euler
  // genus. The total waste of the final embedding is bounded by max_waste_.
  bool slack_ok(int eg) {
    long long fixed_waste = 0;
    mergeable_.clear();
    for (int f = 0; f < faces_; ++f) {
      if (alive_[f]) continue;
      const int w = face_len_[f] - girth_;
      if (w <= 0) continue;
      if (touched_[f]) mergeable_.push_back(w);
      else fixed_waste += w;
    }
    if (fixed_waste > max_waste_) return false;
    if (mergeable_.empty()) return true;
    std::sort(mergeable_.begin(), mergeable_.end(), std::greater<>());
    long long rest = std::accumulate(mergeable_.begin(), mergeable_.end(), 0LL);
    const int K = opts_.max_euler_genus;
    for (std::size_t j = 0; j <= mergeable_.size(); ++j) {
      if (j > 0) rest -= mergeable_[j - 1];
      const long long cost = 2LL * static_cast<long long>((j + 1) / 2);
      if (eg + cost > K) break;
      if (fixed_waste + rest <= max_waste_) return true;
    }
    return false;
  }

  void record_solution(int eg) {
    SignedRotationSystem s;
    s.rotation.assign(static_cast<std::size_t>(n_), {});
    for (int x = 0; x < n_; ++x) {
      if (first_[x] < 0) continue;
      int a = first_[x];
      do {
        const auto [p, q] = edges_[a >> 1];
        s.rotation[x].push_back(p == x ? q : p);
        a = next_[a];
      } while (a != first_[x]);
    }
    for (int e = 0; e < m_; ++e)
      if (sign_[e] < 0) s.signs[edges_[e]] = -1;
    solution_ = std::move(s);
    solution_genus_ = eg;
  }

  const Graph& g_;
  EmbedSearchOptions opts_;
  std::vector<Edge> edges_;
  int n_, m_;
  int girth_ = 3;
  long long max_waste_ = 0;

  std::vector<int> next_, prev_, sign_, first_, deg_, rem_deg_;
  std::vector<char> inserted_, tree_edge_, embedded_;
  std::vector<int> darts_;
  int embedded_count_ = 0;
  int twisted_ = 0;

  std::vector<char> visited_;
  std::vector<int> corner_face_, corner_or_;
  std::vector<unsigned> corner_stamp_;
  unsigned stamp_ = 0;
  std::vector<int> face_len_;
  std::vector<std::pair<int, int>> orbit_;
  int faces_ = 0;
  std::vector<int> face_count_scratch_;
  std::vector<char> alive_, touched_;
  std::vector<long long> mergeable_;

  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  SignedRotationSystem solution_;
  int solution_genus_ = -1;
};

}  // namespace

EmbedSearchResult search_embedding(const Graph& g, const EmbedSearchOptions& opts) {
  int with_edges = 0;
  for (const auto& c : connected_components(g))
    if (c.size() > 1) ++with_edges;
  if (with_edges > 1) throw Error(ErrorKind::Disconnected, "embedding search needs a connected graph");
  if (g.edge_count() > 0) {
    // Isolated vertices are irrelevant to the embedding; search the core.
    std::vector<int> core;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) > 0) core.push_back(v);
    if (static_cast<int>(core.size()) != g.vertex_count()) {
      Graph h = g.induced(core);
      EmbedSearchResult r = EmbeddingSearch(h, opts).run();
      if (r.embedding) {
        SignedRotationSystem full;
        full.rotation.assign(static_cast<std::size_t>(g.vertex_count()), {});
        for (std::size_t i = 0; i < core.size(); ++i)
          for (int w : r.embedding->rotation[i]) full.rotation[core[i]].push_back(core[w]);
        for (const auto& [e, s] : r.embedding->signs) full.signs[{core[e.first], core[e.second]}] = s;
        r.embedding = std::move(full);
      }
      return r;
    }
  }
  return EmbeddingSearch(g, opts).run();
}

}  // namespace pisg
