#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "pisg/error.hpp"
#include "pisg/patterns.hpp"

namespace pisg {

std::vector<Edge> SubdivisionPattern::edges() const {
  std::vector<Edge> out;
  if (bipartite()) {
    for (int a = 0; a < left; ++a)
      for (int b = 0; b < right; ++b) out.emplace_back(a, left + b);
  } else {
    for (int a = 0; a < left; ++a)
      for (int b = a + 1; b < left; ++b) out.emplace_back(a, b);
  }
  return out;
}

SubdivisionPattern complete_pattern(int n) {
  if (n < 2 || n > 8) throw Error(ErrorKind::BadParameter, "K(n) patterns need 2 <= n <= 8");
  return {"K" + std::to_string(n), n, 0};
}

SubdivisionPattern bipartite_pattern(int m, int n) {
  if (m < 1 || n < 1 || m > 6 || n > 6) throw Error(ErrorKind::BadParameter, "K(m,n) patterns need 1 <= m,n <= 6");
  return {"K" + std::to_string(m) + "," + std::to_string(n), m, n};
}

SubdivisionPattern parse_subdivision_pattern(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '_' && c != '{' && c != '}') s += c;
  if (s.size() < 2 || (s[0] != 'K' && s[0] != 'k'))
    throw Error(ErrorKind::BadParameter, "unknown subdivision pattern '" + raw + "'");
  std::string body = s.substr(1);
  auto to_int = [&](const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::BadParameter, "unknown subdivision pattern '" + raw + "'");
    return std::stoi(t);
  };
  if (auto comma = body.find(','); comma != std::string::npos)
    return bipartite_pattern(to_int(body.substr(0, comma)), to_int(body.substr(comma + 1)));
  // Shorthand from the CLI: two digits mean a bipartite pattern (K23, K33,
  // K54, K55); one digit is a complete graph.
  if (body.size() == 2) return bipartite_pattern(body[0] - '0', body[1] - '0');
  return complete_pattern(to_int(body));
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

namespace {

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& g, const SubdivisionPattern& pat, std::uint64_t budget)
      : g_(g), pat_(pat), pedges_(pat.edges()), budget_(budget) {
    const int n = g.vertex_count();
    branch_.assign(static_cast<std::size_t>(pat.vertex_count()), -1);
    is_branch_.assign(static_cast<std::size_t>(n), 0);
    used_.assign(static_cast<std::size_t>(n), 0);
    paths_.assign(pedges_.size(), {});
    pdeg_.assign(static_cast<std::size_t>(pat.vertex_count()), 0);
    for (auto [a, b] : pedges_) {
      ++pdeg_[a];
      ++pdeg_[b];
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  /// Searches with branch vertices drawn from `pool` (already ordered).
  bool run(const std::vector<int>& pool) {
    pool_ = pool;
    return assign(0, 0);
  }

  PatternWitness witness() const {
    PatternWitness w;
    w.kind = WitnessKind::Subdivision;
    w.pattern = pat_.name;
    w.vertex_map = branch_;
    w.pattern_edges = pedges_;
    w.paths = paths_;
    return w;
  }

 private:
  bool tick() {
    if (++nodes_ > budget_) exhausted_ = true;
    return !exhausted_;
  }

  // Pattern vertices are filled in index order. Within a side the chosen pool
  // positions increase; for K(n,n) the second side starts after the first.
  bool assign(int i, std::size_t from) {
    if (!tick()) return false;
    if (i == pat_.vertex_count()) return route_all();
    const bool new_side = pat_.bipartite() && i == pat_.left;
    std::size_t start = from;
    if (new_side) start = pat_.left == pat_.right ? pos_of_first_ + 1 : 0;
    for (std::size_t p = start; p < pool_.size(); ++p) {
      const int h = pool_[p];
      if (is_branch_[h] || g_.degree(h) < pdeg_[i]) continue;
      branch_[i] = h;
      is_branch_[h] = 1;
      if (i == 0) pos_of_first_ = p;
      if (assign(i + 1, p + 1)) return true;
      is_branch_[h] = 0;
      branch_[i] = -1;
      if (exhausted_) return false;
    }
    return false;
  }

  int free_neighbors(int h) const {
    int c = 0;
    for (int w : g_.neighbors(h))
      if (!is_branch_[w] && !used_[w]) ++c;
    return c;
  }

  bool route_all() {
    std::vector<int> pending;
    for (std::size_t j = 0; j < pedges_.size(); ++j) {
      const int a = branch_[pedges_[j].first], b = branch_[pedges_[j].second];
      if (g_.adjacent(a, b)) paths_[j] = {a, b};  // a direct edge is never worse than a longer path
      else pending.push_back(static_cast<int>(j));
    }
    const bool ok = route(pending);
    if (!ok)
      for (int j : pending) paths_[j].clear();
    return ok;
  }

  // Components of the graph induced on free (non-branch, unused) vertices.
  std::vector<int> free_components() const {
    const int n = g_.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0 || is_branch_[s] || used_[s]) continue;
      comp[s] = c;
      stack.assign(1, s);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g_.neighbors(u))
          if (comp[w] < 0 && !is_branch_[w] && !used_[w]) {
            comp[w] = c;
            stack.push_back(w);
          }
      }
      ++c;
    }
    return comp;
  }

  bool connectable(int a, int b, const std::vector<int>& comp) const {
    if (g_.adjacent(a, b)) return true;
    for (int x : g_.neighbors(a)) {
      if (comp[x] < 0) continue;
      for (int y : g_.neighbors(b))
        if (comp[y] == comp[x]) return true;
    }
    return false;
  }

  bool route(std::vector<int>& pending) {
    if (pending.empty()) return true;
    if (!tick()) return false;

    // Each pending path leaves its branch vertex through a distinct free
    // neighbour.
    std::vector<int> need(static_cast<std::size_t>(pat_.vertex_count()), 0);
    for (int j : pending) {
      ++need[pedges_[j].first];
      ++need[pedges_[j].second];
    }
    int best = -1, best_slack = 1 << 30;
    for (int p = 0; p < pat_.vertex_count(); ++p)
      if (need[p] && free_neighbors(branch_[p]) < need[p]) return false;
    const auto comp = free_components();
    for (std::size_t idx = 0; idx < pending.size(); ++idx) {
      const int j = pending[idx];
      const int a = branch_[pedges_[j].first], b = branch_[pedges_[j].second];
      if (!connectable(a, b, comp)) return false;
      const int slack = std::min(free_neighbors(a) - need[pedges_[j].first], free_neighbors(b) - need[pedges_[j].second]);
      if (slack < best_slack) {
        best_slack = slack;
        best = static_cast<int>(idx);
      }
    }

    const int j = pending[static_cast<std::size_t>(best)];
    pending.erase(pending.begin() + best);
    const int a = branch_[pedges_[j].first], b = branch_[pedges_[j].second];

    // Distances to b through free vertices; a lower bound while the path grows.
    const int n = g_.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{b};
    dist[b] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int w : g_.neighbors(u))
        if (dist[w] < 0 && !is_branch_[w] && !used_[w]) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    int shortest = 1 << 30;
    for (int w : g_.neighbors(a))
      if (dist[w] >= 0 && !is_branch_[w]) shortest = std::min(shortest, dist[w] + 1);
    int free_count = 0;
    for (int v = 0; v < n; ++v)
      if (!is_branch_[v] && !used_[v]) ++free_count;

    bool ok = false;
    std::vector<int> path{a};
    for (int len = shortest; len <= free_count + 1 && !ok && !exhausted_; ++len)
      ok = extend_path(path, b, len, dist, pending);
    if (ok) paths_[j] = path;
    pending.insert(pending.begin() + best, j);
    return ok;
  }

  // Enumerates simple paths of exactly `len` edges from path.front() to b.
  bool extend_path(std::vector<int>& path, int b, int len, const std::vector<int>& dist, std::vector<int>& pending) {
    if (!tick()) return false;
    const int u = path.back();
    const int steps = static_cast<int>(path.size()) - 1;
    if (steps == len - 1) {
      if (!g_.adjacent(u, b) || steps == 0) return false;
      path.push_back(b);
      if (route(pending)) return true;
      path.pop_back();
      return false;
    }
    for (int w : g_.neighbors(u)) {
      if (is_branch_[w] || used_[w] || dist[w] < 0) continue;
      if (steps + 1 + dist[w] > len) continue;
      used_[w] = 1;
      path.push_back(w);
      if (extend_path(path, b, len, dist, pending)) return true;
      path.pop_back();
      used_[w] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  SubdivisionPattern pat_;
  std::vector<Edge> pedges_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> pool_;
  std::size_t pos_of_first_ = 0;
  std::vector<int> branch_;
  std::vector<char> is_branch_;
  std::vector<char> used_;
  std::vector<int> pdeg_;
  std::vector<std::vector<int>> paths_;
};

std::vector<int> by_degree(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> out = vertices;
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return out;
}

}  // namespace

SubdivisionResult find_subdivision(const Graph& g, const SubdivisionPattern& pattern, const SubdivisionOptions& opts) {
  SubdivisionResult res;
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);

  std::uint64_t spent = 0;
  if (!opts.hints.empty()) {
    std::set<int> uniq;
    for (int h : opts.hints)
      if (h >= 0 && h < g.vertex_count()) uniq.insert(h);
    SubdivisionSearch s(g, pattern, opts.budget);
    const bool found = s.run(by_degree(g, {uniq.begin(), uniq.end()}));
    spent = s.nodes();
    if (found) {
      res.status = SearchStatus::Found;
      res.witness = s.witness();
      res.nodes = spent;
      return res;
    }
  }
  const std::uint64_t left = opts.budget > spent ? opts.budget - spent : 0;
  SubdivisionSearch s(g, pattern, left);
  const bool found = s.run(by_degree(g, all));
  res.nodes = spent + s.nodes();
  if (found) {
    res.status = SearchStatus::Found;
    res.witness = s.witness();
  } else {
    res.status = s.exhausted() ? SearchStatus::BudgetExhausted : SearchStatus::Absent;
  }
  return res;
}

bool check_subdivision_witness(const Graph& g, const SubdivisionPattern& pattern, const PatternWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int k = pattern.vertex_count();
  if (static_cast<int>(w.vertex_map.size()) != k) return fail("wrong number of branch vertices");
  std::set<int> branch(w.vertex_map.begin(), w.vertex_map.end());
  if (static_cast<int>(branch.size()) != k) return fail("branch vertices not distinct");
  for (int h : w.vertex_map)
    if (h < 0 || h >= g.vertex_count()) return fail("branch vertex out of range");

  // Every pattern edge must be realised exactly once.
  std::set<Edge> wanted;
  for (auto [a, b] : pattern.edges()) wanted.insert({std::min(a, b), std::max(a, b)});
  if (w.pattern_edges.size() != w.paths.size() || w.pattern_edges.size() != wanted.size())
    return fail("path count does not match pattern edge count");

  std::set<int> internal_seen;
  std::set<Edge> covered;
  for (std::size_t j = 0; j < w.paths.size(); ++j) {
    auto [pa, pb] = w.pattern_edges[j];
    if (pa < 0 || pb < 0 || pa >= k || pb >= k) return fail("pattern edge index out of range");
    Edge key{std::min(pa, pb), std::max(pa, pb)};
    if (!wanted.count(key) || !covered.insert(key).second) return fail("pattern edge missing or repeated");
    const auto& path = w.paths[j];
    if (path.size() < 2) return fail("path too short");
    const bool forward = path.front() == w.vertex_map[pa] && path.back() == w.vertex_map[pb];
    const bool backward = path.front() == w.vertex_map[pb] && path.back() == w.vertex_map[pa];
    if (!forward && !backward) return fail("path endpoints do not match branch vertices");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (path[i] < 0 || path[i] >= g.vertex_count() || path[i + 1] < 0 || path[i + 1] >= g.vertex_count())
        return fail("path vertex out of range");
      if (!g.adjacent(path[i], path[i + 1])) return fail("consecutive path vertices not adjacent");
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (branch.count(path[i])) return fail("path passes through a branch vertex");
      if (!internal_seen.insert(path[i]).second) return fail("paths are not internally disjoint");
    }
  }
  return true;
}

}  // namespace pisg
