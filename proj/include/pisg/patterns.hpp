#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pisg/graph.hpp"

namespace pisg {

enum class WitnessKind { Induced, Subdivision };

/// Evidence that a pattern occurs in a host graph.
///
/// `vertex_map[i]` is the host vertex playing pattern vertex i. For
/// subdivisions, `pattern_edges[j]` is realised by the host path `paths[j]`
/// (endpoints included).
struct PatternWitness {
  WitnessKind kind = WitnessKind::Induced;
  std::string pattern;
  std::vector<int> vertex_map;
  std::vector<Edge> pattern_edges;
  std::vector<std::vector<int>> paths;
};

// ---------------------------------------------------------------------------
// Induced patterns

enum class InducedPattern { P4, C4, C5, TwoK2 };

std::string to_string(InducedPattern p);
std::optional<InducedPattern> parse_induced_pattern(const std::string& name);
Graph pattern_graph(InducedPattern p);

/// Exhaustive search. Among all occurrences the one with the lexicographically
/// smallest vertex map is returned.
std::optional<PatternWitness> find_induced(const Graph& g, InducedPattern p);

/// Checks distinctness and preservation of both adjacency and non-adjacency.
bool check_induced_witness(const Graph& g, const PatternWitness& w, std::string* why = nullptr);

struct ClassMembership {
  bool member = false;
  std::optional<PatternWitness> witness;  // an obstruction when !member
};

/// No induced C4, C5 or 2K2.
ClassMembership is_split(const Graph& g);
/// No induced P4, C4 or 2K2.
ClassMembership is_threshold(const Graph& g);
/// No induced P4.
ClassMembership is_cograph(const Graph& g);
/// Connected and every block is a single edge or a cycle.
bool is_cactus(const Graph& g);
/// Connected with exactly one cycle.
bool is_unicyclic(const Graph& g);

// ---------------------------------------------------------------------------
// Topological subdivisions

/// K(n) or K(m,n). Pattern vertices of K(m,n) are 0..m-1 on one side and
/// m..m+n-1 on the other.
struct SubdivisionPattern {
  std::string name;
  int left = 0;   // n for K(n); m for K(m,n)
  int right = 0;  // 0 for complete graphs
  bool bipartite() const noexcept { return right > 0; }
  int vertex_count() const noexcept { return left + right; }
  std::vector<Edge> edges() const;
};

/// Accepts K4, K23, K5, K33, K54, K55, K(n), K(m,n) (also "Kn", "Km,n").
/// Throws Error(BadParameter) for unknown or oversized patterns.
SubdivisionPattern parse_subdivision_pattern(const std::string& name);
SubdivisionPattern complete_pattern(int n);
SubdivisionPattern bipartite_pattern(int m, int n);

enum class SearchStatus { Found, Absent, BudgetExhausted };
const char* to_string(SearchStatus s);

struct SubdivisionOptions {
  std::vector<int> hints;             // preferred branch vertices
  std::uint64_t budget = 20'000'000;  // search-node expansions
};

struct SubdivisionResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<PatternWitness> witness;
  std::uint64_t nodes = 0;
};

/// Branch vertices are tried in order of descending degree and paths shortest
/// first, with backtracking over both. With hints, branch vertices are first
/// restricted to the hint set; the full search runs only if that fails.
/// `Absent` is reported only when the full search space has been exhausted.
SubdivisionResult find_subdivision(const Graph& g, const SubdivisionPattern& pattern, const SubdivisionOptions& opts = {});

/// Independent checker for subdivision witnesses.
bool check_subdivision_witness(const Graph& g, const SubdivisionPattern& pattern, const PatternWitness& w,
                               std::string* why = nullptr);

}  // namespace pisg
