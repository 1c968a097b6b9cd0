#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pisg/embedding.hpp"
#include "pisg/graph.hpp"
#include "pisg/patterns.hpp"

namespace pisg {

enum class Measure { Genus, Crosscap };
enum class CertificateKind { Embedding, EulerBound, SubdivisionBound, BlockComposition };

const char* to_string(Measure m);
const char* to_string(CertificateKind k);

struct EulerBounds {
  int genus_lb = 0;
  int crosscap_lb = 0;
};

/// Face-count bound with girth gamma: f <= 2e/gamma. Forests give (0, 0).
EulerBounds euler_lower_bounds(const Graph& g);

struct EulerWitness {
  int v = 0;
  int e = 0;
  int girth = 3;
};

struct BlockEntry {
  std::vector<int> vertices;  // host ids
  int genus_lower = 0, genus_upper = 0;
  int crosscap_lower = 0, crosscap_upper = 0;
  std::optional<int> mu;  // max(2 - 2g, 2 - cr), when both are exact
};

/// A genus or crosscap value with its evidence. `lower == upper` is a point
/// value; otherwise [lower, upper] is an interval (upper may be -1 when no
/// embedding at all was found).
struct SurfaceCertificate {
  Measure measure = Measure::Genus;
  CertificateKind kind = CertificateKind::Embedding;
  SearchStatus status = SearchStatus::Found;
  int lower = 0;
  int upper = 0;
  std::optional<SignedRotationSystem> embedding;  // realises `upper`
  std::optional<EulerWitness> euler;
  std::optional<PatternWitness> subdivision;
  std::vector<BlockEntry> blocks;
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return lower == upper; }
  /// Throws Error(OutOfRange) for intervals.
  int value() const;
};

struct SurfaceOptions {
  std::uint64_t budget = 20'000'000;  // node expansions for one exact search
  /// Stop deepening above this value; the certificate then only proves
  /// `lower = max_target + 1`.
  std::optional<int> max_target;
};

/// Minimum orientable genus of a connected graph by iterative deepening.
/// Throws Error(Disconnected).
SurfaceCertificate genus_exact(const Graph& g, const SurfaceOptions& opts = {});

/// Minimum crosscap of a connected graph (0 for planar graphs).
SurfaceCertificate crosscap_exact(const Graph& g, const SurfaceOptions& opts = {});

/// Genus as the sum over blocks. Throws Error(Disconnected).
SurfaceCertificate genus_of(const Graph& g, const SurfaceOptions& opts = {});

/// Crosscap from per-block genus and crosscap. With k blocks:
/// 1 - k + sum cr(B) when every block is orientably simple, 2k - sum mu(B)
/// otherwise. Throws Error(Disconnected).
SurfaceCertificate crosscap_of(const Graph& g, const SurfaceOptions& opts = {});

/// Re-verifies a certificate without search: embeddings by face tracing,
/// Euler bounds by arithmetic, subdivisions by the witness checker, block
/// compositions by recombining the entries.
bool check_certificate(const Graph& g, const SurfaceCertificate& cert, std::string* why = nullptr);

int formula_genus_complete(int n);
int formula_genus_bipartite(int m, int n);
int formula_crosscap_complete(int n);
int formula_crosscap_bipartite(int m, int n);

}  // namespace pisg
