#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pisg {

/// Unvalidated lattice description, as read from a ring-spec file or built in
/// code. `maximal` is an element index.
struct RawLattice {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> join;
  int maximal = 0;
};

/// The ideals of a finite local ring, abstracted as a join-semilattice.
///
/// Index 0 is the zero ideal, index `top()` is the whole ring and `maximal()`
/// is the unique maximal ideal. For a field, `top() == 1` and `maximal() == 0`.
/// Instances can only be obtained through `validate_lattice` or
/// `make_builtin`, so every IdealLattice satisfies the semilattice and
/// locality axioms.
class IdealLattice {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  int top() const noexcept { return static_cast<int>(labels_.size()) - 1; }
  int maximal() const noexcept { return maximal_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)]; }
  bool leq(int a, int b) const { return join(a, b) == b; }

  bool is_field() const noexcept { return size() == 2; }
  /// Number of nonzero proper ideals.
  int nontrivial_count() const noexcept { return static_cast<int>(size()) - 2; }
  /// True when the induced order is total (a chain ring).
  bool is_chain() const;

  std::optional<int> find_label(const std::string& label) const;

 private:
  friend IdealLattice validate_lattice(const RawLattice& raw);
  IdealLattice() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> join_;
  int maximal_ = 0;
};

/// Checks every axiom exhaustively. Throws Error(BadIndex | NotASemilattice |
/// NotLocal) listing each violated axiom.
IdealLattice validate_lattice(const RawLattice& raw);

enum class Family { Field, Chain, TwoGenXY, TwoGenFlat };

/// Builtin local-ring templates. `param` is k for Chain and q for the
/// two-generator families (ignored for Field).
IdealLattice make_builtin(Family family, int param = 0);

IdealLattice make_field();
IdealLattice make_chain(int k);
IdealLattice make_twogen_xy(int q);
IdealLattice make_twogen_flat(int q);

/// One coordinate per factor; each coordinate is an element index of that
/// factor's lattice.
struct IdealTuple {
  std::vector<int> coords;

  friend bool operator==(const IdealTuple&, const IdealTuple&) = default;
  friend auto operator<=>(const IdealTuple&, const IdealTuple&) = default;
};

/// A finite commutative ring modelled as an ordered product of local rings.
class RingSpec {
 public:
  const std::vector<IdealLattice>& factors() const noexcept { return factors_; }
  std::size_t factor_count() const noexcept { return factors_.size(); }
  const IdealLattice& factor(std::size_t k) const { return factors_.at(k); }

  /// Product of factor sizes.
  std::size_t ideal_count() const;
  IdealTuple zero() const;
  IdealTuple whole() const;
  bool is_valid(const IdealTuple& t) const;
  std::string format(const IdealTuple& t) const;

 private:
  friend RingSpec product_ring(std::vector<IdealLattice> factors);
  RingSpec() = default;
  std::vector<IdealLattice> factors_;
};

/// Throws Error(EmptyProduct) on an empty list.
RingSpec product_ring(std::vector<IdealLattice> factors);

/// Nonzero proper ideals in lexicographic order of coordinates.
std::vector<IdealTuple> enumerate_vertices(const RingSpec& ring);

/// Coordinatewise ideal sum. Throws Error(ShapeMismatch).
IdealTuple ideal_join(const RingSpec& ring, const IdealTuple& a, const IdealTuple& b);

/// A prime ideal of a finite product is the maximal ideal in exactly one
/// coordinate and the whole factor in every other one.
bool is_prime_ideal(const RingSpec& ring, const IdealTuple& a);

struct FactorShape {
  bool is_field = false;
  int nontrivial = 0;
  bool is_chain = true;

  friend bool operator==(const FactorShape&, const FactorShape&) = default;
};

struct RingShape {
  std::vector<FactorShape> factors;
};

RingShape shape_summary(const RingSpec& ring);

/// Canonical form of a single lattice, independent of labels and of the order
/// in which intermediate elements are listed.
std::string lattice_key(const IdealLattice& lattice);

/// Deterministic ring key (factor order is significant).
std::string canonical_key(const RingSpec& ring);

/// Key that ignores factor order; used to deduplicate ring families.
std::string unordered_key(const RingSpec& ring);

}  // namespace pisg
