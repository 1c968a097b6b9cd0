#include "pisg/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pisg/error.hpp"

namespace pisg {

namespace {

bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

bool IdealLattice::is_chain() const {
  const int n = static_cast<int>(size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

std::optional<int> IdealLattice::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

IdealLattice validate_lattice(const RawLattice& raw) {
  const int n = static_cast<int>(raw.elements.size());
  if (n == 0) throw Error(ErrorKind::BadIndex, "lattice '" + raw.name + "' has no elements");
  if (static_cast<int>(raw.join.size()) != n)
    throw Error(ErrorKind::BadIndex, "join table of '" + raw.name + "' is not square");

  std::vector<std::string> bad;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw.join[i].size()) != n) {
      bad.push_back("row " + std::to_string(i) + " has " + std::to_string(raw.join[i].size()) + " entries");
      continue;
    }
    for (int j = 0; j < n; ++j)
      if (raw.join[i][j] < 0 || raw.join[i][j] >= n)
        bad.push_back("join[" + std::to_string(i) + "][" + std::to_string(j) + "] out of range");
  }
  if (raw.maximal < 0 || raw.maximal >= n) bad.push_back("maximal index out of range");
  if (!bad.empty()) throw Error(ErrorKind::BadIndex, "lattice '" + raw.name + "' has invalid indices", bad);

  const auto& J = raw.join;
  const int top = n - 1;
  auto first = [](std::vector<std::string>& out, const std::string& axiom, int i, int j, int k = -1) {
    if (std::find_if(out.begin(), out.end(), [&](const std::string& s) { return s.rfind(axiom, 0) == 0; }) != out.end())
      return;
    std::string where = "(" + std::to_string(i) + "," + std::to_string(j);
    if (k >= 0) where += "," + std::to_string(k);
    out.push_back(axiom + " fails at " + where + ")");
  };

  std::vector<std::string> axioms;
  if (n < 2) axioms.emplace_back("zero and whole ring must be distinct");
  for (int i = 0; i < n; ++i) {
    if (J[i][i] != i) first(axioms, "idempotence", i, i);
    if (J[i][0] != i || J[0][i] != i) first(axioms, "neutrality of zero", i, 0);
    if (J[i][top] != top || J[top][i] != top) first(axioms, "absorption by R", i, top);
    for (int j = 0; j < n; ++j) {
      if (J[i][j] != J[j][i]) first(axioms, "commutativity", i, j);
      for (int k = 0; k < n; ++k)
        if (J[i][J[j][k]] != J[J[i][j]][k]) first(axioms, "associativity", i, j, k);
    }
  }
  // x <= y iff x + y = y; with the axioms above this is reflexive and
  // transitive, antisymmetry needs commutativity.
  for (int i = 0; i < n && axioms.empty(); ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && J[i][j] == j && J[j][i] == i) first(axioms, "order antisymmetry", i, j);
  if (!axioms.empty())
    throw Error(ErrorKind::NotASemilattice, "lattice '" + raw.name + "' is not a join-semilattice", axioms);

  std::vector<std::string> local;
  if (n == 2) {
    if (raw.maximal != 0) local.emplace_back("a field must have maximal ideal 0");
  } else {
    if (raw.maximal == top) local.emplace_back("maximal ideal equals R in a ring that is not a field");
    for (int i = 0; i < top; ++i)
      if (J[i][raw.maximal] != raw.maximal)
        local.push_back("ideal " + std::to_string(i) + " ('" + raw.elements[i] + "') is not below the maximal ideal");
  }
  if (!local.empty()) throw Error(ErrorKind::NotLocal, "lattice '" + raw.name + "' is not local", local);

  IdealLattice out;
  out.name_ = raw.name;
  out.labels_ = raw.elements;
  out.maximal_ = raw.maximal;
  out.join_.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : J) out.join_.insert(out.join_.end(), row.begin(), row.end());
  return out;
}

IdealLattice make_field() {
  RawLattice raw{"F", {"0", "F"}, {{0, 1}, {1, 1}}, 0};
  return validate_lattice(raw);
}

IdealLattice make_chain(int k) {
  if (k < 0) throw Error(ErrorKind::BadParameter, "chain(k) needs k >= 0, got " + std::to_string(k));
  if (k == 0) return make_field();
  RawLattice raw;
  raw.name = "chain(" + std::to_string(k) + ")";
  raw.elements.emplace_back("0");
  for (int i = 1; i < k; ++i) raw.elements.push_back("I" + std::to_string(i));
  raw.elements.emplace_back("M");
  raw.elements.emplace_back("R");
  const int n = k + 2;
  raw.join.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw.join[i][j] = std::max(i, j);
  raw.maximal = k;
  return validate_lattice(raw);
}

namespace {

// 0 < [<xy>] < lines < M < R, with any two distinct lines joining to M.
IdealLattice make_twogen(int q, bool with_xy) {
  if (q < 2 || !is_prime_power(q))
    throw Error(ErrorKind::BadParameter, "residue field size q must be a prime power >= 2, got " + std::to_string(q));
  RawLattice raw;
  raw.name = std::string(with_xy ? "twogen_xy(" : "twogen_flat(") + std::to_string(q) + ")";
  raw.elements.emplace_back("0");
  if (with_xy) raw.elements.emplace_back("<xy>");
  const int first_line = static_cast<int>(raw.elements.size());
  raw.elements.emplace_back("<x>");
  raw.elements.emplace_back("<y>");
  for (int a = 1; a < q; ++a)
    raw.elements.push_back(a == 1 ? std::string("<x+y>") : "<x+a" + std::to_string(a) + "y>");
  const int last_line = static_cast<int>(raw.elements.size()) - 1;
  raw.elements.emplace_back("M");
  raw.elements.emplace_back("R");
  const int n = static_cast<int>(raw.elements.size());
  const int m = n - 2;
  auto layer = [&](int i) {
    if (i == 0) return 0;
    if (with_xy && i == 1) return 1;
    if (i >= first_line && i <= last_line) return 2;
    return i == m ? 3 : 4;
  };
  raw.join.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) raw.join[i][j] = i;
      else if (layer(i) == 2 && layer(j) == 2) raw.join[i][j] = m;
      else raw.join[i][j] = layer(i) > layer(j) ? i : j;
    }
  raw.maximal = m;
  return validate_lattice(raw);
}

}  // namespace

IdealLattice make_twogen_xy(int q) { return make_twogen(q, true); }
IdealLattice make_twogen_flat(int q) { return make_twogen(q, false); }

IdealLattice make_builtin(Family family, int param) {
  switch (family) {
    case Family::Field: return make_field();
    case Family::Chain: return make_chain(param);
    case Family::TwoGenXY: return make_twogen_xy(param);
    case Family::TwoGenFlat: return make_twogen_flat(param);
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

std::size_t RingSpec::ideal_count() const {
  std::size_t n = 1;
  for (const auto& f : factors_) n *= f.size();
  return n;
}

IdealTuple RingSpec::zero() const { return IdealTuple{std::vector<int>(factors_.size(), 0)}; }

IdealTuple RingSpec::whole() const {
  IdealTuple t;
  for (const auto& f : factors_) t.coords.push_back(f.top());
  return t;
}

bool RingSpec::is_valid(const IdealTuple& t) const {
  if (t.coords.size() != factors_.size()) return false;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (t.coords[k] < 0 || t.coords[k] > factors_[k].top()) return false;
  return true;
}

std::string RingSpec::format(const IdealTuple& t) const {
  std::string s = "(";
  for (std::size_t k = 0; k < t.coords.size(); ++k) {
    if (k) s += ",";
    s += factors_.at(k).label(t.coords[k]);
  }
  return s + ")";
}

RingSpec product_ring(std::vector<IdealLattice> factors) {
  if (factors.empty()) throw Error(ErrorKind::EmptyProduct, "a ring needs at least one factor");
  RingSpec r;
  r.factors_ = std::move(factors);
  return r;
}

std::vector<IdealTuple> enumerate_vertices(const RingSpec& ring) {
  const std::size_t n = ring.factor_count();
  std::vector<IdealTuple> out;
  out.reserve(ring.ideal_count());
  const IdealTuple zero = ring.zero();
  const IdealTuple whole = ring.whole();
  IdealTuple cur = zero;
  while (true) {
    if (cur != zero && cur != whole) out.push_back(cur);
    // Odometer increment, last coordinate fastest: yields lexicographic order.
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (cur.coords[k] < ring.factor(k).top()) {
        ++cur.coords[k];
        std::fill(cur.coords.begin() + static_cast<std::ptrdiff_t>(k) + 1, cur.coords.end(), 0);
        break;
      }
      if (k == 0) return out;
    }
  }
}

IdealTuple ideal_join(const RingSpec& ring, const IdealTuple& a, const IdealTuple& b) {
  if (!ring.is_valid(a) || !ring.is_valid(b))
    throw Error(ErrorKind::ShapeMismatch, "ideal tuple does not match the ring's factors");
  IdealTuple out;
  out.coords.resize(a.coords.size());
  for (std::size_t k = 0; k < a.coords.size(); ++k) out.coords[k] = ring.factor(k).join(a.coords[k], b.coords[k]);
  return out;
}

bool is_prime_ideal(const RingSpec& ring, const IdealTuple& a) {
  if (!ring.is_valid(a)) return false;
  int at_maximal = 0;
  for (std::size_t k = 0; k < a.coords.size(); ++k) {
    const auto& f = ring.factor(k);
    if (a.coords[k] == f.maximal()) ++at_maximal;
    else if (a.coords[k] != f.top()) return false;
  }
  return at_maximal == 1;
}

RingShape shape_summary(const RingSpec& ring) {
  RingShape s;
  for (const auto& f : ring.factors()) s.factors.push_back({f.is_field(), f.nontrivial_count(), f.is_chain()});
  return s;
}

std::string lattice_key(const IdealLattice& L) {
  const int n = static_cast<int>(L.size());
  // Invariant per element: (#below, #above). Elements 0 and top are fixed.
  std::vector<std::pair<int, int>> inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (L.leq(j, i)) ++inv[i].first;
      if (L.leq(i, j)) ++inv[i].second;
    }
  std::vector<int> middle;
  for (int i = 1; i < n - 1; ++i) middle.push_back(i);
  std::stable_sort(middle.begin(), middle.end(), [&](int a, int b) { return inv[a] < inv[b]; });

  // Class boundaries for permutation within equal invariants.
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < middle.size();) {
    std::size_t j = i;
    while (j < middle.size() && inv[middle[j]] == inv[middle[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  auto encode = [&](const std::vector<int>& order) {
    // order[p] = old index placed at new position p
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[order[p]] = p;
    std::string s;
    s.reserve(static_cast<std::size_t>(n * n * 2 + 8));
    s += "s" + std::to_string(n) + "m" + std::to_string(pos[L.maximal()]) + ":";
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        s += std::to_string(pos[L.join(order[a], order[b])]);
        s += ',';
      }
    return s;
  };

  std::vector<int> order;
  order.push_back(0);
  order.insert(order.end(), middle.begin(), middle.end());
  if (n > 1) order.push_back(n - 1);

  // Permutation budget: lattices are tiny; beyond this the invariant-sorted
  // order is used as is.
  long long perms = 1;
  for (auto [b, e] : classes)
    for (std::size_t k = 2; k <= e - b; ++k) perms = std::min<long long>(perms * static_cast<long long>(k), 1LL << 40);
  if (perms > 2'000'000) return encode(order);

  for (auto [b, e] : classes) std::sort(order.begin() + 1 + static_cast<std::ptrdiff_t>(b), order.begin() + 1 + static_cast<std::ptrdiff_t>(e));
  std::string best = encode(order);
  // Odometer over per-class permutations.
  while (true) {
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto first = order.begin() + 1 + static_cast<std::ptrdiff_t>(classes[c].first);
      auto last = order.begin() + 1 + static_cast<std::ptrdiff_t>(classes[c].second);
      if (std::next_permutation(first, last)) break;
    }
    if (c == classes.size()) break;
    best = std::min(best, encode(order));
  }
  return best;
}

std::string canonical_key(const RingSpec& ring) {
  std::string key;
  for (const auto& f : ring.factors()) {
    if (!key.empty()) key += " x ";
    key += "[" + lattice_key(f) + "]";
  }
  return key;
}

std::string unordered_key(const RingSpec& ring) {
  std::vector<std::string> parts;
  for (const auto& f : ring.factors()) parts.push_back(lattice_key(f));
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) {
    if (!key.empty()) key += " x ";
    key += "[" + p + "]";
  }
  return key;
}

}  // namespace pisg
