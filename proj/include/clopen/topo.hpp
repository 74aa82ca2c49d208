#ifndef CLOPEN_TOPO_HPP
#define CLOPEN_TOPO_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "clopen/bool_ring.hpp"
#include "clopen/error.hpp"
#include "clopen/point_set.hpp"

namespace clopen {

/// Upper bound on the number of open sets a single space may carry.
inline constexpr std::size_t max_open_sets = std::size_t{1} << 22;

/// A finite topological space on points 0..n-1 with its full list of opens.
///
/// Finite spaces are Alexandrov: every point x has a smallest open
/// neighbourhood U(x), and x lies in the closure of {y} iff y is in U(x).
/// The opens are kept sorted so membership is a binary search.
class FiniteSpace {
 public:
  FiniteSpace() : FiniteSpace(0, std::vector<PointSet>{0}) {}

  /// Validates the topology axioms; throws Error(invalid_input) otherwise.
  FiniteSpace(std::size_t n, std::vector<PointSet> opens) : n_(n), opens_(std::move(opens)) {
    if (n_ > max_points) fail(ErrorKind::resource, "spaces are limited to 64 points");
    const PointSet all = full_set(n_);
    std::sort(opens_.begin(), opens_.end());
    if (std::adjacent_find(opens_.begin(), opens_.end()) != opens_.end())
      fail(ErrorKind::invalid_input, "duplicate open set");
    for (auto o : opens_)
      if (!is_subset(o, all))
        fail(ErrorKind::invalid_input, "open set " + format_set(o) + " has points outside the space");
    if (!is_open(0)) fail(ErrorKind::invalid_input, "empty set must be open");
    if (!is_open(all)) fail(ErrorKind::invalid_input, "full set must be open");
    for (std::size_t i = 0; i < opens_.size(); ++i)
      for (std::size_t j = i + 1; j < opens_.size(); ++j) {
        if (!is_open(opens_[i] | opens_[j]))
          fail(ErrorKind::invalid_input, "opens not closed under union: " +
                                             format_set(opens_[i]) + " u " + format_set(opens_[j]));
        if (!is_open(opens_[i] & opens_[j]))
          fail(ErrorKind::invalid_input, "opens not closed under intersection: " +
                                             format_set(opens_[i]) + " n " + format_set(opens_[j]));
      }
    compute_neighbourhoods();
  }

  std::size_t size() const { return n_; }
  PointSet points() const { return full_set(n_); }
  const std::vector<PointSet>& opens() const { return opens_; }

  bool is_open(PointSet s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }
  bool is_closed(PointSet s) const { return is_open(points() & ~s); }

  /// Smallest open set containing x.
  PointSet neighbourhood(std::size_t x) const { return nbhd_[x]; }

  /// Smallest open set containing s.
  PointSet open_hull(PointSet s) const {
    PointSet out = 0;
    for (auto x : members(s)) out |= nbhd_[x];
    return out;
  }

  PointSet closure(PointSet s) const {
    PointSet out = 0;
    for (std::size_t x = 0; x < n_; ++x)
      if (nbhd_[x] & s) out |= singleton(x);
    return out;
  }

  /// Specialization preorder: x <= y iff x lies in the closure of {y}.
  bool specializes(std::size_t x, std::size_t y) const { return contains(nbhd_[x], y); }

  std::vector<PointSet> closed_sets() const {
    std::vector<PointSet> out;
    out.reserve(opens_.size());
    for (auto o : opens_) out.push_back(points() & ~o);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_discrete() const {
    for (std::size_t x = 0; x < n_; ++x)
      if (nbhd_[x] != singleton(x)) return false;
    return true;
  }

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

  static FiniteSpace discrete(std::size_t n) {
    std::vector<PointSet> sub;
    for (std::size_t i = 0; i < n; ++i) sub.push_back(singleton(i));
    return from_neighbourhoods(n, sub);
  }

  static FiniteSpace indiscrete(std::size_t n) {
    return n == 0 ? FiniteSpace() : FiniteSpace(n, {0, full_set(n)});
  }

  /// Topology with the given minimal neighbourhoods; nbhd[x] must contain x
  /// and y in nbhd[x] must imply nbhd[y] within nbhd[x].
  static FiniteSpace from_neighbourhoods(std::size_t n, const std::vector<PointSet>& nbhd) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!contains(nbhd[x], x))
        fail(ErrorKind::invalid_input, "neighbourhood of a point must contain it");
      for (auto y : members(nbhd[x]))
        if (!is_subset(nbhd[y], nbhd[x]))
          fail(ErrorKind::invalid_input, "neighbourhoods are not transitive");
    }
    return FiniteSpace(n, unions_of(n, nbhd), nbhd);
  }

 private:
  FiniteSpace(std::size_t n, std::vector<PointSet> sorted_opens, std::vector<PointSet> nbhd)
      : n_(n), opens_(std::move(sorted_opens)), nbhd_(std::move(nbhd)) {}

  friend FiniteSpace from_subbasis(std::size_t, const std::vector<PointSet>&);

  /// All unions of the given sets, sorted; always includes the empty union.
  static std::vector<PointSet> unions_of(std::size_t n, const std::vector<PointSet>& gens) {
    std::unordered_set<PointSet> seen{0};
    std::vector<PointSet> out{0};
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t existing = out.size();
      for (std::size_t i = 0; i < existing; ++i) {
        const PointSet u = out[i] | gens[x];
        if (seen.insert(u).second) {
          out.push_back(u);
          if (out.size() > max_open_sets)
            fail(ErrorKind::resource, "topology has too many open sets");
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void compute_neighbourhoods() {
    nbhd_.assign(n_, points());
    for (auto o : opens_)
      for (auto x : members(o)) nbhd_[x] &= o;
  }

  std::size_t n_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> nbhd_;
};

/// Smallest topology containing every set of the family.
inline FiniteSpace from_subbasis(std::size_t n, const std::vector<PointSet>& sets) {
  if (n > max_points) fail(ErrorKind::resource, "spaces are limited to 64 points");
  const PointSet all = full_set(n);
  for (auto s : sets)
    if (!is_subset(s, all))
      fail(ErrorKind::invalid_input, "subbasis set " + format_set(s) + " has points outside the space");
  // The finite intersection of all members containing x is the smallest
  // neighbourhood of x; the topology is the set of their unions.
  std::vector<PointSet> nbhd(n, all);
  for (auto s : sets)
    for (auto x : members(s)) nbhd[x] &= s;
  return FiniteSpace(n, FiniteSpace::unions_of(n, nbhd), nbhd);
}

/// Disjoint blocks covering all points, sorted by least point.
struct Partition {
  std::vector<PointSet> blocks;

  std::size_t size() const { return blocks.size(); }

  std::size_t block_of(std::size_t x) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (contains(blocks[i], x)) return i;
    fail(ErrorKind::invalid_input, "point " + std::to_string(x) + " not covered by partition");
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

inline Partition make_partition(std::vector<PointSet> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](PointSet a, PointSet b) { return least_point(a) < least_point(b); });
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return Partition{std::move(blocks)};
}

inline std::string format_partition(const Partition& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += ",";
    out += format_set(p.blocks[i]);
  }
  return out + "}";
}

/// Opens of the subspace `sub`, sorted and deduplicated.
inline std::vector<PointSet> subspace_opens(const FiniteSpace& x, PointSet sub) {
  std::vector<PointSet> out;
  out.reserve(x.opens().size());
  for (auto o : x.opens()) out.push_back(o & sub);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// A proper nonempty subset of `sub` that is clopen in the subspace
/// topology, if one exists. Scans subspace opens directly.
inline std::optional<PointSet> nontrivial_subspace_clopen(const FiniteSpace& x, PointSet sub) {
  const auto opens = subspace_opens(x, sub);
  for (auto a : opens) {
    if (a == 0 || a == sub) continue;
    if (std::binary_search(opens.begin(), opens.end(), sub & ~a)) return a;
  }
  return std::nullopt;
}

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Components of the comparability graph of the specialization preorder
/// restricted to `sub`.
inline std::vector<PointSet> comparability_components(const FiniteSpace& x, PointSet sub) {
  UnionFind uf(x.size());
  const auto pts = members(sub);
  for (auto a : pts)
    for (auto b : pts)
      if (a < b && (x.specializes(a, b) || x.specializes(b, a))) uf.unite(a, b);
  std::vector<PointSet> by_root(x.size(), 0);
  for (auto a : pts) by_root[uf.find(a)] |= singleton(a);
  std::vector<PointSet> out;
  for (auto b : by_root)
    if (b) out.push_back(b);
  return out;
}

}  // namespace detail

/// Connected subsets are nonempty by convention.
inline bool is_connected(const FiniteSpace& x, PointSet sub) {
  return sub != 0 && detail::comparability_components(x, sub).size() == 1;
}

/// Connected components via the specialization comparability graph, each
/// audited against the subspace clopen scan.
inline Partition connected_components(const FiniteSpace& x) {
  auto p = make_partition(detail::comparability_components(x, x.points()));
  for (auto b : p.blocks)
    if (auto w = nontrivial_subspace_clopen(x, b))
      throw std::logic_error("component " + format_set(b) + " has clopen piece " + format_set(*w));
  return p;
}

inline std::vector<PointSet> clopen_sets(const FiniteSpace& x) {
  std::vector<PointSet> out;
  for (auto o : x.opens())
    if (x.is_closed(o)) out.push_back(o);
  return out;
}

/// q(x) = intersection of every clopen containing x.
inline Partition quasi_components(const FiniteSpace& x) {
  const auto clop = clopen_sets(x);
  std::vector<PointSet> blocks;
  for (std::size_t p = 0; p < x.size(); ++p) {
    PointSet q = x.points();
    for (auto a : clop)
      if (contains(a, p)) q &= a;
    blocks.push_back(q);
  }
  return make_partition(std::move(blocks));
}

inline ClopRing clop_ring(const FiniteSpace& x) { return ClopRing(x.size(), clopen_sets(x)); }

/// Image of `s` under the block quotient; bit i set iff block i meets s.
inline PointSet block_image(const Partition& p, PointSet s) {
  PointSet out = 0;
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    if (p.blocks[i] & s) out |= singleton(i);
  return out;
}

inline bool is_saturated(const Partition& p, PointSet s) {
  for (auto b : p.blocks)
    if ((b & s) && !is_subset(b, s)) return false;
  return true;
}

/// Quotient space of `x` by the partition `p`.
inline FiniteSpace quotient_space(const FiniteSpace& x, const Partition& p) {
  std::vector<PointSet> opens;
  for (auto o : x.opens())
    if (is_saturated(p, o)) opens.push_back(block_image(p, o));
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return FiniteSpace(p.size(), std::move(opens));
}

/// pi_0(X): the space of connected components with the quotient topology.
inline FiniteSpace pi0_space(const FiniteSpace& x) {
  return quotient_space(x, connected_components(x));
}

/// Characteristic functions of the connected components.
inline std::vector<std::vector<int>> h0_basis(const FiniteSpace& x) {
  std::vector<std::vector<int>> out;
  for (auto b : connected_components(x).blocks) {
    std::vector<int> f(x.size(), 0);
    for (auto p : members(b)) f[p] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

/// A map of finite spaces, validated continuous on construction.
class ContinuousMap {
 public:
  ContinuousMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> values)
      : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
    if (values_.size() != source_.size())
      fail(ErrorKind::invalid_input, "map needs one value per source point");
    for (auto v : values_)
      if (v >= target_.size()) fail(ErrorKind::invalid_input, "map value outside target");
    for (auto o : target_.opens())
      if (!source_.is_open(preimage(o)))
        fail(ErrorKind::invalid_input,
             "map is not continuous: preimage of open " + format_set(o) + " is not open");
  }

  const FiniteSpace& source() const { return source_; }
  const FiniteSpace& target() const { return target_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t x) const { return values_[x]; }

  PointSet preimage(PointSet s) const {
    PointSet out = 0;
    for (std::size_t x = 0; x < values_.size(); ++x)
      if (contains(s, values_[x])) out |= singleton(x);
    return out;
  }

  PointSet image(PointSet s) const {
    PointSet out = 0;
    for (auto x : members(s)) out |= singleton(values_[x]);
    return out;
  }

  static ContinuousMap identity(const FiniteSpace& x) {
    std::vector<std::size_t> v(x.size());
    std::iota(v.begin(), v.end(), 0);
    return ContinuousMap(x, x, std::move(v));
  }

 private:
  FiniteSpace source_;
  FiniteSpace target_;
  std::vector<std::size_t> values_;
};

/// The ring morphism Clop(target) -> Clop(source), V -> f^{-1}(V).
struct ClopPullback {
  ClopRing target_ring;
  ClopRing source_ring;
  std::vector<std::size_t> map;  // target clopen id -> source clopen id

  PointSet operator()(PointSet v) const {
    return source_ring.set(map[target_ring.index_of(v)]);
  }
};

inline ClopPullback pullback_clop(const ContinuousMap& f) {
  ClopPullback out{clop_ring(f.target()), clop_ring(f.source()), {}};
  const auto& tr = out.target_ring;
  const auto& sr = out.source_ring;
  for (auto v : tr.sets()) out.map.push_back(sr.index_of(f.preimage(v)));
  auto morphism_error = [](const std::string& law) {
    throw std::logic_error("pullback fails to preserve " + law);
  };
  if (out.map[tr.zero()] != sr.zero()) morphism_error("zero");
  if (out.map[tr.one()] != sr.one()) morphism_error("one");
  for (std::size_t a = 0; a < tr.size(); ++a)
    for (std::size_t b = 0; b < tr.size(); ++b) {
      if (out.map[tr.add(a, b)] != sr.add(out.map[a], out.map[b])) morphism_error("+");
      if (out.map[tr.mul(a, b)] != sr.mul(out.map[a], out.map[b])) morphism_error("*");
    }
  return out;
}

enum class FiberMode { closed, open, section };

inline const char* to_string(FiberMode m) {
  switch (m) {
    case FiberMode::closed: return "closed";
    case FiberMode::open: return "open";
    case FiberMode::section: return "section";
  }
  return "?";
}

inline bool is_closed_map(const ContinuousMap& f) {
  for (auto c : f.source().closed_sets())
    if (!f.target().is_closed(f.image(c))) return false;
  return true;
}

inline bool is_open_map(const ContinuousMap& f) {
  for (auto o : f.source().opens())
    if (!f.target().is_open(f.image(o))) return false;
  return true;
}

/// Checks that g : target -> source is continuous and f o g = id.
inline bool is_section(const ContinuousMap& f, const std::vector<std::size_t>& g) {
  const auto& x = f.source();
  const auto& y = f.target();
  if (g.size() != y.size()) return false;
  for (std::size_t p = 0; p < y.size(); ++p)
    if (g[p] >= x.size() || f(g[p]) != p) return false;
  for (auto o : x.opens()) {
    PointSet pre = 0;
    for (std::size_t p = 0; p < y.size(); ++p)
      if (contains(o, g[p])) pre |= singleton(p);
    if (!y.is_open(pre)) return false;
  }
  return true;
}

/// Exhaustive search for a continuous section, bounded by `budget` candidates.
inline std::optional<std::vector<std::size_t>> find_section(const ContinuousMap& f,
                                                            std::size_t budget = 1U << 16) {
  const auto& y = f.target();
  std::vector<std::vector<std::size_t>> fibers(y.size());
  for (std::size_t x = 0; x < f.source().size(); ++x) fibers[f(x)].push_back(x);
  for (auto& fb : fibers)
    if (fb.empty()) return std::nullopt;
  std::vector<std::size_t> choice(y.size(), 0);
  std::vector<std::size_t> g(y.size());
  for (std::size_t tried = 0; tried < budget; ++tried) {
    for (std::size_t p = 0; p < y.size(); ++p) g[p] = fibers[p][choice[p]];
    if (is_section(f, g)) return g;
    std::size_t k = 0;
    while (k < y.size() && ++choice[k] == fibers[k].size()) choice[k++] = 0;
    if (k == y.size()) break;
  }
  return std::nullopt;
}

struct FiberTransferReport {
  bool applicable = false;
  std::string reason;       // why the preconditions fail, when not applicable
  bool holds = true;        // biconditionals hold (meaningful when applicable)
  std::size_t subsets_checked = 0;
  std::optional<PointSet> counterexample;  // target subset breaking the biconditional
};

inline constexpr std::size_t max_fiber_target_points = 16;

/// When the fibers are nonempty and connected and `mode` holds for f:
/// C is connected iff f^{-1}(C) is, for every C in Y including Y itself.
inline FiberTransferReport fiber_transfer_check(
    const ContinuousMap& f, FiberMode mode,
    const std::optional<std::vector<std::size_t>>& section = std::nullopt) {
  FiberTransferReport r;
  const auto& x = f.source();
  const auto& y = f.target();
  if (y.size() > max_fiber_target_points)
    fail(ErrorKind::resource, "fiber transfer check limited to 16 target points");
  for (std::size_t p = 0; p < y.size(); ++p)
    if (!is_connected(x, f.preimage(singleton(p)))) {
      r.reason = "fiber over " + std::to_string(p) + " is empty or disconnected";
      return r;
    }
  switch (mode) {
    case FiberMode::closed:
      if (!is_closed_map(f)) {
        r.reason = "map is not closed";
        return r;
      }
      break;
    case FiberMode::open:
      if (!is_open_map(f)) {
        r.reason = "map is not open";
        return r;
      }
      break;
    case FiberMode::section: {
      const bool ok = section ? is_section(f, *section) : find_section(f).has_value();
      if (!ok) {
        r.reason = "no continuous section";
        return r;
      }
      break;
    }
  }
  r.applicable = true;
  if (is_connected(x, x.points()) != is_connected(y, y.points())) {
    r.holds = false;
    r.counterexample = y.points();
    return r;
  }
  const PointSet limit = full_set(y.size());
  for (PointSet c = 0;; ++c) {
    ++r.subsets_checked;
    if (is_connected(y, c) != is_connected(x, f.preimage(c))) {
      r.holds = false;
      r.counterexample = c;
      return r;
    }
    if (c == limit) break;
  }
  return r;
}

struct SoberReport {
  bool sober = true;
  PointSet closed_set = 0;                 // irreducible closed set, when not sober
  std::vector<std::size_t> generic_points;  // its generic points
};

/// Points of the closed set `f` lying in no proper closed subset of it.
/// `f` is irreducible iff this is nonempty.
inline PointSet generic_points(const FiniteSpace& x, PointSet f) {
  PointSet covered = 0;
  for (auto g : x.closed_sets())
    if (g != f && is_subset(g, f)) covered |= g;
  return f & ~covered;
}

inline SoberReport is_sober(const FiniteSpace& x) {
  SoberReport r;
  for (auto f : x.closed_sets()) {
    if (f == 0) continue;
    const PointSet gen = generic_points(x, f);
    if (gen != 0 && cardinality(gen) != 1) {
      r.sober = false;
      r.closed_set = f;
      r.generic_points = members(gen);
      return r;
    }
  }
  return r;
}

/// A homeomorphism x -> y (as a point permutation) if one exists. Finite
/// spaces are homeomorphic iff their specialization preorders are isomorphic.
inline std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& x,
                                                                  const FiniteSpace& y) {
  const std::size_t n = x.size();
  if (n != y.size() || x.opens().size() != y.opens().size()) return std::nullopt;
  std::vector<std::size_t> img(n);
  PointSet used = 0;
  auto profile = [](const FiniteSpace& s, std::size_t p) {
    return std::pair{cardinality(s.neighbourhood(p)), cardinality(s.closure(singleton(p)))};
  };
  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (contains(used, c) || profile(x, k) != profile(y, c)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = x.specializes(k, j) == y.specializes(c, img[j]) &&
             x.specializes(j, k) == y.specializes(img[j], c);
      if (!ok) continue;
      img[k] = c;
      used |= singleton(c);
      if (self(self, k + 1)) return true;
      used &= ~singleton(c);
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return img;
}

namespace detail {

inline std::vector<FiniteSpace> topologies_by_family_scan(std::size_t n) {
  const PointSet all = full_set(n);
  std::vector<PointSet> middle;
  for (PointSet s = 1; s < all; ++s) middle.push_back(s);
  std::vector<FiniteSpace> out;
  const std::uint64_t candidates = std::uint64_t{1} << middle.size();
  std::vector<bool> in_family(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    std::vector<PointSet> fam{0, all};
    if (n == 0) fam = {0};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((mask >> i) & 1U) fam.push_back(middle[i]);
    std::fill(in_family.begin(), in_family.end(), false);
    for (auto s : fam) in_family[s] = true;
    bool closed = true;
    for (std::size_t i = 0; i < fam.size() && closed; ++i)
      for (std::size_t j = i + 1; j < fam.size() && closed; ++j)
        closed = in_family[fam[i] | fam[j]] && in_family[fam[i] & fam[j]];
    if (closed) out.emplace_back(n, std::move(fam));
  }
  return out;
}

inline std::vector<FiniteSpace> topologies_by_preorder(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) off.emplace_back(a, b);
  std::vector<FiniteSpace> out;
  std::vector<PointSet> up(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    for (std::size_t a = 0; a < n; ++a) up[a] = singleton(a);
    for (std::size_t i = 0; i < off.size(); ++i)
      if ((mask >> i) & 1U) up[off[i].first] |= singleton(off[i].second);
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (auto b : members(up[a]))
        if (!is_subset(up[b], up[a])) {
          transitive = false;
          break;
        }
    if (transitive) out.push_back(FiniteSpace::from_neighbourhoods(n, up));
  }
  return out;
}

}  // namespace detail

/// Every topology on n labelled points (n <= 5).
inline std::vector<FiniteSpace> enumerate_topologies(std::size_t n) {
  if (n > 5) fail(ErrorKind::resource, "topology enumeration limited to 5 points");
  return n <= 4 ? detail::topologies_by_family_scan(n) : detail::topologies_by_preorder(n);
}

}  // namespace clopen

#endif  // CLOPEN_TOPO_HPP
