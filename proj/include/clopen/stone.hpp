#ifndef CLOPEN_STONE_HPP
#define CLOPEN_STONE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "clopen/bool_ring.hpp"
#include "clopen/report.hpp"
#include "clopen/topo.hpp"

namespace clopen {

inline std::string describe(const FiniteSpace& x) {
  std::string out = "n=" + std::to_string(x.size()) + " opens=";
  for (std::size_t i = 0; i < x.opens().size(); ++i) {
    if (i) out += ",";
    out += format_set(x.opens()[i]);
  }
  return out;
}

/// Primitive elements: nonzero a such that a*b = b != 0 forces b = a.
template <BooleanRing B>
std::vector<std::size_t> atoms(const B& b) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < b.size(); ++a) {
    if (a == b.zero()) continue;
    bool primitive = true;
    for (std::size_t c = 0; c < b.size() && primitive; ++c)
      if (c != b.zero() && c != a && b.mul(a, c) == c) primitive = false;
    if (primitive) out.push_back(a);
  }
  return out;
}

/// Spec of a finite Boolean ring. Point i is the prime {b : atom_i * b = 0}.
struct BoolSpectrum {
  FiniteSpace space;
  std::vector<std::size_t> atom_of_point;
  std::vector<std::vector<std::size_t>> primes;  // sorted member ids

  std::optional<std::size_t> point_of_prime(const std::vector<std::size_t>& members) const {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (primes[i] == members) return i;
    return std::nullopt;
  }
};

/// Checks the ideal axioms and primality of a member set by definition.
template <BooleanRing B>
bool is_prime_ideal(const B& b, const std::vector<std::size_t>& sorted_members) {
  std::vector<bool> in(b.size(), false);
  for (auto m : sorted_members) in[m] = true;
  if (!in[b.zero()] || in[b.one()]) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!in[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (in[j] && !in[b.add(i, j)]) return false;
      if (!in[b.mul(i, j)]) return false;
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (in[b.mul(i, j)] && !in[i] && !in[j]) return false;
  return true;
}

template <BooleanRing B>
BoolSpectrum spec_bool(const B& b) {
  BoolSpectrum s;
  if (b.size() == 1) return s;  // zero ring
  for (auto a : atoms(b)) {
    std::vector<std::size_t> p;
    for (std::size_t c = 0; c < b.size(); ++c)
      if (b.mul(a, c) == b.zero()) p.push_back(c);
    s.atom_of_point.push_back(a);
    s.primes.push_back(std::move(p));
  }
  const std::size_t k = s.primes.size();
  if (k > max_points) fail(ErrorKind::resource, "Boolean ring has more than 64 atoms");
  // Zariski topology generated by D(c) = {P : c not in P}.
  std::vector<PointSet> basic;
  for (std::size_t c = 0; c < b.size(); ++c) {
    PointSet d = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (!std::binary_search(s.primes[i].begin(), s.primes[i].end(), c)) d |= singleton(i);
    basic.push_back(d);
  }
  std::sort(basic.begin(), basic.end());
  basic.erase(std::unique(basic.begin(), basic.end()), basic.end());
  s.space = from_subbasis(k, basic);
  if (!s.space.is_discrete())
    throw std::logic_error("spectrum of a finite Boolean ring is not discrete");
  return s;
}

/// The comparison pi_0(X) -> Spec(Clop(X)), [x] -> {A clopen : x not in A}.
struct StoneMap {
  Partition components;
  ClopRing clop;
  BoolSpectrum spectrum;
  std::vector<std::optional<std::size_t>> image;  // component -> spectrum point
  bool well_defined = true;  // prime independent of the representative
};

inline std::vector<std::size_t> clopens_missing(const ClopRing& c, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!contains(c.set(i), x)) out.push_back(i);
  return out;
}

inline StoneMap stone_map(const FiniteSpace& x) {
  StoneMap m{connected_components(x), clop_ring(x), {}, {}, true};
  m.spectrum = spec_bool(m.clop);
  for (auto block : m.components.blocks) {
    const auto reps = members(block);
    const auto prime = clopens_missing(m.clop, reps.front());
    for (auto r : reps)
      if (clopens_missing(m.clop, r) != prime) m.well_defined = false;
    m.image.push_back(m.spectrum.point_of_prime(prime));
  }
  return m;
}

/// Stone map is a bijective homeomorphism pi_0(X) -> Spec(Clop(X)).
inline Report stone_homeo_check(const FiniteSpace& x, std::string instance = {}) {
  Report r{"stone_homeo", instance.empty() ? describe(x) : std::move(instance)};
  const auto m = stone_map(x);
  const auto pi0 = quotient_space(x, m.components);
  const auto& spec = m.spectrum.space;
  r.record("well_defined", m.well_defined);

  const bool lands = std::all_of(m.image.begin(), m.image.end(),
                                 [](const auto& v) { return v.has_value(); });
  r.record("image_is_prime", lands);
  if (!lands) return r;

  std::vector<std::size_t> f;
  PointSet hit = 0;
  for (const auto& v : m.image) {
    f.push_back(*v);
    hit |= singleton(*v);
  }
  const bool injective = cardinality(hit) == f.size();
  const bool surjective = hit == spec.points();
  r.record("injective", injective);
  r.record("surjective", surjective);

  auto preimage = [&](PointSet s) {
    PointSet out = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (contains(s, f[i])) out |= singleton(i);
    return out;
  };
  auto image = [&](PointSet s) {
    PointSet out = 0;
    for (auto i : members(s)) out |= singleton(f[i]);
    return out;
  };
  bool continuous = true;
  for (auto o : spec.opens()) continuous = continuous && pi0.is_open(preimage(o));
  bool open = true;
  for (auto o : pi0.opens()) open = open && spec.is_open(image(o));
  r.record("continuous", continuous);
  r.record("open", open);

  // Injectivity is equivalent to every quasi-component being connected.
  bool quasi_connected = true;
  for (auto q : quasi_components(x).blocks) quasi_connected = quasi_connected && is_connected(x, q);
  r.record("injective_iff_quasi_components_connected", injective == quasi_connected);
  if (!r.pass) r.witness["components"] = format_partition(m.components);
  return r;
}

/// X is homeomorphic to Spec(Clop(X)).
inline bool selfdual_check(const FiniteSpace& x) {
  return find_homeomorphism(x, spec_bool(clop_ring(x)).space).has_value();
}

/// Coordinates of a clopen against the component basis: bit k set iff
/// component k lies inside it.
inline std::uint64_t component_coordinates(const Partition& comps, PointSet a) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (is_subset(comps.blocks[k], a)) bits |= std::uint64_t{1} << k;
  return bits;
}

/// The simultaneous finite forms of the clopen-count characterizations, all
/// with the same n = |pi_0(X)|.
inline Report finiteness_suite(const FiniteSpace& x, std::string instance = {}) {
  Report r{"finiteness", instance.empty() ? describe(x) : std::move(instance)};
  const auto comps = connected_components(x);
  const auto clop = clop_ring(x);
  const std::size_t n = comps.size();
  if (n > 20) fail(ErrorKind::resource, "finiteness suite limited to 20 components");

  r.record("cardinality_2^n", clop.size() == (std::size_t{1} << n));

  // Clop(X) -> (Z/2)^n; bijective ring morphism.
  std::vector<std::uint64_t> coords;
  for (auto a : clop.sets()) coords.push_back(component_coordinates(comps, a));
  auto sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  bool bijective = sorted.size() == (std::size_t{1} << n);
  for (std::size_t i = 0; bijective && i < sorted.size(); ++i) bijective = sorted[i] == i;
  bool morphism = true;
  for (std::size_t a = 0; a < clop.size() && morphism; ++a)
    for (std::size_t b = 0; b < clop.size() && morphism; ++b)
      morphism = coords[clop.add(a, b)] == (coords[a] ^ coords[b]) &&
                 coords[clop.mul(a, b)] == (coords[a] & coords[b]);
  r.record("iso_to_power_of_Z2", bijective && morphism && coords[clop.one()] == (std::uint64_t{1} << n) - 1);

  // Every clopen is the unique sum of the components inside it.
  bool basis = true;
  for (std::size_t i = 0; i < clop.size(); ++i) {
    PointSet sum = 0;
    for (std::size_t k = 0; k < n; ++k)
      if ((coords[i] >> k) & 1U) sum ^= comps.blocks[k];
    basis = basis && sum == clop.set(i);
  }
  r.record("components_form_basis", basis && bijective);

  const auto at = atoms(clop);
  PointSet unit = 0;
  bool orthogonal = true;
  for (std::size_t i = 0; i < at.size(); ++i) {
    unit = clop.set(clop.add(clop.index_of(unit), at[i]));
    for (std::size_t j = i + 1; j < at.size(); ++j)
      orthogonal = orthogonal && clop.mul(at[i], at[j]) == clop.zero();
  }
  r.record("unit_is_sum_of_orthogonal_atoms", orthogonal && unit == x.points());

  std::vector<PointSet> atom_sets;
  for (auto a : at) atom_sets.push_back(clop.set(a));
  auto blocks = comps.blocks;
  std::sort(atom_sets.begin(), atom_sets.end());
  std::sort(blocks.begin(), blocks.end());
  r.record("atoms_are_components", atom_sets == blocks);

  bool open = true;
  for (auto b : comps.blocks) open = open && x.is_open(b);
  r.record("components_open", open);

  const auto spec = spec_bool(clop);
  r.record("same_kappa", at.size() == n && spec.space.size() == n &&
                             clop.size() == (std::size_t{1} << at.size()));
  return r;
}

}  // namespace clopen

#endif  // CLOPEN_STONE_HPP
