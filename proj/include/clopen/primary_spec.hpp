#ifndef CLOPEN_PRIMARY_SPEC_HPP
#define CLOPEN_PRIMARY_SPEC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clopen/report.hpp"
#include "clopen/ring_theory.hpp"

// The space of primary ideals of a finite ring, topologised by the sets
// U_r = {I : r not in rad I}. Supported for Z/n and table rings.

namespace clopen {

inline constexpr u64 primary_all_elements_limit = 1024;

/// (d) for a prime-power divisor d of n, or an explicit table member set.
struct PrimaryIdeal {
  bool table = false;
  u64 divisor = 0;
  u64 members = 0;
  u64 radical = 0;  // rad(d) for Z/n, the radical's member mask for tables

  friend bool operator==(const PrimaryIdeal&, const PrimaryIdeal&) = default;
};

inline std::string format(const Ring& r, const PrimaryIdeal& i) {
  if (i.table) return format_set(i.members);
  return i.divisor == r.zmod().n ? "(0)" : "(" + std::to_string(i.divisor) + ")";
}

namespace detail {

inline void require_primary_support(const Ring& r) {
  if (!r.is_zmod() && !r.is_table())
    fail(ErrorKind::invalid_input, "primary spectrum supports Z/n and table rings, got " + r.name());
}

/// rad(I) of a table ideal: elements with some power in I.
inline u64 table_radical(const TableRing& t, u64 ideal) {
  u64 out = 0;
  for (std::size_t a = 0; a < t.size; ++a) {
    std::size_t pw = a;
    for (std::size_t k = 0; k <= t.size; ++k, pw = t.times(pw, a))
      if (ideal >> pw & 1U) {
        out |= u64{1} << a;
        break;
      }
  }
  return out;
}

inline bool table_is_primary(const TableRing& t, u64 ideal) {
  if (ideal >> t.one & 1U) return false;
  const u64 rad = table_radical(t, ideal);
  for (std::size_t a = 0; a < t.size; ++a) {
    if (rad >> a & 1U) continue;
    for (std::size_t b = 0; b < t.size; ++b)
      if ((ideal >> t.times(a, b) & 1U) && !(ideal >> b & 1U)) return false;
  }
  return true;
}

}  // namespace detail

/// Zmod: (d) for d | n a prime power, ascending. Table: every ideal passing
/// the primary test, by member mask.
inline std::vector<PrimaryIdeal> primary_ideals(const Ring& r) {
  detail::require_primary_support(r);
  std::vector<PrimaryIdeal> out;
  if (r.is_zmod()) {
    for (u64 d : arith::divisors(r.zmod().n))
      if (arith::is_prime_power(d)) out.push_back({false, d, 0, arith::radical(d)});
    return out;
  }
  for (u64 ideal : table_ideals(r.table()))
    if (detail::table_is_primary(r.table(), ideal))
      out.push_back({true, 0, ideal, detail::table_radical(r.table(), ideal)});
  return out;
}

/// a in rad I.
inline bool in_radical(const PrimaryIdeal& i, const RingElem& a) {
  if (i.table) return i.radical >> a.words[0] & 1U;
  return a.words[0] % i.radical == 0;
}

/// I subset J.
inline bool primary_subset(const PrimaryIdeal& i, const PrimaryIdeal& j) {
  if (i.table) return (i.members & ~j.members) == 0;
  return i.divisor % j.divisor == 0;
}

/// I subset rad J.
inline bool subset_of_radical(const PrimaryIdeal& i, const PrimaryIdeal& j) {
  if (i.table) return (i.members & ~j.radical) == 0;
  return i.divisor % j.radical == 0;
}

struct PrimarySpace {
  FiniteSpace space;
  std::vector<PrimaryIdeal> points;
  std::vector<std::pair<RingElem, PointSet>> family;  // (r, U_r)
};

/// U_r = {I : r not in rad I}.
inline PointSet u_set(const std::vector<PrimaryIdeal>& pts, const RingElem& a) {
  PointSet out = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!in_radical(pts[i], a)) out |= singleton(i);
  return out;
}

namespace detail {

/// Elements indexing the generating family: every element when the ring is
/// small, otherwise the divisors of n (U_r only depends on gcd(r, n)).
inline std::vector<RingElem> family_indices(const Ring& r) {
  if (r.is_table() || r.zmod().n <= primary_all_elements_limit) return r.elements();
  std::vector<RingElem> out;
  for (u64 d : arith::divisors(r.zmod().n)) out.push_back({{d % r.zmod().n}});
  return out;
}

}  // namespace detail

inline PrimarySpace primary_space(const Ring& r) {
  auto pts = primary_ideals(r);
  if (pts.size() > max_points) fail(ErrorKind::resource, "primary space exceeds 64 points");
  std::vector<std::pair<RingElem, PointSet>> family;
  std::vector<PointSet> sets;
  for (auto& a : detail::family_indices(r)) {
    const PointSet u = u_set(pts, a);
    sets.push_back(u);
    family.emplace_back(std::move(a), u);
  }
  FiniteSpace space = from_subbasis(pts.size(), sets);
  return {std::move(space), std::move(pts), std::move(family)};
}

/// U_1 = X and U_r meet U_s = U_rs over the generating family.
inline Report basis_identity_check(const Ring& r, std::string instance = {}) {
  Report rep("basis_identity", instance.empty() ? r.name() : std::move(instance));
  const auto ps = primary_space(r);
  rep.record("u_one_is_whole_space", u_set(ps.points, r.one()) == ps.space.points());
  bool meets = true;
  for (const auto& [a, ua] : ps.family)
    for (const auto& [b, ub] : ps.family)
      if (meets && (ua & ub) != u_set(ps.points, r.mul(a, b))) {
        meets = false;
        rep.witness = json{{"r", r.format(a)}, {"s", r.format(b)}};
      }
  rep.record("u_intersection_is_u_product", meets);
  bool quasi_compact = true;
  for (const auto& [a, ua] : ps.family) quasi_compact = quasi_compact && ps.space.is_open(ua);
  rep.record("u_sets_open_and_finite", quasi_compact);
  return rep;
}

struct RadicalProjection {
  ContinuousMap map;
  bool preimage_law = true;  // preimage of D(r) is U_r for every r of the family
  bool surjective = true;
};

/// I |-> rad I into spec(R).
inline RadicalProjection radical_projection(const Ring& r) {
  const auto ps = primary_space(r);
  const auto sp = spec(r);
  std::vector<std::size_t> values;
  for (const auto& i : ps.points) {
    PrimeIdeal target;
    if (i.table) {
      target.kind = PrimeIdeal::Kind::table;
      target.members = i.radical;
    } else {
      target.prime = i.radical;
    }
    const auto idx = sp.index_of(target);
    if (!idx) throw std::logic_error("radical of a primary ideal is not a listed prime");
    values.push_back(*idx);
  }
  RadicalProjection out{ContinuousMap(ps.space, sp.space, values)};
  for (const auto& [a, ua] : ps.family)
    out.preimage_law = out.preimage_law && out.map.preimage(d_set(r, sp, a)) == ua;
  out.surjective = out.map.image(ps.space.points()) == sp.space.points();
  return out;
}

struct SoberWitness {
  PointSet closed_set = 0;
  std::vector<std::size_t> generic_points;
  std::pair<std::size_t, std::size_t> pair;  // (largest, smallest) generic ideal
};

struct SoberWitnessResult {
  bool sober = true;
  bool closure_law = true;  // cl{I} = {J : I subset rad J} at every point
  std::optional<SoberWitness> witness;
};

inline SoberWitnessResult sober_witness(const Ring& r) {
  const auto ps = primary_space(r);
  SoberWitnessResult out;
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    PointSet expected = 0;
    for (std::size_t j = 0; j < ps.points.size(); ++j)
      if (subset_of_radical(ps.points[i], ps.points[j])) expected |= singleton(j);
    out.closure_law = out.closure_law && ps.space.closure(singleton(i)) == expected;
  }
  const auto rep = is_sober(ps.space);
  out.sober = rep.sober;
  if (rep.sober) return out;
  SoberWitness w{rep.closed_set, rep.generic_points, {rep.generic_points.front(), rep.generic_points.front()}};
  // Largest: contained in no other generic point; smallest: contains none.
  for (auto g : w.generic_points) {
    if (primary_subset(ps.points[w.pair.first], ps.points[g])) w.pair.first = g;
    if (primary_subset(ps.points[g], ps.points[w.pair.second])) w.pair.second = g;
  }
  out.witness = w;
  return out;
}

/// Every closed point of the primary space is a maximal ideal.
inline bool closed_points_maximal(const Ring& r) {
  const auto ps = primary_space(r);
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    if (ps.space.closure(singleton(i)) != singleton(i)) continue;
    const auto& p = ps.points[i];
    if (!p.table) {
      if (!arith::is_prime(p.divisor)) return false;
      continue;
    }
    for (u64 ideal : table_ideals(r.table()))
      if (ideal != p.members && (p.members & ~ideal) == 0 && !(ideal >> r.table().one & 1U)) return false;
  }
  return true;
}

inline json to_json(const Ring& r, const PrimarySpace& ps, const SoberWitnessResult& sw) {
  json points = json::array(), opens = json::array();
  for (const auto& p : ps.points) points.push_back(format(r, p));
  for (auto o : ps.space.opens()) opens.push_back(members(o));
  json witness = nullptr;
  if (sw.witness) {
    json generic = json::array();
    for (auto g : sw.witness->generic_points) generic.push_back(format(r, ps.points[g]));
    witness = {{"closed_set", members(sw.witness->closed_set)},
               {"generic_points", generic},
               {"pair", {format(r, ps.points[sw.witness->pair.first]),
                         format(r, ps.points[sw.witness->pair.second])}}};
  }
  return {{"ring", r.name()}, {"points", points}, {"opens", opens}, {"sober", sw.sober},
          {"closure_law", sw.closure_law}, {"witness", witness}};
}

}  // namespace clopen

#endif  // CLOPEN_PRIMARY_SPEC_HPP
