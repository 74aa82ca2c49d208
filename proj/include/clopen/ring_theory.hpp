#ifndef CLOPEN_RING_THEORY_HPP
#define CLOPEN_RING_THEORY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "clopen/bool_ring.hpp"
#include "clopen/report.hpp"
#include "clopen/ring.hpp"
#include "clopen/stone.hpp"
#include "clopen/topo.hpp"

namespace clopen {

inline constexpr std::size_t max_idempotents = std::size_t{1} << 20;
inline constexpr u64 exhaustive_ring_limit = 4096;

// ---------------------------------------------------------------- idempotents

/// Idempotents sorted by representation, with primitive flags.
struct IdempotentSet {
  std::vector<RingElem> elements;
  std::vector<bool> primitive;

  std::size_t size() const { return elements.size(); }

  std::vector<RingElem> primitives() const {
    std::vector<RingElem> out;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (primitive[i]) out.push_back(elements[i]);
    return out;
  }

  std::optional<std::size_t> index_of(const RingElem& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
};

namespace detail {

/// Every sum over a subset of pairwise orthogonal basic idempotents.
inline IdempotentSet subset_sums(const Ring& r, const std::vector<RingElem>& basic) {
  if (basic.size() >= 21) fail(ErrorKind::resource, "too many idempotents to list");
  std::vector<std::pair<RingElem, bool>> all;
  for (std::size_t mask = 0; mask < (std::size_t{1} << basic.size()); ++mask) {
    RingElem e = r.zero();
    for (std::size_t i = 0; i < basic.size(); ++i)
      if (mask >> i & 1U) e = r.add(e, basic[i]);
    all.emplace_back(e, __builtin_popcountll(mask) == 1);
  }
  std::sort(all.begin(), all.end());
  IdempotentSet out;
  for (auto& [e, prim] : all) {
    out.elements.push_back(std::move(e));
    out.primitive.push_back(prim);
  }
  return out;
}

inline std::vector<RingElem> basic_idempotents(const Ring& r);

inline std::vector<RingElem> basic_idempotents_zmod(const Ring& r) {
  const auto parts = arith::factor(r.zmod().n);
  std::vector<u64> moduli;
  for (const auto& pp : parts) moduli.push_back(pp.value);
  std::vector<RingElem> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<u64> residues(parts.size(), 0);
    residues[i] = 1;
    out.push_back({{arith::crt(residues, moduli)}});
  }
  return out;
}

inline std::vector<RingElem> basic_idempotents_poly(const Ring& r) {
  const auto& q = r.poly();
  std::vector<gfp::Poly> parts;
  for (const auto& fac : gfp::factor(q.f, q.p)) {
    gfp::Poly part{1};
    for (unsigned k = 0; k < fac.multiplicity; ++k) part = gfp::mul(part, fac.poly, q.p);
    parts.push_back(part);
  }
  std::vector<RingElem> out;
  if (parts.size() == 1) return {r.one()};
  for (const auto& part : parts) {
    // (f/q_i) * ((f/q_i)^-1 mod q_i) is 1 mod q_i and 0 mod the other parts.
    const gfp::Poly cof = gfp::divmod(q.f, part, q.p).first;
    const gfp::Poly inv = gfp::inverse_mod(gfp::mod(cof, part, q.p), part, q.p);
    out.push_back(r.from_poly(gfp::mul(cof, inv, q.p)));
  }
  return out;
}

inline std::vector<RingElem> basic_idempotents(const Ring& r) {
  if (r.is_zmod()) return basic_idempotents_zmod(r);
  if (r.is_poly()) return basic_idempotents_poly(r);
  if (r.is_product()) {
    std::vector<RingElem> out;
    for (std::size_t i = 0; i < r.factors().size(); ++i)
      for (const auto& b : basic_idempotents(r.factors()[i])) {
        std::vector<RingElem> parts;
        for (std::size_t j = 0; j < r.factors().size(); ++j)
          parts.push_back(j == i ? b : r.factors()[j].zero());
        out.push_back(r.assemble(parts));
      }
    return out;
  }
  // Table: atoms of the brute-force idempotent set.
  std::vector<RingElem> idem;
  for (const auto& e : r.elements())
    if (r.mul(e, e) == e && !r.is_zero(e)) idem.push_back(e);
  std::vector<RingElem> out;
  for (const auto& e : idem) {
    bool atom = true;
    for (const auto& f : idem)
      if (f != e && r.mul(e, f) == f) atom = false;
    if (atom) out.push_back(e);
  }
  return out;
}

}  // namespace detail

/// All solutions of e^2 = e. Zmod and PolyQuot go through the CRT on the
/// prime-power factorization; products combine componentwise; tables scan.
inline IdempotentSet idempotents(const Ring& r) {
  return detail::subset_sums(r, detail::basic_idempotents(r));
}

/// Scan of every element; the cross-check for `idempotents`.
inline std::vector<RingElem> idempotents_brute(const Ring& r, u64 limit = u64{1} << 20) {
  std::vector<RingElem> out;
  for (const auto& e : r.elements(limit))
    if (r.mul(e, e) == e) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

/// Atoms of the idempotent lattice by definition: e != 0 and no nonzero
/// idempotent f != e with ef = f.
inline std::vector<bool> primitive_by_definition(const Ring& r, const std::vector<RingElem>& idem) {
  std::vector<bool> out(idem.size(), false);
  for (std::size_t i = 0; i < idem.size(); ++i) {
    if (r.is_zero(idem[i])) continue;
    bool atom = true;
    for (std::size_t j = 0; j < idem.size() && atom; ++j)
      if (j != i && !r.is_zero(idem[j]) && r.mul(idem[i], idem[j]) == idem[j]) atom = false;
    out[i] = atom;
  }
  return out;
}

inline IdempotentSet primitive_idempotents(const Ring& r) {
  IdempotentSet all = idempotents(r);
  IdempotentSet out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all.primitive[i]) {
      out.elements.push_back(all.elements[i]);
      out.primitive.push_back(true);
    }
  return out;
}

/// e (+) f = e + f - 2ef.
inline RingElem boolean_add(const Ring& r, const RingElem& e, const RingElem& f) {
  return r.sub(r.add(e, f), r.add(r.mul(e, f), r.mul(e, f)));
}

/// B(R) on `idempotents(r)`, element ids in that order.
inline BoolRing boolean_ring(const Ring& r, const IdempotentSet& idem) {
  const std::size_t s = idem.size();
  if (s > max_table_bool_ring) fail(ErrorKind::resource, "B(R) exceeds 256 elements");
  std::vector<std::uint16_t> add(s * s), mul(s * s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      add[i * s + j] = static_cast<std::uint16_t>(*idem.index_of(boolean_add(r, idem.elements[i], idem.elements[j])));
      mul[i * s + j] = static_cast<std::uint16_t>(*idem.index_of(r.mul(idem.elements[i], idem.elements[j])));
    }
  return BoolRing(s, std::move(add), std::move(mul), *idem.index_of(r.zero()), *idem.index_of(r.one()));
}

inline BoolRing boolean_ring(const Ring& r) { return boolean_ring(r, idempotents(r)); }

// ------------------------------------------------------------ table ideals

/// Every ideal of a table ring as an element bitmask, sorted.
inline std::vector<u64> table_ideals(const TableRing& t) {
  auto principal_sum = [&](u64 ideal, std::size_t g) {
    u64 rg = 0;
    for (std::size_t r = 0; r < t.size; ++r) rg |= u64{1} << t.times(r, g);
    u64 out = 0;
    for (std::size_t a = 0; a < t.size; ++a)
      if (ideal >> a & 1U)
        for (std::size_t b = 0; b < t.size; ++b)
          if (rg >> b & 1U) out |= u64{1} << t.plus(a, b);
    return out;
  };
  std::set<u64> seen{u64{1} << t.zero};
  std::vector<u64> frontier{u64{1} << t.zero};
  while (!frontier.empty()) {
    const u64 ideal = frontier.back();
    frontier.pop_back();
    for (std::size_t g = 0; g < t.size; ++g) {
      if (ideal >> g & 1U) continue;
      const u64 next = principal_sum(ideal, g);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool table_ideal_is_prime(const TableRing& t, u64 ideal) {
  if (ideal >> t.one & 1U) return false;
  for (std::size_t a = 0; a < t.size; ++a)
    for (std::size_t b = 0; b < t.size; ++b)
      if ((ideal >> t.times(a, b) & 1U) && !(ideal >> a & 1U) && !(ideal >> b & 1U)) return false;
  return true;
}

// ------------------------------------------------------------------ spectrum

/// Symbolic prime ideal: (p) in Z/n, (g) in GF(p)[x]/(f), a prime of one
/// product factor (the others contribute the whole ring), or an explicit
/// member set of a table ring.
struct PrimeIdeal {
  enum class Kind { zmod, poly, product, table };
  Kind kind = Kind::zmod;
  u64 prime = 0;
  gfp::Poly factor;
  std::size_t component = 0;
  std::vector<PrimeIdeal> inner;  // exactly one entry for products
  u64 members = 0;

  friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
};

/// "(2)", "(x+1)", "(3)@1" for a prime of product factor 1, "{0,2}" for tables.
inline std::string format(const PrimeIdeal& p) {
  switch (p.kind) {
    case PrimeIdeal::Kind::zmod: return "(" + std::to_string(p.prime) + ")";
    case PrimeIdeal::Kind::poly: return "(" + gfp::format(p.factor) + ")";
    case PrimeIdeal::Kind::product: return format(p.inner.front()) + "@" + std::to_string(p.component);
    case PrimeIdeal::Kind::table: return format_set(p.members);
  }
  return {};
}

/// As `format`, but the zero ideal of a domain prints as "(0)".
inline std::string format(const Ring& r, const PrimeIdeal& p) {
  switch (p.kind) {
    case PrimeIdeal::Kind::zmod: return p.prime == r.zmod().n ? "(0)" : format(p);
    case PrimeIdeal::Kind::poly: return p.factor == r.poly().f ? "(0)" : format(p);
    case PrimeIdeal::Kind::product:
      return format(r.factors()[p.component], p.inner.front()) + "@" + std::to_string(p.component);
    case PrimeIdeal::Kind::table: return format(p);
  }
  return {};
}

inline std::vector<PrimeIdeal> prime_ideals(const Ring& r) {
  std::vector<PrimeIdeal> out;
  if (r.is_zmod()) {
    for (const auto& pp : arith::factor(r.zmod().n)) {
      PrimeIdeal p;
      p.prime = pp.prime;
      out.push_back(p);
    }
  } else if (r.is_poly()) {
    for (const auto& fac : gfp::factor(r.poly().f, r.poly().p)) {
      PrimeIdeal p;
      p.kind = PrimeIdeal::Kind::poly;
      p.factor = fac.poly;
      out.push_back(p);
    }
  } else if (r.is_product()) {
    for (std::size_t i = 0; i < r.factors().size(); ++i)
      for (auto& q : prime_ideals(r.factors()[i])) {
        PrimeIdeal p;
        p.kind = PrimeIdeal::Kind::product;
        p.component = i;
        p.inner.push_back(std::move(q));
        out.push_back(std::move(p));
      }
  } else {
    for (u64 ideal : table_ideals(r.table()))
      if (table_ideal_is_prime(r.table(), ideal)) {
        PrimeIdeal p;
        p.kind = PrimeIdeal::Kind::table;
        p.members = ideal;
        out.push_back(p);
      }
  }
  return out;
}

/// Symbolic membership r in P.
inline bool prime_contains(const Ring& r, const PrimeIdeal& p, const RingElem& a) {
  switch (p.kind) {
    case PrimeIdeal::Kind::zmod: return a.words[0] % p.prime == 0;
    case PrimeIdeal::Kind::poly: return gfp::divides(p.factor, r.to_poly(a), r.poly().p);
    case PrimeIdeal::Kind::product:
      return prime_contains(r.factors()[p.component], p.inner.front(), r.component(a, p.component));
    case PrimeIdeal::Kind::table: return p.members >> a.words[0] & 1U;
  }
  return false;
}

/// Symbolic containment P subset Q.
inline bool prime_subset(const Ring& r, const PrimeIdeal& p, const PrimeIdeal& q) {
  switch (p.kind) {
    case PrimeIdeal::Kind::zmod: return p.prime % q.prime == 0;
    case PrimeIdeal::Kind::poly: return gfp::divides(q.factor, p.factor, r.poly().p);
    case PrimeIdeal::Kind::product:
      return p.component == q.component &&
             prime_subset(r.factors()[p.component], p.inner.front(), q.inner.front());
    case PrimeIdeal::Kind::table: return (p.members & ~q.members) == 0;
  }
  return false;
}

struct RingSpectrum {
  FiniteSpace space;
  std::vector<PrimeIdeal> points;

  std::optional<std::size_t> index_of(const PrimeIdeal& p) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == p) return i;
    return std::nullopt;
  }
};

/// Spec(R) with its Zariski topology. Closures are V(P) = {Q : P subset Q},
/// so U(Q) = {P : P subset Q}. Discreteness is checked, not assumed.
inline RingSpectrum spec(const Ring& r) {
  auto points = prime_ideals(r);
  if (points.size() > max_points) fail(ErrorKind::resource, "spectrum exceeds 64 points");
  std::vector<PointSet> nbhd(points.size(), 0);
  for (std::size_t q = 0; q < points.size(); ++q)
    for (std::size_t p = 0; p < points.size(); ++p)
      if (prime_subset(r, points[p], points[q])) nbhd[q] |= singleton(p);
  FiniteSpace space = FiniteSpace::from_neighbourhoods(points.size(), nbhd);
  if (!space.is_discrete())
    throw std::logic_error("spectrum of " + r.name() + " is not discrete");
  return {std::move(space), std::move(points)};
}

/// D(a) = {P : a not in P}.
inline PointSet d_set(const Ring& r, const RingSpectrum& s, const RingElem& a) {
  PointSet out = 0;
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (!prime_contains(r, s.points[i], a)) out |= singleton(i);
  return out;
}

/// V(a) = {P : a in P}.
inline PointSet v_set(const Ring& r, const RingSpectrum& s, const RingElem& a) {
  return s.space.points() & ~d_set(r, s, a);
}

/// Minimal members of `candidates` under inclusion of primes.
inline PointSet minimal_primes(const Ring& r, const RingSpectrum& s, PointSet candidates) {
  PointSet out = 0;
  for (auto q : members(candidates)) {
    bool minimal = true;
    for (auto p : members(candidates))
      if (p != q && prime_subset(r, s.points[p], s.points[q]) &&
          !prime_subset(r, s.points[q], s.points[p]))
        minimal = false;
    if (minimal) out |= singleton(q);
  }
  return out;
}

/// e |-> D(e) is a Boolean ring isomorphism B(R) -> Clop(Spec R).
inline Report clop_iso_check(const Ring& r, std::string instance = {}) {
  Report rep("clop_iso", instance.empty() ? r.name() : std::move(instance));
  const auto idem = idempotents(r);
  const auto s = spec(r);
  const auto clopens = clopen_sets(s.space);
  std::vector<PointSet> image;
  for (const auto& e : idem.elements) image.push_back(d_set(r, s, e));
  std::vector<PointSet> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  bool lands_in_clopens = true;
  for (auto d : image) lands_in_clopens = lands_in_clopens && s.space.is_open(d) && s.space.is_closed(d);
  bool adds = true, muls = true;
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = 0; j < idem.size(); ++j) {
      const auto& e = idem.elements[i];
      const auto& f = idem.elements[j];
      if (d_set(r, s, boolean_add(r, e, f)) != (image[i] ^ image[j])) {
        if (adds) rep.witness = json{{"add", {r.format(e), r.format(f)}}};
        adds = false;
      }
      if (d_set(r, s, r.mul(e, f)) != (image[i] & image[j])) muls = false;
    }
  rep.record("injective", injective);
  rep.record("lands_in_clopens", lands_in_clopens);
  rep.record("surjective", injective && sorted == clopens);
  rep.record("preserves_add", adds);
  rep.record("preserves_mul", muls);
  rep.record("preserves_zero", d_set(r, s, r.zero()) == 0);
  rep.record("preserves_one", d_set(r, s, r.one()) == s.space.points());
  return rep;
}

// ------------------------------------------------------------------ quotients

/// A principal ideal generated by an idempotent.
struct RegularIdeal {
  RingElem generator;
};

/// R -> R/I for a regular ideal I, with a canonical target descriptor and a
/// section `lift` choosing a preimage.
class QuotientMap {
 public:
  QuotientMap(const Ring& source, const RingElem& gen) : source_(source), target_(source.desc()) {
    if (source.mul(gen, gen) != gen)
      fail(ErrorKind::precondition, "regular ideal generator must be idempotent");
    if (gen == source.one()) fail(ErrorKind::precondition, "quotient by the unit ideal is rejected");
    build(gen);
  }

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }

  RingElem apply(const RingElem& a) const {
    switch (mode_) {
      case Mode::identity: return a;
      case Mode::zmod: return {{a.words[0] % modulus_}};
      case Mode::poly: {
        auto rem = gfp::mod(source_.to_poly(a), divisor_, source_.poly().p);
        if (target_.is_zmod()) return {{rem.empty() ? 0 : rem[0]}};
        rem.resize(target_.width(), 0);
        return {std::move(rem)};
      }
      case Mode::product: {
        std::vector<RingElem> parts;
        for (std::size_t i = 0; i < parts_.size(); ++i)
          if (parts_[i]) parts.push_back(parts_[i]->apply(source_.component(a, i)));
        return parts.size() == 1 ? parts.front() : target_.assemble(parts);
      }
      case Mode::table: return {{coset_of_[a.words[0]]}};
    }
    return a;
  }

  RingElem lift(const RingElem& q) const {
    switch (mode_) {
      case Mode::identity: return q;
      case Mode::zmod: return q;
      case Mode::poly: {
        gfp::Poly f = target_.is_zmod() ? gfp::constant(q.words[0], source_.poly().p) : target_.to_poly(q);
        return source_.from_poly(std::move(f));
      }
      case Mode::product: {
        std::vector<RingElem> parts;
        std::size_t k = 0;
        const std::size_t kept = static_cast<std::size_t>(
            std::count_if(parts_.begin(), parts_.end(), [](const auto& p) { return p.has_value(); }));
        for (std::size_t i = 0; i < parts_.size(); ++i) {
          if (!parts_[i]) {
            parts.push_back(source_.factors()[i].zero());
            continue;
          }
          parts.push_back(parts_[i]->lift(kept == 1 ? q : target_.component(q, k)));
          ++k;
        }
        return source_.assemble(parts);
      }
      case Mode::table: return {{reps_[q.words[0]]}};
    }
    return q;
  }

 private:
  enum class Mode { identity, zmod, poly, product, table };

  void build(const RingElem& gen) {
    if (source_.is_zero(gen)) {
      mode_ = Mode::identity;
      return;
    }
    if (source_.is_zmod()) {
      mode_ = Mode::zmod;
      modulus_ = std::gcd(source_.zmod().n, gen.words[0]);
      target_ = Ring(make_zmod(modulus_));
    } else if (source_.is_poly()) {
      mode_ = Mode::poly;
      const auto& q = source_.poly();
      divisor_ = gfp::gcd(source_.to_poly(gen), q.f, q.p);
      target_ = Ring(gfp::degree(divisor_) == 1 ? make_zmod(q.p) : make_poly_quot(q.p, divisor_));
    } else if (source_.is_product()) {
      mode_ = Mode::product;
      std::vector<RingDesc> kept;
      for (std::size_t i = 0; i < source_.factors().size(); ++i) {
        const Ring& f = source_.factors()[i];
        const RingElem gi = source_.component(gen, i);
        if (gi == f.one()) {
          parts_.emplace_back(std::nullopt);
        } else {
          parts_.emplace_back(QuotientMap(f, gi));
          kept.push_back(parts_.back()->target().desc());
        }
      }
      target_ = Ring(kept.size() == 1 ? kept.front() : make_product(std::move(kept)));
    } else {
      mode_ = Mode::table;
      build_table(gen.words[0]);
    }
  }

  void build_table(std::size_t g) {
    const auto& t = source_.table();
    std::vector<bool> in_ideal(t.size, false);
    for (std::size_t r = 0; r < t.size; ++r) in_ideal[t.times(r, g)] = true;
    std::vector<std::size_t> neg(t.size);
    for (std::size_t a = 0; a < t.size; ++a)
      for (std::size_t b = 0; b < t.size; ++b)
        if (t.plus(a, b) == t.zero) neg[a] = b;
    coset_of_.assign(t.size, t.size);
    for (std::size_t a = 0; a < t.size; ++a) {
      if (coset_of_[a] != t.size) continue;
      const std::size_t id = reps_.size();
      reps_.push_back(a);
      for (std::size_t b = 0; b < t.size; ++b)
        if (in_ideal[t.plus(b, neg[a])]) coset_of_[b] = id;
    }
    TableRing q;
    q.size = reps_.size();
    q.add.resize(q.size * q.size);
    q.mul.resize(q.size * q.size);
    for (std::size_t i = 0; i < q.size; ++i)
      for (std::size_t j = 0; j < q.size; ++j) {
        q.add[i * q.size + j] = static_cast<std::uint8_t>(coset_of_[t.plus(reps_[i], reps_[j])]);
        q.mul[i * q.size + j] = static_cast<std::uint8_t>(coset_of_[t.times(reps_[i], reps_[j])]);
      }
    q.zero = coset_of_[t.zero];
    q.one = coset_of_[t.one];
    q.label = t.label + "/(" + std::to_string(g) + ")";
    target_ = Ring(make_table(std::move(q)));
  }

  Ring source_;
  Ring target_;
  Mode mode_ = Mode::identity;
  u64 modulus_ = 0;
  gfp::Poly divisor_;
  std::vector<std::optional<QuotientMap>> parts_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::size_t> reps_;
};

inline QuotientMap quotient_by(const Ring& r, const RegularIdeal& i) { return QuotientMap(r, i.generator); }

/// True iff R/I has exactly two idempotents, i.e. no nontrivial ones.
inline bool max_regular_check(const Ring& r, const RegularIdeal& i) {
  if (i.generator == r.one()) fail(ErrorKind::precondition, "max_regular_check needs a proper ideal");
  return idempotents(quotient_by(r, i).target()).size() == 2;
}

/// P* = the ideal generated by the idempotents in P, as a single idempotent
/// generator (their Boolean join). Cross-checked against 1 - e_P where e_P is
/// the primitive idempotent outside P.
inline RegularIdeal p_star(const Ring& r, const PrimeIdeal& p) {
  const auto idem = idempotents(r);
  RingElem join = r.zero();
  for (const auto& e : idem.elements)
    if (prime_contains(r, p, e)) join = r.sub(r.add(join, e), r.mul(join, e));
  std::optional<RingElem> outside;
  for (const auto& e : idem.primitives())
    if (!prime_contains(r, p, e)) {
      if (outside) throw std::logic_error("prime misses two primitive idempotents");
      outside = e;
    }
  if (!outside || join != r.sub(r.one(), *outside))
    throw std::logic_error("P* generator differs from the complement of e_P");
  return {join};
}

// -------------------------------------------------------------- decomposition

/// R -> prod R/(1 - e_k) over the primitive idempotents, with inverse
/// (q_k) |-> sum lift(q_k) e_k.
struct Decomposition {
  Ring source;
  std::vector<RingElem> primitives;
  std::vector<QuotientMap> maps;
  Ring product;
  bool iso_verified = false;
  u64 elements_checked = 0;
  std::optional<std::string> counterexample;

  RingElem forward(const RingElem& a) const {
    std::vector<RingElem> parts;
    for (const auto& m : maps) parts.push_back(m.apply(a));
    return product.assemble(parts);
  }

  RingElem backward(const RingElem& t) const {
    RingElem out = source.zero();
    for (std::size_t k = 0; k < maps.size(); ++k)
      out = source.add(out, source.mul(maps[k].lift(product.component(t, k)), primitives[k]));
    return out;
  }
};

namespace detail {

inline void verify_decomposition(Decomposition& d, std::uint64_t seed) {
  const Ring& r = d.source;
  auto fail_on = [&](const std::string& what, const RingElem& a) {
    d.counterexample = what + " at " + r.format(a);
    return false;
  };
  auto roundtrip = [&](const RingElem& a) {
    return d.backward(d.forward(a)) == a || fail_on("backward(forward(r)) != r", a);
  };
  auto homomorphic = [&](const RingElem& a, const RingElem& b) {
    return (d.forward(r.add(a, b)) == d.product.add(d.forward(a), d.forward(b)) &&
            d.forward(r.mul(a, b)) == d.product.mul(d.forward(a), d.forward(b))) ||
           fail_on("forward not a homomorphism", a);
  };
  bool ok = d.forward(r.one()) == d.product.one();
  if (!ok) d.counterexample = "forward(1) != 1";
  std::mt19937_64 rng(seed);
  const auto rs = r.size();
  const auto ps = d.product.size();
  if (rs && *rs <= exhaustive_ring_limit) {
    ok = ok && ps == rs;
    for (const auto& a : r.elements()) {
      ok = ok && roundtrip(a);
      ++d.elements_checked;
    }
    for (const auto& t : d.product.elements())
      ok = ok && (d.forward(d.backward(t)) == t || fail_on("forward(backward(t)) != t", d.backward(t)));
    for (int i = 0; i < 200 && ok; ++i) ok = homomorphic(r.random(rng), r.random(rng));
  } else {
    for (int i = 0; i < 1000 && ok; ++i, ++d.elements_checked) ok = roundtrip(r.random(rng));
    for (const auto& e : idempotents(r).elements) {
      ok = ok && roundtrip(e);
      ++d.elements_checked;
    }
    for (int i = 0; i < 1000 && ok; ++i) {
      const RingElem t = d.product.random(rng);
      ok = d.forward(d.backward(t)) == t || fail_on("forward(backward(t)) != t", d.backward(t));
    }
    for (int i = 0; i < 200 && ok; ++i) ok = homomorphic(r.random(rng), r.random(rng));
  }
  d.iso_verified = ok;
}

}  // namespace detail

inline Decomposition decompose(const Ring& r, std::uint64_t seed = 1) {
  const auto prims = primitive_idempotents(r).elements;
  std::vector<QuotientMap> maps;
  std::vector<RingDesc> targets;
  for (const auto& e : prims) {
    maps.emplace_back(r, r.sub(r.one(), e));
    targets.push_back(maps.back().target().desc());
  }
  Decomposition d{r, prims, std::move(maps), Ring(make_product(std::move(targets))), false, 0, std::nullopt};
  detail::verify_decomposition(d, seed);
  return d;
}

inline json to_json(const Decomposition& d) {
  json prims = json::array(), factors = json::array();
  for (const auto& e : d.primitives) prims.push_back(d.source.format(e));
  for (const auto& m : d.maps) factors.push_back(m.target().name());
  return {{"ring", d.source.name()},
          {"primitive_idempotents", prims},
          {"factors", factors},
          {"iso_verified", d.iso_verified}};
}

// --------------------------------------------------------------------- suites

/// The four equivalent statements about an idempotent e: primitive;
/// R(1-e) max-regular; D(e) a connected component; D(e) connected.
inline Report primitive_criteria_suite(const Ring& r, const RingElem& e, std::string instance = {}) {
  if (r.mul(e, e) != e) fail(ErrorKind::precondition, "primitive_criteria_suite needs an idempotent");
  Report rep("primitive_criteria", instance.empty() ? r.name() + " e=" + r.format(e) : std::move(instance));
  const auto idem = idempotents(r);
  const auto s = spec(r);
  const PointSet d = d_set(r, s, e);
  const auto comps = connected_components(s.space);
  const bool primitive = idem.primitive[*idem.index_of(e)];
  const RingElem complement = r.sub(r.one(), e);
  const bool max_regular = complement != r.one() && max_regular_check(r, {complement});
  const bool component = std::find(comps.blocks.begin(), comps.blocks.end(), d) != comps.blocks.end();
  const bool connected = is_connected(s.space, d);
  rep.items = {{"primitive", primitive},
               {"max_regular", max_regular},
               {"d_is_component", component},
               {"d_connected", connected}};
  const bool agree = primitive == max_regular && max_regular == component && component == connected;
  rep.record("statements_agree", agree);
  if (!agree) rep.witness["idempotent"] = r.format(e);
  return rep;
}

/// The eight equivalent finiteness statements for a nonzero finite ring,
/// plus consistency cross-checks between them.
inline Report ring_finiteness_suite(const Ring& r, std::string instance = {}, std::uint64_t seed = 1) {
  Report rep("ring_finiteness", instance.empty() ? r.name() : std::move(instance));
  const auto idem = idempotents(r);
  const auto prims = idem.primitives();
  const auto s = spec(r);
  const auto comps = connected_components(s.space);
  const std::size_t kappa = comps.size();
  const auto dec = decompose(r, seed);

  RingElem unit_sum = r.zero();
  for (const auto& e : prims) unit_sum = r.add(unit_sum, e);

  std::vector<PointSet> prim_d;
  for (const auto& e : prims) prim_d.push_back(d_set(r, s, e));
  std::sort(prim_d.begin(), prim_d.end());
  std::vector<PointSet> blocks = comps.blocks;
  std::sort(blocks.begin(), blocks.end());

  // Max-regular ideals are the Re with R/Re free of nontrivial idempotents.
  std::vector<RingElem> max_regular;
  for (const auto& e : idem.elements)
    if (e != r.one() && max_regular_check(r, {e})) max_regular.push_back(e);
  std::vector<RingElem> expected;
  for (const auto& e : prims) expected.push_back(r.sub(r.one(), e));
  std::sort(expected.begin(), expected.end());

  const PointSet min_r = minimal_primes(r, s, s.space.points());
  bool min_identity = true;
  for (const auto& g : max_regular) {
    const PointSet v = v_set(r, s, g);
    if (minimal_primes(r, s, v) != (min_r & v)) {
      min_identity = false;
      rep.witness["min_identity"] = r.format(g);
    }
  }

  std::size_t pow2 = 1;
  while (pow2 < idem.size()) pow2 <<= 1U;
  rep.record("finitely_many_components", kappa >= 1);
  rep.record("finitely_many_idempotents", idem.size() == pow2 && idem.size() == (std::size_t{1} << prims.size()));
  rep.record("product_decomposition", dec.iso_verified && !prims.empty());
  rep.record("decomposition_indexed_by_components", dec.iso_verified && dec.maps.size() == kappa);
  rep.record("unit_generated_by_primitives", unit_sum == r.one());
  // Every ideal of a finite ring is finitely generated; the checkable part is
  // that each max-regular ideal is principal on an idempotent.
  rep.record("regular_finitely_generated", true);
  rep.record("max_regular_principal", max_regular == expected);
  rep.record("components_are_d_of_primitives", prim_d == blocks);
  rep.record("kappa_consistent", prims.size() == kappa && dec.maps.size() == kappa);
  rep.record("unit_is_sum_of_primitives", unit_sum == r.one());
  rep.record("min_identity", min_identity);
  if (idem.size() <= max_table_bool_ring) {
    const auto b = spec_bool(boolean_ring(r, idem));
    rep.record("pi0_spec_matches_spec_b", find_homeomorphism(pi0_space(s.space), b.space).has_value());
  } else {
    rep.record("pi0_spec_matches_spec_b", kappa == prims.size());
  }
  return rep;
}

}  // namespace clopen

#endif  // CLOPEN_RING_THEORY_HPP
