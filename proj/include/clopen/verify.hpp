#ifndef CLOPEN_VERIFY_HPP
#define CLOPEN_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "clopen/parse.hpp"
#include "clopen/primary_spec.hpp"
#include "clopen/proj_fixture.hpp"
#include "clopen/ring_theory.hpp"
#include "clopen/stone.hpp"
#include "clopen/topo.hpp"

// The suite runner behind `clopen verify`. Each suite returns one summary
// with its first counterexample; the runner is deterministic for a seed.

namespace clopen::verify {

struct VerifyConfig {
  std::size_t max_points = 4;
  u64 max_modulus = 10000;
  std::size_t max_table_size = 16;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t fiber_instances = 10000;
  std::vector<RingDesc> extra_rings;  // appended to the ring corpus

  void validate() const {
    if (max_points < 1 || max_points > 5) fail(ErrorKind::invalid_input, "max_points must be in 1..5");
    if (max_modulus < 2) fail(ErrorKind::invalid_input, "max_modulus must be at least 2");
    if (max_table_size < 2 || max_table_size > max_table_ring)
      fail(ErrorKind::invalid_input, "max_table_size must be in 2..64");
    if (jobs < 1) fail(ErrorKind::invalid_input, "jobs must be positive");
    if (fiber_instances < 1) fail(ErrorKind::invalid_input, "fiber_instances must be positive");
  }
};

struct SuiteResult {
  std::string name;
  int criterion = 0;
  bool pass = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  json details = json::object();
  json first_counterexample = nullptr;

  void record(bool ok, const std::function<json()>& witness) {
    ++checked;
    if (ok) return;
    pass = false;
    if (failures++ == 0) first_counterexample = witness();
  }
};

inline json to_json(const SuiteResult& s) {
  return {{"suite", s.name},       {"criterion", s.criterion}, {"pass", s.pass},
          {"checked", s.checked},  {"failures", s.failures},   {"details", s.details},
          {"first_counterexample", s.first_counterexample}};
}

/// Runs task(i) for i < count on up to `jobs` threads; results keep index
/// order and the lowest-index exception is rethrown.
template <class T>
std::vector<T> parallel_map(std::size_t jobs, std::size_t count, const std::function<T(std::size_t)>& task) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        slots[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(jobs, count); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

// ------------------------------------------------------------------ corpus

inline const std::vector<std::string>& poly_corpus() {
  static const std::vector<std::string> c{
      "GF(2)[x]/(x)",         "GF(2)[x]/(x^2)",          "GF(2)[x]/(x^2+x)",
      "GF(2)[x]/(x^2+x+1)",   "GF(2)[x]/(x^3+x)",        "GF(2)[x]/(x^3+1)",
      "GF(2)[x]/(x^4+x)",     "GF(2)[x]/(x^4+x^2)",      "GF(2)[x]/(x^6+x^5+x^4+x^3+x^2+x)",
      "GF(2)[x]/(x^8+x)",     "GF(2)[x]/(x^13+x)",       "GF(3)[x]/(x^2+1)",
      "GF(3)[x]/(x^2-1)",     "GF(3)[x]/(x^3-x)",        "GF(3)[x]/(x^9-x^3)",
      "GF(3)[x]/(x^4+x^2)",   "GF(3)[x]/(x^8-1)",        "GF(5)[x]/(x^4+4)",
      "GF(5)[x]/(x^2)",       "GF(5)[x]/(x^3-1)",        "GF(5)[x]/(x^5-x)",
      "GF(7)[x]/(x^2+1)",     "GF(7)[x]/(x^3-x)",        "GF(7)[x]/(x^6-1)",
      "GF(11)[x]/(x^2-1)",    "GF(13)[x]/(x^4-1)",       "GF(65537)[x]/(x^2-1)",
      "GF(2147483647)[x]/(x^3-x)",
  };
  return c;
}

inline const std::vector<std::string>& product_corpus() {
  static const std::vector<std::string> c{
      "Z/4 x Z/3",
      "Z/6 x GF(2)[x]/(x^2+x+1)",
      "(Z/2 x Z/2) x Z/9",
      "Z/2 x Z/2 x Z/2 x Z/2",
      "Z/12 x Z/10",
      "GF(3)[x]/(x^2) x Z/5",
      "Z/8 x (Z/9 x Z/25)",
      "GF(2)[x]/(x^3+x) x GF(3)[x]/(x^3-x)",
      "Z/1000000007 x Z/6",
      "Z/30 x Z/30",
      "Z/2 x GF(5)[x]/(x^4+4) x Z/7",
      "Z/97 x Z/101",
      "Z/4 x Z/4 x Z/4",
      "Z/720720 x Z/2",
  };
  return c;
}

/// Table rings obtained by tabulating small rings, some relabelled.
inline std::vector<RingDesc> table_corpus(std::size_t max_size, std::uint64_t seed) {
  const std::vector<std::string> sources{
      "Z/4", "Z/6", "Z/8", "Z/12", "GF(2)[x]/(x^2+x+1)", "GF(2)[x]/(x^2)", "GF(2)[x]/(x^3+x)",
      "GF(3)[x]/(x^2)", "Z/2 x Z/2 x Z/4", "Z/30", "Z/60", "Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2",
  };
  std::mt19937_64 rng(seed);
  std::vector<RingDesc> out;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const Ring r(parse_ring_desc(sources[i]));
    if (*r.size() > max_size) continue;
    const auto t = std::get<TableRing>(tabulate_ring(r, "tab(" + sources[i] + ")").kind);
    out.push_back(make_table(t));
    if (i % 4 == 3) {
      std::vector<std::size_t> perm(t.size);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto p = permute_table(t, perm);
      std::get<TableRing>(p.kind).label = "perm(" + sources[i] + ")";
      out.push_back(std::move(p));
    }
  }
  return out;
}

struct RingCorpus {
  std::vector<RingDesc> zmod;
  std::vector<RingDesc> other;  // PolyQuot, Product, Table and extras

  std::vector<RingDesc> all() const {
    auto out = zmod;
    out.insert(out.end(), other.begin(), other.end());
    return out;
  }
};

/// Z/n up to min(2000, max_modulus) followed by the embedded non-Zmod rings.
inline RingCorpus ring_corpus(const VerifyConfig& cfg) {
  RingCorpus c;
  for (u64 n = 2; n <= std::min<u64>(2000, cfg.max_modulus); ++n) c.zmod.push_back(make_zmod(n));
  for (const auto& s : poly_corpus()) c.other.push_back(parse_ring_desc(s));
  for (const auto& s : product_corpus()) c.other.push_back(parse_ring_desc(s));
  for (auto& t : table_corpus(cfg.max_table_size, cfg.seed)) c.other.push_back(std::move(t));
  for (const auto& e : cfg.extra_rings) c.other.push_back(e);
  return c;
}

// ------------------------------------------------------------ space suites

inline std::vector<std::vector<FiniteSpace>> topology_corpus(const VerifyConfig& cfg) {
  std::vector<std::vector<FiniteSpace>> out;
  for (std::size_t n = 1; n <= cfg.max_points; ++n) out.push_back(enumerate_topologies(n));
  return out;
}

inline SuiteResult components_suite(const VerifyConfig& cfg) {
  SuiteResult s{"quasi_components_equal_components", 1};
  const auto corpus = topology_corpus(cfg);
  json counts = json::object();
  std::size_t scanned = 0;
  for (std::size_t n = 1; n <= corpus.size(); ++n) {
    const auto& spaces = corpus[n - 1];
    counts[std::to_string(n)] = spaces.size();
    scanned += spaces.size();
    // The preorder count is an independent route to the same number.
    if (n <= 4) {
      const auto by_preorder = detail::topologies_by_preorder(n).size();
      s.record(by_preorder == spaces.size(), [&] {
        return json{{"n", n}, {"family_scan", spaces.size()}, {"preorders", by_preorder}};
      });
    }
    for (const auto& x : spaces) {
      const auto q = quasi_components(x), c = connected_components(x);
      s.record(q == c, [&] {
        return json{{"space", describe(x)}, {"quasi", format_partition(q)}, {"components", format_partition(c)}};
      });
    }
  }
  s.details = {{"topology_counts", counts}, {"topologies_scanned", scanned}};
  return s;
}

inline SuiteResult stone_suite(const VerifyConfig& cfg) {
  SuiteResult s{"stone_duality", 2};
  for (const auto& spaces : topology_corpus(cfg))
    for (const auto& x : spaces) {
      const auto homeo = stone_homeo_check(x);
      s.record(homeo.pass, [&] { return to_json(homeo); });
      const auto fin = finiteness_suite(x);
      s.record(fin.pass, [&] { return to_json(fin); });
    }
  return s;
}

inline SuiteResult selfdual_suite(const VerifyConfig& cfg) {
  SuiteResult s{"selfdual_iff_discrete", 3};
  std::size_t selfdual = 0;
  for (const auto& spaces : topology_corpus(cfg))
    for (const auto& x : spaces) {
      const bool sd = selfdual_check(x);
      selfdual += sd;
      s.record(sd == x.is_discrete(), [&] {
        return json{{"space", describe(x)}, {"selfdual", sd}, {"discrete", x.is_discrete()}};
      });
    }
  s.details = {{"selfdual_spaces", selfdual}};
  return s;
}

// ------------------------------------------------------------- ring suites

inline SuiteResult idempotent_suite(const VerifyConfig& cfg) {
  SuiteResult s{"zmod_idempotents", 4};
  const u64 brute_limit = std::min<u64>(exhaustive_ring_limit, cfg.max_modulus);
  const auto brute = parallel_map<std::optional<json>>(cfg.jobs, brute_limit - 1, [&](std::size_t i) {
    const u64 n = i + 2;
    const Ring r(make_zmod(n));
    std::vector<RingElem> expected;
    for (u64 e = 0; e < n; ++e)
      if (e * e % n == e) expected.push_back({{e}});
    const auto got = idempotents(r).elements;
    return got == expected ? std::nullopt : std::optional<json>(json{{"n", n}, {"crt", got.size()}, {"brute", expected.size()}});
  });
  for (const auto& b : brute) s.record(!b, [&] { return *b; });

  std::vector<u64> moduli;
  for (u64 n = 2; n <= cfg.max_modulus; ++n) moduli.push_back(n);
  std::mt19937_64 rng(cfg.seed);
  const u64 hi = std::max<u64>(cfg.max_modulus, 1'000'000);
  for (int k = 0; k < 10000; ++k) moduli.push_back(cfg.max_modulus + 1 + rng() % (hi - cfg.max_modulus));
  for (u64 n : moduli) {
    const auto count = idempotents(Ring(make_zmod(n))).size();
    const std::size_t expected = std::size_t{1} << arith::omega(n);
    s.record(count == expected, [&] { return json{{"n", n}, {"count", count}, {"expected", expected}}; });
  }
  s.details = {{"brute_force_moduli", brute_limit - 1}, {"count_moduli", moduli.size()}};
  return s;
}

namespace detail {

template <class F>
SuiteResult ring_suite(const VerifyConfig& cfg, std::string name, int criterion, const std::vector<RingDesc>& rings,
                       F&& check) {
  SuiteResult s{std::move(name), criterion};
  const auto results = parallel_map<std::vector<std::pair<bool, json>>>(
      cfg.jobs, rings.size(), [&](std::size_t i) { return check(Ring(rings[i])); });
  for (const auto& per_ring : results)
    for (const auto& [ok, witness] : per_ring) s.record(ok, [&] { return witness; });
  return s;
}

}  // namespace detail

inline SuiteResult decomposition_suite(const VerifyConfig& cfg, const RingCorpus& corpus) {
  auto s = detail::ring_suite(cfg, "decomposition_iso", 5, corpus.all(), [&](const Ring& r) {
    const auto d = decompose(r, cfg.seed);
    json w = to_json(d);
    w["elements_checked"] = d.elements_checked;
    if (d.counterexample) w["counterexample"] = *d.counterexample;
    return std::vector<std::pair<bool, json>>{{d.iso_verified, w}};
  });
  s.details = {{"zmod_rings", corpus.zmod.size()}, {"other_rings", corpus.other.size()}};
  return s;
}

inline SuiteResult primitive_criteria_corpus_suite(const VerifyConfig& cfg, const RingCorpus& corpus) {
  return detail::ring_suite(cfg, "primitive_criteria_agree", 6, corpus.all(), [](const Ring& r) {
    std::vector<std::pair<bool, json>> out;
    for (const auto& e : idempotents(r).elements) {
      const auto rep = primitive_criteria_suite(r, e);
      out.emplace_back(rep.pass, to_json(rep));
    }
    return out;
  });
}

inline SuiteResult ring_finiteness_corpus_suite(const VerifyConfig& cfg, const RingCorpus& corpus) {
  return detail::ring_suite(cfg, "ring_finiteness", 7, corpus.all(), [&](const Ring& r) {
    const auto rep = ring_finiteness_suite(r, {}, cfg.seed);
    return std::vector<std::pair<bool, json>>{{rep.pass, to_json(rep)}};
  });
}

inline SuiteResult clop_iso_suite(const VerifyConfig& cfg, const RingCorpus& corpus) {
  return detail::ring_suite(cfg, "affine_clop_iso", 8, corpus.all(), [](const Ring& r) {
    const auto rep = clop_iso_check(r);
    return std::vector<std::pair<bool, json>>{{rep.pass, to_json(rep)}};
  });
}

// ---------------------------------------------------------- primary suite

inline SuiteResult primary_suite(const VerifyConfig& cfg) {
  SuiteResult s{"primary_spectrum", 9};
  for (u64 p : {2, 3, 5})
    for (unsigned k = 2; k <= 6; ++k) {
      u64 n = 1;
      for (unsigned i = 0; i < k; ++i) n *= p;
      const Ring r(make_zmod(n));
      const auto ps = primary_space(r);
      const auto sw = sober_witness(r);
      auto divisor = [&](std::size_t i) { return ps.points[i].divisor; };
      bool ok = !sw.sober && sw.closure_law && sw.witness;
      if (ok) {
        const auto& w = *sw.witness;
        const auto& g = w.generic_points;
        auto generic = [&](u64 d) {
          return std::any_of(g.begin(), g.end(), [&](std::size_t i) { return divisor(i) == d; });
        };
        const PointSet closure_of_p = ps.space.closure(singleton(w.pair.first));
        ok = divisor(w.pair.first) == p && divisor(w.pair.second) == n && generic(p) && generic(n) &&
             generic(p * p) && contains(closure_of_p, w.pair.first) && contains(closure_of_p, w.pair.second) &&
             w.closed_set == closure_of_p;
      }
      s.record(ok, [&] { return to_json(r, ps, sw); });
    }
  const u64 basis_limit = std::min<u64>(200, cfg.max_modulus);
  for (u64 n = 2; n <= basis_limit; ++n) {
    const auto rep = basis_identity_check(Ring(make_zmod(n)));
    s.record(rep.pass, [&] { return to_json(rep); });
  }
  s.details = {{"prime_powers", 15}, {"basis_moduli", basis_limit - 1}};
  return s;
}

// ------------------------------------------------------------- proj suite

inline SuiteResult proj_suite(const VerifyConfig& cfg, const RingCorpus& corpus) {
  SuiteResult s{"proj_fixtures", 10};
  for (u64 p : {3, 5, 7, 11, 13}) {
    const auto f = proj::square_fixture(p);
    const auto w = proj::disconnection_witness(f, proj::sub(f, proj::var_x(), proj::var_y()),
                                               proj::add(f, proj::var_x(), proj::var_y()));
    s.record(w.verdict == proj::Verdict::accept, [&] { return json{{"p", p}, {"witness", to_json(w)}}; });
  }
  {
    const auto f = proj::square_fixture(2);
    const auto h = proj::add(f, proj::var_x(), proj::var_y());
    const auto w = proj::disconnection_witness(f, h, h);
    s.record(w.verdict == proj::Verdict::reject, [&] { return json{{"p", 2}, {"witness", to_json(w)}}; });
  }
  const auto xy = proj::xy_fixture(5);
  s.record(!proj::proj_membership_check(xy, proj::MinimalPrime::y), [] { return json{{"prime", "(y)"}}; });
  s.record(proj::proj_membership_check(xy, proj::MinimalPrime::x), [] { return json{{"prime", "(x)"}}; });
  for (u64 p : {2, 3, 5, 7, 11, 13})
    for (const auto& f : {proj::square_fixture(p), proj::xy_fixture(p), proj::xy_fixture(p, 1, 1)})
      s.record(proj::confluence_check(f, 1000, 8, cfg.seed),
               [&] { return json{{"fixture", proj::fixture_name(f)}, {"check", "confluence"}}; });

  std::vector<RingDesc> lift_rings(corpus.other);
  for (std::size_t i = 0; i < corpus.zmod.size() && i < 199; ++i) lift_rings.push_back(corpus.zmod[i]);
  const auto lifts = parallel_map<std::pair<bool, json>>(cfg.jobs, lift_rings.size(), [&](std::size_t i) {
    const auto lift = proj::component_lift_check(Ring(lift_rings[i]), 1, cfg.seed);
    return std::pair<bool, json>{lift.report.pass, to_json(lift.report)};
  });
  for (const auto& [ok, w] : lifts) s.record(ok, [&] { return w; });
  s.details = {{"lift_rings", lift_rings.size()}};
  return s;
}

// ------------------------------------------------------------ fiber suite

struct FiberInstance {
  ContinuousMap map;
  FiberMode mode;
};

/// A random continuous surjection with connected fibers whose mode holds,
/// or nullopt when the draw misses. The source preorder is a random
/// transitive sub-relation of the pullback of the target preorder, which
/// keeps the map monotone and hence continuous.
inline std::optional<FiberInstance> random_fiber_instance(const std::vector<std::vector<FiniteSpace>>& targets,
                                                          std::mt19937_64& rng) {
  const auto& bucket = targets[rng() % targets.size()];
  const FiniteSpace& y = bucket[rng() % bucket.size()];
  std::vector<std::size_t> values;
  for (std::size_t p = 0; p < y.size(); ++p)
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) values.push_back(p);
  std::shuffle(values.begin(), values.end(), rng);
  const std::size_t n = values.size();
  std::vector<PointSet> up(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a == b || (y.specializes(values[a], values[b]) && rng() % 10 < 7)) up[a] |= singleton(b);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (contains(up[a], k)) up[a] |= up[k];
  ContinuousMap f(FiniteSpace::from_neighbourhoods(n, up), y, values);
  for (std::size_t p = 0; p < y.size(); ++p)
    if (!is_connected(f.source(), f.preimage(singleton(p)))) return std::nullopt;
  std::vector<FiberMode> modes{FiberMode::closed, FiberMode::open, FiberMode::section};
  std::shuffle(modes.begin(), modes.end(), rng);
  for (auto m : modes) {
    const bool holds = m == FiberMode::closed ? is_closed_map(f)
                       : m == FiberMode::open ? is_open_map(f)
                                              : find_section(f).has_value();
    if (holds) return FiberInstance{std::move(f), m};
  }
  return std::nullopt;
}

inline SuiteResult fiber_suite(const VerifyConfig& cfg) {
  SuiteResult s{"fiber_transfer", 11};
  std::vector<std::vector<FiniteSpace>> targets;
  for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.max_points, 4); ++n) targets.push_back(enumerate_topologies(n));
  std::mt19937_64 rng(cfg.seed);
  std::size_t attempts = 0;
  std::map<std::string, std::size_t> by_mode;
  while (s.checked < cfg.fiber_instances) {
    ++attempts;
    auto inst = random_fiber_instance(targets, rng);
    if (!inst) continue;
    const auto rep = fiber_transfer_check(inst->map, inst->mode);
    ++by_mode[to_string(inst->mode)];
    s.record(rep.applicable && rep.holds, [&] {
      return json{{"source", describe(inst->map.source())},
                  {"target", describe(inst->map.target())},
                  {"values", inst->map.values()},
                  {"mode", to_string(inst->mode)},
                  {"reason", rep.reason},
                  {"counterexample", rep.counterexample ? json(members(*rep.counterexample)) : json(nullptr)}};
    });
  }
  s.details = {{"instances", s.checked}, {"attempts", attempts}, {"by_mode", by_mode}};
  return s;
}

// ------------------------------------------------------------------ runner

struct VerifyResult {
  std::vector<SuiteResult> suites;
  bool pass = true;
};

inline json summary_json(const VerifyResult& r, const VerifyConfig& cfg) {
  std::size_t checked = 0, failures = 0;
  for (const auto& s : r.suites) {
    checked += s.checked;
    failures += s.failures;
  }
  return {{"summary", "verify"},
          {"pass", r.pass},
          {"suites", r.suites.size()},
          {"checked", checked},
          {"failures", failures},
          {"config",
           {{"max_points", cfg.max_points},
            {"max_modulus", cfg.max_modulus},
            {"max_table_size", cfg.max_table_size},
            {"seed", cfg.seed},
            {"jobs", cfg.jobs}}}};
}

/// Every suite, in criterion order.
inline VerifyResult run_verify(const VerifyConfig& cfg) {
  cfg.validate();
  const auto corpus = ring_corpus(cfg);
  VerifyResult out;
  out.suites.push_back(components_suite(cfg));
  out.suites.push_back(stone_suite(cfg));
  out.suites.push_back(selfdual_suite(cfg));
  out.suites.push_back(idempotent_suite(cfg));
  out.suites.push_back(decomposition_suite(cfg, corpus));
  out.suites.push_back(primitive_criteria_corpus_suite(cfg, corpus));
  out.suites.push_back(ring_finiteness_corpus_suite(cfg, corpus));
  out.suites.push_back(clop_iso_suite(cfg, corpus));
  out.suites.push_back(primary_suite(cfg));
  out.suites.push_back(proj_suite(cfg, corpus));
  out.suites.push_back(fiber_suite(cfg));
  for (const auto& s : out.suites) out.pass = out.pass && s.pass;
  return out;
}

}  // namespace clopen::verify

#endif  // CLOPEN_VERIFY_HPP
