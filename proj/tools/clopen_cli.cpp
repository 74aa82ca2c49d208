// clopen: command-line front end. Output is line-delimited JSON unless
// --pretty is given; `space dot` prints Graphviz text.
//
// Exit codes: 0 pass, 1 counterexample or failed check, 2 usage or input
// error, 3 resource bound exceeded.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "clopen/dot.hpp"
#include "clopen/parse.hpp"
#include "clopen/primary_spec.hpp"
#include "clopen/proj_fixture.hpp"
#include "clopen/ring_theory.hpp"
#include "clopen/stone.hpp"
#include "clopen/verify.hpp"

using namespace clopen;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

bool pretty = false;

void emit(const json& j) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

int status(bool ok) { return ok ? exit_pass : exit_counterexample; }

std::vector<std::string> formatted(const Ring& r, const std::vector<RingElem>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(r.format(x));
  return out;
}

json partition_json(const Partition& p) {
  json out = json::array();
  for (auto b : p.blocks) out.push_back(members(b));
  return out;
}

// ---------------------------------------------------------------- ring

int ring_idempotents(const std::string& desc) {
  const Ring r(parse_ring_desc(desc));
  const auto idem = idempotents(r);
  emit({{"ring", r.name()},
        {"count", idem.size()},
        {"idempotents", formatted(r, idem.elements)},
        {"primitive", formatted(r, idem.primitives())}});
  return exit_pass;
}

int ring_decompose(const std::string& desc, std::uint64_t seed) {
  const Ring r(parse_ring_desc(desc));
  const auto d = decompose(r, seed);
  json j = to_json(d);
  j["elements_checked"] = d.elements_checked;
  if (d.counterexample) j["counterexample"] = *d.counterexample;
  emit(j);
  return status(d.iso_verified);
}

int ring_spec(const std::string& desc) {
  const Ring r(parse_ring_desc(desc));
  const auto s = spec(r);
  json points = json::array(), opens = json::array();
  for (const auto& p : s.points) points.push_back(format(r, p));
  for (auto o : s.space.opens()) opens.push_back(members(o));
  emit({{"ring", r.name()},
        {"points", points},
        {"opens", opens},
        {"components", partition_json(connected_components(s.space))}});
  return exit_pass;
}

int ring_suite(const std::string& desc, std::uint64_t seed) {
  const Ring r(parse_ring_desc(desc));
  bool ok = true;
  auto run = [&](const Report& rep) {
    ok = ok && rep.pass;
    emit(to_json(rep));
  };
  run(ring_finiteness_suite(r, {}, seed));
  for (const auto& e : idempotents(r).elements) run(primitive_criteria_suite(r, e));
  run(clop_iso_check(r));
  return status(ok);
}

// --------------------------------------------------------------- space

FiniteSpace load_space(const std::string& path) { return space_from_json(read_json_file(path)); }

int space_components(const std::string& path) {
  const auto x = load_space(path);
  const auto c = connected_components(x), q = quasi_components(x);
  emit({{"space", describe(x)},
        {"components", partition_json(c)},
        {"quasi_components", partition_json(q)},
        {"equal", c == q}});
  return status(c == q);
}

int space_stone(const std::string& path) {
  const auto rep = stone_homeo_check(load_space(path));
  emit(to_json(rep));
  return status(rep.pass);
}

int space_suite(const std::string& path) {
  const auto x = load_space(path);
  const auto stone = stone_homeo_check(x), fin = finiteness_suite(x);
  emit(to_json(stone));
  emit(to_json(fin));
  const bool sd = selfdual_check(x);
  emit({{"check", "selfdual"}, {"instance", describe(x)}, {"selfdual", sd}, {"discrete", x.is_discrete()},
        {"pass", sd == x.is_discrete()}});
  return status(stone.pass && fin.pass && sd == x.is_discrete());
}

int space_dot(const std::string& path) {
  std::cout << emit_dot(load_space(path));
  return exit_pass;
}

// --------------------------------------------------------------- qspec

int qspec(const std::string& desc) {
  const Ring r(parse_ring_desc(desc));
  const auto ps = primary_space(r);
  const auto sw = sober_witness(r);
  emit(to_json(r, ps, sw));
  return status(sw.closure_law);
}

// ---------------------------------------------------------------- proj

struct ProjOptions {
  u64 p = 3;
  std::string fixture = "square";
  unsigned deg_x = 1;
  unsigned deg_y = 1;
  std::string f;
  std::string g;
  std::string prime;
  std::string ring;
  unsigned dim = 1;
  unsigned bound = 16;
};

proj::Fixture make_fixture(const ProjOptions& o) {
  if (o.fixture == "square") {
    if (o.deg_x != o.deg_y) fail(ErrorKind::invalid_input, "x^2-y^2 is graded only when deg x = deg y");
    auto f = proj::square_fixture(o.p);
    f.deg_x = o.deg_x;
    f.deg_y = o.deg_y;
    return f;
  }
  return proj::xy_fixture(o.p, o.deg_x, o.deg_y);
}

int proj_witness(const ProjOptions& o) {
  const auto fx = make_fixture(o);
  const proj::Poly2 x = proj::var_x(), y = proj::var_y();
  proj::Poly2 f = o.f.empty() ? (o.fixture == "square" ? proj::sub(fx, x, y) : x) : proj::parse(o.f, o.p);
  proj::Poly2 g = o.g.empty() ? (o.fixture == "square" ? proj::add(fx, x, y) : y) : proj::parse(o.g, o.p);
  const auto w = proj::disconnection_witness(fx, f, g, o.bound);
  json j = to_json(w);
  j["fixture"] = proj::fixture_name(fx);
  j["f"] = proj::format(proj::normal_form(fx, f));
  j["g"] = proj::format(proj::normal_form(fx, g));
  emit(j);
  return status(w.verdict == proj::Verdict::accept);
}

int proj_member(const ProjOptions& o) {
  const auto fx = make_fixture(o);
  static const std::vector<std::pair<std::string, proj::MinimalPrime>> names{
      {"x", proj::MinimalPrime::x},
      {"y", proj::MinimalPrime::y},
      {"x-y", proj::MinimalPrime::x_minus_y},
      {"x+y", proj::MinimalPrime::x_plus_y}};
  json out = json::array();
  for (const auto& [name, prime] : names) {
    const std::string shown = "(" + name + ")";
    if (!o.prime.empty() && o.prime != name && o.prime != shown) continue;
    const auto minimal = proj::minimal_primes(fx);
    if (std::find(minimal.begin(), minimal.end(), prime) == minimal.end()) {
      if (!o.prime.empty()) proj::proj_membership_check(fx, prime);  // throws a named error
      continue;
    }
    out.push_back({{"prime", shown}, {"in_proj", proj::proj_membership_check(fx, prime)}});
  }
  if (out.empty()) fail(ErrorKind::invalid_input, "unknown prime '" + o.prime + "'");
  emit({{"fixture", proj::fixture_name(fx)}, {"minimal_primes", out}});
  return exit_pass;
}

int proj_lift(const ProjOptions& o, std::uint64_t seed) {
  if (o.ring.empty()) fail(ErrorKind::invalid_input, "proj lift needs --ring");
  const Ring r(parse_ring_desc(o.ring));
  const auto lift = proj::component_lift_check(r, o.dim, seed);
  json j = to_json(lift.report);
  j["components"] = lift.components;
  j["factors"] = lift.factors;
  emit(j);
  return status(lift.report.pass);
}

// -------------------------------------------------------------- verify

int run_verify(verify::VerifyConfig cfg, const std::vector<std::string>& extra) {
  for (const auto& d : extra) cfg.extra_rings.push_back(parse_ring_desc(d));
  const auto result = verify::run_verify(cfg);
  for (const auto& s : result.suites) emit(verify::to_json(s));
  emit(verify::summary_json(result, cfg));
  return status(result.pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clopen sets, components and idempotents of finite spaces and rings"};
  app.name("clopen");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", pretty, "Indent JSON output");
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  std::function<int()> action;

  auto* ring = app.add_subcommand("ring", "Finite ring commands")->require_subcommand(1);
  std::string ring_desc;
  auto ring_cmd = [&](const char* name, const char* help, std::function<int(const std::string&)> fn) {
    auto* sub = ring->add_subcommand(name, help);
    sub->add_option("desc", ring_desc, "Ring descriptor, e.g. \"Z/12\" or \"GF(2)[x]/(x^3+x) x Z/9\"")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(ring_desc); }; });
  };
  ring_cmd("idempotents", "List idempotents and primitive idempotents", ring_idempotents);
  ring_cmd("decompose", "Split into a product of connected rings",
           [&](const std::string& d) { return ring_decompose(d, seed); });
  ring_cmd("spec", "Prime spectrum and its components", ring_spec);
  ring_cmd("suite", "Run the ring-level checks", [&](const std::string& d) { return ring_suite(d, seed); });

  auto* space = app.add_subcommand("space", "Finite topological space commands")->require_subcommand(1);
  std::string space_file;
  auto space_cmd = [&](const char* name, const char* help, int (*fn)(const std::string&)) {
    auto* sub = space->add_subcommand(name, help);
    sub->add_option("file", space_file, "Space JSON: {\"n\": k, \"opens\": [...]} or {\"n\": k, \"subbasis\": [...]}")
        ->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(space_file); }; });
  };
  space_cmd("components", "Connected components and quasi-components", space_components);
  space_cmd("stone", "Stone map onto Spec of the clopen algebra", space_stone);
  space_cmd("suite", "All space-level checks", space_suite);
  space_cmd("dot", "Specialization order as a Graphviz digraph", space_dot);

  auto* qs = app.add_subcommand("qspec", "Primary spectrum of Z/n or a table ring");
  std::string qspec_desc;
  qs->add_option("desc", qspec_desc, "Ring descriptor")->required();
  qs->callback([&] { action = [&] { return qspec(qspec_desc); }; });

  auto* proj = app.add_subcommand("proj", "Graded fixtures k[x,y]/(x^2-y^2) and k[x,y]/(xy)")->require_subcommand(1);
  ProjOptions po;
  auto fixture_options = [&](CLI::App* sub) {
    sub->add_option("--char,-p", po.p, "Prime characteristic")->required();
    sub->add_option("--fixture", po.fixture, "square (x^2-y^2) or xy")
        ->check(CLI::IsMember({"square", "xy"}))
        ->capture_default_str();
    sub->add_option("--deg-x", po.deg_x, "Degree of x")->capture_default_str();
    sub->add_option("--deg-y", po.deg_y, "Degree of y")->capture_default_str();
  };
  auto* witness = proj->add_subcommand("witness", "Certify a disconnection of Proj by (f, g)");
  fixture_options(witness);
  witness->add_option("--f", po.f, "Homogeneous f (default x-y, or x for xy)");
  witness->add_option("--g", po.g, "Homogeneous g (default x+y, or y for xy)");
  witness->add_option("--bound", po.bound, "Nilpotency search bound")->capture_default_str();
  witness->callback([&] { action = [&] { return proj_witness(po); }; });
  auto* member = proj->add_subcommand("member", "Which minimal primes lie in Proj");
  fixture_options(member);
  member->add_option("--prime", po.prime, "x, y, x-y or x+y (default: all minimal primes)");
  member->callback([&] { action = [&] { return proj_member(po); }; });
  auto* lift = proj->add_subcommand("lift", "Lift primitive idempotents of R to R[x_0..x_n]");
  lift->add_option("--ring", po.ring, "Coefficient ring descriptor")->required();
  lift->add_option("--dim", po.dim, "n, giving n+1 variables")->capture_default_str();
  lift->callback([&] { action = [&] { return proj_lift(po, seed); }; });

  auto* ver = app.add_subcommand("verify", "Run every acceptance suite");
  verify::VerifyConfig cfg;
  std::vector<std::string> extra;
  ver->add_option("--max-points", cfg.max_points, "Largest enumerated space (1..5)")->capture_default_str();
  ver->add_option("--max-n", cfg.max_modulus, "Largest modulus for exhaustive Z/n checks")->capture_default_str();
  ver->add_option("--max-table-size", cfg.max_table_size, "Largest table ring in the corpus")->capture_default_str();
  ver->add_option("--fibers", cfg.fiber_instances, "Random fiber-transfer instances")->capture_default_str();
  ver->add_option("--jobs,-j", cfg.jobs, "Worker threads")->capture_default_str();
  ver->add_option("--ring", extra, "Extra ring descriptor for the corpus (repeatable)");
  ver->callback([&] {
    action = [&] {
      cfg.seed = seed;
      return run_verify(cfg, extra);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << json{{"error", e.kind() == ErrorKind::parse ? "parse" : e.kind() == ErrorKind::resource ? "resource"
                                                           : e.kind() == ErrorKind::precondition   ? "precondition"
                                                                                                    : "invalid_input"},
                      {"message", e.what()}}
                     .dump()
              << "\n";
    return e.kind() == ErrorKind::resource ? exit_resource : exit_usage;
  } catch (const std::logic_error& e) {
    std::cerr << json{{"error", "invariant"}, {"message", e.what()}}.dump() << "\n";
    return exit_counterexample;
  }
}
