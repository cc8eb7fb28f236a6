#include "json_out.hpp"
#include "reproduce.hpp"

#include "tforge/beauville.hpp"
#include "tforge/belyi.hpp"
#include "tforge/dessins.hpp"
#include "tforge/error.hpp"
#include "tforge/fpgroup.hpp"
#include "tforge/special_curves.hpp"
#include "tforge/spherical.hpp"
#include "tforge/twocrit.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace tforge;
using cli::Json;
using cli::to_json;
using cli::to_json_list;
using perm::Perm;
using perm::SphericalTriple;

std::vector<std::string> split(const std::string &text, char sep)
{
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, sep);)
    out.push_back(part);
  return out;
}

std::vector<unsigned> parse_uints(const std::string &text)
{
  std::vector<unsigned> out;
  for (const auto &p : split(text, ',')) {
    std::size_t used = 0;
    const long v = std::stol(p, &used);
    if (used != p.size() || v < 0)
      throw std::invalid_argument("expected nonnegative integers: " + text);
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

std::array<unsigned, 3> parse_signature(const std::string &text)
{
  const auto v = parse_uints(text);
  if (v.size() != 3)
    throw std::invalid_argument("a signature has three orders: " + text);
  return {v[0], v[1], v[2]};
}

/// "a1;a2;a3" or "a1;a2" (a3 completed).
SphericalTriple parse_triple(const std::string &text, std::size_t degree)
{
  const auto parts = split(text, ';');
  if (parts.size() == 2)
    return SphericalTriple::complete(Perm::parse(parts[0], degree), Perm::parse(parts[1], degree));
  if (parts.size() == 3)
    return SphericalTriple::parse(parts[0], parts[1], parts[2], degree);
  throw std::invalid_argument("expected two or three permutations separated by ';': " + text);
}

std::vector<Perm> parse_tuple(const std::string &text, std::size_t degree)
{
  std::vector<Perm> out;
  for (const auto &p : split(text, ';'))
    out.push_back(Perm::parse(p, degree));
  return out;
}

std::size_t tuple_degree(const std::vector<std::string> &texts)
{
  std::size_t d = 1;
  for (const auto &t : texts)
    for (const auto &p : split(t, ';'))
      d = std::max(d, Perm::parse(p).degree());
  return d;
}

Json locus_json(const belyi::CriticalLocus &l)
{
  Json out{{"rationals", to_json_list(l.rationals)}, {"irrational_part", l.irrational_part.to_text()}};
  if (l.includes_infinity)
    out["infinity"] = true;
  return out;
}

Json step_json(const belyi::ChainStep &step)
{
  if (const auto *p = std::get_if<UPoly>(&step))
    return {{"polynomial", p->to_text()}};
  const auto &f = std::get<belyi::FactoredMap>(step);
  return {{"factored_map",
           {{"roots", to_json_list(f.roots)},
            {"exponents", to_json_list(f.exponents)},
            {"scale", to_json(f.scale)},
            {"multiplier", to_json(f.multiplier)}}}};
}

Json mobius_list(const std::vector<curves::MobiusMap> &maps)
{
  Json out = Json::array();
  for (const auto &m : maps) {
    Json row = Json::array();
    for (const auto &e : m.entries())
      row.push_back(e.get_str());
    out.push_back(row);
  }
  return out;
}

Json presentation_json(const fp::Presentation &p)
{
  return {{"generators", p.generator_count}, {"relators", p.relators}};
}

struct Context
{
  Json inputs = Json::object();
  Json results = Json::object();
  cli::Timings timings;
  std::uint64_t seed = 1;
  /// Nonzero when the command found a failure it reports through the exit code.
  int status = 0;
};

using Handler = std::function<void(Context &)>;

template <class F>
auto timed(Context &ctx, const std::string &phase, F &&f)
{
  const auto start = std::chrono::steady_clock::now();
  auto value = f();
  ctx.timings.record(phase, start);
  return value;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"tforge: triangle curves, Belyi maps, dessins, Beauville surfaces"};
  app.require_subcommand(1);
  int threads = 0;
  std::uint64_t seed = 1;
  bool show_timings = false;
  app.add_option("--threads", threads, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for randomized steps");
  app.add_flag("--timings", show_timings, "Report per-phase wall-clock times");

  std::string command;
  Handler handler;
  auto bind = [&](CLI::App *sub, std::string name, Handler h) {
    sub->callback([&, name = std::move(name), h = std::move(h)] {
      command = name;
      handler = h;
    });
  };

  // curves iso
  auto *curves_cmd = app.add_subcommand("curves", "Hyperelliptic curves C_a")->require_subcommand(1);
  auto *curves_iso = curves_cmd->add_subcommand("iso", "Branch-set Möbius equivalence of C_a and C_b");
  int iso_genus = 6;
  std::string iso_a, iso_b;
  curves_iso->add_option("--genus", iso_genus)->required();
  curves_iso->add_option("--a", iso_a)->required();
  curves_iso->add_option("--b", iso_b)->required();
  bind(curves_iso, "curves iso", [&](Context &ctx) {
    const Rational a = parse_rational(iso_a), b = parse_rational(iso_b);
    ctx.inputs = {{"genus", iso_genus}, {"a", to_json(a)}, {"b", to_json(b)}};
    const auto rep = timed(ctx, "search", [&] { return curves::compare_curves(iso_genus, a, b); });
    ctx.results = {{"equivalences", mobius_list(rep.affine_equivalences)},
                   {"equivalences_with_infinity", mobius_list(rep.marked_equivalences)},
                   {"isomorphic", rep.isomorphic},
                   {"criterion_proven", iso_genus >= 6}};
  });

  // belyi
  auto *belyi_cmd = app.add_subcommand("belyi", "Belyi chain for C_a");
  int belyi_genus = 3, belyi_root = 0;
  std::string belyi_minpoly, belyi_a;
  belyi_cmd->add_option("--genus", belyi_genus)->required();
  auto *minpoly_opt = belyi_cmd->add_option("--minpoly", belyi_minpoly, "Minimal polynomial of a, constant first");
  belyi_cmd->add_option("--a", belyi_a, "Rational parameter")->excludes(minpoly_opt);
  belyi_cmd->add_option("--root", belyi_root, "Root label of an irrational parameter");
  bind(belyi_cmd, "belyi", [&](Context &ctx) {
    curves::CurveSpec spec;
    spec.genus = belyi_genus;
    ctx.inputs = {{"genus", belyi_genus}};
    if (!belyi_a.empty()) {
      spec.parameter = parse_rational(belyi_a);
      ctx.inputs["a"] = to_json(std::get<Rational>(spec.parameter));
    } else if (!belyi_minpoly.empty()) {
      spec.parameter = curves::AlgebraicParameter{UPoly::parse(belyi_minpoly), belyi_root};
      ctx.inputs["minpoly"] = std::get<curves::AlgebraicParameter>(spec.parameter).minimal_polynomial.to_text();
      ctx.inputs["root"] = belyi_root;
    } else {
      throw CLI::ValidationError("belyi", "one of --minpoly or --a is required");
    }
    const auto chain = timed(ctx, "construct", [&] { return belyi::belyi_for_curve(spec); });
    const auto locus = timed(ctx, "verify", [&] { return belyi::verify_belyi(chain); });
    Json steps = Json::array();
    for (const auto &s : chain.steps)
      steps.push_back(step_json(s));
    ctx.results = {{"steps", steps}, {"verified_critical_values", locus_json(locus)}};
    if (!chain.steps.empty())
      if (const auto *f = std::get_if<belyi::FactoredMap>(&chain.steps.back()))
        ctx.results["factored_map"] = step_json(*f)["factored_map"];
  });

  // perm spherical | hurwitz | conj
  auto *perm_cmd = app.add_subcommand("perm", "Permutation groups and spherical generators")->require_subcommand(1);
  std::string perm_group = "A7", perm_signature, hurwitz_mode = "braid+conj", hurwitz_outer, conj_t1, conj_t2,
              conj_group;
  auto *perm_sph = perm_cmd->add_subcommand("spherical", "Generating spherical triples up to conjugation");
  perm_sph->add_option("--group", perm_group)->required();
  perm_sph->add_option("--signature", perm_signature)->required();
  bind(perm_sph, "perm spherical", [&](Context &ctx) {
    const auto sig = parse_signature(perm_signature);
    ctx.inputs = {{"group", perm_group}, {"signature", sig}};
    const perm::FiniteGroup g(perm::PermGroup::named(perm_group));
    const auto triples = timed(ctx, "enumerate", [&] {
      return perm::enumerate_spherical(g, perm::make_signature(sig[0], sig[1], sig[2]));
    });
    ctx.results = {{"group_order", g.size()}, {"class_count", triples.size()}, {"triples", to_json_list(triples)}};
  });
  auto *perm_hur = perm_cmd->add_subcommand("hurwitz", "Hurwitz classes of spherical triples");
  perm_hur->add_option("--group", perm_group)->required();
  perm_hur->add_option("--signature", perm_signature)->required();
  perm_hur->add_option("--mode", hurwitz_mode)->check(CLI::IsMember({"braid", "braid+conj"}));
  perm_hur->add_option("--outer", hurwitz_outer, "Extra conjugating permutations, ';'-separated");
  bind(perm_hur, "perm hurwitz", [&](Context &ctx) {
    const auto sig = parse_signature(perm_signature);
    ctx.inputs = {{"group", perm_group}, {"signature", sig}, {"mode", hurwitz_mode}, {"outer", hurwitz_outer}};
    const perm::FiniteGroup g(perm::PermGroup::named(perm_group));
    const auto outer = hurwitz_outer.empty() ? std::vector<Perm>{} : parse_tuple(hurwitz_outer, g.degree());
    const auto triples = timed(ctx, "enumerate", [&] {
      return perm::enumerate_spherical(g, perm::make_signature(sig[0], sig[1], sig[2]));
    });
    const auto mode = hurwitz_mode == "braid" ? perm::HurwitzMode::braid : perm::HurwitzMode::braid_and_conjugation;
    const auto orbits = timed(ctx, "orbits", [&] { return perm::hurwitz_classes(g, triples, mode, outer); });
    Json list = Json::array();
    for (const auto &o : orbits)
      list.push_back({{"representative", to_json(o.representative)},
                      {"triples", o.triple_count},
                      {"conjugacy_classes", o.class_count}});
    ctx.results = {{"conjugacy_classes", triples.size()}, {"orbit_count", orbits.size()}, {"orbits", list}};
  });
  auto *perm_conj = perm_cmd->add_subcommand("conj", "Simultaneous conjugator of two tuples");
  perm_conj->add_option("--t1", conj_t1)->required();
  perm_conj->add_option("--t2", conj_t2)->required();
  perm_conj->add_option("--group", conj_group, "Ambient group (default: the symmetric group)");
  bind(perm_conj, "perm conj", [&](Context &ctx) {
    ctx.inputs = {{"t1", conj_t1}, {"t2", conj_t2}, {"group", conj_group}};
    std::optional<perm::PermGroup> ambient;
    if (!conj_group.empty())
      ambient = perm::PermGroup::named(conj_group);
    const std::size_t degree = ambient ? ambient->degree() : tuple_degree({conj_t1, conj_t2});
    const auto t1 = parse_tuple(conj_t1, degree), t2 = parse_tuple(conj_t2, degree);
    if (t1.size() != t2.size())
      throw std::invalid_argument("tuples differ in length");
    const auto c = timed(ctx, "search", [&] {
      return ambient ? perm::simultaneous_conjugator(t1, t2, *ambient) : perm::simultaneous_conjugator(t1, t2);
    });
    ctx.results = {{"conjugator", c ? Json(c->to_string()) : Json(nullptr)}};
  });

  // dessins classify | closure
  auto *dessins_cmd = app.add_subcommand("dessins", "Polynomial monodromy classification")->require_subcommand(1);
  unsigned dessin_n = 0;
  std::string dessin_mu, dessin_nu, closure_s0, closure_s1;
  auto *dessins_cls = dessins_cmd->add_subcommand("classify", "Two-critical-value polynomial monodromies");
  dessins_cls->add_option("--n", dessin_n)->required();
  dessins_cls->add_option("--mu", dessin_mu)->required();
  dessins_cls->add_option("--nu", dessin_nu)->required();
  bind(dessins_cls, "dessins classify", [&](Context &ctx) {
    const auto mu = parse_uints(dessin_mu), nu = parse_uints(dessin_nu);
    ctx.inputs = {{"n", dessin_n}, {"mu", mu}, {"nu", nu}};
    const auto classes =
      timed(ctx, "classify", [&] { return dessins::classify_polynomial_monodromies(dessin_n, mu, nu); });
    Json list = Json::array();
    for (const auto &c : classes) {
      const auto &r = c.representative;
      Json item{{"sigma0", to_json(r.sigma0)},       {"sigma1", to_json(r.sigma1)},
                {"sigma_inf", to_json(r.sigma_inf)}, {"class_size", c.class_size},
                {"group_order", c.monodromy_group_order}, {"real", c.is_real}};
      try {
        item["closure_genus"] = to_json(dessins::normal_closure_data(r).genus_of_closure);
      } catch (const DomainError &) {
        item["closure_genus"] = nullptr; // fewer than three branch points
      }
      list.push_back(item);
    }
    ctx.results = {{"class_count", classes.size()}, {"classes", list}};
  });
  auto *dessins_clo = dessins_cmd->add_subcommand("closure", "Normal closure data of a monodromy triple");
  dessins_clo->add_option("--sigma0", closure_s0)->required();
  dessins_clo->add_option("--sigma1", closure_s1)->required();
  bind(dessins_clo, "dessins closure", [&](Context &ctx) {
    ctx.inputs = {{"sigma0", closure_s0}, {"sigma1", closure_s1}};
    const std::size_t d = tuple_degree({closure_s0, closure_s1});
    const auto t = dessins::MonodromyTriple::complete(Perm::parse(closure_s0, d), Perm::parse(closure_s1, d));
    const auto data = timed(ctx, "closure", [&] { return dessins::normal_closure_data(t); });
    ctx.results = {{"sigma_inf", to_json(t.sigma_inf)},
                   {"group_order", data.monodromy_group_order},
                   {"stabilizer_index", data.stabilizer_index},
                   {"component_count", to_json(data.component_count)},
                   {"genus", to_json(data.genus_of_closure)},
                   {"real", dessins::is_real(t)}};
  });

  // genus
  auto *genus_cmd = app.add_subcommand("genus", "Genus of a triangle curve");
  std::string genus_order, genus_signature;
  genus_cmd->add_option("--order", genus_order)->required();
  genus_cmd->add_option("--signature", genus_signature)->required();
  bind(genus_cmd, "genus", [&](Context &ctx) {
    const Integer order(genus_order);
    const auto sig = parse_signature(genus_signature);
    ctx.inputs = {{"order", to_json(order)}, {"signature", sig}};
    ctx.results = {{"genus", to_json(dessins::triangle_genus(order, sig))}};
  });

  // beauville check | search
  auto *beau_cmd = app.add_subcommand("beauville", "Unmixed Beauville structures")->require_subcommand(1);
  std::string beau_group = "A7", beau_t1, beau_t2, beau_signatures;
  unsigned beau_bound = 7;
  bool beau_brute = false;
  auto *beau_check = beau_cmd->add_subcommand("check", "Verify one structure");
  beau_check->add_option("--group", beau_group)->required();
  beau_check->add_option("--t1", beau_t1)->required();
  beau_check->add_option("--t2", beau_t2)->required();
  beau_check->add_flag("--bruteforce", beau_brute, "Also check freeness by explicit fixed points");
  bind(beau_check, "beauville check", [&](Context &ctx) {
    ctx.inputs = {{"group", beau_group}, {"t1", beau_t1}, {"t2", beau_t2}};
    const perm::FiniteGroup g(perm::PermGroup::named(beau_group));
    const beauville::UnmixedStructure s{parse_triple(beau_t1, g.degree()), parse_triple(beau_t2, g.degree())};
    const bool ok = timed(ctx, "sigma_sets", [&] { return beauville::is_unmixed_beauville(s, g); });
    ctx.results = {{"beauville", ok}};
    if (beau_brute)
      ctx.results["free_bruteforce"] =
        timed(ctx, "bruteforce", [&] { return beauville::diagonal_action_free_bruteforce(s, g); });
    if (ok)
      ctx.results["invariants"] = to_json(beauville::surface_invariants(s, g));
  });
  auto *beau_search = beau_cmd->add_subcommand("search", "All structures up to conjugation");
  beau_search->add_option("--group", beau_group)->required();
  beau_search->add_option("--bound", beau_bound, "Largest branch order considered");
  beau_search->add_option("--signatures", beau_signatures, "Restrict to signatures, e.g. \"2,6,7;5,5,5\"");
  bind(beau_search, "beauville search", [&](Context &ctx) {
    ctx.inputs = {{"group", beau_group}, {"bound", beau_bound}, {"signatures", beau_signatures}};
    const perm::FiniteGroup g(perm::PermGroup::named(beau_group));
    std::vector<perm::Signature> sigs;
    if (beau_signatures.empty()) {
      sigs = beauville::hyperbolic_signatures(g, beau_bound);
    } else {
      for (const auto &s : split(beau_signatures, ';')) {
        const auto v = parse_signature(s);
        sigs.push_back(perm::make_signature(v[0], v[1], v[2]));
      }
    }
    const auto found = timed(ctx, "search", [&] { return beauville::search_beauville(g, sigs); });
    Json list = Json::array();
    for (const auto &s : found)
      list.push_back({{"t1", to_json(s.triple1)},
                      {"t2", to_json(s.triple2)},
                      {"invariants", to_json(beauville::surface_invariants(s, g))}});
    Json sig_json = Json::array();
    for (const auto &s : sigs)
      sig_json.push_back(s);
    ctx.results = {{"signatures", sig_json}, {"structure_count", found.size()}, {"structures", list}};
  });

  // pi1
  auto *pi1_cmd = app.add_subcommand("pi1", "Fundamental group of an unmixed Beauville surface");
  std::string pi1_group = "A7", pi1_t1, pi1_t2, pi1_emit = "abelianization", pi1_triplets;
  pi1_cmd->add_option("--group", pi1_group)->required();
  pi1_cmd->add_option("--t1", pi1_t1)->required();
  pi1_cmd->add_option("--t2", pi1_t2)->required();
  pi1_cmd->add_option("--emit", pi1_emit)->check(CLI::IsMember({"presentation", "abelianization"}));
  pi1_cmd->add_option("--triplets", pi1_triplets, "Write the relation matrix in triplet form to this file");
  bind(pi1_cmd, "pi1", [&](Context &ctx) {
    ctx.inputs = {{"group", pi1_group}, {"t1", pi1_t1}, {"t2", pi1_t2}, {"emit", pi1_emit}};
    const perm::FiniteGroup g(perm::PermGroup::named(pi1_group));
    const beauville::UnmixedStructure s{parse_triple(pi1_t1, g.degree()), parse_triple(pi1_t2, g.degree())};
    const auto d = timed(ctx, "reidemeister_schreier", [&] { return fp::pi1_surface(s, g); });
    ctx.results = {{"cosets", d.table.coset_count},
                   {"ambient", presentation_json(d.product)},
                   {"generators", d.subgroup.presentation.generator_count},
                   {"relator_count", d.subgroup.presentation.relators.size()}};
    if (!pi1_triplets.empty()) {
      std::ofstream out(pi1_triplets);
      if (!out)
        throw std::runtime_error("cannot open " + pi1_triplets);
      fp::write_triplets(out, fp::relation_matrix(d.subgroup.presentation));
    }
    if (pi1_emit == "presentation")
      ctx.results["presentation"] = presentation_json(d.subgroup.presentation);
    else
      ctx.results["abelianization"] =
        timed(ctx, "smith_normal_form", [&] { return fp::abelianization(d.subgroup.presentation).to_string(); });
  });

  // twocrit solve
  auto *tc_cmd = app.add_subcommand("twocrit", "Normalized polynomials with critical values 0 and 1")
                   ->require_subcommand(1);
  auto *tc_solve = tc_cmd->add_subcommand("solve", "Multistart Newton on the coefficient system");
  unsigned tc_n = 0;
  std::string tc_mu, tc_nu;
  twocrit::SolveOptions tc_opt;
  tc_solve->add_option("--n", tc_n)->required();
  tc_solve->add_option("--mu", tc_mu)->required();
  tc_solve->add_option("--nu", tc_nu)->required();
  tc_solve->add_option("--tol", tc_opt.tol)->check(CLI::PositiveNumber);
  tc_solve->add_option("--attempts", tc_opt.attempts)->check(CLI::PositiveNumber);
  tc_solve->add_option("--scale", tc_opt.start_scale, "Spread of the random starts (0 selects n)");
  tc_solve->add_flag("--system", "Also print the equations");
  bind(tc_solve, "twocrit solve", [&](Context &ctx) {
    const auto mu = parse_uints(tc_mu), nu = parse_uints(tc_nu);
    tc_opt.seed = ctx.seed;
    ctx.inputs = {{"n", tc_n}, {"mu", mu}, {"nu", nu}, {"tol", tc_opt.tol},
                  {"attempts", tc_opt.attempts}, {"scale", tc_opt.start_scale}, {"seed", ctx.seed}};
    const auto sys = twocrit::build_system(tc_n, mu, nu);
    const auto res = timed(ctx, "solve", [&] { return twocrit::solve_numeric(sys, tc_opt); });
    Json sols = Json::array();
    for (const auto &s : res.solutions)
      sols.push_back({{"beta", to_json_list(s.beta)},
                      {"gamma", to_json_list(s.gamma)},
                      {"coefficients", to_json_list(s.coefficients)},
                      {"residual", s.residual},
                      {"critical_value_error", s.critical_value_error},
                      {"real", s.is_real}});
    std::size_t real_orbits = 0;
    for (auto i : res.orbit_representatives)
      real_orbits += res.solutions[i].is_real;
    ctx.results = {{"converged_starts", res.converged_starts},
                   {"solution_count", res.solutions.size()},
                   {"orbit_count", res.orbit_representatives.size()},
                   {"real_orbit_count", real_orbits},
                   {"orbit_representatives", res.orbit_representatives},
                   {"solutions", sols}};
    if (tc_solve->count("--system")) {
      Json eqs = Json::array();
      for (const auto &e : sys.equations)
        eqs.push_back(e.to_string(sys.variable_names()));
      ctx.results["equations"] = eqs;
    }
    if (!res.diagnostic.empty())
      ctx.results["diagnostic"] = res.diagnostic;
  });

  // reproduce-paper
  auto *repro_cmd = app.add_subcommand("reproduce-paper", "Run every A7 check and report each item");
  cli::ReproduceOptions repro;
  repro_cmd->add_flag("--skip-snf", repro.skip_snf, "Skip the Smith normal form item");
  repro_cmd->add_option("--triple1", repro.triple1, "First (2,6,7) triple, \"a1;a2;a3\"");
  repro_cmd->add_option("--triple2", repro.triple2, "Second (2,6,7) triple");
  repro_cmd->add_option("--triple555", repro.triple555, "The (5,5,5) triple");
  bind(repro_cmd, "reproduce-paper", [&](Context &ctx) {
    repro.seed = ctx.seed;
    ctx.inputs = {{"triple1", repro.triple1}, {"triple2", repro.triple2}, {"triple555", repro.triple555},
                  {"skip_snf", repro.skip_snf}};
    const auto rep = cli::reproduce(repro, ctx.timings);
    ctx.results = {{"items", rep.items}, {"failed", rep.failed}};
    if (!rep.failed.empty()) {
      for (const auto &f : rep.failed)
        std::cerr << "tforge: failed item: " << f << '\n';
      ctx.status = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0)
    omp_set_num_threads(threads);

  Context ctx;
  ctx.seed = seed;
  try {
    handler(ctx);
  } catch (const CLI::Error &e) {
    std::cerr << "tforge: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "tforge: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const DomainError &e) {
    std::cerr << "tforge: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "tforge: " << e.what() << '\n';
    return 1;
  }

  Json report{{"schema", cli::schema_version},
              {"command", command},
              {"inputs", ctx.inputs},
              {"results", ctx.results}};
  if (show_timings)
    report["timings"] = ctx.timings.json();
  std::cout << report.dump(2) << '\n';
  return ctx.status;
}
