#include "reproduce.hpp"

#include "tforge/beauville.hpp"
#include "tforge/dessins.hpp"
#include "tforge/error.hpp"
#include "tforge/fpgroup.hpp"
#include "tforge/spherical.hpp"
#include "tforge/twocrit.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace tforge::cli {

namespace {

using perm::FiniteGroup;
using perm::Perm;
using perm::SphericalTriple;

SphericalTriple parse_triple(const std::string &text, std::size_t degree)
{
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');)
    parts.push_back(part);
  if (parts.size() != 3)
    throw std::invalid_argument("expected three permutations separated by ';'");
  return SphericalTriple::parse(parts[0], parts[1], parts[2], degree);
}

/// Empty string when the triple is spherical, has the given orders in order,
/// and generates A7; otherwise the first violated property.
std::string triple_defect(const SphericalTriple &t, const FiniteGroup &a7, std::array<std::uint64_t, 3> orders)
{
  if (!t.is_spherical())
    return "product is not the identity";
  if (t.orders() != orders)
    return "element orders differ from the signature";
  for (const Perm *p : {&t.a1, &t.a2, &t.a3})
    if (a7.index_of(*p) < 0)
      return "entry outside A7";
  const perm::PermGroup gen(7, {t.a1, t.a2});
  if (gen.order() != 2520)
    return "generated group has order " + gen.order().get_str();
  return {};
}

class Runner
{
public:
  Runner(ReproduceReport &report, Timings &timings) : report_(report), timings_(timings) {}

  /// `body` returns the detail and sets `ok`.
  void item(const std::string &name, const std::function<Json(bool &ok)> &body)
  {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    Json detail;
    try {
      detail = body(ok);
    } catch (const std::exception &e) {
      ok = false;
      detail = {{"error", e.what()}};
    }
    timings_.record(name, start);
    report_.items.push_back({{"item", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
    if (!ok)
      report_.failed.push_back(name);
  }

  void skip(const std::string &name)
  {
    report_.items.push_back({{"item", name}, {"status", "skipped"}, {"detail", nullptr}});
  }

private:
  ReproduceReport &report_;
  Timings &timings_;
};

} // namespace

ReproduceReport reproduce(const ReproduceOptions &opt, Timings &timings)
{
  ReproduceReport report;
  Runner run(report, timings);

  run.item("genera", [](bool &ok) {
    const auto g267 = dessins::triangle_genus(2520, {2, 6, 7});
    const auto g555 = dessins::triangle_genus(2520, {5, 5, 5});
    ok = g267 == 241 && g555 == 505;
    return Json{{"genus_2_6_7", to_json(g267)}, {"genus_5_5_5", to_json(g555)}};
  });

  std::vector<dessins::DessinClass> classes;
  run.item("classification", [&](bool &ok) {
    classes = dessins::classify_polynomial_monodromies(7, {2, 2, 1, 1, 1}, {3, 2, 2});
    Json list = Json::array();
    ok = classes.size() == 2;
    for (const auto &c : classes) {
      ok = ok && c.monodromy_group_order == 2520 && c.is_real;
      list.push_back({{"sigma0", to_json(c.representative.sigma0)},
                      {"sigma1", to_json(c.representative.sigma1)},
                      {"group_order", c.monodromy_group_order},
                      {"real", c.is_real}});
    }
    return Json{{"class_count", classes.size()}, {"classes", list}};
  });

  const FiniteGroup a7(perm::PermGroup::alternating(7));

  std::optional<SphericalTriple> t1, t2, t555;
  auto verify = [&](const std::string &text, std::array<std::uint64_t, 3> orders,
                    std::optional<SphericalTriple> &slot) {
    return [&, orders](bool &ok) {
      const auto t = parse_triple(text, 7);
      const std::string defect = triple_defect(t, a7, orders);
      ok = defect.empty();
      if (ok)
        slot = t;
      Json d{{"triple", to_json(t)}};
      if (!ok)
        d["defect"] = defect;
      return d;
    };
  };
  run.item("triple_1", verify(opt.triple1, {2, 6, 7}, t1));
  run.item("triple_2", verify(opt.triple2, {2, 6, 7}, t2));
  run.item("triple_5_5_5", verify(opt.triple555, {5, 5, 5}, t555));

  run.item("triples_inequivalent", [&](bool &ok) {
    if (!t1 || !t2 || classes.size() != 2)
      throw DomainError("needs both verified triples and the classification");
    const auto conj = perm::simultaneous_conjugator({t1->a1, t1->a2}, {t2->a1, t2->a2});
    auto class_index = [&](const SphericalTriple &t) -> long {
      const auto form = dessins::canonical_pair(dessins::MonodromyTriple::complete(t.a1, t.a2));
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (dessins::canonical_pair(classes[i].representative) == form)
          return static_cast<long>(i);
      return -1;
    };
    const long c1 = class_index(*t1), c2 = class_index(*t2);
    ok = !conj && c1 >= 0 && c2 >= 0 && c1 != c2;
    return Json{{"class_of_triple_1", c1}, {"class_of_triple_2", c2}, {"conjugate_in_S7", conj.has_value()}};
  });

  run.item("hurwitz_5_5_5", [&](bool &ok) {
    const auto triples = perm::enumerate_spherical(a7, perm::make_signature(5, 5, 5));
    const auto with_conj = perm::hurwitz_classes(a7, triples, perm::HurwitzMode::braid_and_conjugation);
    const auto braid = perm::hurwitz_classes(a7, triples, perm::HurwitzMode::braid);
    bool contains_instance = false;
    if (t555) {
      const auto key = perm::canonical_under(a7, *t555);
      for (const auto &t : triples)
        contains_instance = contains_instance || perm::canonical_under(a7, t) == key;
    }
    ok = with_conj.size() == 1 && contains_instance;
    return Json{{"conjugacy_classes", triples.size()},
                {"classes_braid_and_conjugation", with_conj.size()},
                {"classes_braid_only", braid.size()},
                {"instance_enumerated", contains_instance}};
  });

  std::optional<beauville::UnmixedStructure> s1, s2;
  for (int k = 1; k <= 2; ++k) {
    auto &slot = k == 1 ? s1 : s2;
    const auto &tk = k == 1 ? t1 : t2;
    const std::string suffix = "S" + std::to_string(k);
    run.item("freeness_" + suffix, [&](bool &ok) {
      if (!tk || !t555)
        throw DomainError("needs verified triples");
      const beauville::UnmixedStructure s{*tk, *t555};
      ok = beauville::is_unmixed_beauville(s, a7);
      if (ok)
        slot = s;
      return Json{{"free", ok}};
    });
    run.item("invariants_" + suffix, [&](bool &ok) {
      if (!slot)
        throw DomainError("needs a free structure");
      const auto inv = beauville::surface_invariants(*slot, a7);
      ok = inv.g1 == 241 && inv.g2 == 505 && inv.euler_e == 192 && inv.chi == 48 && inv.K2 == 384 &&
           12 * inv.chi == inv.K2 + inv.euler_e;
      return to_json(inv);
    });
  }

  std::optional<fp::Pi1Data> pi1[2];
  for (int k = 0; k < 2; ++k) {
    const auto &slot = k == 0 ? s1 : s2;
    run.item("pi1_S" + std::to_string(k + 1), [&, k](bool &ok) {
      if (!slot)
        throw DomainError("needs a free structure");
      auto d = fp::pi1_surface(*slot, a7);
      const bool relators = fp::relators_act_trivially(d.table, d.product);
      const bool diagonal =
        fp::schreier_generators_in_diagonal(d, 2, {slot->triple1.a1, slot->triple1.a2},
                                            {slot->triple2.a1, slot->triple2.a2}, 100, opt.seed);
      ok = d.table.coset_count == 2520 && d.product.relators.size() == 10 && relators && diagonal &&
           d.subgroup.presentation.generator_count == 7561 && d.subgroup.presentation.relators.size() == 25200;
      Json out{{"cosets", d.table.coset_count},
               {"ambient_relators", d.product.relators.size()},
               {"relators_verified", relators},
               {"schreier_sample_in_diagonal", diagonal},
               {"generators", d.subgroup.presentation.generator_count},
               {"relators", d.subgroup.presentation.relators.size()}};
      pi1[k] = std::move(d);
      return out;
    });
  }

  if (opt.skip_snf) {
    run.skip("abelianization");
  } else {
    run.item("abelianization", [&](bool &ok) {
      if (!pi1[0] || !pi1[1])
        throw DomainError("needs both presentations");
      const auto h1 = fp::abelianization(pi1[0]->subgroup.presentation);
      const auto h2 = fp::abelianization(pi1[1]->subgroup.presentation);
      ok = h1.free_rank == 0 && h1 == h2;
      return Json{{"S1", h1.to_string()}, {"S2", h2.to_string()}};
    });
  }

  run.item("two_critical_values", [&](bool &ok) {
    twocrit::SolveOptions so;
    so.seed = opt.seed;
    const auto sys = twocrit::build_system(7, {2, 2, 1, 1, 1}, {3, 2, 2});
    const auto res = twocrit::solve_numeric(sys, so);
    std::size_t real_orbits = 0;
    for (auto i : res.orbit_representatives) {
      const auto &s = res.solutions[i];
      real_orbits += s.is_real && s.residual < 1e-10 && s.critical_value_error < 1e-10;
    }
    ok = real_orbits >= 2;
    return Json{{"clusters", res.solutions.size()},
                {"orbits", res.orbit_representatives.size()},
                {"real_orbits", real_orbits}};
  });

  return report;
}

} // namespace tforge::cli
