#include "tforge/beauville.hpp"
#include "tforge/error.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace tforge;
using namespace tforge::beauville;
using perm::FiniteGroup;
using perm::Perm;
using perm::PermGroup;

namespace {

SphericalTriple from_text(const char *a, const char *b, const char *c)
{
  return SphericalTriple::parse(a, b, c, 7);
}

const SphericalTriple &triple1()
{
  static const auto t = from_text("(1,2)(3,4)", "(1,5,7)(2,3)(4,6)", "(1,7,5,2,4,6,3)");
  return t;
}
const SphericalTriple &triple2()
{
  static const auto t = from_text("(1,2)(3,4)", "(1,7,4)(2,5)(3,6)", "(1,3,6,4,7,2,5)");
  return t;
}
const SphericalTriple &triple555()
{
  static const auto t = from_text("(1,7,6,5,4)", "(1,3,2,6,7)", "(2,3,4,5,6)");
  return t;
}

const FiniteGroup &a7()
{
  static const FiniteGroup g(PermGroup::alternating(7));
  return g;
}

std::set<std::uint64_t> orders_in(const SigmaSet &s, const FiniteGroup &g)
{
  std::set<std::uint64_t> out;
  for (auto i : s.members())
    out.insert(g.element_order(i));
  return out;
}

// All generating triples of small hyperbolic or spherical signatures.
std::vector<SphericalTriple> all_classes(const FiniteGroup &g, unsigned bound)
{
  std::vector<SphericalTriple> out;
  for (unsigned a = 2; a <= bound; ++a)
    for (unsigned b = a; b <= bound; ++b)
      for (unsigned c = b; c <= bound; ++c)
        for (auto &t : perm::enumerate_spherical_ordered(g, a, b, c))
          out.push_back(t);
  return out;
}

} // namespace

TEST_CASE("sigma sets of the A7 triples")
{
  const auto s267 = sigma_set(triple1(), a7());
  CHECK(s267.contains(a7().identity_index()));
  for (auto o : orders_in(s267, a7()))
    CHECK((o == 1 || o == 2 || o == 3 || o == 6 || o == 7));
  CHECK(orders_in(sigma_set(triple555(), a7()), a7()) == std::set<std::uint64_t>{1, 5});
}

TEST_CASE("sigma set in the trivial group")
{
  const FiniteGroup trivial(PermGroup::named("trivial"));
  const Perm e(1);
  const auto s = sigma_set({e, e, e}, trivial);
  CHECK(s.size() == 1);
  CHECK(s.contains(trivial.identity_index()));
}

TEST_CASE("sigma sets are conjugation invariant and closed under powers")
{
  std::mt19937_64 rng(51);
  const auto s = sigma_set(triple1(), a7());
  for (int k = 0; k < 20; ++k) {
    const Perm &x = a7().element(rng() % a7().size());
    CHECK(sigma_set(triple1().conjugate_by(x), a7()) == s);
  }
  for (auto i : s.members()) {
    const Perm &g = a7().element(i);
    CHECK(s.contains(static_cast<std::size_t>(a7().index_of(g.pow(5)))));
    CHECK(s.contains(static_cast<std::size_t>(a7().index_of(g.conjugate_by(a7().element(rng() % a7().size()))))));
  }
}

TEST_CASE("the two A7 structures are Beauville")
{
  CHECK(is_unmixed_beauville({triple1(), triple555()}, a7()));
  CHECK(is_unmixed_beauville({triple2(), triple555()}, a7()));
  CHECK_FALSE(is_unmixed_beauville({triple1(), triple1()}, a7()));
  CHECK_FALSE(is_unmixed_beauville({triple555(), triple555()}, a7()));
}

TEST_CASE("Beauville property is invariant under Hurwitz moves")
{
  SphericalTriple t = triple1(), u = triple555();
  for (int k = 0; k < 10; ++k) {
    t = k % 2 ? perm::braid_first(t) : perm::braid_second_inverse(t);
    u = k % 3 ? perm::braid_second(u) : perm::braid_first(u);
    CHECK(is_unmixed_beauville({t, u}, a7()));
  }
}

TEST_CASE("surface invariants")
{
  for (const auto &t : {triple1(), triple2()}) {
    const auto inv = surface_invariants({t, triple555()}, a7());
    CHECK(inv.g1 == 241);
    CHECK(inv.g2 == 505);
    CHECK(inv.euler_e == 192);
    CHECK(inv.chi == 48);
    CHECK(inv.K2 == 384);
    CHECK(12 * inv.chi == inv.K2 + inv.euler_e);
  }
  const auto product = surface_invariants_from(2, 2, 1);
  CHECK(product.euler_e == 4);
  CHECK(product.chi == 1);
  CHECK(product.K2 == 8);
  CHECK_THROWS_AS(surface_invariants_from(2, 3, 5), DomainError);
  CHECK_THROWS_WITH_AS(surface_invariants({triple1(), triple1()}, a7()), "action not free", DomainError);
}

TEST_CASE("invariants satisfy K2 = 8 chi and e = 4 chi")
{
  for (int g1 = 2; g1 < 12; ++g1)
    for (int g2 = 2; g2 < 12; ++g2)
      for (int order : {1, 2, 3, 5})
        if ((g1 - 1) * (g2 - 1) % order == 0) {
          const auto inv = surface_invariants_from(g1, g2, order);
          CHECK(inv.K2 == 8 * inv.chi);
          CHECK(inv.euler_e == 4 * inv.chi);
        }
}

TEST_CASE("sigma-set freeness agrees with explicit fixed points")
{
  for (const char *name : {"A5", "S4", "gens:(1,2,3,4,5);(6,7,8,9,10)"}) {
    const FiniteGroup g(PermGroup::named(name));
    auto classes = all_classes(g, 5);
    REQUIRE(!classes.empty());
    // Evenly spaced subsample keeps the quadratic brute force cheap.
    const std::size_t stride = classes.size() / 60 + 1;
    for (std::size_t k = 0; k * stride < classes.size(); ++k)
      classes[k] = classes[k * stride];
    classes.resize((classes.size() + stride - 1) / stride);
    std::size_t free_pairs = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i; j < classes.size(); ++j) {
        const UnmixedStructure s{classes[i], classes[j]};
        const bool fast = is_unmixed_beauville(s, g);
        CHECK(fast == diagonal_action_free_bruteforce(s, g));
        free_pairs += fast;
      }
    CHECK((std::string(name).rfind("gens:", 0) == 0) == (free_pairs > 0));
  }
}

TEST_CASE("searches")
{
  const FiniteGroup a5(PermGroup::alternating(5));
  CHECK(search_beauville(a5, 30).empty());
  const FiniteGroup trivial(PermGroup::named("trivial"));
  CHECK(search_beauville(trivial, 30).empty());
  const auto found = search_beauville(a7(), {perm::make_signature(2, 6, 7), perm::make_signature(5, 5, 5)});
  CHECK(!found.empty());
  for (const auto &s : found)
    CHECK(is_unmixed_beauville(s, a7()));
  const auto keys = [](const std::vector<UnmixedStructure> &v) {
    std::vector<std::pair<SphericalTriple, SphericalTriple>> out;
    for (const auto &s : v)
      out.emplace_back(s.triple1, s.triple2);
    return out;
  };
  const FiniteGroup a6(PermGroup::alternating(6));
  CHECK(keys(search_beauville(a6, 5)) == keys(search_beauville_serial(a6, 5)));
}
