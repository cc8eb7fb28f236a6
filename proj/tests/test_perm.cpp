#include "tforge/error.hpp"
#include "tforge/spherical.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace tforge;
using namespace tforge::perm;

namespace {

const char *const t1a = "(1,2)(3,4)", *const t1b = "(1,5,7)(2,3)(4,6)", *const t1c = "(1,7,5,2,4,6,3)";
const char *const t2a = "(1,2)(3,4)", *const t2b = "(1,7,4)(2,5)(3,6)", *const t2c = "(1,3,6,4,7,2,5)";

// Closure of the generators by breadth-first multiplication.
std::set<Perm> closure(const std::vector<Perm> &gens, std::size_t degree)
{
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto &g : gens) {
      Perm h = queue[k] * g;
      if (seen.insert(h).second)
        queue.push_back(h);
    }
  return seen;
}

Perm random_perm(std::mt19937_64 &rng, std::size_t n)
{
  std::vector<Perm::point_type> img(n);
  std::iota(img.begin(), img.end(), Perm::point_type{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

} // namespace

TEST_CASE("right action convention")
{
  const Perm a = Perm::parse("(1,2)", 3), b = Perm::parse("(2,3)", 3);
  // 1 -a-> 2 -b-> 3
  CHECK((a * b)[0] == 2);
  CHECK((a * b).to_string() == "(1,3,2)");
  CHECK(Perm::parse(t1a, 7) * Perm::parse(t1b, 7) * Perm::parse(t1c, 7) == Perm(7));
}

TEST_CASE("cycle types")
{
  CHECK(Perm::parse(t1a, 7).cycle_type() == std::vector<unsigned>{2, 2, 1, 1, 1});
  CHECK(Perm(7).cycle_type() == std::vector<unsigned>(7, 1));
  CHECK(Perm::parse(t1c).cycle_type() == std::vector<unsigned>{7});
  CHECK(Perm::parse(t1b, 7).order() == 6);
}

TEST_CASE("parsing and printing round-trip")
{
  for (const char *s : {t1a, t1b, t1c, t2b, "()"})
    CHECK(Perm::parse(s, 7).to_string() == (std::string(s) == "()" ? "()" : s));
  CHECK_THROWS_AS(Perm::parse("(1,2)(2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("(0,1)"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("(1,9)", 7), std::invalid_argument);
}

TEST_CASE("group orders")
{
  CHECK(PermGroup(7, {Perm::parse("(1,2,3,4,5,6,7)"), Perm::parse("(1,2)", 7)}).order() == 5040);
  std::vector<Perm> three_cycles;
  for (unsigned k = 3; k <= 7; ++k)
    three_cycles.push_back(Perm::from_cycles(7, {{0, 1, k - 1}}));
  CHECK(PermGroup(7, three_cycles).order() == 2520);
  CHECK(PermGroup(7, {Perm(7)}).order() == 1);
  CHECK(PermGroup::alternating(7).order() == 2520);
  CHECK_THROWS(PermGroup::symmetric(33).order());
}

TEST_CASE("membership matches exhaustive closure")
{
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 4 + trial % 3;
    std::vector<Perm> gens{random_perm(rng, n)};
    if (trial % 2 == 0)
      gens.push_back(random_perm(rng, n));
    const PermGroup g(n, gens);
    const auto all = closure(gens, n);
    CHECK(g.order() == all.size());
    for (int k = 0; k < 40; ++k) {
      const Perm p = random_perm(rng, n);
      CHECK(g.contains(p) == (all.count(p) == 1));
    }
    CHECK(g.elements().size() == all.size());
  }
}

TEST_CASE("simultaneous conjugator")
{
  const std::vector<Perm> t1{Perm::parse(t1a, 7), Perm::parse(t1b, 7)};
  const std::vector<Perm> t2{Perm::parse(t2a, 7), Perm::parse(t2b, 7)};
  CHECK(simultaneous_conjugator(t1, t1) == Perm(7));
  CHECK_FALSE(simultaneous_conjugator(t1, t2).has_value());
  const auto c = simultaneous_conjugator({Perm::parse("(1,2)", 7)}, {Perm::parse("(3,4)", 7)},
                                         PermGroup::symmetric(7));
  REQUIRE(c);
  CHECK(Perm::parse("(1,2)", 7).conjugate_by(*c) == Perm::parse("(3,4)", 7));
}

TEST_CASE("conjugators are verified and invert")
{
  std::mt19937_64 rng(42);
  const PermGroup a7 = PermGroup::alternating(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<Perm> t{random_perm(rng, 7), random_perm(rng, 7)};
    const Perm x = random_perm(rng, 7);
    const std::vector<Perm> u{t[0].conjugate_by(x), t[1].conjugate_by(x)};
    const auto c = simultaneous_conjugator(t, u);
    REQUIRE(c);
    CHECK(t[0].conjugate_by(*c) == u[0]);
    CHECK(t[1].conjugate_by(*c) == u[1]);
    const auto d = simultaneous_conjugator(u, t);
    REQUIRE(d);
    CHECK(u[0].conjugate_by(*d) == t[0]);
    CHECK(u[1].conjugate_by(*d) == t[1]);
    if (const auto e = simultaneous_conjugator(t, u, a7)) {
      CHECK(a7.contains(*e));
      CHECK(t[0].conjugate_by(*e) == u[0]);
    }
  }
}

TEST_CASE("spherical triples of the cyclic group of order 3")
{
  const FiniteGroup c3(PermGroup::named("C3"));
  const auto triples = enumerate_spherical(c3, make_signature(3, 3, 3));
  CHECK(triples.size() == 2);
  for (const auto &t : triples) {
    CHECK(t.a1 == t.a2);
    CHECK(t.a2 == t.a3);
  }
}

TEST_CASE("A7 spherical triples with signatures (5,5,5) and (2,6,7)")
{
  const FiniteGroup a7(PermGroup::alternating(7));
  const auto t555 = enumerate_spherical(a7, make_signature(5, 5, 5));
  CHECK(!t555.empty());
  const auto instance = SphericalTriple::parse("(1,7,6,5,4)", "(1,3,2,6,7)", "(2,3,4,5,6)", 7);
  CHECK(instance.is_spherical());
  const auto key = canonical_under(a7, instance);
  CHECK(std::count_if(t555.begin(), t555.end(), [&](const auto &t) { return canonical_under(a7, t) == key; }) == 1);

  const auto t267 = enumerate_spherical_ordered(a7, 2, 6, 7);
  const std::array<std::array<const char *, 3>, 2> sources{{{t1a, t1b, t1c}, {t2a, t2b, t2c}}};
  for (const auto &src : sources) {
    const auto t = SphericalTriple::parse(src[0], src[1], src[2], 7);
    const auto k = canonical_under(a7, t);
    CHECK(std::count_if(t267.begin(), t267.end(), [&](const auto &u) { return canonical_under(a7, u) == k; }) == 1);
  }
  CHECK(enumerate_spherical(a7, make_signature(2, 6, 7)).size() == 6 * t267.size());
}

TEST_CASE("Hurwitz classes of (5,5,5) in A7")
{
  const FiniteGroup a7(PermGroup::alternating(7));
  const auto triples = enumerate_spherical(a7, make_signature(5, 5, 5));
  const auto orbits = hurwitz_classes(a7, triples, HurwitzMode::braid_and_conjugation);
  CHECK(orbits.size() == 1);
  std::uint64_t classes = 0;
  for (const auto &o : orbits)
    classes += o.class_count;
  CHECK(classes == triples.size());
  CHECK(hurwitz_classes(a7, triples, HurwitzMode::braid).size() >= orbits.size());
}

TEST_CASE("(2,6,7) classes of A7 under braids and S7 conjugation")
{
  const FiniteGroup a7(PermGroup::alternating(7));
  const auto triples = enumerate_spherical(a7, make_signature(2, 6, 7));
  const auto orbits =
    hurwitz_classes(a7, triples, HurwitzMode::braid_and_conjugation, {Perm::parse("(1,2)", 7)});
  CHECK(orbits.size() == 2);
}

TEST_CASE("Hurwitz moves preserve product, signature and generated group")
{
  const FiniteGroup a5(PermGroup::alternating(5));
  std::mt19937_64 rng(43);
  for (const auto &t : enumerate_spherical(a5, make_signature(2, 5, 5))) {
    SphericalTriple cur = t;
    const auto order = PermGroup(5, {t.a1, t.a2}).order();
    for (int step = 0; step < 50; ++step) {
      switch (rng() % 4) {
      case 0: cur = braid_first(cur); break;
      case 1: cur = braid_second(cur); break;
      case 2: cur = braid_first_inverse(cur); break;
      default: cur = braid_second_inverse(cur); break;
      }
      CHECK(cur.is_spherical());
      CHECK(cur.signature() == t.signature());
      CHECK(PermGroup(5, {cur.a1, cur.a2}).order() == order);
    }
    CHECK(braid_first_inverse(braid_first(t)) == t);
    CHECK(braid_second_inverse(braid_second(t)) == t);
  }
}

TEST_CASE("a single triple is its own orbit member in either mode")
{
  const FiniteGroup a5(PermGroup::alternating(5));
  const auto t = enumerate_spherical_ordered(a5, 2, 5, 5).front();
  for (auto mode : {HurwitzMode::braid, HurwitzMode::braid_and_conjugation}) {
    const auto orbits = hurwitz_classes(a5, {t}, mode);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].members == std::vector<std::size_t>{0});
    CHECK(orbits[0].triple_count >= 1);
  }
}

TEST_CASE("parallel and serial enumeration agree")
{
  for (const char *name : {"A5", "S5", "A6"}) {
    const FiniteGroup g(PermGroup::named(name));
    for (auto sig : {make_signature(2, 5, 5), make_signature(3, 4, 5), make_signature(2, 3, 5)})
      CHECK(enumerate_spherical(g, sig) == enumerate_spherical_serial(g, sig));
  }
}
