#include "tforge/error.hpp"
#include "tforge/special_curves.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tforge;
using namespace tforge::curves;

namespace {

bool carries(const MobiusMap &m, const BranchSet &from, const BranchSet &to)
{
  std::vector<ProjPoint> images;
  for (const auto &p : from.points)
    images.push_back(m(p));
  std::sort(images.begin(), images.end());
  return images == to.points;
}

bool a_valid(const Rational &a)
{
  try {
    CurveSpec{6, a}.validate();
    return true;
  } catch (const DomainError &) {
    return false;
  }
}

ProjPoint fin(Rational v) { return ProjPoint::finite(std::move(v)); }

} // namespace

TEST_CASE("branch set examples")
{
  const BranchSet b = branch_set(3, Rational(1, 2));
  CHECK(b.size() == 9);
  for (int v : {-6, 0, 1, 2, 3, 4, 5})
    CHECK(b.contains(fin(v)));
  CHECK(b.contains(fin(Rational(1, 2))));
  CHECK(b.contains(ProjPoint::infinity()));
  CHECK_THROWS_AS(branch_set(3, Rational(-6)), DomainError);
  const BranchSet c = branch_set(6, Rational(23));
  CHECK(c.size() == 15);
  CHECK(c.contains(fin(-12)));
  CHECK(c.contains(fin(23)));
}

TEST_CASE("curve spec validation")
{
  CurveSpec s{3, Rational(0)};
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = CurveSpec{2, Rational(1, 2)};
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = CurveSpec{3, AlgebraicParameter{UPoly({-2, 0, 1}), 0}};
  CHECK_NOTHROW(s.validate());
  s = CurveSpec{3, AlgebraicParameter{UPoly({-1, 0, 1}), 0}};
  CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("self-equivalences form the stabilizer group")
{
  const BranchSet b = branch_set(3, Rational(1, 2));
  const auto maps = mobius_equivalences(b, b);
  CHECK(std::find(maps.begin(), maps.end(), MobiusMap::identity()) != maps.end());
  for (const auto &m : maps) {
    CHECK(carries(m, b, b));
    CHECK(std::find(maps.begin(), maps.end(), m.inverse()) != maps.end());
    for (const auto &n : maps)
      CHECK(std::find(maps.begin(), maps.end(), m.after(n)) != maps.end());
  }
}

TEST_CASE("the reflection x -> -x + 2g - 1 when a = 4g - 1")
{
  for (int g : {3, 6}) {
    const BranchSet b = branch_set(g, Rational(4 * g - 1));
    const MobiusMap reflection(-1, 2 * g - 1, 0, 1);
    CHECK(carries(reflection, b, b));
    const auto maps = mobius_equivalences(b.affine_part(), b.affine_part());
    CHECK(std::find(maps.begin(), maps.end(), reflection) != maps.end());
    CHECK(compare_curves(g, Rational(4 * g - 1), Rational(4 * g - 1)).affine_equivalences.size() >= 2);
  }
}

TEST_CASE("inequivalent branch sets")
{
  CHECK(mobius_equivalences(branch_set(6, Rational(100)), branch_set(6, Rational(101))).empty());
  const auto small = BranchSet::from({fin(0), fin(1)});
  CHECK(mobius_equivalences(small, branch_set(3, Rational(1, 2))).empty());
}

TEST_CASE("curves_isomorphic examples")
{
  CHECK(curves_isomorphic(6, Rational(7, 3), Rational(7, 3)));
  CHECK_FALSE(curves_isomorphic(6, Rational(7, 3), Rational(8, 3)));
  CHECK_FALSE(curves_isomorphic(6, Rational(23), Rational(-25)));
  CHECK_THROWS_AS(curves_isomorphic(5, Rational(7, 3), Rational(7, 3)), DomainError);
}

TEST_CASE("every returned map carries the sets, both with and without infinity")
{
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
  for (int trial = 0; trial < 20; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (trial % 2 == 1)
      b = a;
    if (!a_valid(a) || !a_valid(b))
      continue;
    const BranchSet ba = branch_set(6, a), bb = branch_set(6, b);
    const auto rep = compare_curves(6, a, b);
    for (const auto &m : rep.affine_equivalences)
      CHECK(carries(m, ba.affine_part(), bb.affine_part()));
    for (const auto &m : rep.marked_equivalences)
      CHECK(carries(m, ba, bb));
  }
}

TEST_CASE("parallel and serial triple searches agree")
{
  const BranchSet b = branch_set(4, Rational(15));
  CHECK(mobius_equivalences(b, b) == mobius_equivalences_serial(b, b));
  CHECK(mobius_equivalences(b.affine_part(), b.affine_part()) ==
        mobius_equivalences_serial(b.affine_part(), b.affine_part()));
}
