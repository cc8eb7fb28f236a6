#include "tforge/belyi.hpp"
#include "tforge/error.hpp"

#include <doctest.h>

#include <random>

using namespace tforge;
using namespace tforge::belyi;

namespace {

CriticalLocus locus(std::vector<Rational> rationals, UPoly irrational = UPoly::constant(1), bool inf = false)
{
  CriticalLocus l{std::move(rationals), std::move(irrational), inf};
  l.normalize();
  return l;
}

bool within_belyi_set(const CriticalLocus &l)
{
  if (!l.all_rational())
    return false;
  for (const auto &r : l.rationals)
    if (r != 0 && r != 1)
      return false;
  return true;
}

} // namespace

TEST_CASE("critical values of polynomials")
{
  auto l = critical_values(UPoly({-2, 0, 1}));
  CHECK(l.rationals == std::vector<Rational>{-2});
  CHECK(l.all_rational());
  l = critical_values(UPoly({0, -3, 0, 1}));
  CHECK(l.rationals == std::vector<Rational>{-2, 2});
  l = critical_values(UPoly({0, -2, 0, 1}));
  CHECK(l.rationals.empty());
  CHECK(l.irrational_part == UPoly({Rational(-32, 27), 0, 1}));
  CHECK(critical_values(UPoly({5, 1})).rationals.empty());
  CHECK_THROWS_AS(critical_values(UPoly::constant(3)), DomainError);
}

TEST_CASE("push_forward examples")
{
  auto l = push_forward(locus({0, 1}), UPoly({0, 0, 1}));
  CHECK(l.rationals == std::vector<Rational>{0, 1});
  CHECK(l.all_rational());
  l = push_forward(locus({}, UPoly({-2, 0, 1})), UPoly({-2, 0, 1}));
  CHECK(l.rationals == std::vector<Rational>{-2, 0});
  CHECK(l.all_rational());
  l = push_forward(locus({5}, UPoly::constant(1), true), UPoly::identity());
  CHECK(l.rationals == std::vector<Rational>{5});
  CHECK(l.includes_infinity);
  CHECK_THROWS_AS(push_forward(locus({5}), UPoly::constant(2)), DomainError);
}

TEST_CASE("rationalize examples")
{
  const auto trivial = rationalize(locus({1, 2}));
  CHECK(trivial.steps.empty());
  CHECK(trivial.final_locus.rationals == std::vector<Rational>{1, 2});

  const auto sqrt2 = rationalize(locus({}, UPoly({-2, 0, 1})));
  REQUIRE(!sqrt2.steps.empty());
  CHECK(sqrt2.steps[0] == UPoly({-2, 0, 1}));
  CHECK(sqrt2.final_locus.all_rational());
  CHECK(std::count(sqrt2.final_locus.rationals.begin(), sqrt2.final_locus.rationals.end(), Rational(0)) == 1);
  CHECK(std::count(sqrt2.final_locus.rationals.begin(), sqrt2.final_locus.rationals.end(), Rational(-2)) == 1);

  const auto golden = rationalize(locus({}, UPoly({-1, -1, 1})));
  CHECK(golden.steps == std::vector<UPoly>{UPoly({-1, -1, 1})});
  CHECK(golden.final_locus.rationals == std::vector<Rational>{Rational(-5, 4), 0});
}

TEST_CASE("three-point reduction of {0, 1, 2}")
{
  const auto f = three_point_reduce({0, 1, 2});
  CHECK(f.multiplier == 2);
  CHECK(f.exponents == std::vector<Integer>{1, -2, 1});
  CHECK(f.scale == 1);
  CHECK(lagrange_identity_holds(f));
  const auto out = verify_chain_from(locus({0, 1, 2}, UPoly::constant(1), true), {f});
  CHECK(out.rationals == std::vector<Rational>{0, 1});
  CHECK(out.includes_infinity);
}

TEST_CASE("three-point reduction with at most two points is affine")
{
  auto f = three_point_reduce({0, 1});
  CHECK(f.affine());
  auto out = verify_chain_from(locus({0, 1}), {f});
  CHECK(out.rationals == std::vector<Rational>{0, 1});
  f = three_point_reduce({3});
  CHECK(f.affine());
  out = verify_chain_from(locus({3}), {f});
  CHECK(out.rationals == std::vector<Rational>{0});
  CHECK_THROWS_AS(three_point_reduce({1, 1, 2}), DomainError);
  CHECK_THROWS_AS(three_point_reduce({}), DomainError);
}

TEST_CASE("belyi_for_curve with a = sqrt 2")
{
  const curves::CurveSpec spec{3, curves::AlgebraicParameter{UPoly({-2, 0, 1}), 0}};
  const auto after = push_forward(source_locus(spec), UPoly({-2, 0, 1}));
  CHECK(after.all_rational());
  CHECK(after.rationals == std::vector<Rational>{-2, -1, 0, 2, 7, 14, 23, 34});
  const auto chain = belyi_for_curve(spec);
  REQUIRE(chain.steps.size() >= 2);
  CHECK(std::get<UPoly>(chain.steps[0]) == UPoly({-2, 0, 1}));
  CHECK(within_belyi_set(verify_belyi(chain)));
}

TEST_CASE("belyi_for_curve with rational a")
{
  const curves::CurveSpec spec{3, Rational(1, 2)};
  const auto chain = belyi_for_curve(spec);
  REQUIRE(chain.steps.size() == 2);
  CHECK(std::get<UPoly>(chain.steps[0]) == UPoly::identity());
  const auto &f = std::get<FactoredMap>(chain.steps[1]);
  CHECK(f.roots.size() == 8);
  CHECK(within_belyi_set(verify_belyi(chain)));
  CHECK_THROWS_AS(belyi_for_curve({3, Rational(0)}), DomainError);
}

TEST_CASE("a tampered factored map fails verification")
{
  auto chain = belyi_for_curve({3, Rational(1, 2)});
  auto &f = std::get<FactoredMap>(chain.steps.back());
  f.exponents[0] += 1;
  f.exponents[1] -= 1;
  CHECK_FALSE(lagrange_identity_holds(f));
  CHECK_THROWS_WITH_AS(verify_belyi(chain), "Lagrange identity violated", DomainError);
}

TEST_CASE("identity chain leaves the source locus unchanged")
{
  const curves::CurveSpec spec{3, Rational(1, 2)};
  CriticalLocus start = source_locus(spec);
  const auto out = verify_chain_from(start, {UPoly::identity()});
  CHECK(out.rationals == start.rationals);
  CHECK(out.includes_infinity);
}

TEST_CASE("exponents sum to zero and the Lagrange identity holds on random sets")
{
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 6), size(3, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> r;
    while (r.size() < static_cast<std::size_t>(size(rng))) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      if (std::find(r.begin(), r.end(), v) == r.end())
        r.push_back(v);
    }
    const auto f = three_point_reduce(r);
    Integer total = 0;
    for (const auto &m : f.exponents)
      total += m;
    CHECK(total == 0);
    CHECK(lagrange_identity_holds(f));
  }
}

TEST_CASE("random quadratic and cubic parameters give Belyi chains")
{
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> coef(-10, 10), deg(2, 3);
  int done = 0;
  while (done < 10) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto &x : c)
      x = coef(rng);
    c.back() = 1;
    const UPoly p(c);
    if (!rational_roots(p).roots.empty())
      continue;
    const auto chain = belyi_for_curve({3, curves::AlgebraicParameter{p, 0}});
    CHECK(within_belyi_set(verify_belyi(chain)));
    ++done;
  }
}
