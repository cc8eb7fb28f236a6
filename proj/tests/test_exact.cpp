#include "tforge/error.hpp"
#include "tforge/upoly.hpp"

#include <doctest.h>

#include <random>

using namespace tforge;

namespace {

// Independent oracle: Sylvester matrix (rows of p first) and its determinant
// by fraction-exact Gaussian elimination.
Rational sylvester_determinant(const UPoly &p, const UPoly &q)
{
  const int m = p.degree(), n = q.degree(), size = m + n;
  if (size == 0)
    return 1;
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      a[r][r + k] = p.coefficient(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      a[n + r][r + k] = q.coefficient(n - k);
  Rational det = 1;
  for (int c = 0; c < size; ++c) {
    int piv = c;
    while (piv < size && a[piv][c] == 0)
      ++piv;
    if (piv == size)
      return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < size; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (int k = c; k < size; ++k)
        a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

UPoly random_poly(std::mt19937_64 &rng, int max_degree, int bound)
{
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-bound, bound);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto &x : c)
    x = coef(rng);
  if (c.back() == 0)
    c.back() = 1;
  return UPoly(c);
}

} // namespace

TEST_CASE("rational canonical form")
{
  const Rational r = parse_rational("6/-4");
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("polynomial text format")
{
  const UPoly p = UPoly::parse("-2,0,1");
  CHECK(p == UPoly({-2, 0, 1}));
  CHECK(p.to_text() == "-2,0,1");
  CHECK(UPoly::parse("1/2,-3/4").coefficient(1) == Rational(-3, 4));
  CHECK(UPoly::parse("0,0").is_zero());
}

TEST_CASE("poly_compose examples")
{
  const UPoly z = UPoly::identity();
  CHECK(poly_compose(UPoly({0, 0, 1}), UPoly({1, 1})) == UPoly({1, 2, 1}));
  const UPoly q({3, -1, 5});
  CHECK(poly_compose(z, q) == q);
  CHECK(poly_compose(UPoly({-2, 0, 1}), UPoly({-2, 0, 1})) == UPoly({2, 0, -4, 0, 1}));
  CHECK(poly_compose(UPoly::constant(4), q) == UPoly::constant(4));
}

TEST_CASE("resultant examples against the Sylvester determinant")
{
  const UPoly a({-1, 1}), b({-2, 1});
  CHECK(resultant(a, b) == -1);
  CHECK(sylvester_determinant(a, b) == -1);
  CHECK(resultant(UPoly({-1, 0, 1}), UPoly({-1, 1})) == 0);
  const UPoly p({1, 0, 1}), q({-1, 0, 1});
  CHECK(sylvester_determinant(p, q) == 4);
  CHECK(resultant(p, q) == 4);
  CHECK_THROWS_AS(resultant(UPoly(), p), std::domain_error);
}

TEST_CASE("resultant equals Sylvester determinant on random pairs")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    UPoly p = random_poly(rng, 5, 6), q = random_poly(rng, 5, 6);
    if (p.is_zero() || q.is_zero())
      continue;
    CHECK(resultant(p, q) == sylvester_determinant(p, q));
  }
}

TEST_CASE("resultant vanishes exactly when the gcd is nonconstant")
{
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    UPoly p = random_poly(rng, 3, 4), q = random_poly(rng, 3, 4);
    if (trial % 3 == 0) {
      const UPoly common = random_poly(rng, 2, 3);
      if (common.degree() >= 1) {
        p = p * common;
        q = q * common;
      }
    }
    if (p.is_zero() || q.is_zero())
      continue;
    CHECK((resultant(p, q) == 0) == (poly_gcd(p, q).degree() >= 1));
  }
}

TEST_CASE("ring axioms on random polynomials")
{
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const UPoly p = random_poly(rng, 6, 9), q = random_poly(rng, 6, 9), r = random_poly(rng, 6, 9);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(poly_compose(p, q)(Rational(3, 7)) == p(q(Rational(3, 7))));
    if (!q.is_zero()) {
      const auto [quo, rem] = p.divmod(q);
      CHECK(quo * q + rem == p);
      CHECK(rem.degree() < q.degree());
    }
  }
}

TEST_CASE("discriminant in the parameter")
{
  CHECK(discriminant_in_parameter(UPoly({0, 0, 1})) == UPoly({0, 1}));
  CHECK(discriminant_in_parameter(UPoly({-2, 0, 1})) == UPoly({2, 1}));
  CHECK(discriminant_in_parameter(UPoly({0, -3, 0, 1})) == UPoly({-4, 0, 1}));
  CHECK_THROWS_AS(discriminant_in_parameter(UPoly({1, 1})), DomainError);
}

TEST_CASE("rational roots of the discriminant are critical values")
{
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    UPoly p = random_poly(rng, 5, 5);
    if (p.degree() < 2)
      continue;
    const UPoly h = discriminant_in_parameter(p);
    CHECK(h.degree() <= p.degree() - 1);
    for (const auto &r : rational_roots(h).roots)
      CHECK(poly_gcd(p - UPoly::constant(r), p.derivative()).degree() >= 1);
  }
}

TEST_CASE("squarefree part")
{
  const UPoly z1({-1, 1});
  CHECK(squarefree_part(z1 * z1) == z1);
  CHECK(squarefree_part(UPoly({-2, 0, 1})) == UPoly({-2, 0, 1}));
  CHECK(squarefree_part(UPoly({0, 0, 0, -1, 1})) == UPoly({0, -1, 1}));
  CHECK_THROWS(squarefree_part(UPoly()));
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const UPoly p = random_poly(rng, 4, 5);
    if (p.is_zero())
      continue;
    CHECK(squarefree_part(p * p) == squarefree_part(p));
  }
}

TEST_CASE("rational roots")
{
  auto s = rational_roots(UPoly({-1, 0, 1}));
  CHECK(s.roots == std::vector<Rational>{-1, 1});
  CHECK(s.cofactor == UPoly::constant(1));
  s = rational_roots(UPoly({-2, 0, 1}));
  CHECK(s.roots.empty());
  CHECK(s.cofactor == UPoly({-2, 0, 1}));
  s = rational_roots(UPoly({2, -4, -1, 2}));
  CHECK(s.roots == std::vector<Rational>{Rational(1, 2)});
  CHECK(s.cofactor == UPoly({-2, 0, 1}));
}

TEST_CASE("rational roots reconstruct the polynomial")
{
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    UPoly p = UPoly::constant(Rational(den(rng), 1)) * random_poly(rng, 2, 4);
    if (p.is_zero())
      continue;
    for (int k = 0; k < 3; ++k)
    {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      p = p * UPoly::linear_factor(r);
    }
    const auto s = rational_roots(p);
    UPoly rebuilt = s.cofactor;
    for (const auto &r : s.roots) {
      CHECK(p(r) == 0);
      UPoly rest = p;
      while (rest(r) == 0) {
        rebuilt = rebuilt * UPoly::linear_factor(r);
        rest = rest / UPoly::linear_factor(r);
      }
    }
    CHECK(rebuilt.monic() == p.monic());
    CHECK(rational_roots(s.cofactor).roots.empty());
  }
}
