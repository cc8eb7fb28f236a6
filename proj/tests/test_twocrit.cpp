#include "tforge/error.hpp"
#include "tforge/twocrit.hpp"

#include <doctest.h>

#include <cmath>

using namespace tforge;
using namespace tforge::twocrit;

namespace {

// P(z) at z from the normalized coefficients a_0..a_{n-2}.
Complex evaluate_normalized(const std::vector<Complex> &a, unsigned n, Complex z)
{
  Complex v = std::pow(z, static_cast<int>(n));
  for (std::size_t k = 0; k < a.size(); ++k)
    v += a[k] * std::pow(z, static_cast<int>(k));
  return v;
}

double distance_to_01(Complex v) { return std::min(std::abs(v), std::abs(v - 1.0)); }

} // namespace

TEST_CASE("the degree 2 system")
{
  const auto sys = build_system(2, {2}, {1, 1});
  CHECK(sys.variable_count() == 3);
  REQUIRE(sys.equations.size() == 3);
  const auto names = sys.variable_names();
  CHECK(sys.equations[0].to_string(names) == "2*b1");
  CHECK(sys.equations[1].to_string(names) == "g1 + g2");
  // z^2 coefficients: b1^2 - 1 - g1 g2 and -2 b1 + g1 + g2.
  CHECK(sys.equations[2].evaluate(std::vector<Integer>{0, 1, -1}) == 0);
  CHECK(sys.equations[2].evaluate(std::vector<Integer>{0, 1, 1}) != 0);
}

TEST_CASE("system shapes and validation")
{
  const auto sys = build_system(7, {2, 2, 1, 1, 1}, {3, 2, 2});
  CHECK(sys.equations.size() == 8);
  CHECK(sys.variable_count() == 8);
  for (const auto &e : sys.equations)
    CHECK(e.total_degree() <= 7);
  const auto cube = build_system(3, {3}, {1, 1, 1});
  CHECK(cube.equations.size() == 4);
  CHECK_THROWS_AS(build_system(3, {3}, {2, 1}), DomainError);
  CHECK_THROWS_AS(build_system(3, {2, 2}, {1, 1, 1}), DomainError);
}

TEST_CASE("degree 2 solution is z^2")
{
  const auto sys = build_system(2, {2}, {1, 1});
  const auto res = solve_numeric(sys);
  REQUIRE(res.solutions.size() == 1);
  const auto &s = res.solutions[0];
  CHECK(std::abs(s.beta[0]) < 1e-10);
  CHECK(std::abs(std::abs(s.gamma[0]) - 1) < 1e-10);
  CHECK(std::abs(s.gamma[0] + s.gamma[1]) < 1e-10);
  CHECK(std::abs(s.coefficients[0]) < 1e-10);
  CHECK(s.is_real);
  CHECK(unity_orbit(s, 2).size() == 1);
}

TEST_CASE("degree 3 with two simple critical points")
{
  const auto sys = build_system(3, {2, 1}, {2, 1});
  const auto res = solve_numeric(sys);
  REQUIRE(!res.solutions.empty());
  bool found_real = false;
  for (const auto &s : res.solutions) {
    // Independent check: P' = 3 z^2 + a_1 has roots +-sqrt(-a_1 / 3).
    const Complex r = std::sqrt(-s.coefficients[1] / 3.0);
    CHECK(distance_to_01(evaluate_normalized(s.coefficients, 3, r)) < 1e-10);
    CHECK(distance_to_01(evaluate_normalized(s.coefficients, 3, -r)) < 1e-10);
    CHECK(std::abs(evaluate_normalized(s.coefficients, 3, r) - evaluate_normalized(s.coefficients, 3, -r)) > 0.5);
    found_real = found_real || s.is_real;
  }
  CHECK(found_real);
  CHECK(res.orbit_representatives.size() == 1);
}

TEST_CASE("z^3 is the only normalized cube with a single critical value")
{
  const auto res = solve_numeric(build_system(3, {3}, {1, 1, 1}));
  REQUIRE(res.solutions.size() == 1);
  CHECK(std::abs(res.solutions[0].coefficients[0]) < 1e-10);
  CHECK(std::abs(res.solutions[0].coefficients[1]) < 1e-10);
}

TEST_CASE("the degree 7 witness")
{
  const auto sys = build_system(7, {2, 2, 1, 1, 1}, {3, 2, 2});
  const auto res = solve_numeric(sys);
  std::size_t real_orbits = 0;
  for (auto i : res.orbit_representatives)
    real_orbits += res.solutions[i].is_real;
  CHECK(real_orbits >= 2);
  for (const auto &s : res.solutions) {
    CHECK(s.residual < 1e-10);
    CHECK(residual(sys, s.beta, s.gamma) < 1e-10);
    CHECK(s.critical_value_error < 1e-10);
    const auto orbit = unity_orbit(s, 7);
    CHECK((orbit.size() == 1 || orbit.size() == 7));
    for (const auto &o : orbit)
      CHECK(residual(sys, o.beta, o.gamma) < 1e-9);
    // Complex conjugation maps solutions to solutions.
    std::vector<Complex> cb, cg;
    for (auto z : s.beta)
      cb.push_back(std::conj(z));
    for (auto z : s.gamma)
      cg.push_back(std::conj(z));
    CHECK(residual(sys, cb, cg) < 1e-9);
  }
}

TEST_CASE("orbit counts saturate when the attempts double")
{
  const auto sys = build_system(7, {2, 2, 1, 1, 1}, {3, 2, 2});
  SolveOptions opt;
  const auto base = solve_numeric(sys, opt);
  opt.attempts *= 2;
  const auto doubled = solve_numeric(sys, opt);
  CHECK(base.orbit_representatives.size() == doubled.orbit_representatives.size());
}

TEST_CASE("unity orbit sizes divide n")
{
  for (auto [n, mu, nu] : {std::tuple{4u, std::vector<unsigned>{2, 1, 1}, std::vector<unsigned>{2, 2}},
                           std::tuple{5u, std::vector<unsigned>{2, 2, 1}, std::vector<unsigned>{3, 1, 1}},
                           std::tuple{6u, std::vector<unsigned>{3, 1, 1, 1}, std::vector<unsigned>{2, 2, 2}}}) {
    const auto res = solve_numeric(build_system(n, mu, nu));
    CHECK(!res.solutions.empty());
    for (const auto &s : res.solutions)
      CHECK(n % unity_orbit(s, n).size() == 0);
  }
}

TEST_CASE("serial and parallel solvers agree exactly")
{
  const auto sys = build_system(5, {2, 2, 1}, {3, 1, 1});
  SolveOptions opt;
  opt.attempts = 128;
  const auto a = solve_numeric(sys, opt), b = solve_numeric_serial(sys, opt);
  REQUIRE(a.solutions.size() == b.solutions.size());
  CHECK(a.converged_starts == b.converged_starts);
  for (std::size_t i = 0; i < a.solutions.size(); ++i)
    CHECK(a.solutions[i].coefficients == b.solutions[i].coefficients);
}

TEST_CASE("expansion and critical values of a known polynomial")
{
  // (z - 1)^2 (z + 2) = z^3 - 3z + 2, critical values 0 and 4.
  const auto c = expand({1.0, -2.0}, {2, 1});
  REQUIRE(c.size() == 4);
  CHECK(std::abs(c[0] - 2.0) < 1e-14);
  CHECK(std::abs(c[1] + 3.0) < 1e-14);
  CHECK(std::abs(c[2]) < 1e-14);
  CHECK(std::abs(c[3] - 1.0) < 1e-14);
  CHECK(std::abs(critical_value_error(c) - 3.0) < 1e-9);
}
