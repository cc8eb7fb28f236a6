#pragma once

#include "tforge/mpoly.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace tforge::twocrit {

using Complex = std::complex<double>;

/// Normalized degree-n polynomials P with P = prod (z - beta_i)^{m_i} and
/// P - 1 = prod (z - gamma_k)^{n_k}. Variables are beta_1..beta_r, gamma_1..gamma_s.
struct CritSystem
{
  unsigned n = 0;
  std::vector<unsigned> mu, nu;
  /// F_1 = sum m_i beta_i, F_2 = sum n_k gamma_k, then the coefficients of
  /// z^0 .. z^{n-2} in prod (z - beta)^m - 1 - prod (z - gamma)^n.
  std::vector<MPoly> equations;

  std::size_t variable_count() const { return mu.size() + nu.size(); }
  std::vector<std::string> variable_names() const;
};

/// Throws DomainError unless mu and nu are partitions of n with r + s = n + 1.
CritSystem build_system(unsigned n, std::vector<unsigned> mu, std::vector<unsigned> nu);

struct NumericSolution
{
  std::vector<Complex> beta, gamma;
  double residual = 0;               ///< max |F_j|
  double critical_value_error = 0;   ///< max over roots of P' of the distance of P to {0, 1}
  bool is_real = false;
  std::vector<Complex> coefficients; ///< a_0 .. a_{n-2}
};

struct SolveOptions
{
  unsigned attempts = 1024;
  double tol = 1e-12;
  double cluster_threshold = 1e-8;
  /// Imaginary parts of the coefficients below this count as real.
  double real_threshold = 1e-8;
  /// Standard deviation of the complex Gaussian starts; 0 selects n.
  double start_scale = 1;
  std::uint64_t seed = 1;
  unsigned max_iterations = 200;
};

struct SolveResult
{
  std::vector<NumericSolution> solutions;  ///< one per cluster, sorted
  std::size_t converged_starts = 0;
  /// Index into `solutions` of one member per orbit of the n-th roots of unity.
  std::vector<std::size_t> orbit_representatives;
  std::string diagnostic;
};

/// Damped Newton from seeded random starts, clustered in coefficient space and
/// verified through the critical values. Parallel over starts; start k draws
/// from its own generator, so the output does not depend on the thread count.
SolveResult solve_numeric(const CritSystem &sys, const SolveOptions &opt = {});
/// Serial reference.
SolveResult solve_numeric_serial(const CritSystem &sys, const SolveOptions &opt = {});

/// max |F_j| at the given variables.
double residual(const CritSystem &sys, const std::vector<Complex> &beta, const std::vector<Complex> &gamma);

/// Expands prod (z - beta)^m into monic coefficients, constant term first.
std::vector<Complex> expand(const std::vector<Complex> &roots, const std::vector<unsigned> &mult);

/// Distance of the critical values of the monic polynomial with coefficients
/// `monic` (constant first, leading 1 included) to {0, 1}.
double critical_value_error(const std::vector<Complex> &monic);

/// The solutions for P(zeta z), zeta^n = 1, distinct up to `threshold`.
std::vector<NumericSolution> unity_orbit(const NumericSolution &sol, unsigned n, double threshold = 1e-8);

/// Completes a solution's derived fields from its roots.
NumericSolution make_solution(const CritSystem &sys, std::vector<Complex> beta, std::vector<Complex> gamma,
                              double real_threshold);

} // namespace tforge::twocrit
