#include "tforge/twocrit.hpp"

#include "tforge/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>

namespace tforge::twocrit {

std::vector<std::string> CritSystem::variable_names() const
{
  std::vector<std::string> names;
  for (std::size_t i = 0; i < mu.size(); ++i)
    names.push_back("b" + std::to_string(i + 1));
  for (std::size_t k = 0; k < nu.size(); ++k)
    names.push_back("g" + std::to_string(k + 1));
  return names;
}

namespace {

void check_partition(unsigned n, const std::vector<unsigned> &p)
{
  if (p.empty() || std::accumulate(p.begin(), p.end(), 0u) != n ||
      std::find(p.begin(), p.end(), 0u) != p.end())
    throw DomainError("not a partition of n");
}

/// prod (z - x_i)^{m_i} with x_i = variable offset + i, as coefficients in z.
std::vector<MPoly> product_form(std::size_t nvars, std::size_t offset, const std::vector<unsigned> &mult)
{
  std::vector<MPoly> poly{MPoly::constant(nvars, 1)};
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const MPoly root = MPoly::variable(nvars, offset + i);
    for (unsigned e = 0; e < mult[i]; ++e) {
      std::vector<MPoly> next(poly.size() + 1, MPoly(nvars));
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] = next[j + 1] + poly[j];
        next[j] = next[j] - poly[j] * root;
      }
      poly = std::move(next);
    }
  }
  return poly;
}

} // namespace

CritSystem build_system(unsigned n, std::vector<unsigned> mu, std::vector<unsigned> nu)
{
  check_partition(n, mu);
  check_partition(n, nu);
  if (mu.size() + nu.size() != n + 1)
    throw DomainError("type count violates Riemann–Hurwitz for polynomials");
  CritSystem sys{n, std::move(mu), std::move(nu), {}};
  const std::size_t nv = sys.variable_count(), r = sys.mu.size();
  MPoly f1(nv), f2(nv);
  for (std::size_t i = 0; i < r; ++i)
    f1 = f1 + MPoly::variable(nv, i) * Integer(sys.mu[i]);
  for (std::size_t k = 0; k < sys.nu.size(); ++k)
    f2 = f2 + MPoly::variable(nv, r + k) * Integer(sys.nu[k]);
  sys.equations = {f1, f2};
  const auto a = product_form(nv, 0, sys.mu);
  const auto b = product_form(nv, r, sys.nu);
  for (unsigned j = 0; j + 1 < n; ++j) {
    MPoly f = a[j] - b[j];
    if (j == 0)
      f = f - MPoly::constant(nv, 1);
    sys.equations.push_back(f);
  }
  return sys;
}

std::vector<Complex> expand(const std::vector<Complex> &roots, const std::vector<unsigned> &mult)
{
  std::vector<Complex> poly{1.0};
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (unsigned e = 0; e < mult[i]; ++e) {
      std::vector<Complex> next(poly.size() + 1, 0.0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] += poly[j];
        next[j] -= poly[j] * roots[i];
      }
      poly = std::move(next);
    }
  return poly;
}

double critical_value_error(const std::vector<Complex> &monic)
{
  const std::size_t n = monic.size() - 1;
  if (n < 2)
    return 0;
  // Companion matrix of P'/n.
  const std::size_t d = n - 1;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(static_cast<long>(d), static_cast<long>(d));
  for (std::size_t i = 1; i < d; ++i)
    c(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
  for (std::size_t j = 0; j < d; ++j)
    c(static_cast<long>(j), static_cast<long>(d - 1)) =
      -monic[j + 1] * static_cast<double>(j + 1) / static_cast<double>(n);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  double worst = 0;
  for (long k = 0; k < es.eigenvalues().size(); ++k) {
    const Complex z = es.eigenvalues()(k);
    Complex v = 0;
    for (std::size_t j = monic.size(); j-- > 0;)
      v = v * z + monic[j];
    worst = std::max(worst, std::min(std::abs(v), std::abs(v - 1.0)));
  }
  return worst;
}

namespace {

/// Equations and Jacobian entries flattened for fast complex evaluation.
class CompiledSystem
{
public:
  explicit CompiledSystem(const CritSystem &sys) : nv_(sys.variable_count())
  {
    for (const auto &f : sys.equations) {
      eqs_.push_back(compile(f));
      for (std::size_t v = 0; v < nv_; ++v)
        jac_.push_back(compile(f.derivative(v)));
    }
  }

  Eigen::VectorXcd value(const Eigen::VectorXcd &x) const
  {
    Eigen::VectorXcd f(static_cast<long>(eqs_.size()));
    for (std::size_t i = 0; i < eqs_.size(); ++i)
      f(static_cast<long>(i)) = eval(eqs_[i], x);
    return f;
  }

  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd &x) const
  {
    Eigen::MatrixXcd j(static_cast<long>(eqs_.size()), static_cast<long>(nv_));
    for (std::size_t i = 0; i < eqs_.size(); ++i)
      for (std::size_t v = 0; v < nv_; ++v)
        j(static_cast<long>(i), static_cast<long>(v)) = eval(jac_[i * nv_ + v], x);
    return j;
  }

private:
  struct Term
  {
    double coef;
    std::vector<std::pair<unsigned, unsigned>> powers;
  };
  using Poly = std::vector<Term>;

  static Poly compile(const MPoly &p)
  {
    Poly out;
    for (const auto &[m, c] : p.terms()) {
      Term t{c.get_d(), {}};
      for (unsigned v = 0; v < m.size(); ++v)
        if (m[v])
          t.powers.emplace_back(v, m[v]);
      out.push_back(std::move(t));
    }
    return out;
  }

  static Complex eval(const Poly &p, const Eigen::VectorXcd &x)
  {
    Complex s = 0;
    for (const auto &t : p) {
      Complex v = t.coef;
      for (auto [var, e] : t.powers)
        for (unsigned k = 0; k < e; ++k)
          v *= x(var);
      s += v;
    }
    return s;
  }

  std::size_t nv_;
  std::vector<Poly> eqs_, jac_;
};

/// P' = n prod (z - rho_j)^{e_j} over the ramified roots of P and P - 1, and
/// P = integral of P' + c. Unknowns (rho, c); equations P(rho_j) = target_j
/// (0 over a root of P, 1 over a root of P - 1) and sum e_j rho_j = 0, which
/// is the vanishing z^{n-1} coefficient. The unramified roots are not
/// unknowns here, so they cannot collide during the iteration.
class CriticalPointSystem
{
public:
  explicit CriticalPointSystem(const CritSystem &sys) : n_(sys.n)
  {
    for (auto m : sys.mu)
      if (m >= 2) {
        exps_.push_back(m - 1);
        targets_.push_back(0.0);
      }
    for (auto k : sys.nu)
      if (k >= 2) {
        exps_.push_back(k - 1);
        targets_.push_back(1.0);
      }
  }

  std::size_t ramified() const { return exps_.size(); }
  /// Whether ramified roots i and j lie over the same critical value.
  bool same_fibre(std::size_t i, std::size_t j) const { return targets_[i] == targets_[j]; }

  /// Monic coefficients of P, constant first.
  std::vector<Complex> polynomial(const Eigen::VectorXcd &x) const
  {
    return integrate(derivative_of(x, exps_), x(static_cast<long>(ramified())));
  }

  Eigen::VectorXcd value(const Eigen::VectorXcd &x) const
  {
    const auto q = static_cast<long>(ramified());
    const auto p = polynomial(x);
    Eigen::VectorXcd f(q + 1);
    Complex sum = 0;
    for (long j = 0; j < q; ++j) {
      f(j) = horner(p, x(j)) - targets_[static_cast<std::size_t>(j)];
      sum += static_cast<double>(exps_[static_cast<std::size_t>(j)]) * x(j);
    }
    f(q) = sum;
    return f;
  }

  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd &x) const
  {
    const auto q = static_cast<long>(ramified());
    Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(q + 1, q + 1);
    for (long k = 0; k < q; ++k) {
      // d/d rho_k of P' is -e_k P' / (z - rho_k); P'(rho_j) = 0 removes the chain-rule term.
      auto e = exps_;
      --e[static_cast<std::size_t>(k)];
      auto dp = derivative_of(x, e);
      for (auto &c : dp)
        c *= -static_cast<double>(exps_[static_cast<std::size_t>(k)]);
      const auto ip = integrate(dp, 0.0);
      for (long j = 0; j < q; ++j)
        jac(j, k) = horner(ip, x(j));
      jac(q, k) = static_cast<double>(exps_[static_cast<std::size_t>(k)]);
    }
    for (long j = 0; j < q; ++j)
      jac(j, q) = 1.0;
    return jac;
  }

private:
  std::vector<Complex> derivative_of(const Eigen::VectorXcd &x, const std::vector<unsigned> &e) const
  {
    std::vector<Complex> rho(x.data(), x.data() + ramified());
    auto d = expand(rho, e);
    for (auto &c : d)
      c *= static_cast<double>(n_);
    return d;
  }

  static std::vector<Complex> integrate(const std::vector<Complex> &d, Complex c)
  {
    std::vector<Complex> p(d.size() + 1);
    p[0] = c;
    for (std::size_t j = 0; j < d.size(); ++j)
      p[j + 1] = d[j] / static_cast<double>(j + 1);
    return p;
  }

  static Complex horner(const std::vector<Complex> &p, Complex z)
  {
    Complex v = 0;
    for (std::size_t j = p.size(); j-- > 0;)
      v = v * z + p[j];
    return v;
  }

  unsigned n_;
  std::vector<unsigned> exps_;
  std::vector<Complex> targets_;
};

/// Damped Newton (backtracking on the Euclidean residual); returns the point
/// once max |F| < tol, or when progress stalls within 100 tol (the rounding
/// floor of the larger systems).
template <class System>
std::optional<Eigen::VectorXcd> newton(const System &sys, Eigen::VectorXcd x, double tol, unsigned max_iterations)
{
  Eigen::VectorXcd f = sys.value(x);
  double norm = f.norm();
  for (unsigned it = 0; it < max_iterations; ++it) {
    if (f.cwiseAbs().maxCoeff() < tol)
      break;
    const auto lu = sys.jacobian(x).fullPivLu();
    const Eigen::VectorXcd step = lu.solve(f);
    double lambda = 1.0;
    bool moved = false;
    for (int k = 0; k < 40 && step.allFinite(); ++k, lambda /= 2) {
      Eigen::VectorXcd y = x - lambda * step;
      Eigen::VectorXcd fy = sys.value(y);
      const double ny = fy.norm();
      if (std::isfinite(ny) && ny < norm) {
        x = std::move(y);
        f = std::move(fy);
        norm = ny;
        moved = true;
        break;
      }
    }
    if (!moved)
      break;
    if (x.cwiseAbs().maxCoeff() > 1e6)
      return std::nullopt;
  }
  // Two more full steps polish the last digits; each is kept only if it helps.
  for (int k = 0; k < 2 && f.norm() > 0; ++k) {
    Eigen::VectorXcd y = x - sys.jacobian(x).fullPivLu().solve(f);
    Eigen::VectorXcd fy = sys.value(y);
    if (!(fy.norm() < norm))
      break;
    x = std::move(y);
    f = std::move(fy);
    norm = f.norm();
  }
  if (f.cwiseAbs().maxCoeff() < 100 * tol)
    return x;
  return std::nullopt;
}

/// Newton on G = F w for the critical-point system, w = prod 1/(rho_i - rho_j)
/// over ramified roots in the same fibre. G keeps the zeros of F with distinct
/// ramified roots and blows up where they merge, which repels the iteration
/// from the degenerate solutions of F. With g = grad log w the step solves
/// (J + F g^T) d = F; progress is measured by |G|.
std::optional<Eigen::VectorXcd> deflated_newton(const CriticalPointSystem &sys, Eigen::VectorXcd x, double tol,
                                                unsigned max_iterations)
{
  const auto q = sys.ramified();
  auto log_merit = [&](const Eigen::VectorXcd &f, const Eigen::VectorXcd &y) {
    double s = std::log(f.norm());
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = i + 1; j < q; ++j)
        if (sys.same_fibre(i, j))
          s -= std::log(std::abs(y(static_cast<long>(i)) - y(static_cast<long>(j))));
    return s;
  };
  Eigen::VectorXcd f = sys.value(x);
  double merit = log_merit(f, x);
  for (unsigned it = 0; it < max_iterations; ++it) {
    if (f.cwiseAbs().maxCoeff() < tol)
      return x;
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(x.size());
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j)
        if (i != j && sys.same_fibre(i, j))
          g(static_cast<long>(i)) -= 1.0 / (x(static_cast<long>(i)) - x(static_cast<long>(j)));
    const Eigen::MatrixXcd jg = sys.jacobian(x) + f * g.transpose();
    const Eigen::VectorXcd step = jg.fullPivLu().solve(f);
    double lambda = 1.0;
    bool moved = false;
    for (int k = 0; k < 40 && step.allFinite(); ++k, lambda /= 2) {
      Eigen::VectorXcd y = x - lambda * step;
      Eigen::VectorXcd fy = sys.value(y);
      const double my = log_merit(fy, y);
      if (std::isfinite(my) && my < merit) {
        x = std::move(y);
        f = std::move(fy);
        merit = my;
        moved = true;
        break;
      }
    }
    if (!moved || x.cwiseAbs().maxCoeff() > 1e6)
      break;
  }
  if (f.cwiseAbs().maxCoeff() < 100 * tol)
    return x;
  return std::nullopt;
}

/// Roots of a monic polynomial (constant first) as companion eigenvalues.
std::vector<Complex> polynomial_roots(const std::vector<Complex> &monic)
{
  const long d = static_cast<long>(monic.size()) - 1;
  if (d <= 0)
    return {};
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  for (long i = 1; i < d; ++i)
    c(i, i - 1) = 1.0;
  for (long j = 0; j < d; ++j)
    c(j, d - 1) = -monic[static_cast<std::size_t>(j)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  return {es.eigenvalues().data(), es.eigenvalues().data() + d};
}

/// p / prod (z - roots_i)^{mult_i} by synthetic division, remainder dropped.
std::vector<Complex> divide_out(std::vector<Complex> p, const std::vector<Complex> &roots,
                                const std::vector<unsigned> &mult)
{
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (unsigned e = 0; e < mult[i]; ++e) {
      std::vector<Complex> q(p.size() - 1);
      Complex carry = 0;
      for (std::size_t j = p.size(); j-- > 1;) {
        carry = p[j] + carry * roots[i];
        q[j - 1] = carry;
      }
      p = std::move(q);
    }
  return p;
}

/// Fills the full variable vector (beta then gamma, in the order of mu and nu)
/// from the ramified roots and P.
Eigen::VectorXcd full_point(const CritSystem &sys, const Eigen::VectorXcd &x, std::vector<Complex> p)
{
  std::vector<Complex> ram_beta, ram_gamma;
  std::vector<unsigned> mult_beta, mult_gamma;
  long j = 0;
  for (auto m : sys.mu)
    if (m >= 2) {
      ram_beta.push_back(x(j++));
      mult_beta.push_back(m);
    }
  for (auto k : sys.nu)
    if (k >= 2) {
      ram_gamma.push_back(x(j++));
      mult_gamma.push_back(k);
    }
  const auto simple_beta = polynomial_roots(divide_out(p, ram_beta, mult_beta));
  p[0] -= 1.0;
  const auto simple_gamma = polynomial_roots(divide_out(p, ram_gamma, mult_gamma));

  Eigen::VectorXcd out(static_cast<long>(sys.variable_count()));
  long pos = 0;
  std::size_t rb = 0, sb = 0, rg = 0, sg = 0;
  for (auto m : sys.mu)
    out(pos++) = m >= 2 ? ram_beta[rb++] : simple_beta.at(sb++);
  for (auto k : sys.nu)
    out(pos++) = k >= 2 ? ram_gamma[rg++] : simple_gamma.at(sg++);
  return out;
}

/// Sorts roots of equal multiplicity by (real, imaginary) part.
void canonical_order(std::vector<Complex> &roots, const std::vector<unsigned> &mult)
{
  std::size_t i = 0;
  while (i < roots.size()) {
    std::size_t j = i;
    while (j < roots.size() && mult[j] == mult[i])
      ++j;
    std::sort(roots.begin() + static_cast<long>(i), roots.begin() + static_cast<long>(j),
              [](const Complex &a, const Complex &b) {
                return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
              });
    i = j;
  }
}

double min_separation(const std::vector<Complex> &roots)
{
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      d = std::min(d, std::abs(roots[i] - roots[j]));
  return d;
}

double distance(const std::vector<Complex> &a, const std::vector<Complex> &b)
{
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool coefficient_less(const NumericSolution &a, const NumericSolution &b)
{
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    if (a.coefficients[i].real() != b.coefficients[i].real())
      return a.coefficients[i].real() < b.coefficients[i].real();
    if (a.coefficients[i].imag() != b.coefficients[i].imag())
      return a.coefficients[i].imag() < b.coefficients[i].imag();
  }
  return false;
}

std::optional<NumericSolution> attempt(const CritSystem &sys, const CompiledSystem &cs,
                                       const CriticalPointSystem &cp, const SolveOptions &opt, unsigned index)
{
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32), index};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, opt.start_scale > 0 ? opt.start_scale : double(sys.n));
  Eigen::VectorXcd x(static_cast<long>(cp.ramified()) + 1);
  // Odd starts are real: Newton keeps them real, which aims them at the real solutions.
  const bool real_start = index % 2 == 1;
  for (long i = 0; i < x.size(); ++i) {
    const double re = gauss(rng), im = gauss(rng);
    x(i) = Complex(re, real_start ? 0.0 : im);
  }
  auto crit = deflated_newton(cp, std::move(x), opt.tol, opt.max_iterations);
  if (!crit)
    return std::nullopt;
  // The recovered point is refined and judged on the full system.
  auto root = newton(cs, full_point(sys, *crit, cp.polynomial(*crit)), opt.tol, opt.max_iterations);
  if (!root)
    return std::nullopt;
  const std::size_t r = sys.mu.size();
  std::vector<Complex> beta(root->data(), root->data() + r);
  std::vector<Complex> gamma(root->data() + r, root->data() + root->size());
  // Coalesced roots describe a different ramification type.
  if (min_separation(beta) < 1e-6 || min_separation(gamma) < 1e-6)
    return std::nullopt;
  auto sol = make_solution(sys, std::move(beta), std::move(gamma), opt.real_threshold);
  if (sol.residual >= opt.tol * 100 || sol.critical_value_error >= opt.tol * 100)
    return std::nullopt;
  return sol;
}

SolveResult collect(const CritSystem &sys, std::vector<std::optional<NumericSolution>> found, const SolveOptions &opt)
{
  SolveResult res;
  for (auto &f : found) {
    if (!f)
      continue;
    ++res.converged_starts;
    bool merged = false;
    for (auto &s : res.solutions)
      if (distance(s.coefficients, f->coefficients) < opt.cluster_threshold) {
        if (f->residual < s.residual)
          s = *f;
        merged = true;
        break;
      }
    if (!merged)
      res.solutions.push_back(std::move(*f));
  }
  std::sort(res.solutions.begin(), res.solutions.end(), coefficient_less);

  // One representative per orbit, a real member when the orbit has one.
  std::vector<bool> assigned(res.solutions.size(), false);
  for (std::size_t i = 0; i < res.solutions.size(); ++i) {
    if (assigned[i])
      continue;
    std::size_t rep = i;
    for (const auto &o : unity_orbit(res.solutions[i], sys.n, opt.cluster_threshold))
      for (std::size_t j = i; j < res.solutions.size(); ++j)
        if (!assigned[j] && distance(o.coefficients, res.solutions[j].coefficients) < opt.cluster_threshold) {
          assigned[j] = true;
          if (res.solutions[j].is_real && !res.solutions[rep].is_real)
            rep = j;
        }
    res.orbit_representatives.push_back(rep);
  }
  if (res.solutions.empty())
    res.diagnostic = "no start converged in " + std::to_string(opt.attempts) + " attempts";
  return res;
}

} // namespace

double residual(const CritSystem &sys, const std::vector<Complex> &beta, const std::vector<Complex> &gamma)
{
  std::vector<Complex> x = beta;
  x.insert(x.end(), gamma.begin(), gamma.end());
  double worst = 0;
  for (const auto &f : sys.equations)
    worst = std::max(worst, std::abs(f.evaluate(x)));
  return worst;
}

NumericSolution make_solution(const CritSystem &sys, std::vector<Complex> beta, std::vector<Complex> gamma,
                              double real_threshold)
{
  canonical_order(beta, sys.mu);
  canonical_order(gamma, sys.nu);
  NumericSolution s;
  s.residual = residual(sys, beta, gamma);
  const auto monic = expand(beta, sys.mu);
  s.critical_value_error = critical_value_error(monic);
  s.coefficients.assign(monic.begin(), monic.begin() + static_cast<long>(sys.n) - 1);
  s.is_real = std::all_of(s.coefficients.begin(), s.coefficients.end(),
                          [&](const Complex &c) { return std::abs(c.imag()) < real_threshold; });
  s.beta = std::move(beta);
  s.gamma = std::move(gamma);
  return s;
}

std::vector<NumericSolution> unity_orbit(const NumericSolution &sol, unsigned n, double threshold)
{
  // P(zeta z) has roots beta / zeta; the multiplicities ride along unchanged.
  std::vector<NumericSolution> orbit;
  for (unsigned k = 0; k < n; ++k) {
    const Complex zeta = std::polar(1.0, 2 * std::numbers::pi * k / n);
    NumericSolution s = sol;
    for (auto &b : s.beta)
      b /= zeta;
    for (auto &g : s.gamma)
      g /= zeta;
    // a_j -> zeta^j a_j
    for (std::size_t j = 0; j < s.coefficients.size(); ++j)
      s.coefficients[j] = sol.coefficients[j] * std::pow(zeta, static_cast<int>(j));
    s.is_real = std::all_of(s.coefficients.begin(), s.coefficients.end(),
                            [&](const Complex &c) { return std::abs(c.imag()) < threshold; });
    const bool seen = std::any_of(orbit.begin(), orbit.end(), [&](const NumericSolution &o) {
      return distance(o.coefficients, s.coefficients) < threshold;
    });
    if (!seen)
      orbit.push_back(std::move(s));
  }
  return orbit;
}

SolveResult solve_numeric(const CritSystem &sys, const SolveOptions &opt)
{
  if (!(opt.tol > 0))
    throw std::invalid_argument("tolerance must be positive");
  const CompiledSystem cs(sys);
  const CriticalPointSystem cp(sys);
  std::vector<std::optional<NumericSolution>> found(opt.attempts);
  const long n = static_cast<long>(opt.attempts);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i)
    found[static_cast<std::size_t>(i)] = attempt(sys, cs, cp, opt, static_cast<unsigned>(i));
  return collect(sys, std::move(found), opt);
}

SolveResult solve_numeric_serial(const CritSystem &sys, const SolveOptions &opt)
{
  if (!(opt.tol > 0))
    throw std::invalid_argument("tolerance must be positive");
  const CompiledSystem cs(sys);
  const CriticalPointSystem cp(sys);
  std::vector<std::optional<NumericSolution>> found(opt.attempts);
  for (unsigned i = 0; i < opt.attempts; ++i)
    found[i] = attempt(sys, cs, cp, opt, i);
  return collect(sys, std::move(found), opt);
}

} // namespace tforge::twocrit
