#include "tforge/belyi.hpp"

#include "tforge/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace tforge::belyi {

void CriticalLocus::normalize()
{
  std::sort(rationals.begin(), rationals.end());
  rationals.erase(std::unique(rationals.begin(), rationals.end()), rationals.end());
  irrational_part = irrational_part.monic();
}

CriticalLocus critical_values(const UPoly &p)
{
  if (p.degree() < 1)
    throw DomainError("constant map has no critical locus");
  CriticalLocus out;
  if (p.degree() == 1)
    return out;
  auto split = rational_roots(squarefree_part(discriminant_in_parameter(p)));
  out.rationals = std::move(split.roots);
  out.irrational_part = std::move(split.cofactor);
  out.normalize();
  return out;
}

CriticalLocus push_forward(const CriticalLocus &locus, const UPoly &q)
{
  if (q.degree() < 1)
    throw DomainError("constant map has no critical locus");
  CriticalLocus own = critical_values(q);
  CriticalLocus out;
  out.includes_infinity = locus.includes_infinity;
  for (const auto &r : locus.rationals)
    out.rationals.push_back(q(r));
  out.rationals.insert(out.rationals.end(), own.rationals.begin(), own.rationals.end());

  UPoly irrational = own.irrational_part;
  if (locus.irrational_part.degree() >= 1) {
    auto split = rational_roots(squarefree_part(image_polynomial(locus.irrational_part, q)));
    out.rationals.insert(out.rationals.end(), split.roots.begin(), split.roots.end());
    irrational = irrational * split.cofactor;
  }
  out.irrational_part = squarefree_part(irrational);
  out.normalize();
  return out;
}

RationalizeResult rationalize(const CriticalLocus &locus)
{
  RationalizeResult res{{}, locus};
  while (!res.final_locus.all_rational()) {
    const UPoly q = res.final_locus.irrational_part.monic();
    CriticalLocus next = push_forward(res.final_locus, q);
    if (next.irrational_part.degree() >= res.final_locus.irrational_part.degree())
      throw std::logic_error("rationalize: irrational degree did not decrease");
    res.steps.push_back(q);
    res.final_locus = std::move(next);
  }
  return res;
}

FactoredMap three_point_reduce(const std::vector<Rational> &values)
{
  if (values.empty())
    throw DomainError("three-point reduction of an empty set");
  std::vector<Rational> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("repeated points in critical value set");

  FactoredMap map;
  const std::size_t n = values.size();
  if (n <= 2) {
    map.roots = {values[0]};
    map.exponents = {Integer(1)};
    map.scale = n == 2 ? Rational(1 / (values[1] - values[0])) : Rational(1);
    return map;
  }

  std::vector<Rational> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational prod = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i)
        prod *= values[i] - values[j];
    y[i] = 1 / prod;
  }
  map.multiplier = lcm_of_denominators(y);
  map.roots = values;
  Integer total = 0;
  for (const auto &yi : y) {
    Rational m = yi * map.multiplier;
    map.exponents.push_back(m.get_num());
    total += m.get_num();
  }
  if (total != 0)
    throw std::logic_error("three_point_reduce: exponents do not sum to zero");
  // Every factor is monic and the exponents sum to zero, so g(inf) = 1.
  map.scale = 1;
  return map;
}

bool lagrange_identity_holds(const FactoredMap &map)
{
  if (map.affine())
    return true;
  const std::size_t n = map.roots.size();
  UPoly sum;
  for (std::size_t i = 0; i < n; ++i) {
    UPoly prod = UPoly::constant(Rational(map.exponents[i]));
    for (std::size_t j = 0; j < n; ++j)
      if (j != i)
        prod = prod * UPoly::linear_factor(map.roots[j]);
    sum = sum + prod;
  }
  return sum == UPoly::constant(Rational(map.multiplier));
}

CriticalLocus source_locus(const curves::CurveSpec &spec)
{
  spec.validate();
  CriticalLocus locus;
  locus.rationals = curves::fixed_branch_points(spec.genus);
  if (const auto *a = std::get_if<Rational>(&spec.parameter))
    locus.rationals.push_back(*a);
  else
    locus.irrational_part = std::get<curves::AlgebraicParameter>(spec.parameter).minimal_polynomial;
  locus.includes_infinity = true;
  locus.normalize();
  return locus;
}

namespace {

bool is_belyi_locus(const CriticalLocus &l)
{
  if (!l.all_rational())
    return false;
  return std::all_of(l.rationals.begin(), l.rationals.end(),
                     [](const Rational &r) { return r == 0 || r == 1; });
}

CriticalLocus apply_factored(const CriticalLocus &locus, const FactoredMap &map)
{
  if (!locus.all_rational())
    throw DomainError("factored step needs an all-rational critical locus");
  if (!lagrange_identity_holds(map))
    throw DomainError("Lagrange identity violated");

  CriticalLocus out;
  for (const auto &r : locus.rationals) {
    auto it = std::find(map.roots.begin(), map.roots.end(), r);
    if (it != map.roots.end()) {
      const Integer &m = map.exponents[static_cast<std::size_t>(it - map.roots.begin())];
      if (m > 0)
        out.rationals.push_back(0);
      else
        out.includes_infinity = true;
    } else if (map.affine()) {
      out.rationals.push_back(map.scale * (r - map.roots[0]));
    } else {
      throw DomainError("tracked point outside the support of the factored map");
    }
  }
  if (map.affine()) {
    out.includes_infinity = out.includes_infinity || locus.includes_infinity;
  } else {
    // Ramification of g itself: at r_i with |m_i| >= 2 (values 0 or inf) and
    // at infinity, where g - 1 vanishes to order n - 1 (value g(inf) * scale = 1).
    for (const auto &m : map.exponents) {
      if (m >= 2)
        out.rationals.push_back(0);
      if (m <= -2)
        out.includes_infinity = true;
    }
    out.rationals.push_back(1);
  }
  out.normalize();
  return out;
}

} // namespace

CriticalLocus verify_chain_from(const CriticalLocus &start, const std::vector<ChainStep> &steps)
{
  CriticalLocus locus = start;
  for (const auto &step : steps) {
    if (const auto *q = std::get_if<UPoly>(&step))
      locus = push_forward(locus, *q);
    else
      locus = apply_factored(locus, std::get<FactoredMap>(step));
  }
  return locus;
}

CriticalLocus verify_belyi(const BelyiChain &chain)
{
  return verify_chain_from(source_locus(chain.source), chain.steps);
}

BelyiChain belyi_for_curve(const curves::CurveSpec &spec)
{
  const CriticalLocus start = source_locus(spec);
  BelyiChain chain{spec, {}};
  CriticalLocus final_locus = start;
  if (spec.rational_parameter()) {
    chain.steps.emplace_back(UPoly::identity());
  } else {
    auto rat = rationalize(start);
    for (auto &q : rat.steps)
      chain.steps.emplace_back(std::move(q));
    final_locus = std::move(rat.final_locus);
  }
  chain.steps.emplace_back(three_point_reduce(final_locus.rationals));
  if (!is_belyi_locus(verify_belyi(chain)))
    throw std::logic_error("belyi_for_curve: composed map is not a Belyi map");
  return chain;
}

} // namespace tforge::belyi
