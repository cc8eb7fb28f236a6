#pragma once

#include "tforge/rational.hpp"
#include "tforge/special_curves.hpp"
#include "tforge/upoly.hpp"

#include <variant>
#include <vector>

namespace tforge::belyi {

/// Finite critical values split into the rational ones and a squarefree monic
/// polynomial without rational roots whose roots are the irrational ones.
struct CriticalLocus
{
  std::vector<Rational> rationals; ///< sorted, distinct
  UPoly irrational_part = UPoly::constant(1);
  bool includes_infinity = false;

  bool all_rational() const { return irrational_part.degree() == 0; }
  /// Sorts and dedups `rationals`.
  void normalize();
};

/// t -> scale * prod_i (t - roots[i])^exponents[i], never expanded.
struct FactoredMap
{
  std::vector<Rational> roots;
  std::vector<Integer> exponents;
  Rational scale = 1;
  /// The N with exponents = N * y_i; 0 for the affine (|R| <= 2) case.
  Integer multiplier = 0;

  bool affine() const { return multiplier == 0; }
};

using ChainStep = std::variant<UPoly, FactoredMap>;

struct BelyiChain
{
  curves::CurveSpec source;
  std::vector<ChainStep> steps;
};

/// Critical values of a polynomial (the finite ones). Throws DomainError on a
/// constant polynomial.
CriticalLocus critical_values(const UPoly &p);

/// Critical locus of q ∘ (map with locus L).
CriticalLocus push_forward(const CriticalLocus &locus, const UPoly &q);

struct RationalizeResult
{
  std::vector<UPoly> steps;
  CriticalLocus final_locus;
};

/// Composes with the current irrational part until every finite critical
/// value is rational.
RationalizeResult rationalize(const CriticalLocus &locus);

/// Three-point reduction of a set of rational critical values. Throws
/// DomainError on repeated or empty input.
FactoredMap three_point_reduce(const std::vector<Rational> &values);

/// The critical locus of the double cover, as seen on the projective line.
CriticalLocus source_locus(const curves::CurveSpec &spec);

BelyiChain belyi_for_curve(const curves::CurveSpec &spec);

/// Exact check of sum_i m_i prod_{j != i}(t - r_j) == N. True for affine maps.
bool lagrange_identity_holds(const FactoredMap &map);

/// Critical locus of the whole composition, computed without expanding the
/// factored step. Throws DomainError("Lagrange identity violated") on failure.
CriticalLocus verify_belyi(const BelyiChain &chain);

/// Same, starting from an explicit locus instead of the chain's curve.
CriticalLocus verify_chain_from(const CriticalLocus &start, const std::vector<ChainStep> &steps);

} // namespace tforge::belyi
