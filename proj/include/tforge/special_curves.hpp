#pragma once

#include "tforge/rational.hpp"
#include "tforge/upoly.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tforge::curves {

/// An irrational parameter given by its monic minimal polynomial and a label
/// selecting one of its complex roots.
struct AlgebraicParameter
{
  UPoly minimal_polynomial;
  int root_index = 0;

  friend bool operator==(const AlgebraicParameter &, const AlgebraicParameter &) = default;
};

/// The hyperelliptic curve w^2 = (z - a)(z + 2g) prod_{i=0}^{2g-1} (z - i).
struct CurveSpec
{
  int genus = 3;
  std::variant<Rational, AlgebraicParameter> parameter;

  bool rational_parameter() const { return std::holds_alternative<Rational>(parameter); }

  /// Throws DomainError("singular curve") / ("genus must be at least 3") etc.
  void validate() const;
};

/// The fixed part {-2g, 0, 1, ..., 2g-1} of every branch set, ascending.
std::vector<Rational> fixed_branch_points(int genus);

/// A point of the rational projective line; `infinite` overrides `value`.
struct ProjPoint
{
  bool infinite = false;
  Rational value;

  static ProjPoint finite(Rational v) { return {false, std::move(v)}; }
  static ProjPoint infinity() { return {true, Rational(0)}; }

  friend bool operator==(const ProjPoint &a, const ProjPoint &b)
  {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const ProjPoint &a, const ProjPoint &b)
  {
    if (a.infinite != b.infinite)
      return b.infinite;
    return !a.infinite && a.value < b.value;
  }
  std::string to_string() const { return infinite ? "inf" : value.get_str(); }
};

/// Distinct points, kept sorted (infinity last).
struct BranchSet
{
  std::vector<ProjPoint> points;

  static BranchSet from(std::vector<ProjPoint> pts);
  bool contains(const ProjPoint &p) const;
  std::size_t size() const { return points.size(); }
  /// The same set with infinity removed.
  BranchSet affine_part() const;
};

/// x -> (a x + b) / (c x + d), stored with coprime integer entries whose first
/// nonzero entry is positive.
class MobiusMap
{
public:
  MobiusMap(Rational a, Rational b, Rational c, Rational d);

  static MobiusMap identity() { return {1, 0, 0, 1}; }

  const std::array<Integer, 4> &entries() const { return m_; }
  ProjPoint operator()(const ProjPoint &p) const;
  /// (this ∘ other)(x) = this(other(x)).
  MobiusMap after(const MobiusMap &other) const;
  MobiusMap inverse() const;

  friend bool operator==(const MobiusMap &, const MobiusMap &) = default;
  friend auto operator<=>(const MobiusMap &a, const MobiusMap &b)
  {
    for (int i = 0; i < 4; ++i) {
      int c = cmp(a.m_[i], b.m_[i]);
      if (c != 0)
        return c <=> 0;
    }
    return std::strong_ordering::equal;
  }
  std::string to_string() const;

private:
  std::array<Integer, 4> m_; // row-major [[a, b], [c, d]]
};

/// The 2g+3 points {-2g, 0, ..., 2g-1, a, inf}: the 2g+2 finite branch points
/// plus infinity as a tracked marked point. Throws DomainError("singular curve")
/// when a collides with a fixed point.
BranchSet branch_set(int genus, const Rational &a);

/// All rational Möbius maps carrying b1 bijectively onto b2, sorted. A map is
/// determined by the image of one fixed ordered triple of b1, so every ordered
/// triple of b2 is tried as that image and the candidate is tested on the
/// whole set. Parallel over the first target point.
std::vector<MobiusMap> mobius_equivalences(const BranchSet &b1, const BranchSet &b2);

/// Serial reference for mobius_equivalences.
std::vector<MobiusMap> mobius_equivalences_serial(const BranchSet &b1, const BranchSet &b2);

struct IsomorphismReport
{
  std::vector<MobiusMap> affine_equivalences;   ///< between the 2g+2 branch points
  std::vector<MobiusMap> marked_equivalences;   ///< between the sets with infinity adjoined
  bool isomorphic = false;                      ///< affine_equivalences nonempty
};

/// Equivalence of the branch sets of C_a and C_b for any g >= 3.
IsomorphismReport compare_curves(int genus, const Rational &a, const Rational &b);

/// C_a ≅ C_b via branch-set equivalence; requires g >= 6, where this must
/// coincide with a == b. Throws DomainError for g < 6.
bool curves_isomorphic(int genus, const Rational &a, const Rational &b);

} // namespace tforge::curves
