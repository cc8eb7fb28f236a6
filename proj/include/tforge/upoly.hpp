#pragma once

#include "tforge/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tforge {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class UPoly
{
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);
  UPoly(std::initializer_list<Rational> coefficients);

  static UPoly constant(const Rational &c);
  /// The polynomial z.
  static UPoly identity();
  /// z - root
  static UPoly linear_factor(const Rational &root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational> &coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  const Rational &leading() const;

  Rational operator()(const Rational &x) const;

  UPoly derivative() const;
  UPoly monic() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly &a, const UPoly &b);
  friend UPoly operator-(const UPoly &a, const UPoly &b);
  friend UPoly operator*(const UPoly &a, const UPoly &b);
  friend UPoly operator*(const Rational &c, const UPoly &p);
  friend bool operator==(const UPoly &a, const UPoly &b) = default;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly &divisor) const;
  UPoly operator/(const UPoly &divisor) const { return divmod(divisor).first; }
  UPoly operator%(const UPoly &divisor) const { return divmod(divisor).second; }

  /// Comma-separated coefficients, constant term first: "-2,0,1" is z^2-2.
  static UPoly parse(std::string_view text);
  std::string to_text() const;
  /// Human-readable form in the given variable, e.g. "z^2 - 2".
  std::string to_string(char var = 'z') const;

private:
  void trim();

  std::vector<Rational> coeffs_;
};

UPoly pow(const UPoly &p, unsigned exponent);

/// p(q(t)).
UPoly poly_compose(const UPoly &p, const UPoly &q);

/// Monic gcd; gcd(0, 0) = 0.
UPoly poly_gcd(const UPoly &a, const UPoly &b);

/// Sylvester-determinant resultant with the rows of p first, i.e.
/// Res(p, q) = lc(p)^deg(q) * prod_{p(a)=0} q(a). Res(z-1, z-2) = -1.
/// Throws std::domain_error("zero polynomial") on a zero argument.
Rational resultant(const UPoly &p, const UPoly &q);

/// Monic polynomial whose roots (with multiplicity) are q(a) for the roots a of
/// base: Res_z(base(z), y - q(z)) normalized monic, computed by exact
/// evaluation at deg(base)+1 values of y and interpolation.
UPoly image_polynomial(const UPoly &base, const UPoly &q);

/// Monic Res_z(p(z) - y, p'(z)) as a polynomial in y: the roots are exactly
/// the finite critical values of p. Throws DomainError("no critical values")
/// when deg p < 2.
UPoly discriminant_in_parameter(const UPoly &p);

/// Monic p / gcd(p, p'). Throws std::domain_error on zero input.
UPoly squarefree_part(const UPoly &p);

struct RationalRootSplit
{
  std::vector<Rational> roots; ///< distinct, ascending
  UPoly cofactor;              ///< monic, no rational root
};

/// Distinct rational roots of p and the monic cofactor left after removing
/// every (z - r) factor with full multiplicity.
RationalRootSplit rational_roots(const UPoly &p);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
UPoly interpolate(const std::vector<Rational> &xs, const std::vector<Rational> &ys);

} // namespace tforge
