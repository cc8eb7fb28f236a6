#pragma once

#include "tforge/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace tforge {

/// Sparse multivariate polynomial with integer coefficients in a fixed number
/// of variables. Zero coefficients are never stored.
class MPoly
{
public:
  using Monomial = std::vector<unsigned>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Integer &c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t variable_count() const { return nvars_; }
  const std::map<Monomial, Integer> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;

  MPoly operator+(const MPoly &o) const;
  MPoly operator-(const MPoly &o) const;
  MPoly operator*(const MPoly &o) const;
  MPoly operator*(const Integer &c) const;
  MPoly operator-() const;
  friend bool operator==(const MPoly &, const MPoly &) = default;

  Integer evaluate(const std::vector<Integer> &x) const;
  std::complex<double> evaluate(const std::vector<std::complex<double>> &x) const;
  /// Partial derivative in variable i.
  MPoly derivative(std::size_t i) const;
  /// Variables named by `names`, e.g. "2*b1 + g1^2".
  std::string to_string(const std::vector<std::string> &names) const;

private:
  void add_term(const Monomial &m, const Integer &c);

  std::size_t nvars_;
  std::map<Monomial, Integer> terms_;
};

MPoly pow(const MPoly &p, unsigned k);

} // namespace tforge
