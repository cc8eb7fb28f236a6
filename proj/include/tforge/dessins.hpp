#pragma once

#include "tforge/perm.hpp"
#include "tforge/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tforge::dessins {

using perm::Perm;

/// (sigma0, sigma1, sigma_inf) with sigma0 sigma1 sigma_inf = 1 on d points.
struct MonodromyTriple
{
  Perm sigma0, sigma1, sigma_inf;

  /// sigma_inf = (sigma0 sigma1)^-1.
  static MonodromyTriple complete(const Perm &s0, const Perm &s1);

  std::size_t degree() const { return sigma0.degree(); }
  bool product_is_identity() const { return (sigma0 * sigma1 * sigma_inf).is_identity(); }
  bool transitive() const { return perm::generates_transitive({sigma0, sigma1}, degree()); }
};

struct DessinClass
{
  MonodromyTriple representative;
  std::uint64_t class_size = 0;            ///< number of pairs (sigma0, sigma1) in the S_d-class
  std::uint64_t monodromy_group_order = 0;
  bool is_real = false;
};

/// Pairs (sigma0 of type mu, sigma1 of type nu) with (sigma0 sigma1)^-1 an
/// n-cycle, up to simultaneous conjugation in S_n, sorted by canonical form.
/// Throws DomainError when r + s != n + 1. Parallel over candidates for sigma1.
std::vector<DessinClass> classify_polynomial_monodromies(unsigned n, std::vector<unsigned> mu,
                                                         std::vector<unsigned> nu);
/// Serial reference.
std::vector<DessinClass> classify_polynomial_monodromies_serial(unsigned n, std::vector<unsigned> mu,
                                                                std::vector<unsigned> nu);

/// Whether some tau in S_d inverts sigma0 and sigma1 simultaneously by conjugation.
bool is_real(const MonodromyTriple &t);

/// |G|/2 (1 - 1/r1 - 1/r2 - 1/r3) + 1; throws DomainError when not integral.
Integer triangle_genus(const Integer &group_order, std::array<unsigned, 3> orders);

struct NormalClosureData
{
  std::uint64_t monodromy_group_order = 0;
  std::uint64_t stabilizer_index = 0;
  Integer component_count;
  Integer genus_of_closure;
};

/// Throws DomainError for an intransitive triple or a trivial local monodromy.
NormalClosureData normal_closure_data(const MonodromyTriple &t);

/// Canonical (sigma0, sigma1) under S_d conjugation, for transitive triples.
std::vector<Perm> canonical_pair(const MonodromyTriple &t);

} // namespace tforge::dessins
