#pragma once

#include "tforge/perm.hpp"
#include "tforge/spherical.hpp"

#include <cstdint>
#include <vector>

namespace tforge::beauville {

using perm::FiniteGroup;
using perm::SphericalTriple;

/// Two spherical generating triples of the same group; the diagonal action on
/// the product of the two triangle curves.
struct UnmixedStructure
{
  SphericalTriple triple1, triple2;
};

/// Elements with fixed points on the triangle curve of a triple: all
/// conjugates of all powers of its entries. Indexed like the group's elements.
class SigmaSet
{
public:
  SigmaSet() = default;
  explicit SigmaSet(std::size_t group_size);

  void insert(std::size_t i);
  bool contains(std::size_t i) const;
  std::size_t size() const;
  /// Whether the two sets meet only in `identity`.
  bool meets_only_in(const SigmaSet &other, std::size_t identity) const;
  std::vector<std::size_t> members() const;
  friend bool operator==(const SigmaSet &, const SigmaSet &) = default;

private:
  std::vector<std::uint64_t> bits_;
  std::size_t n_ = 0;
};

SigmaSet sigma_set(const SphericalTriple &t, const FiniteGroup &g);

/// Both triples spherical and generating, and the diagonal action free.
bool is_unmixed_beauville(const UnmixedStructure &s, const FiniteGroup &g);

/// Freeness verified independently: every nonidentity g must fail to fix a
/// point of both curves, where the points of a triangle curve over a branch
/// point with local monodromy a are the cosets x<a> and g fixes x<a> iff
/// x^-1 g x lies in <a>. Quadratic in |G|; meant for small groups.
bool diagonal_action_free_bruteforce(const UnmixedStructure &s, const FiniteGroup &g);

struct SurfaceInvariants
{
  Integer g1, g2;
  Integer euler_e;
  Integer chi;
  Integer K2;
};

/// Invariants of (C1 x C2)/G for a free action; throws DomainError when the
/// quotients are not integral.
SurfaceInvariants surface_invariants_from(const Integer &g1, const Integer &g2, const Integer &group_order);

/// Throws DomainError("action not free") unless is_unmixed_beauville.
SurfaceInvariants surface_invariants(const UnmixedStructure &s, const FiniteGroup &g);

/// Hyperbolic signatures (1/r1 + 1/r2 + 1/r3 < 1) with entries element orders <= bound.
std::vector<perm::Signature> hyperbolic_signatures(const FiniteGroup &g, unsigned bound);

/// Every unordered pair of generating triples (up to simultaneous conjugation,
/// one ordering per braid class) with a free diagonal action. Parallel over pairs.
std::vector<UnmixedStructure> search_beauville(const FiniteGroup &g, unsigned signature_bound);
/// Restricted to the given signatures (each sorted ascending).
std::vector<UnmixedStructure> search_beauville(const FiniteGroup &g, const std::vector<perm::Signature> &signatures);
/// Serial references.
std::vector<UnmixedStructure> search_beauville_serial(const FiniteGroup &g, unsigned signature_bound);
std::vector<UnmixedStructure> search_beauville_serial(const FiniteGroup &g,
                                                      const std::vector<perm::Signature> &signatures);

} // namespace tforge::beauville
