#pragma once

#include "tforge/perm.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace tforge::perm {

/// Orders of a spherical triple as a multiset, stored ascending.
using Signature = std::array<unsigned, 3>;

Signature make_signature(unsigned a, unsigned b, unsigned c);

/// (a1, a2, a3) with a1 a2 a3 = 1.
struct SphericalTriple
{
  Perm a1, a2, a3;

  /// Completes (a1, a2) with a3 = (a1 a2)^-1.
  static SphericalTriple complete(const Perm &a1, const Perm &a2);
  static SphericalTriple parse(std::string_view a1, std::string_view a2, std::string_view a3,
                               std::size_t degree);

  bool is_spherical() const { return (a1 * a2 * a3).is_identity(); }
  std::array<std::uint64_t, 3> orders() const { return {a1.order(), a2.order(), a3.order()}; }
  Signature signature() const;
  SphericalTriple conjugate_by(const Perm &c) const
  {
    return {a1.conjugate_by(c), a2.conjugate_by(c), a3.conjugate_by(c)};
  }

  friend bool operator==(const SphericalTriple &, const SphericalTriple &) = default;
  friend auto operator<=>(const SphericalTriple &, const SphericalTriple &) = default;
};

struct TripleHash
{
  std::size_t operator()(const SphericalTriple &t) const
  {
    return t.a1.hash() * 1000003u ^ t.a2.hash();
  }
};

/// (a1, a2, a3) -> (a2, a2^-1 a1 a2, a3)
SphericalTriple braid_first(const SphericalTriple &t);
/// (a1, a2, a3) -> (a1, a3, a3^-1 a2 a3)
SphericalTriple braid_second(const SphericalTriple &t);
SphericalTriple braid_first_inverse(const SphericalTriple &t);
SphericalTriple braid_second_inverse(const SphericalTriple &t);

/// Representative of the G-conjugacy class of t: a1 is moved to its class
/// representative, then a2 is minimized over that representative's centralizer.
SphericalTriple canonical_under(const FiniteGroup &g, const SphericalTriple &t);

/// Generating spherical triples of G whose orders form `signature` (as a
/// multiset, every ordering included), one per simultaneous G-conjugacy class.
/// Parallel over the candidates for a2.
std::vector<SphericalTriple> enumerate_spherical(const FiniteGroup &g, Signature signature);
/// Serial reference for enumerate_spherical.
std::vector<SphericalTriple> enumerate_spherical_serial(const FiniteGroup &g, Signature signature);
/// As enumerate_spherical but only for the ordering (o1, o2, o3) given.
std::vector<SphericalTriple> enumerate_spherical_ordered(const FiniteGroup &g, unsigned o1, unsigned o2,
                                                         unsigned o3);

enum class HurwitzMode
{
  braid,
  braid_and_conjugation,
};

struct HurwitzOrbit
{
  SphericalTriple representative;
  std::vector<std::size_t> members;  ///< indices into the input list
  std::uint64_t triple_count = 0;    ///< triples in the orbit
  std::uint64_t class_count = 0;     ///< G-conjugacy classes met by the orbit
};

/// Partitions `triples` into orbits under the Hurwitz moves (and their
/// inverses), optionally also under simultaneous G-conjugation and conjugation
/// by the extra `outer` permutations (e.g. generators of a normalizer).
/// Every move is checked to preserve the product, the signature, and the
/// generated group.
std::vector<HurwitzOrbit> hurwitz_classes(const FiniteGroup &g, const std::vector<SphericalTriple> &triples,
                                          HurwitzMode mode, const std::vector<Perm> &outer = {});

/// Some c in `ambient` with c^-1 t1[i] c = t2[i] for all i, by backtracking
/// over point images (orbits of <t1> propagate a choice), pruned by cycle types.
std::optional<Perm> simultaneous_conjugator(const std::vector<Perm> &t1, const std::vector<Perm> &t2,
                                            const PermGroup &ambient);
/// Same with the full symmetric group as ambient.
std::optional<Perm> simultaneous_conjugator(const std::vector<Perm> &t1, const std::vector<Perm> &t2);

/// Canonical form of a tuple generating a transitive group under simultaneous
/// conjugation by the whole symmetric group, plus the size of the tuple's
/// centralizer there. Relabels points in breadth-first order from every start
/// point and keeps the smallest result.
struct SymmetricCanonical
{
  std::vector<Perm> form;
  std::size_t centralizer_order = 0;
};
SymmetricCanonical canonical_symmetric(const std::vector<Perm> &tuple);

} // namespace tforge::perm
