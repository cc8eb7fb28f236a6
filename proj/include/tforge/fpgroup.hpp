#pragma once

#include "tforge/beauville.hpp"
#include "tforge/perm.hpp"
#include "tforge/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace tforge::fp {

using perm::FiniteGroup;
using perm::Perm;
using perm::PermGroup;

/// A word in the free group: letter +i is generator i (1-based), -i its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse(const Word &w);
Word concat(const Word &a, const Word &b);
Word power(const Word &w, unsigned k);
/// a b a^-1 b^-1
Word commutator(const Word &a, const Word &b);

struct Presentation
{
  std::size_t generator_count = 0;
  std::vector<Word> relators;

  /// Letters in range and every relator freely reduced.
  bool valid() const;
};

/// <x_1..x_{n-1} | x_i^{r_i}, (x_1 ... x_{n-1})^{r_n}>; throws std::invalid_argument
/// unless n >= 2 and every r_i >= 2.
Presentation polygonal_presentation(const std::vector<unsigned> &orders);
/// <a_1, b_1, ..., a_g, b_g | [a_1,b_1]...[a_g,b_g]>
Presentation surface_presentation(unsigned genus);
/// Generators of `a` then of `b`; relators of both plus every commutator
/// between a generator of `a` and one of `b`.
Presentation direct_product(const Presentation &a, const Presentation &b);

/// Images of the generators in a permutation group.
struct FiniteImage
{
  PermGroup target;
  std::vector<Perm> images;

  Perm evaluate(const Word &w) const;
  bool relators_hold(const Presentation &p) const;
  /// The images generate the whole target.
  bool surjective() const;
};

/// Cosets of a finite-index subgroup with the right action of the generators.
struct CosetTable
{
  std::size_t coset_count = 0;
  std::size_t base_coset = 0;                       ///< the subgroup itself
  std::vector<std::vector<std::uint32_t>> action;   ///< action[gen][coset]
  std::vector<std::vector<std::uint32_t>> inverse;  ///< inverse[gen][coset]
  std::vector<std::size_t> labels;                  ///< group element index per coset

  std::size_t apply(std::size_t coset, const Word &w) const;
  bool transitive() const;
};

/// Every relator fixes every coset. Parallel over cosets.
bool relators_act_trivially(const CosetTable &t, const Presentation &p);
/// Serial reference.
bool relators_act_trivially_serial(const CosetTable &t, const Presentation &p);

/// Cosets of H = preimage of the diagonal under T1 x T2 -> G x G, labelled by
/// g = g1^-1 g2. The first `first_factor_generators` generators of `product`
/// act by g -> phi1(w)^-1 g, the rest by g -> g phi2(w). Verifies the relators
/// on G x G, surjectivity, and the finished table; throws
/// DomainError("markings do not generate") when a factor is not onto G.
CosetTable diagonal_coset_table(const Presentation &product, std::size_t first_factor_generators,
                                const FiniteGroup &g, const std::vector<Perm> &images1,
                                const std::vector<Perm> &images2);

/// Cosets of the kernel of T -> G, labelled by G, generators acting by g -> g phi(w).
CosetTable regular_coset_table(const Presentation &p, const FiniteGroup &g, const std::vector<Perm> &images);

struct SubgroupPresentation
{
  Presentation presentation;
  std::vector<Word> transversal;  ///< Schreier representative per coset
  /// (coset, ambient generator index 0-based) for each Schreier generator.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> schreier_pairs;
  std::vector<std::uint32_t> schreier_targets;  ///< the coset c.x per Schreier generator

  /// u_c x u_{c.x}^-1 as a word in the ambient generators.
  Word schreier_word(std::size_t generator) const;
};

/// Reidemeister–Schreier with a breadth-first Schreier transversal. Relators
/// are the rewrites of u_c r u_c^-1 for every coset c and ambient relator r.
SubgroupPresentation reidemeister_schreier(const CosetTable &t, const Presentation &ambient);

/// Invariant factors d_1 | d_2 | ... (all >= 2) and the free rank.
struct AbelianInvariants
{
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const AbelianInvariants &, const AbelianInvariants &) = default;
  std::string to_string() const;
};

/// Relation matrix in coordinate form: one row per relator, one column per generator.
struct SparseMatrix
{
  std::size_t rows = 0, cols = 0;
  struct Entry
  {
    std::uint32_t row, col;
    long value;
  };
  std::vector<Entry> entries;
};

SparseMatrix relation_matrix(const Presentation &p);
/// "rows cols nnz" then one "row col value" line per entry, 0-based.
void write_triplets(std::ostream &os, const SparseMatrix &m);

/// Rank over the prime field F_p.
std::size_t rank_mod_p(const SparseMatrix &m, std::uint32_t p);

/// Smith normal form: unit pivots are eliminated sparsely (lowest Markowitz
/// cost first), the remainder densely with exact integers. Cross-checked by
/// rank modulo `check_prime`: rank_p = rank_Q + #{d_i : p | d_i}. Throws
/// std::logic_error if the check fails.
AbelianInvariants abelianization(const Presentation &p, std::uint32_t check_prime = 1'000'000'007u);
/// Dense exact Smith normal form; reference for small inputs.
AbelianInvariants abelianization_dense(const Presentation &p);

/// A 30-bit prime drawn from `rng`.
std::uint32_t random_prime_30(std::mt19937_64 &rng);

struct Pi1Data
{
  Presentation product;  ///< T_r x T_s
  CosetTable table;
  SubgroupPresentation subgroup;
};

/// pi_1((C1 x C2)/G) as the preimage of the diagonal for a free diagonal action
/// of an unmixed structure. Throws DomainError("action not free") otherwise.
Pi1Data pi1_surface(const beauville::UnmixedStructure &s, const FiniteGroup &g);

/// The same pipeline for two arbitrary presentations with marked images.
Pi1Data pi1_diagonal(const Presentation &p1, const std::vector<Perm> &images1, const Presentation &p2,
                     const std::vector<Perm> &images2, const FiniteGroup &g);

/// Samples `count` Schreier generators (seeded) and checks each maps into the
/// diagonal of G x G under the markings.
bool schreier_generators_in_diagonal(const Pi1Data &d, std::size_t first_factor_generators,
                                     const std::vector<Perm> &images1, const std::vector<Perm> &images2,
                                     std::size_t count, std::uint64_t seed);

} // namespace tforge::fp
