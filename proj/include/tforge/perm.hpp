#pragma once

#include "tforge/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tforge::perm {

/// A permutation of {0, ..., n-1} (printed 1-based). Composition follows the
/// right-action convention: x^(ab) = (x^a)^b, so `a * b` applies a first.
class Perm
{
public:
  using point_type = std::uint16_t;

  Perm() = default;
  /// Identity on `degree` points.
  explicit Perm(std::size_t degree);
  /// From 0-based images; throws std::invalid_argument unless a bijection.
  explicit Perm(std::vector<point_type> images);

  /// Parses cycle notation such as "(1,2)(3,4)" with 1-based points; "()" is
  /// the identity. With degree 0 the degree is the largest point mentioned.
  static Perm parse(std::string_view text, std::size_t degree = 0);
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<unsigned>> &cycles);

  std::size_t degree() const { return img_.size(); }
  point_type operator[](std::size_t x) const { return img_[x]; }
  const std::vector<point_type> &images() const { return img_; }

  Perm operator*(const Perm &rhs) const;
  Perm inverse() const;
  Perm pow(long exponent) const;
  /// c^-1 * this * c
  Perm conjugate_by(const Perm &c) const;
  bool is_identity() const;
  /// Lowest common multiple of the cycle lengths.
  std::uint64_t order() const;
  /// Cycle lengths including fixed points, descending; sums to the degree.
  std::vector<unsigned> cycle_type() const;
  /// Nontrivial cycles, each starting at its smallest point (0-based).
  std::vector<std::vector<unsigned>> cycles() const;
  /// Cycle notation, 1-based; "()" for the identity.
  std::string to_string() const;
  /// Largest point moved, plus one (0 for the identity).
  std::size_t support_bound() const;

  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

  std::size_t hash() const;

private:
  std::vector<point_type> img_;
};

struct PermHash
{
  std::size_t operator()(const Perm &p) const { return p.hash(); }
};

/// Cycle type as a multiset (descending).
std::vector<unsigned> cycle_type(const Perm &p);

/// Permutation group with a base and strong generating set computed by
/// deterministic Schreier–Sims at construction (degree <= 32).
class PermGroup
{
public:
  static constexpr std::size_t max_degree = 32;

  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  /// "A7", "S5", "C3" (cyclic, regular), "trivial", or explicit generators
  /// "gens:(1,2,3);(1,2)". Throws std::invalid_argument.
  static PermGroup named(std::string_view name);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return generators_; }

  /// Exact order; throws DomainError above the degree guard.
  Integer order() const;
  /// Order as a 64-bit value; throws std::overflow_error if it does not fit.
  std::uint64_t order_u64() const;
  bool contains(const Perm &g) const;
  /// All elements; throws DomainError if the order exceeds `limit`.
  std::vector<Perm> elements(std::uint64_t limit = 2'000'000) const;
  std::vector<unsigned> base() const;
  bool is_transitive() const;

private:
  struct Level
  {
    unsigned base_point;
    std::vector<Perm> gens;                     // strong generators added at this level
    std::vector<std::optional<Perm>> transversal; // u_b with base^u_b = b
    std::vector<std::optional<Perm>> inverse;
    std::vector<unsigned> orbit;
  };

  void build();
  void recompute_orbit(std::size_t level);
  /// Sifts g starting at `from`; returns the residue and the level where it stopped.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Level> chain_;
  bool chain_built_ = false;
};

/// Transitivity of the group generated by a tuple.
bool generates_transitive(const std::vector<Perm> &tuple, std::size_t degree);

/// A group of moderate order with all elements listed, indexed, and split
/// into conjugacy classes. Immutable after construction.
class FiniteGroup
{
public:
  explicit FiniteGroup(PermGroup group, std::uint64_t limit = 2'000'000);

  const PermGroup &group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return group_.degree(); }
  const Perm &element(std::size_t i) const { return elements_[i]; }
  const std::vector<Perm> &elements() const { return elements_; }
  /// Index of g, or -1 when g is not in the group.
  long index_of(const Perm &g) const;
  std::size_t identity_index() const { return identity_; }
  std::uint64_t element_order(std::size_t i) const { return orders_[i]; }

  std::size_t class_count() const { return class_reps_.size(); }
  std::size_t class_of(std::size_t i) const { return class_id_[i]; }
  std::size_t class_representative(std::size_t c) const { return class_reps_[c]; }
  std::size_t class_size(std::size_t c) const { return class_sizes_[c]; }
  /// t with t^-1 * element(i) * t = element(class_representative(class_of(i))).
  const Perm &transporter(std::size_t i) const { return transporter_[i]; }
  /// Element indices commuting with the representative of class c.
  const std::vector<std::size_t> &rep_centralizer(std::size_t c) const { return centralizers_[c]; }

  /// Whether the given elements generate the whole group.
  bool generated_by(const std::vector<Perm> &gens) const;

private:
  PermGroup group_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::size_t identity_ = 0;
  std::vector<std::uint64_t> orders_;
  std::vector<std::size_t> class_id_;
  std::vector<std::size_t> class_reps_;
  std::vector<std::size_t> class_sizes_;
  std::vector<Perm> transporter_;
  std::vector<std::vector<std::size_t>> centralizers_;
};

} // namespace tforge::perm
