#include "tforge/beauville.hpp"

#include "tforge/dessins.hpp"
#include "tforge/error.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace tforge::beauville {

SigmaSet::SigmaSet(std::size_t group_size)
: bits_((group_size + 63) / 64, 0)
, n_(group_size)
{
}

void SigmaSet::insert(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }

bool SigmaSet::contains(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }

std::size_t SigmaSet::size() const
{
  std::size_t s = 0;
  for (auto w : bits_)
    s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

bool SigmaSet::meets_only_in(const SigmaSet &other, std::size_t identity) const
{
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t both = bits_[w] & other.bits_[w];
    if (w == identity / 64)
      both &= ~(std::uint64_t{1} << (identity % 64));
    if (both)
      return false;
  }
  return true;
}

std::vector<std::size_t> SigmaSet::members() const
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (contains(i))
      out.push_back(i);
  return out;
}

SigmaSet sigma_set(const SphericalTriple &t, const FiniteGroup &g)
{
  SigmaSet s(g.size());
  s.insert(g.identity_index());
  // Conjugacy classes are closed under conjugation, so each power contributes
  // its whole class.
  std::vector<bool> class_done(g.class_count(), false);
  for (const perm::Perm *a : {&t.a1, &t.a2, &t.a3}) {
    const auto ord = a->order();
    for (std::uint64_t k = 1; k < ord; ++k) {
      const long idx = g.index_of(a->pow(static_cast<long>(k)));
      if (idx < 0)
        throw std::invalid_argument("triple entry outside the group");
      class_done[g.class_of(static_cast<std::size_t>(idx))] = true;
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    if (class_done[g.class_of(i)])
      s.insert(i);
  return s;
}

namespace {

bool valid_triple(const SphericalTriple &t, const FiniteGroup &g)
{
  return t.is_spherical() && g.index_of(t.a1) >= 0 && g.index_of(t.a2) >= 0 && g.generated_by({t.a1, t.a2});
}

} // namespace

bool is_unmixed_beauville(const UnmixedStructure &s, const FiniteGroup &g)
{
  if (!valid_triple(s.triple1, g) || !valid_triple(s.triple2, g))
    return false;
  return sigma_set(s.triple1, g).meets_only_in(sigma_set(s.triple2, g), g.identity_index());
}

bool diagonal_action_free_bruteforce(const UnmixedStructure &s, const FiniteGroup &g)
{
  const std::size_t n = g.size();
  // has_fixed[curve][element]
  std::vector<std::vector<bool>> has_fixed(2, std::vector<bool>(n, false));
  const SphericalTriple *triples[2] = {&s.triple1, &s.triple2};
  for (int c = 0; c < 2; ++c)
    for (const perm::Perm *a : {&triples[c]->a1, &triples[c]->a2, &triples[c]->a3}) {
      // Label each coset x<a> by its smallest element index.
      std::vector<std::size_t> label(n);
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t best = x;
        perm::Perm y = g.element(x);
        for (std::uint64_t k = 1; k < a->order(); ++k) {
          y = y * *a;
          best = std::min(best, static_cast<std::size_t>(g.index_of(y)));
        }
        label[x] = best;
      }
      for (std::size_t e = 0; e < n; ++e) {
        if (has_fixed[c][e])
          continue;
        for (std::size_t x = 0; x < n; ++x)
          if (label[static_cast<std::size_t>(g.index_of(g.element(e) * g.element(x)))] == label[x]) {
            has_fixed[c][e] = true;
            break;
          }
      }
    }
  for (std::size_t e = 0; e < n; ++e)
    if (e != g.identity_index() && has_fixed[0][e] && has_fixed[1][e])
      return false;
  return true;
}

SurfaceInvariants surface_invariants_from(const Integer &g1, const Integer &g2, const Integer &group_order)
{
  SurfaceInvariants inv{g1, g2, 0, 0, 0};
  const Integer product = (2 - 2 * g1) * (2 - 2 * g2);
  if (product % group_order != 0)
    throw DomainError("Euler number not divisible by the group order");
  inv.euler_e = product / group_order;
  if (inv.euler_e % 4 != 0)
    throw DomainError("holomorphic Euler characteristic not integral");
  inv.chi = inv.euler_e / 4;
  inv.K2 = 8 * inv.chi;
  if (12 * inv.chi != inv.K2 + inv.euler_e)
    throw std::logic_error("Noether formula violated");
  return inv;
}

SurfaceInvariants surface_invariants(const UnmixedStructure &s, const FiniteGroup &g)
{
  if (!is_unmixed_beauville(s, g))
    throw DomainError("action not free");
  auto genus_of = [&](const SphericalTriple &t) {
    auto o = t.orders();
    return dessins::triangle_genus(Integer(static_cast<unsigned long>(g.size())),
                                   {static_cast<unsigned>(o[0]), static_cast<unsigned>(o[1]),
                                    static_cast<unsigned>(o[2])});
  };
  return surface_invariants_from(genus_of(s.triple1), genus_of(s.triple2),
                                 Integer(static_cast<unsigned long>(g.size())));
}

std::vector<perm::Signature> hyperbolic_signatures(const FiniteGroup &g, unsigned bound)
{
  std::set<unsigned> orders;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.element_order(i) >= 2 && g.element_order(i) <= bound)
      orders.insert(static_cast<unsigned>(g.element_order(i)));
  std::vector<unsigned> o(orders.begin(), orders.end());
  std::vector<perm::Signature> out;
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = i; j < o.size(); ++j)
      for (std::size_t k = j; k < o.size(); ++k) {
        const unsigned a = o[i], b = o[j], c = o[k];
        // 1/a + 1/b + 1/c < 1  <=>  bc + ac + ab < abc
        if (b * c + a * c + a * b < a * b * c)
          out.push_back({a, b, c});
      }
  return out;
}

namespace {

struct Candidate
{
  SphericalTriple triple;
  SigmaSet sigma;
};

std::vector<Candidate> candidates(const FiniteGroup &g, const std::vector<perm::Signature> &signatures)
{
  std::vector<Candidate> out;
  for (const auto &sig : signatures)
    for (auto &t : perm::enumerate_spherical_ordered(g, sig[0], sig[1], sig[2])) {
      SigmaSet s = sigma_set(t, g);
      out.push_back({std::move(t), std::move(s)});
    }
  return out;
}

} // namespace

std::vector<UnmixedStructure> search_beauville(const FiniteGroup &g, unsigned signature_bound)
{
  return search_beauville(g, hyperbolic_signatures(g, signature_bound));
}

std::vector<UnmixedStructure> search_beauville(const FiniteGroup &g, const std::vector<perm::Signature> &signatures)
{
  const auto cands = candidates(g, signatures);
  const long n = static_cast<long>(cands.size());
  std::vector<std::vector<UnmixedStructure>> found(cands.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      if (cands[static_cast<std::size_t>(i)].sigma.meets_only_in(cands[static_cast<std::size_t>(j)].sigma,
                                                                 g.identity_index()))
        found[static_cast<std::size_t>(i)].push_back(
          {cands[static_cast<std::size_t>(i)].triple, cands[static_cast<std::size_t>(j)].triple});
  std::vector<UnmixedStructure> out;
  for (auto &f : found)
    out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<UnmixedStructure> search_beauville_serial(const FiniteGroup &g, unsigned signature_bound)
{
  return search_beauville_serial(g, hyperbolic_signatures(g, signature_bound));
}

std::vector<UnmixedStructure> search_beauville_serial(const FiniteGroup &g,
                                                      const std::vector<perm::Signature> &signatures)
{
  const auto cands = candidates(g, signatures);
  std::vector<UnmixedStructure> out;
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (cands[i].sigma.meets_only_in(cands[j].sigma, g.identity_index()))
        out.push_back({cands[i].triple, cands[j].triple});
  return out;
}

} // namespace tforge::beauville
