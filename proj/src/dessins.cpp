#include "tforge/dessins.hpp"

#include "tforge/error.hpp"
#include "tforge/spherical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace tforge::dessins {

MonodromyTriple MonodromyTriple::complete(const Perm &s0, const Perm &s1)
{
  return {s0, s1, (s0 * s1).inverse()};
}

namespace {

void validate_partition(unsigned n, std::vector<unsigned> &p, const char *name)
{
  if (p.empty() || std::find(p.begin(), p.end(), 0u) != p.end())
    throw DomainError(std::string(name) + " must consist of positive parts");
  if (std::accumulate(p.begin(), p.end(), 0u) != n)
    throw DomainError(std::string(name) + " is not a partition of n");
  std::sort(p.rbegin(), p.rend());
}

Perm of_type(unsigned n, const std::vector<unsigned> &type)
{
  std::vector<std::vector<unsigned>> cycles;
  unsigned next = 0;
  for (auto len : type) {
    std::vector<unsigned> c(len);
    std::iota(c.begin(), c.end(), next);
    next += len;
    cycles.push_back(std::move(c));
  }
  return Perm::from_cycles(n, cycles);
}

std::uint64_t factorial(unsigned n)
{
  std::uint64_t f = 1;
  for (unsigned k = 2; k <= n; ++k)
    f *= k;
  return f;
}

// k-th permutation of {0..n-1} in lexicographic order.
Perm unrank(unsigned n, std::uint64_t k)
{
  std::vector<Perm::point_type> pool(n), img;
  std::iota(pool.begin(), pool.end(), Perm::point_type{0});
  for (unsigned i = n; i-- > 0;) {
    const std::uint64_t f = factorial(i);
    const std::size_t pos = static_cast<std::size_t>(k / f);
    k %= f;
    img.push_back(pool[pos]);
    pool.erase(pool.begin() + static_cast<long>(pos));
  }
  return Perm(std::move(img));
}

struct Found
{
  std::vector<Perm> key;
  MonodromyTriple triple;
};

std::optional<Found> examine(const Perm &s0, const Perm &s1, const std::vector<unsigned> &nu, unsigned n)
{
  if (s1.cycle_type() != nu)
    return std::nullopt;
  MonodromyTriple t = MonodromyTriple::complete(s0, s1);
  if (t.sigma_inf.cycle_type() != std::vector<unsigned>{n})
    return std::nullopt;
  return Found{canonical_pair(t), std::move(t)};
}

std::vector<DessinClass> finish(unsigned n, std::vector<Found> found)
{
  std::sort(found.begin(), found.end(), [](const Found &a, const Found &b) { return a.key < b.key; });
  found.erase(std::unique(found.begin(), found.end(), [](const Found &a, const Found &b) { return a.key == b.key; }),
              found.end());
  std::vector<DessinClass> out;
  for (auto &f : found) {
    DessinClass c;
    c.representative = MonodromyTriple::complete(f.key[0], f.key[1]);
    const auto canon = perm::canonical_symmetric({c.representative.sigma0, c.representative.sigma1});
    c.class_size = factorial(n) / canon.centralizer_order;
    c.monodromy_group_order =
      perm::PermGroup(n, {c.representative.sigma0, c.representative.sigma1}).order_u64();
    c.is_real = is_real(c.representative);
    if (!c.representative.product_is_identity() || !c.representative.transitive())
      throw std::logic_error("classified representative violates the triple invariants");
    out.push_back(std::move(c));
  }
  return out;
}

void validate_types(unsigned n, std::vector<unsigned> &mu, std::vector<unsigned> &nu)
{
  if (n == 0 || n > 10)
    throw DomainError("degree must be between 1 and 10 for exhaustive classification");
  validate_partition(n, mu, "mu");
  validate_partition(n, nu, "nu");
  if (mu.size() + nu.size() != n + 1)
    throw DomainError("type count violates Riemann–Hurwitz for polynomials");
}

} // namespace

std::vector<Perm> canonical_pair(const MonodromyTriple &t)
{
  return perm::canonical_symmetric({t.sigma0, t.sigma1}).form;
}

std::vector<DessinClass> classify_polynomial_monodromies(unsigned n, std::vector<unsigned> mu,
                                                         std::vector<unsigned> nu)
{
  validate_types(n, mu, nu);
  const Perm s0 = of_type(n, mu);
  const long total = static_cast<long>(factorial(n));
  std::vector<Found> found;
#pragma omp parallel
  {
    std::vector<Found> local;
#pragma omp for schedule(static) nowait
    for (long k = 0; k < total; ++k)
      if (auto f = examine(s0, unrank(n, static_cast<std::uint64_t>(k)), nu, n))
        local.push_back(std::move(*f));
#pragma omp critical
    found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  return finish(n, std::move(found));
}

std::vector<DessinClass> classify_polynomial_monodromies_serial(unsigned n, std::vector<unsigned> mu,
                                                                std::vector<unsigned> nu)
{
  validate_types(n, mu, nu);
  const Perm s0 = of_type(n, mu);
  std::vector<Perm::point_type> img(n);
  std::iota(img.begin(), img.end(), Perm::point_type{0});
  std::vector<Found> found;
  do {
    if (auto f = examine(s0, Perm(img), nu, n))
      found.push_back(std::move(*f));
  } while (std::next_permutation(img.begin(), img.end()));
  return finish(n, std::move(found));
}

bool is_real(const MonodromyTriple &t)
{
  return perm::simultaneous_conjugator({t.sigma0, t.sigma1}, {t.sigma0.inverse(), t.sigma1.inverse()})
    .has_value();
}

Integer triangle_genus(const Integer &group_order, std::array<unsigned, 3> orders)
{
  for (auto r : orders)
    if (r < 2)
      throw DomainError("branch orders must be at least 2");
  Rational g = Rational(group_order) / 2 *
                 (Rational(1) - Rational(1, orders[0]) - Rational(1, orders[1]) - Rational(1, orders[2])) +
               1;
  g.canonicalize();
  if (g.get_den() != 1)
    throw DomainError("orders do not divide group order consistently");
  return g.get_num();
}

NormalClosureData normal_closure_data(const MonodromyTriple &t)
{
  if (!t.product_is_identity())
    throw DomainError("monodromy product is not the identity");
  if (!t.transitive())
    throw DomainError("monodromy is not transitive");
  if (t.sigma0.is_identity() || t.sigma1.is_identity() || t.sigma_inf.is_identity())
    throw DomainError("trivial local monodromy: fewer than three branch points");
  NormalClosureData d;
  const std::size_t n = t.degree();
  d.monodromy_group_order = perm::PermGroup(n, {t.sigma0, t.sigma1}).order_u64();
  d.stabilizer_index = n;
  Integer nfact;
  mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
  d.component_count = nfact / d.monodromy_group_order;
  d.genus_of_closure = triangle_genus(Integer(static_cast<unsigned long>(d.monodromy_group_order)),
                                      {static_cast<unsigned>(t.sigma0.order()), static_cast<unsigned>(t.sigma1.order()),
                                       static_cast<unsigned>(t.sigma_inf.order())});
  return d;
}

} // namespace tforge::dessins
