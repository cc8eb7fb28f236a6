#include "tforge/spherical.hpp"

#include "tforge/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tforge::perm {

Signature make_signature(unsigned a, unsigned b, unsigned c)
{
  Signature s{a, b, c};
  std::sort(s.begin(), s.end());
  return s;
}

SphericalTriple SphericalTriple::complete(const Perm &a1, const Perm &a2)
{
  return {a1, a2, (a1 * a2).inverse()};
}

SphericalTriple SphericalTriple::parse(std::string_view a1, std::string_view a2, std::string_view a3,
                                       std::size_t degree)
{
  return {Perm::parse(a1, degree), Perm::parse(a2, degree), Perm::parse(a3, degree)};
}

Signature SphericalTriple::signature() const
{
  auto o = orders();
  return make_signature(static_cast<unsigned>(o[0]), static_cast<unsigned>(o[1]), static_cast<unsigned>(o[2]));
}

SphericalTriple braid_first(const SphericalTriple &t) { return {t.a2, t.a1.conjugate_by(t.a2), t.a3}; }

SphericalTriple braid_second(const SphericalTriple &t) { return {t.a1, t.a3, t.a2.conjugate_by(t.a3)}; }

SphericalTriple braid_first_inverse(const SphericalTriple &t)
{
  return {t.a2.conjugate_by(t.a1.inverse()), t.a1, t.a3};
}

SphericalTriple braid_second_inverse(const SphericalTriple &t)
{
  return {t.a1, t.a3.conjugate_by(t.a2.inverse()), t.a2};
}

SphericalTriple canonical_under(const FiniteGroup &g, const SphericalTriple &t)
{
  const long i1 = g.index_of(t.a1);
  if (i1 < 0)
    throw std::invalid_argument("triple entry outside the group");
  const std::size_t cls = g.class_of(static_cast<std::size_t>(i1));
  const Perm &rep = g.element(g.class_representative(cls));
  const Perm &tr = g.transporter(static_cast<std::size_t>(i1));
  Perm best = t.a2.conjugate_by(tr);
  for (auto z : g.rep_centralizer(cls)) {
    Perm cand = t.a2.conjugate_by(tr * g.element(z));
    if (cand < best)
      best = std::move(cand);
  }
  return SphericalTriple::complete(rep, best);
}

namespace {

// Is a2 the smallest of its conjugates under the centralizer of a1?
bool minimal_under(const Perm &a2, const std::vector<std::size_t> &centralizer, const FiniteGroup &g)
{
  for (auto z : centralizer)
    if (a2.conjugate_by(g.element(z)) < a2)
      return false;
  return true;
}

std::vector<std::pair<unsigned, std::size_t>> first_entries(const FiniteGroup &g, unsigned o1)
{
  std::vector<std::pair<unsigned, std::size_t>> out;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    if (g.element_order(g.class_representative(c)) == o1)
      out.emplace_back(o1, c);
  return out;
}

std::optional<SphericalTriple> try_candidate(const FiniteGroup &g, std::size_t cls, std::size_t i,
                                             unsigned o2, unsigned o3)
{
  if (g.element_order(i) != o2)
    return std::nullopt;
  const Perm &a1 = g.element(g.class_representative(cls));
  const Perm &a2 = g.element(i);
  Perm a3 = (a1 * a2).inverse();
  if (a3.order() != o3)
    return std::nullopt;
  if (!minimal_under(a2, g.rep_centralizer(cls), g))
    return std::nullopt;
  if (!g.generated_by({a1, a2}))
    return std::nullopt;
  return SphericalTriple{a1, a2, std::move(a3)};
}

std::vector<std::array<unsigned, 3>> orderings(Signature s)
{
  std::sort(s.begin(), s.end());
  std::vector<std::array<unsigned, 3>> out;
  do
    out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

} // namespace

std::vector<SphericalTriple> enumerate_spherical_ordered(const FiniteGroup &g, unsigned o1, unsigned o2,
                                                         unsigned o3)
{
  std::vector<SphericalTriple> out;
  const long n = static_cast<long>(g.size());
  for (auto [order, cls] : first_entries(g, o1)) {
    (void)order;
    std::vector<std::optional<SphericalTriple>> slot(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < n; ++i)
      slot[static_cast<std::size_t>(i)] = try_candidate(g, cls, static_cast<std::size_t>(i), o2, o3);
    for (auto &s : slot)
      if (s)
        out.push_back(std::move(*s));
  }
  return out;
}

std::vector<SphericalTriple> enumerate_spherical(const FiniteGroup &g, Signature signature)
{
  std::vector<SphericalTriple> out;
  for (const auto &o : orderings(signature)) {
    auto part = enumerate_spherical_ordered(g, o[0], o[1], o[2]);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<SphericalTriple> enumerate_spherical_serial(const FiniteGroup &g, Signature signature)
{
  std::vector<SphericalTriple> out;
  for (const auto &o : orderings(signature))
    for (auto [order, cls] : first_entries(g, o[0])) {
      (void)order;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (auto t = try_candidate(g, cls, i, o[1], o[2]))
          out.push_back(std::move(*t));
    }
  return out;
}

namespace {

struct MoveChecker
{
  const FiniteGroup &g;

  void check(const SphericalTriple &from, const SphericalTriple &to, bool generating) const
  {
    if (!to.is_spherical())
      throw std::logic_error("Hurwitz move broke the product relation");
    if (to.signature() != from.signature())
      throw std::logic_error("Hurwitz move changed the signature");
    if (generating && !g.generated_by({to.a1, to.a2}))
      throw std::logic_error("Hurwitz move changed the generated group");
  }
};

std::vector<SphericalTriple> moves(const SphericalTriple &t)
{
  return {braid_first(t), braid_second(t), braid_first_inverse(t), braid_second_inverse(t)};
}

std::uint64_t conjugation_orbit_size(const FiniteGroup &g, const SphericalTriple &canonical)
{
  const long i1 = g.index_of(canonical.a1);
  const auto &cent = g.rep_centralizer(g.class_of(static_cast<std::size_t>(i1)));
  std::uint64_t stab = 0;
  for (auto z : cent)
    if (canonical.a2.conjugate_by(g.element(z)) == canonical.a2)
      ++stab;
  return g.size() / stab;
}

} // namespace

std::vector<HurwitzOrbit> hurwitz_classes(const FiniteGroup &g, const std::vector<SphericalTriple> &triples,
                                          HurwitzMode mode, const std::vector<Perm> &outer)
{
  const MoveChecker checker{g};
  const bool with_conj = mode == HurwitzMode::braid_and_conjugation;
  std::unordered_map<SphericalTriple, std::size_t, TripleHash> orbit_of;
  std::vector<HurwitzOrbit> orbits;

  for (std::size_t idx = 0; idx < triples.size(); ++idx) {
    const SphericalTriple &input = triples[idx];
    if (!input.is_spherical())
      throw std::invalid_argument("input triple is not spherical");
    const SphericalTriple start = with_conj ? canonical_under(g, input) : input;
    if (auto it = orbit_of.find(start); it != orbit_of.end()) {
      orbits[it->second].members.push_back(idx);
      continue;
    }
    const bool generating = g.generated_by({input.a1, input.a2});
    const std::size_t id = orbits.size();
    HurwitzOrbit orbit;
    orbit.representative = input;
    orbit.members.push_back(idx);

    std::vector<SphericalTriple> queue{start};
    orbit_of.emplace(start, id);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const SphericalTriple cur = queue[k];
      std::vector<SphericalTriple> next = moves(cur);
      for (const auto &z : outer)
        next.push_back(cur.conjugate_by(z));
      for (auto &n : next) {
        checker.check(cur, n, generating);
        SphericalTriple key = with_conj ? canonical_under(g, n) : std::move(n);
        if (orbit_of.emplace(key, id).second)
          queue.push_back(std::move(key));
      }
    }

    if (with_conj) {
      orbit.class_count = queue.size();
      for (const auto &t : queue)
        orbit.triple_count += conjugation_orbit_size(g, t);
    } else {
      orbit.triple_count = queue.size();
      std::vector<SphericalTriple> classes;
      for (const auto &t : queue)
        classes.push_back(canonical_under(g, t));
      std::sort(classes.begin(), classes.end());
      orbit.class_count = static_cast<std::uint64_t>(std::unique(classes.begin(), classes.end()) - classes.begin());
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

namespace {

class ConjugatorSearch
{
public:
  ConjugatorSearch(const std::vector<Perm> &t1, const std::vector<Perm> &t2, const PermGroup *ambient)
  : t1_(t1), t2_(t2), ambient_(ambient), n_(t1.empty() ? 0 : t1[0].degree()), image_(n_, -1), used_(n_, false)
  {
  }

  std::optional<Perm> run()
  {
    if (search())
      return result_;
    return std::nullopt;
  }

private:
  bool assign(std::size_t y, std::size_t z, std::vector<std::size_t> &trail)
  {
    std::vector<std::pair<std::size_t, std::size_t>> queue{{y, z}};
    image_[y] = static_cast<long>(z);
    used_[z] = true;
    trail.push_back(y);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      auto [p, q] = queue[k];
      for (std::size_t i = 0; i < t1_.size(); ++i) {
        const std::size_t p2 = t1_[i][p], q2 = t2_[i][q];
        if (image_[p2] >= 0) {
          if (static_cast<std::size_t>(image_[p2]) != q2)
            return false;
          continue;
        }
        if (used_[q2])
          return false;
        image_[p2] = static_cast<long>(q2);
        used_[q2] = true;
        trail.push_back(p2);
        queue.emplace_back(p2, q2);
      }
    }
    return true;
  }

  void undo(std::vector<std::size_t> &trail)
  {
    for (auto p : trail) {
      used_[static_cast<std::size_t>(image_[p])] = false;
      image_[p] = -1;
    }
    trail.clear();
  }

  bool search()
  {
    std::size_t y = 0;
    while (y < n_ && image_[y] >= 0)
      ++y;
    if (y == n_) {
      std::vector<Perm::point_type> img(n_);
      for (std::size_t x = 0; x < n_; ++x)
        img[x] = static_cast<Perm::point_type>(image_[x]);
      Perm c(std::move(img));
      if (ambient_ && !ambient_->contains(c))
        return false;
      result_ = std::move(c);
      return true;
    }
    for (std::size_t z = 0; z < n_; ++z) {
      if (used_[z])
        continue;
      std::vector<std::size_t> trail;
      if (assign(y, z, trail) && search())
        return true;
      undo(trail);
    }
    return false;
  }

  const std::vector<Perm> &t1_;
  const std::vector<Perm> &t2_;
  const PermGroup *ambient_;
  std::size_t n_;
  std::vector<long> image_;
  std::vector<bool> used_;
  Perm result_;
};

std::optional<Perm> conjugator_impl(const std::vector<Perm> &t1, const std::vector<Perm> &t2,
                                    const PermGroup *ambient)
{
  if (t1.size() != t2.size())
    throw std::invalid_argument("tuples of different lengths");
  if (t1.empty())
    return ambient ? Perm(ambient->degree()) : Perm();
  for (std::size_t i = 0; i < t1.size(); ++i) {
    if (t1[i].degree() != t1[0].degree() || t2[i].degree() != t1[0].degree())
      throw std::invalid_argument("tuples of different degrees");
    if (t1[i].cycle_type() != t2[i].cycle_type())
      return std::nullopt;
  }
  return ConjugatorSearch(t1, t2, ambient).run();
}

} // namespace

std::optional<Perm> simultaneous_conjugator(const std::vector<Perm> &t1, const std::vector<Perm> &t2,
                                            const PermGroup &ambient)
{
  return conjugator_impl(t1, t2, &ambient);
}

std::optional<Perm> simultaneous_conjugator(const std::vector<Perm> &t1, const std::vector<Perm> &t2)
{
  return conjugator_impl(t1, t2, nullptr);
}

SymmetricCanonical canonical_symmetric(const std::vector<Perm> &tuple)
{
  if (tuple.empty())
    throw std::invalid_argument("empty tuple");
  const std::size_t n = tuple[0].degree();
  SymmetricCanonical best;
  std::vector<long> label(n);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(label.begin(), label.end(), -1);
    order.assign(1, s);
    label[s] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (const auto &p : tuple) {
        const std::size_t y = p[order[k]];
        if (label[y] < 0) {
          label[y] = static_cast<long>(order.size());
          order.push_back(y);
        }
      }
    if (order.size() != n)
      throw std::invalid_argument("canonical_symmetric needs a transitive tuple");
    std::vector<Perm> form;
    for (const auto &p : tuple) {
      std::vector<Perm::point_type> img(n);
      for (std::size_t x = 0; x < n; ++x)
        img[static_cast<std::size_t>(label[x])] = static_cast<Perm::point_type>(label[p[x]]);
      form.emplace_back(std::move(img));
    }
    if (best.form.empty() || form < best.form) {
      best.form = std::move(form);
      best.centralizer_order = 1;
    } else if (form == best.form) {
      ++best.centralizer_order;
    }
  }
  return best;
}

} // namespace tforge::perm
