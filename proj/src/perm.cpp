#include "tforge/perm.hpp"

#include "tforge/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tforge::perm {

Perm::Perm(std::size_t degree)
: img_(degree)
{
  std::iota(img_.begin(), img_.end(), point_type{0});
}

Perm::Perm(std::vector<point_type> images)
: img_(std::move(images))
{
  std::vector<bool> seen(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || seen[x])
      throw std::invalid_argument("images do not form a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<unsigned>> &cycles)
{
  std::vector<point_type> img(degree);
  std::iota(img.begin(), img.end(), point_type{0});
  std::vector<bool> used(degree, false);
  for (const auto &c : cycles) {
    for (auto x : c) {
      if (x >= degree)
        throw std::invalid_argument("cycle point exceeds degree");
      if (used[x])
        throw std::invalid_argument("cycles are not disjoint");
      used[x] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      img[c[i]] = static_cast<point_type>(c[(i + 1) % c.size()]);
  }
  return Perm(std::move(img));
}

Perm Perm::parse(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<unsigned>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<unsigned> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        ++i;
      if (start == i)
        throw std::invalid_argument("bad cycle notation: " + std::string(text));
      unsigned v = static_cast<unsigned>(std::stoul(std::string(text.substr(start, i - start))));
      if (v == 0)
        throw std::invalid_argument("points are 1-based: " + std::string(text));
      cycle.push_back(v - 1);
      max_point = std::max<std::size_t>(max_point, v);
      skip_ws();
      if (i < text.size() && text[i] == ',')
        ++i;
    }
    if (cycle.size() > 1)
      cycles.push_back(std::move(cycle));
    skip_ws();
  }
  if (degree == 0)
    degree = max_point;
  if (max_point > degree)
    throw std::invalid_argument("cycle point exceeds degree: " + std::string(text));
  return from_cycles(degree, cycles);
}

Perm Perm::operator*(const Perm &rhs) const
{
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<point_type> out(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    out[x] = rhs.img_[img_[x]];
  Perm p;
  p.img_ = std::move(out);
  return p;
}

Perm Perm::inverse() const
{
  Perm p;
  p.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    p.img_[img_[x]] = static_cast<point_type>(x);
  return p;
}

Perm Perm::pow(long exponent) const
{
  Perm base = exponent < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Perm result(degree());
  while (e) {
    if (e & 1u)
      result = result * base;
    e >>= 1u;
    if (e)
      base = base * base;
  }
  return result;
}

Perm Perm::conjugate_by(const Perm &c) const
{
  // x^(c^-1 a c): the point c(y) goes to c(a(y)).
  Perm p;
  p.img_.resize(img_.size());
  for (std::size_t y = 0; y < img_.size(); ++y)
    p.img_[c.img_[y]] = c.img_[img_[y]];
  return p;
}

bool Perm::is_identity() const
{
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x)
      return false;
  return true;
}

std::uint64_t Perm::order() const
{
  std::uint64_t o = 1;
  for (auto len : cycle_type())
    o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

std::vector<unsigned> Perm::cycle_type() const
{
  std::vector<unsigned> lens;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x])
      continue;
    unsigned len = 0;
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::vector<std::vector<unsigned>> Perm::cycles() const
{
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x)
      continue;
    std::vector<unsigned> c;
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      c.push_back(static_cast<unsigned>(y));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string s;
  for (const auto &c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

std::size_t Perm::support_bound() const
{
  for (std::size_t x = img_.size(); x-- > 0;)
    if (img_[x] != x)
      return x + 1;
  return 0;
}

std::size_t Perm::hash() const
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : img_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<unsigned> cycle_type(const Perm &p) { return p.cycle_type(); }

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
: degree_(degree)
{
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree does not match group degree");
    if (!g.is_identity())
      generators_.push_back(std::move(g));
  }
  if (degree_ <= max_degree)
    build();
}

PermGroup PermGroup::symmetric(std::size_t n)
{
  if (n <= 1)
    return PermGroup(n, {});
  std::vector<unsigned> full(n);
  std::iota(full.begin(), full.end(), 0u);
  return PermGroup(n, {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {full})});
}

PermGroup PermGroup::alternating(std::size_t n)
{
  std::vector<Perm> gens;
  for (unsigned k = 2; k < n; ++k)
    gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::named(std::string_view name)
{
  if (name == "trivial" || name == "1")
    return PermGroup(1, {});
  if (name.substr(0, 5) == "gens:") {
    std::vector<std::string> parts;
    std::string_view rest = name.substr(5);
    std::size_t degree = 0;
    std::vector<std::string_view> pieces;
    while (!rest.empty()) {
      auto semi = rest.find(';');
      pieces.push_back(rest.substr(0, semi));
      if (semi == std::string_view::npos)
        break;
      rest.remove_prefix(semi + 1);
    }
    for (auto piece : pieces)
      degree = std::max(degree, Perm::parse(piece).degree());
    std::vector<Perm> gens;
    for (auto piece : pieces)
      gens.push_back(Perm::parse(piece, degree));
    return PermGroup(std::max<std::size_t>(degree, 1), std::move(gens));
  }
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'S' || name[0] == 'C')) {
    std::size_t n = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("unknown group name: " + std::string(name));
      n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    if (n == 0 || n > max_degree)
      throw std::invalid_argument("group degree out of range: " + std::string(name));
    if (name[0] == 'A')
      return alternating(n);
    if (name[0] == 'S')
      return symmetric(n);
    std::vector<unsigned> full(n);
    std::iota(full.begin(), full.end(), 0u);
    return PermGroup(n, {Perm::from_cycles(n, {full})});
  }
  throw std::invalid_argument("unknown group name: " + std::string(name));
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const
{
  for (std::size_t j = from; j < chain_.size(); ++j) {
    const unsigned b = g[chain_[j].base_point];
    if (!chain_[j].transversal[b])
      return {std::move(g), j};
    g = g * *chain_[j].inverse[b];
  }
  return {std::move(g), chain_.size()};
}

void PermGroup::recompute_orbit(std::size_t level)
{
  Level &lv = chain_[level];
  lv.transversal.assign(degree_, std::nullopt);
  lv.inverse.assign(degree_, std::nullopt);
  lv.orbit.clear();
  lv.transversal[lv.base_point] = Perm(degree_);
  lv.inverse[lv.base_point] = Perm(degree_);
  lv.orbit.push_back(lv.base_point);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const unsigned b = lv.orbit[k];
    for (std::size_t j = level; j < chain_.size(); ++j)
      for (const auto &s : chain_[j].gens) {
        const unsigned c = s[b];
        if (!lv.transversal[c]) {
          lv.transversal[c] = *lv.transversal[b] * s;
          lv.inverse[c] = lv.transversal[c]->inverse();
          lv.orbit.push_back(c);
        }
      }
  }
}

void PermGroup::build()
{
  chain_.clear();
  chain_built_ = true;
  if (generators_.empty())
    return;
  auto moved_point = [](const Perm &g) {
    for (std::size_t x = 0; x < g.degree(); ++x)
      if (g[x] != x)
        return static_cast<unsigned>(x);
    throw std::logic_error("identity has no moved point");
  };
  chain_.push_back(Level{moved_point(generators_[0]), generators_, {}, {}, {}});

  // Deterministic Schreier–Sims: levels are checked from the deepest up; a
  // Schreier generator that fails to sift becomes a strong generator at the
  // level where it stopped, and checking resumes there.
  std::size_t i = chain_.size();
  while (i-- > 0) {
    recompute_orbit(i);
    bool added = false;
    for (std::size_t k = 0; k < chain_[i].orbit.size() && !added; ++k) {
      const unsigned b = chain_[i].orbit[k];
      for (std::size_t j = i; j < chain_.size() && !added; ++j) {
        for (std::size_t s = 0; s < chain_[j].gens.size(); ++s) {
          const Perm &gen = chain_[j].gens[s];
          const unsigned c = gen[b];
          Perm schreier = *chain_[i].transversal[b] * gen * *chain_[i].inverse[c];
          auto [residue, level] = strip(std::move(schreier), i + 1);
          if (residue.is_identity())
            continue;
          if (level == chain_.size())
            chain_.push_back(Level{moved_point(residue), {}, {}, {}, {}});
          chain_[level].gens.push_back(std::move(residue));
          for (std::size_t l = level + 1; l-- > i + 1;)
            recompute_orbit(l);
          i = level + 1;
          added = true;
          break;
        }
      }
    }
  }
}

Integer PermGroup::order() const
{
  if (!chain_built_)
    throw DomainError("degree guard exceeded: group order needs degree <= 32");
  Integer o = 1;
  for (const auto &lv : chain_)
    o *= static_cast<unsigned long>(lv.orbit.size());
  return o;
}

std::uint64_t PermGroup::order_u64() const
{
  Integer o = order();
  if (!o.fits_ulong_p())
    throw std::overflow_error("group order exceeds 64 bits");
  return o.get_ui();
}

bool PermGroup::contains(const Perm &g) const
{
  if (!chain_built_)
    throw DomainError("degree guard exceeded: membership needs degree <= 32");
  if (g.degree() != degree_)
    return false;
  auto [residue, level] = strip(g, 0);
  return level == chain_.size() && residue.is_identity();
}

std::vector<Perm> PermGroup::elements(std::uint64_t limit) const
{
  if (order() > limit)
    throw DomainError("group too large to enumerate");
  std::vector<Perm> out{Perm(degree_)};
  // Every element is u_k * ... * u_0 with u_j from level j's transversal.
  for (std::size_t j = chain_.size(); j-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * chain_[j].orbit.size());
    for (const auto &e : out)
      for (auto b : chain_[j].orbit)
        next.push_back(e * *chain_[j].transversal[b]);
    out = std::move(next);
  }
  return out;
}

std::vector<unsigned> PermGroup::base() const
{
  std::vector<unsigned> b;
  for (const auto &lv : chain_)
    b.push_back(lv.base_point);
  return b;
}

bool PermGroup::is_transitive() const { return generates_transitive(generators_, degree_); }

bool generates_transitive(const std::vector<Perm> &tuple, std::size_t degree)
{
  if (degree == 0)
    return true;
  std::vector<bool> seen(degree, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto &g : tuple) {
      auto y = g[queue[k]];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  return queue.size() == degree;
}

// -------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(PermGroup group, std::uint64_t limit)
: group_(std::move(group))
{
  elements_ = group_.elements(limit);
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], i);
  identity_ = index_.at(Perm(group_.degree()));
  orders_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    orders_[i] = elements_[i].order();

  const std::size_t none = static_cast<std::size_t>(-1);
  class_id_.assign(elements_.size(), none);
  transporter_.assign(elements_.size(), Perm());
  const auto &gens = group_.generators();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (class_id_[i] != none)
      continue;
    const std::size_t c = class_reps_.size();
    class_reps_.push_back(i);
    class_id_[i] = c;
    transporter_[i] = Perm(group_.degree());
    std::vector<std::size_t> queue{i};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const std::size_t x = queue[k];
      for (const auto &s : gens) {
        const std::size_t y = index_.at(elements_[x].conjugate_by(s));
        if (class_id_[y] == none) {
          class_id_[y] = c;
          // rep = t_x^-1 x t_x and y = s^-1 x s, so t_y = s^-1 t_x.
          transporter_[y] = s.inverse() * transporter_[x];
          queue.push_back(y);
        }
      }
    }
    class_sizes_.push_back(queue.size());
  }

  centralizers_.resize(class_reps_.size());
  for (std::size_t c = 0; c < class_reps_.size(); ++c) {
    const Perm &r = elements_[class_reps_[c]];
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] * r == r * elements_[i])
        centralizers_[c].push_back(i);
  }
}

long FiniteGroup::index_of(const Perm &g) const
{
  auto it = index_.find(g);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

bool FiniteGroup::generated_by(const std::vector<Perm> &gens) const
{
  return PermGroup(group_.degree(), gens).order() == static_cast<unsigned long>(size());
}

} // namespace tforge::perm
