#include "tforge/fpgroup.hpp"

#include "tforge/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tforge::fp {

Word free_reduce(Word w)
{
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word &w)
{
  Word out(w.rbegin(), w.rend());
  for (int &l : out)
    l = -l;
  return out;
}

Word concat(const Word &a, const Word &b)
{
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

Word power(const Word &w, unsigned k)
{
  Word out;
  for (unsigned i = 0; i < k; ++i)
    out.insert(out.end(), w.begin(), w.end());
  return free_reduce(std::move(out));
}

Word commutator(const Word &a, const Word &b)
{
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

bool Presentation::valid() const
{
  for (const auto &r : relators) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const int l = r[i];
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > generator_count)
        return false;
      if (i > 0 && r[i - 1] == -l)
        return false;
    }
  }
  return true;
}

Presentation polygonal_presentation(const std::vector<unsigned> &orders)
{
  if (orders.size() < 2)
    throw std::invalid_argument("a polygonal group needs at least two orders");
  for (unsigned r : orders)
    if (r < 2)
      throw std::invalid_argument("polygonal orders must be at least 2");
  Presentation p;
  p.generator_count = orders.size() - 1;
  Word all;
  for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
    p.relators.push_back(power({static_cast<int>(i + 1)}, orders[i]));
    all.push_back(static_cast<int>(i + 1));
  }
  p.relators.push_back(power(all, orders.back()));
  return p;
}

Presentation surface_presentation(unsigned genus)
{
  Presentation p;
  p.generator_count = 2 * genus;
  Word rel;
  for (unsigned i = 0; i < genus; ++i) {
    const int a = static_cast<int>(2 * i + 1), b = a + 1;
    rel = concat(rel, commutator({a}, {b}));
  }
  if (genus > 0)
    p.relators.push_back(rel);
  return p;
}

Presentation direct_product(const Presentation &a, const Presentation &b)
{
  Presentation p;
  p.generator_count = a.generator_count + b.generator_count;
  const int shift = static_cast<int>(a.generator_count);
  p.relators = a.relators;
  for (Word r : b.relators) {
    for (int &l : r)
      l += l > 0 ? shift : -shift;
    p.relators.push_back(std::move(r));
  }
  for (std::size_t i = 1; i <= a.generator_count; ++i)
    for (std::size_t j = 1; j <= b.generator_count; ++j)
      p.relators.push_back(commutator({static_cast<int>(i)}, {static_cast<int>(j) + shift}));
  return p;
}

Perm FiniteImage::evaluate(const Word &w) const
{
  Perm g(target.degree());
  for (int l : w) {
    const Perm &x = images.at(static_cast<std::size_t>(std::abs(l)) - 1);
    g = g * (l > 0 ? x : x.inverse());
  }
  return g;
}

bool FiniteImage::relators_hold(const Presentation &p) const
{
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const Word &r) { return evaluate(r).is_identity(); });
}

bool FiniteImage::surjective() const
{
  return PermGroup(target.degree(), images).order() == target.order();
}

std::size_t CosetTable::apply(std::size_t coset, const Word &w) const
{
  for (int l : w) {
    const auto x = static_cast<std::size_t>(std::abs(l)) - 1;
    coset = l > 0 ? action[x][coset] : inverse[x][coset];
  }
  return coset;
}

bool CosetTable::transitive() const
{
  std::vector<bool> seen(coset_count, false);
  std::deque<std::size_t> queue{base_coset};
  seen[base_coset] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (const auto &a : action)
      if (!seen[a[c]]) {
        seen[a[c]] = true;
        ++count;
        queue.push_back(a[c]);
      }
  }
  return count == coset_count;
}

bool relators_act_trivially(const CosetTable &t, const Presentation &p)
{
  const long n = static_cast<long>(t.coset_count);
  bool ok = true;
#pragma omp parallel for reduction(&& : ok)
  for (long c = 0; c < n; ++c)
    for (const auto &r : p.relators)
      ok = ok && t.apply(static_cast<std::size_t>(c), r) == static_cast<std::size_t>(c);
  return ok;
}

bool relators_act_trivially_serial(const CosetTable &t, const Presentation &p)
{
  for (std::size_t c = 0; c < t.coset_count; ++c)
    for (const auto &r : p.relators)
      if (t.apply(c, r) != c)
        return false;
  return true;
}

namespace {

Perm embed(const Perm &p, std::size_t degree, bool right_half)
{
  std::vector<Perm::point_type> img(2 * degree);
  for (std::size_t x = 0; x < degree; ++x) {
    img[x] = static_cast<Perm::point_type>(right_half ? x : p[x]);
    img[x + degree] = static_cast<Perm::point_type>(degree + (right_half ? p[x] : x));
  }
  return Perm(std::move(img));
}

std::vector<std::uint32_t> index_action(const FiniteGroup &g, const Perm &x, bool left)
{
  std::vector<std::uint32_t> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const long j = g.index_of(left ? x * g.element(i) : g.element(i) * x);
    if (j < 0)
      throw std::invalid_argument("generator image outside the group");
    out[i] = static_cast<std::uint32_t>(j);
  }
  return out;
}

void fill_inverses(CosetTable &t)
{
  t.inverse.assign(t.action.size(), std::vector<std::uint32_t>(t.coset_count));
  for (std::size_t x = 0; x < t.action.size(); ++x)
    for (std::size_t c = 0; c < t.coset_count; ++c)
      t.inverse[x][t.action[x][c]] = static_cast<std::uint32_t>(c);
}

void check_table(const CosetTable &t, const Presentation &p)
{
  if (!t.transitive())
    throw std::logic_error("coset table is not transitive");
  if (!relators_act_trivially(t, p))
    throw std::logic_error("a relator acts nontrivially on the cosets");
}

} // namespace

CosetTable diagonal_coset_table(const Presentation &product, std::size_t first_factor_generators,
                                const FiniteGroup &g, const std::vector<Perm> &images1,
                                const std::vector<Perm> &images2)
{
  if (images1.size() != first_factor_generators ||
      images1.size() + images2.size() != product.generator_count)
    throw std::invalid_argument("marking size does not match the presentation");
  if (!g.generated_by(images1) || !g.generated_by(images2))
    throw DomainError("markings do not generate");

  const std::size_t d = g.degree();
  std::vector<Perm> square_gens;
  for (const auto &x : g.group().generators()) {
    square_gens.push_back(embed(x, d, false));
    square_gens.push_back(embed(x, d, true));
  }
  FiniteImage phi{PermGroup(2 * d, square_gens), {}};
  for (const auto &x : images1)
    phi.images.push_back(embed(x, d, false));
  for (const auto &x : images2)
    phi.images.push_back(embed(x, d, true));
  if (!phi.relators_hold(product))
    throw DomainError("a relator does not map to the identity");
  if (!phi.surjective())
    throw DomainError("markings do not generate");

  CosetTable t;
  t.coset_count = g.size();
  t.base_coset = g.identity_index();
  t.labels.resize(g.size());
  std::iota(t.labels.begin(), t.labels.end(), std::size_t{0});
  t.action.resize(product.generator_count);
  const long gens = static_cast<long>(product.generator_count);
#pragma omp parallel for
  for (long x = 0; x < gens; ++x) {
    const auto ux = static_cast<std::size_t>(x);
    t.action[ux] = ux < first_factor_generators
                     ? index_action(g, images1[ux].inverse(), true)
                     : index_action(g, images2[ux - first_factor_generators], false);
  }
  fill_inverses(t);
  check_table(t, product);
  return t;
}

CosetTable regular_coset_table(const Presentation &p, const FiniteGroup &g, const std::vector<Perm> &images)
{
  if (images.size() != p.generator_count)
    throw std::invalid_argument("marking size does not match the presentation");
  if (!g.generated_by(images))
    throw DomainError("markings do not generate");
  CosetTable t;
  t.coset_count = g.size();
  t.base_coset = g.identity_index();
  t.labels.resize(g.size());
  std::iota(t.labels.begin(), t.labels.end(), std::size_t{0});
  for (const auto &x : images)
    t.action.push_back(index_action(g, x, false));
  fill_inverses(t);
  check_table(t, p);
  return t;
}

Word SubgroupPresentation::schreier_word(std::size_t generator) const
{
  const auto [c, x] = schreier_pairs.at(generator);
  Word w = transversal[c];
  w.push_back(static_cast<int>(x) + 1);
  const Word back = inverse(transversal[schreier_targets[generator]]);
  w.insert(w.end(), back.begin(), back.end());
  return w;
}

SubgroupPresentation reidemeister_schreier(const CosetTable &t, const Presentation &ambient)
{
  const std::size_t n = t.coset_count, m = ambient.generator_count;
  SubgroupPresentation out;
  out.transversal.assign(n, {});
  std::vector<bool> seen(n, false);
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(m, false));
  std::deque<std::size_t> queue{t.base_coset};
  seen[t.base_coset] = true;
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < m; ++x) {
      const auto d = t.action[x][c];
      if (seen[d])
        continue;
      seen[d] = true;
      tree[c][x] = true;
      out.transversal[d] = out.transversal[c];
      out.transversal[d].push_back(static_cast<int>(x) + 1);
      queue.push_back(d);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("coset table is not transitive");

  // id[c][x] = 1-based Schreier generator of the edge (c, x), 0 on tree edges.
  std::vector<std::vector<int>> id(n, std::vector<int>(m, 0));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x = 0; x < m; ++x)
      if (!tree[c][x]) {
        out.schreier_pairs.emplace_back(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(x));
        out.schreier_targets.push_back(t.action[x][c]);
        id[c][x] = static_cast<int>(out.schreier_pairs.size());
      }
  out.presentation.generator_count = out.schreier_pairs.size();
  out.presentation.relators.resize(n * ambient.relators.size());

  const long nn = static_cast<long>(n);
#pragma omp parallel for
  for (long lc = 0; lc < nn; ++lc) {
    const auto c = static_cast<std::size_t>(lc);
    for (std::size_t r = 0; r < ambient.relators.size(); ++r) {
      Word w;
      std::size_t cur = c;
      for (int l : ambient.relators[r]) {
        const auto x = static_cast<std::size_t>(std::abs(l)) - 1;
        if (l > 0) {
          if (id[cur][x])
            w.push_back(id[cur][x]);
          cur = t.action[x][cur];
        } else {
          cur = t.inverse[x][cur];
          if (id[cur][x])
            w.push_back(-id[cur][x]);
        }
      }
      if (cur != c)
        throw std::logic_error("relator does not close up on the coset table");
      out.presentation.relators[c * ambient.relators.size() + r] = free_reduce(std::move(w));
    }
  }
  return out;
}

std::string AbelianInvariants::to_string() const
{
  std::ostringstream os;
  os << "Z^" << free_rank;
  for (const auto &d : torsion)
    os << " + Z/" << d.get_str();
  return os.str();
}

SparseMatrix relation_matrix(const Presentation &p)
{
  SparseMatrix m;
  m.rows = p.relators.size();
  m.cols = p.generator_count;
  std::vector<long> row(p.generator_count, 0);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (int l : p.relators[r])
      row[static_cast<std::size_t>(std::abs(l)) - 1] += l > 0 ? 1 : -1;
    for (int l : p.relators[r]) {
      const auto c = static_cast<std::size_t>(std::abs(l)) - 1;
      if (row[c] != 0) {
        m.entries.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), row[c]});
        row[c] = 0;
      }
    }
    for (int l : p.relators[r])
      row[static_cast<std::size_t>(std::abs(l)) - 1] = 0;
  }
  std::sort(m.entries.begin(), m.entries.end(), [](const auto &a, const auto &b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  return m;
}

void write_triplets(std::ostream &os, const SparseMatrix &m)
{
  os << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n';
  for (const auto &e : m.entries)
    os << e.row << ' ' << e.col << ' ' << e.value << '\n';
}

namespace {

template <class T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

template <class T>
const T *lookup(const SparseRow<T> &row, std::uint32_t col)
{
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto &e, std::uint32_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

/// Row-by-column sparse elimination shared by the integer and modular passes.
/// `Field` supplies: bool pivot_ok(const T&), void combine(row, pivot_row, col)
/// which clears `col` from `row`, and bool is_zero(const T&).
template <class T, class Field>
class Eliminator
{
public:
  Eliminator(std::vector<SparseRow<T>> rows, std::size_t cols, Field f)
  : rows_(std::move(rows))
  , col_rows_(cols)
  , row_alive_(rows_.size(), true)
  , col_alive_(cols, true)
  , mark_(rows_.size(), 0)
  , field_(std::move(f))
  {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto &e : rows_[r])
        col_rows_[e.first].push_back(static_cast<std::uint32_t>(r));
  }

  /// One sweep over the live columns, sparsest first; returns pivots taken.
  std::size_t sweep()
  {
    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 0; c < col_alive_.size(); ++c)
      if (col_alive_[c])
        order.push_back(c);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return col_rows_[a].size() < col_rows_[b].size(); });
    std::size_t pivots = 0;
    for (auto c : order) {
      // col_rows_ may hold stale or repeated rows; keep the live ones once.
      std::vector<std::uint32_t> live;
      long best = -1;
      for (auto r : col_rows_[c]) {
        if (!row_alive_[r] || mark_[r] == c + 1)
          continue;
        const T *v = lookup(rows_[r], c);
        if (!v)
          continue;
        mark_[r] = c + 1;
        live.push_back(r);
        if (field_.pivot_ok(*v) && (best < 0 || rows_[r].size() < rows_[static_cast<std::size_t>(best)].size()))
          best = r;
      }
      for (auto r : live)
        mark_[r] = 0;
      col_rows_[c] = live;
      if (best < 0)
        continue;
      const auto p = static_cast<std::uint32_t>(best);
      for (auto r : live) {
        if (r == p)
          continue;
        field_.combine(rows_[r], rows_[p], c);
        for (const auto &e : rows_[p])
          if (e.first != c)
            col_rows_[e.first].push_back(r);
      }
      row_alive_[p] = false;
      col_alive_[c] = false;
      col_rows_[c].clear();
      ++pivots;
    }
    return pivots;
  }

  std::vector<SparseRow<T>> &rows() { return rows_; }
  const std::vector<bool> &row_alive() const { return row_alive_; }
  const std::vector<bool> &col_alive() const { return col_alive_; }

private:
  std::vector<SparseRow<T>> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<bool> row_alive_, col_alive_;
  std::vector<std::uint32_t> mark_;
  Field field_;
};

template <class T, class Scale>
void axpy_clear(SparseRow<T> &row, const SparseRow<T> &pivot, std::uint32_t col, Scale scale)
{
  // row <- row - factor * pivot, with factor chosen by `scale` so that `col` vanishes.
  const T factor = scale(*lookup(row, col), *lookup(pivot, col));
  SparseRow<T> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, scale.neg_mul(factor, pivot[j].second));
      ++j;
    } else {
      T v = scale.sub_mul(row[i].second, factor, pivot[j].second);
      if (!scale.is_zero(v))
        out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

struct IntegerOps
{
  Integer operator()(const Integer &v, const Integer &p) const { return v / p; }  // p = +-1
  Integer neg_mul(const Integer &f, const Integer &x) const { return -(f * x); }
  Integer sub_mul(const Integer &a, const Integer &f, const Integer &x) const { return a - f * x; }
  bool is_zero(const Integer &v) const { return v == 0; }
};

struct IntegerField
{
  bool pivot_ok(const Integer &v) const { return v == 1 || v == -1; }
  void combine(SparseRow<Integer> &row, const SparseRow<Integer> &pivot, std::uint32_t col) const
  {
    axpy_clear(row, pivot, col, IntegerOps{});
  }
};

struct ModOps
{
  std::uint64_t p;
  std::uint64_t inv(std::uint64_t a) const
  {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1)
        r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }
  std::uint64_t operator()(std::uint64_t v, std::uint64_t piv) const { return v * inv(piv) % p; }
  std::uint64_t neg_mul(std::uint64_t f, std::uint64_t x) const { return (p - f * x % p) % p; }
  std::uint64_t sub_mul(std::uint64_t a, std::uint64_t f, std::uint64_t x) const { return (a + p - f * x % p) % p; }
  bool is_zero(std::uint64_t v) const { return v == 0; }
};

struct ModField
{
  std::uint64_t p;
  bool pivot_ok(std::uint64_t v) const { return v != 0; }
  void combine(SparseRow<std::uint64_t> &row, const SparseRow<std::uint64_t> &pivot, std::uint32_t col) const
  {
    axpy_clear(row, pivot, col, ModOps{p});
  }
};

/// Invariant factors of a dense integer matrix (all nonzero diagonal entries,
/// including units) and its rank.
std::pair<std::vector<Integer>, std::size_t> dense_snf(std::vector<std::vector<Integer>> a)
{
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block as pivot.
    auto find_pivot = [&](std::size_t &pi, std::size_t &pj) {
      bool found = false;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
            found = true;
          }
      return found;
    };
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(pi, pj))
      break;
    for (;;) {
      std::swap(a[t], a[pi]);
      for (auto &row : a)
        std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0)
          continue;
        const Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j)
          a[i][j] -= q * a[t][j];
        if (a[i][t] != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0)
          continue;
        const Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i)
          a[i][j] -= q * a[i][t];
        if (a[t][j] != 0)
          clean = false;
      }
      if (clean)
        break;
      // A remainder is smaller than the pivot; move it into place.
      pi = t;
      pj = t;
      for (std::size_t i = t; i < rows; ++i)
        if (a[i][t] != 0 && abs(a[i][t]) < abs(a[pi][pj])) {
          pi = i;
          pj = t;
        }
      for (std::size_t j = t; j < cols; ++j)
        if (a[t][j] != 0 && abs(a[t][j]) < abs(a[pi][pj])) {
          pi = t;
          pj = j;
        }
    }
    diag.push_back(abs(a[t][t]));
  }
  const std::size_t rank = diag.size();
  // Diagonal to invariant factors: (x, y) -> (gcd, lcm) until the chain divides.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd(diag[i], diag[j]);
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return {diag, rank};
}

AbelianInvariants invariants_from(std::vector<Integer> diag, std::size_t rank, std::size_t cols)
{
  AbelianInvariants inv;
  inv.free_rank = cols - rank;
  for (auto &d : diag)
    if (d > 1)
      inv.torsion.push_back(d);
  return inv;
}

} // namespace

std::size_t rank_mod_p(const SparseMatrix &m, std::uint32_t p)
{
  std::vector<SparseRow<std::uint64_t>> rows(m.rows);
  for (const auto &e : m.entries) {
    const long mod = e.value % static_cast<long>(p);
    if (mod != 0)
      rows[e.row].emplace_back(e.col, static_cast<std::uint64_t>(mod < 0 ? mod + static_cast<long>(p) : mod));
  }
  Eliminator<std::uint64_t, ModField> e(std::move(rows), m.cols, ModField{p});
  std::size_t rank = 0;
  for (std::size_t k; (k = e.sweep()) > 0;)
    rank += k;
  return rank;
}

AbelianInvariants abelianization_dense(const Presentation &p)
{
  const auto m = relation_matrix(p);
  std::vector<std::vector<Integer>> a(m.rows, std::vector<Integer>(m.cols, 0));
  for (const auto &e : m.entries)
    a[e.row][e.col] = Integer(e.value);
  auto [diag, rank] = dense_snf(std::move(a));
  return invariants_from(std::move(diag), rank, m.cols);
}

AbelianInvariants abelianization(const Presentation &p, std::uint32_t check_prime)
{
  const auto m = relation_matrix(p);
  std::vector<SparseRow<Integer>> rows(m.rows);
  for (const auto &e : m.entries)
    rows[e.row].emplace_back(e.col, Integer(e.value));
  Eliminator<Integer, IntegerField> elim(std::move(rows), m.cols, IntegerField{});
  std::size_t unit_rank = 0;
  for (std::size_t k; (k = elim.sweep()) > 0;)
    unit_rank += k;

  // The remaining live block is reduced densely.
  std::vector<std::uint32_t> live_cols;
  std::vector<long> col_pos(m.cols, -1);
  for (std::uint32_t c = 0; c < m.cols; ++c)
    if (elim.col_alive()[c]) {
      col_pos[c] = static_cast<long>(live_cols.size());
      live_cols.push_back(c);
    }
  std::vector<std::vector<Integer>> dense;
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (!elim.row_alive()[r] || elim.rows()[r].empty())
      continue;
    std::vector<Integer> row(live_cols.size(), 0);
    for (const auto &[c, v] : elim.rows()[r])
      row[static_cast<std::size_t>(col_pos[c])] = v;
    dense.push_back(std::move(row));
  }
  auto [diag, rank] = dense_snf(std::move(dense));
  auto inv = invariants_from(diag, rank + unit_rank, m.cols);

  std::size_t divisible = 0;
  for (const auto &d : inv.torsion)
    if (d % check_prime == 0)
      ++divisible;
  if (rank_mod_p(m, check_prime) + divisible != rank + unit_rank)
    throw std::logic_error("rank modulo p disagrees with the Smith normal form");
  return inv;
}

std::uint32_t random_prime_30(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<std::uint32_t> dist(1u << 29, (1u << 30) - 1);
  for (;;) {
    const std::uint32_t c = dist(rng) | 1u;
    bool prime = true;
    for (std::uint32_t d = 3; d * d <= c && prime; d += 2)
      prime = c % d != 0;
    if (prime)
      return c;
  }
}

Pi1Data pi1_diagonal(const Presentation &p1, const std::vector<Perm> &images1, const Presentation &p2,
                     const std::vector<Perm> &images2, const FiniteGroup &g)
{
  Pi1Data d;
  d.product = direct_product(p1, p2);
  d.table = diagonal_coset_table(d.product, p1.generator_count, g, images1, images2);
  d.subgroup = reidemeister_schreier(d.table, d.product);
  return d;
}

Pi1Data pi1_surface(const beauville::UnmixedStructure &s, const FiniteGroup &g)
{
  if (!beauville::is_unmixed_beauville(s, g))
    throw DomainError("action not free");
  auto polygonal = [](const perm::SphericalTriple &t) {
    const auto o = t.orders();
    return polygonal_presentation(
      {static_cast<unsigned>(o[0]), static_cast<unsigned>(o[1]), static_cast<unsigned>(o[2])});
  };
  return pi1_diagonal(polygonal(s.triple1), {s.triple1.a1, s.triple1.a2}, polygonal(s.triple2),
                      {s.triple2.a1, s.triple2.a2}, g);
}

bool schreier_generators_in_diagonal(const Pi1Data &d, std::size_t first_factor_generators,
                                     const std::vector<Perm> &images1, const std::vector<Perm> &images2,
                                     std::size_t count, std::uint64_t seed)
{
  const std::size_t total = d.subgroup.schreier_pairs.size();
  if (total == 0)
    return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, total - 1);
  const std::size_t degree = images1.empty() ? images2.at(0).degree() : images1[0].degree();
  for (std::size_t k = 0; k < std::min(count, total); ++k) {
    const std::size_t i = count >= total ? k : pick(rng);
    const Word w = d.subgroup.schreier_word(i);
    Perm g1(degree), g2(degree);
    for (int l : w) {
      const auto gen = static_cast<std::size_t>(std::abs(l)) - 1;
      if (gen < first_factor_generators)
        g1 = g1 * (l > 0 ? images1[gen] : images1[gen].inverse());
      else
        g2 = g2 * (l > 0 ? images2[gen - first_factor_generators]
                         : images2[gen - first_factor_generators].inverse());
    }
    if (g1 != g2)
      return false;
  }
  return true;
}

} // namespace tforge::fp
