#include "tforge/special_curves.hpp"

#include "tforge/error.hpp"

#include <algorithm>
#include <sstream>

namespace tforge::curves {

void CurveSpec::validate() const
{
  if (genus < 3)
    throw DomainError("genus must be at least 3");
  if (const auto *a = std::get_if<Rational>(&parameter)) {
    for (const auto &p : fixed_branch_points(genus))
      if (*a == p)
        throw DomainError("singular curve");
  } else {
    const auto &alg = std::get<AlgebraicParameter>(parameter);
    if (alg.minimal_polynomial.degree() < 2)
      throw DomainError("minimal polynomial of an irrational parameter must have degree >= 2");
    if (!rational_roots(alg.minimal_polynomial).roots.empty())
      throw DomainError("minimal polynomial has a rational root");
    if (alg.root_index < 0 || alg.root_index >= alg.minimal_polynomial.degree())
      throw DomainError("root index out of range");
  }
}

std::vector<Rational> fixed_branch_points(int genus)
{
  std::vector<Rational> pts;
  pts.emplace_back(-2 * genus);
  for (int i = 0; i < 2 * genus; ++i)
    pts.emplace_back(i);
  return pts;
}

BranchSet BranchSet::from(std::vector<ProjPoint> pts)
{
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return BranchSet{std::move(pts)};
}

bool BranchSet::contains(const ProjPoint &p) const
{
  return std::binary_search(points.begin(), points.end(), p);
}

BranchSet BranchSet::affine_part() const
{
  BranchSet out;
  for (const auto &p : points)
    if (!p.infinite)
      out.points.push_back(p);
  return out;
}

MobiusMap::MobiusMap(Rational a, Rational b, Rational c, Rational d)
{
  std::array<Rational, 4> r{std::move(a), std::move(b), std::move(c), std::move(d)};
  if (r[0] * r[3] - r[1] * r[2] == 0)
    throw DomainError("degenerate Möbius map");
  Integer den = 1;
  for (const auto &x : r)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (int i = 0; i < 4; ++i) {
    m_[i] = Integer(r[i] * den);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m_[i].get_mpz_t());
  }
  int sign = 1;
  for (const auto &x : m_)
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  for (auto &x : m_)
    x = x / g * sign;
}

ProjPoint MobiusMap::operator()(const ProjPoint &p) const
{
  Rational num, den;
  if (p.infinite) {
    num = m_[0];
    den = m_[2];
  } else {
    num = m_[0] * p.value + m_[1];
    den = m_[2] * p.value + m_[3];
  }
  if (den == 0)
    return ProjPoint::infinity();
  return ProjPoint::finite(num / den);
}

MobiusMap MobiusMap::after(const MobiusMap &o) const
{
  const auto &a = m_;
  const auto &b = o.m_;
  return MobiusMap(Rational(a[0] * b[0] + a[1] * b[2]), Rational(a[0] * b[1] + a[1] * b[3]),
                   Rational(a[2] * b[0] + a[3] * b[2]), Rational(a[2] * b[1] + a[3] * b[3]));
}

MobiusMap MobiusMap::inverse() const
{
  return MobiusMap(Rational(m_[3]), Rational(-m_[1]), Rational(-m_[2]), Rational(m_[0]));
}

std::string MobiusMap::to_string() const
{
  std::ostringstream os;
  os << "[[" << m_[0].get_str() << ", " << m_[1].get_str() << "], [" << m_[2].get_str() << ", "
     << m_[3].get_str() << "]]";
  return os.str();
}

BranchSet branch_set(int genus, const Rational &a)
{
  CurveSpec{genus, a}.validate();
  std::vector<ProjPoint> pts;
  for (auto &p : fixed_branch_points(genus))
    pts.push_back(ProjPoint::finite(p));
  pts.push_back(ProjPoint::finite(a));
  pts.push_back(ProjPoint::infinity());
  return BranchSet::from(std::move(pts));
}

namespace {

using Mat = std::array<Rational, 4>;

std::array<Rational, 2> coords(const ProjPoint &p)
{
  if (p.infinite)
    return {Rational(1), Rational(0)};
  return {p.value, Rational(1)};
}

// Matrix sending inf, 0, 1 to p1, p2, p3 (projectively).
Mat frame(const ProjPoint &p1, const ProjPoint &p2, const ProjPoint &p3)
{
  auto v1 = coords(p1), v2 = coords(p2), v3 = coords(p3);
  // Solve l1 v1 + l2 v2 = v3 by Cramer's rule.
  Rational det = v1[0] * v2[1] - v2[0] * v1[1];
  Rational l1 = (v3[0] * v2[1] - v2[0] * v3[1]) / det;
  Rational l2 = (v1[0] * v3[1] - v3[0] * v1[1]) / det;
  return {l1 * v1[0], l2 * v2[0], l1 * v1[1], l2 * v2[1]};
}

Mat adjugate(const Mat &m) { return {m[3], -m[1], -m[2], m[0]}; }

Mat multiply(const Mat &a, const Mat &b)
{
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

ProjPoint apply_map(const Mat &m, const ProjPoint &p)
{
  auto v = coords(p);
  Rational den = m[2] * v[0] + m[3] * v[1];
  if (den == 0)
    return ProjPoint::infinity();
  return ProjPoint::finite((m[0] * v[0] + m[1] * v[1]) / den);
}

// Candidate maps sending the fixed source triple to (b2[i], b2[j], b2[k]) for all j, k.
void scan_first_target(const BranchSet &b1, const BranchSet &b2, const Mat &source_inv, std::size_t i,
                       std::vector<MobiusMap> &out)
{
  const auto &t = b2.points;
  const std::size_t n = t.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i)
      continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j)
        continue;
      Mat m = multiply(frame(t[i], t[j], t[k]), source_inv);
      bool ok = true;
      for (std::size_t s = 3; s < b1.points.size() && ok; ++s)
        ok = b2.contains(apply_map(m, b1.points[s]));
      if (ok)
        out.emplace_back(m[0], m[1], m[2], m[3]);
    }
  }
}

std::vector<MobiusMap> finish(std::vector<MobiusMap> maps)
{
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  return maps;
}

} // namespace

std::vector<MobiusMap> mobius_equivalences_serial(const BranchSet &b1, const BranchSet &b2)
{
  if (b1.size() != b2.size() || b1.size() < 3)
    return {};
  const auto &s = b1.points;
  const Mat source_inv = adjugate(frame(s[0], s[1], s[2]));
  std::vector<MobiusMap> out;
  for (std::size_t i = 0; i < b2.size(); ++i)
    scan_first_target(b1, b2, source_inv, i, out);
  return finish(std::move(out));
}

std::vector<MobiusMap> mobius_equivalences(const BranchSet &b1, const BranchSet &b2)
{
  if (b1.size() != b2.size() || b1.size() < 3)
    return {};
  const auto &s = b1.points;
  const Mat source_inv = adjugate(frame(s[0], s[1], s[2]));
  const long n = static_cast<long>(b2.size());
  std::vector<std::vector<MobiusMap>> partial(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i)
    scan_first_target(b1, b2, source_inv, static_cast<std::size_t>(i), partial[static_cast<std::size_t>(i)]);
  std::vector<MobiusMap> out;
  for (auto &p : partial)
    out.insert(out.end(), p.begin(), p.end());
  return finish(std::move(out));
}

IsomorphismReport compare_curves(int genus, const Rational &a, const Rational &b)
{
  const BranchSet ba = branch_set(genus, a);
  const BranchSet bb = branch_set(genus, b);
  IsomorphismReport r;
  r.affine_equivalences = mobius_equivalences(ba.affine_part(), bb.affine_part());
  r.marked_equivalences = mobius_equivalences(ba, bb);
  r.isomorphic = !r.affine_equivalences.empty();
  return r;
}

bool curves_isomorphic(int genus, const Rational &a, const Rational &b)
{
  if (genus < 6)
    throw DomainError("criterion proven only for g >= 6");
  const BranchSet ba = branch_set(genus, a);
  const BranchSet bb = branch_set(genus, b);
  return !mobius_equivalences(ba.affine_part(), bb.affine_part()).empty();
}

} // namespace tforge::curves
