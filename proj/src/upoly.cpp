#include "tforge/upoly.hpp"

#include "tforge/error.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace tforge {

UPoly::UPoly(std::vector<Rational> coefficients)
: coeffs_(std::move(coefficients))
{
  trim();
}

UPoly::UPoly(std::initializer_list<Rational> coefficients)
: coeffs_(coefficients)
{
  trim();
}

UPoly UPoly::constant(const Rational &c) { return UPoly({c}); }

UPoly UPoly::identity() { return UPoly({Rational(0), Rational(1)}); }

UPoly UPoly::linear_factor(const Rational &root) { return UPoly({-root, Rational(1)}); }

void UPoly::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Rational UPoly::coefficient(std::size_t power) const
{
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

const Rational &UPoly::leading() const
{
  if (coeffs_.empty())
    throw std::domain_error("zero polynomial");
  return coeffs_.back();
}

Rational UPoly::operator()(const Rational &x) const
{
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const
{
  if (coeffs_.size() <= 1)
    return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
  if (is_zero())
    return {};
  Rational inv = 1 / leading();
  return inv * *this;
}

UPoly UPoly::operator-() const
{
  std::vector<Rational> c(coeffs_);
  for (auto &x : c)
    x = -x;
  return UPoly(std::move(c));
}

UPoly operator+(const UPoly &a, const UPoly &b)
{
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coefficient(i) + b.coefficient(i);
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly &a, const UPoly &b) { return a + (-b); }

UPoly operator*(const UPoly &a, const UPoly &b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(const Rational &c, const UPoly &p)
{
  if (c == 0)
    return {};
  std::vector<Rational> out(p.coeffs_);
  for (auto &x : out)
    x *= c;
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly &divisor) const
{
  if (divisor.is_zero())
    throw std::domain_error("division by zero polynomial");
  if (degree() < divisor.degree())
    return {UPoly{}, *this};
  std::vector<Rational> rem(coeffs_);
  const int dd = divisor.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational inv_lead = 1 / divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    Rational q = rem[k] * inv_lead;
    if (q == 0)
      continue;
    quot[k - dd] = q;
    for (int j = 0; j <= dd; ++j)
      rem[k - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::parse(std::string_view text)
{
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    c.push_back(parse_rational(piece));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return UPoly(std::move(c));
}

std::string UPoly::to_text() const
{
  if (coeffs_.empty())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i)
      out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

std::string UPoly::to_string(char var) const
{
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational &c = coeffs_[k];
    if (c == 0)
      continue;
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool show_coeff = (mag != 1) || k == 0;
    if (show_coeff)
      os << mag.get_str();
    if (k > 0) {
      if (show_coeff)
        os << '*';
      os << var;
      if (k > 1)
        os << '^' << k;
    }
  }
  return os.str();
}

UPoly pow(const UPoly &p, unsigned exponent)
{
  UPoly result = UPoly::constant(1);
  UPoly base = p;
  while (exponent) {
    if (exponent & 1u)
      result = result * base;
    exponent >>= 1u;
    if (exponent)
      base = base * base;
  }
  return result;
}

UPoly poly_compose(const UPoly &p, const UPoly &q)
{
  // Horner in the polynomial ring.
  UPoly acc;
  const auto &c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * q + UPoly::constant(*it);
  return acc;
}

UPoly poly_gcd(const UPoly &a, const UPoly &b)
{
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Rational resultant(const UPoly &p, const UPoly &q)
{
  if (p.is_zero() || q.is_zero())
    throw std::domain_error("zero polynomial");
  UPoly a = p, b = q;
  Rational result = 1;
  while (true) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) {
      Rational lc_pow;
      mpz_pow_ui(lc_pow.get_num_mpz_t(), b.leading().get_num_mpz_t(), static_cast<unsigned long>(m));
      mpz_pow_ui(lc_pow.get_den_mpz_t(), b.leading().get_den_mpz_t(), static_cast<unsigned long>(m));
      lc_pow.canonicalize();
      return result * lc_pow;
    }
    UPoly r = a % b;
    if (r.is_zero())
      return 0;
    const int k = r.degree();
    Rational factor;
    mpz_pow_ui(factor.get_num_mpz_t(), b.leading().get_num_mpz_t(), static_cast<unsigned long>(m - k));
    mpz_pow_ui(factor.get_den_mpz_t(), b.leading().get_den_mpz_t(), static_cast<unsigned long>(m - k));
    factor.canonicalize();
    if ((static_cast<long>(m) * n) % 2 != 0)
      factor = -factor;
    result *= factor;
    a = std::move(b);
    b = std::move(r);
  }
}

UPoly interpolate(const std::vector<Rational> &xs, const std::vector<Rational> &ys)
{
  if (xs.size() != ys.size())
    throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level)
        break;
    }
  UPoly result;
  for (std::size_t i = n; i-- > 0;)
    result = result * UPoly::linear_factor(xs[i]) + UPoly::constant(dd[i]);
  return result;
}

UPoly image_polynomial(const UPoly &base, const UPoly &q)
{
  if (base.is_zero())
    throw std::domain_error("zero polynomial");
  if (q.degree() < 1)
    throw std::domain_error("image under a constant map");
  const int k = base.degree();
  std::vector<Rational> xs, ys;
  for (int j = 0; j <= k; ++j) {
    Rational y = j;
    xs.push_back(y);
    ys.push_back(resultant(base, UPoly::constant(y) - q));
  }
  return interpolate(xs, ys).monic();
}

UPoly discriminant_in_parameter(const UPoly &p)
{
  if (p.degree() < 2)
    throw DomainError("no critical values");
  const UPoly dp = p.derivative();
  const int n = p.degree();
  std::vector<Rational> xs, ys;
  for (int j = 0; j < n; ++j) {
    Rational y = j;
    xs.push_back(y);
    ys.push_back(resultant(p - UPoly::constant(y), dp));
  }
  return interpolate(xs, ys).monic();
}

UPoly squarefree_part(const UPoly &p)
{
  if (p.is_zero())
    throw std::domain_error("zero polynomial");
  if (p.degree() == 0)
    return UPoly::constant(1);
  return (p / poly_gcd(p, p.derivative())).monic();
}

namespace {

// ---- arithmetic in F_q[z], q a small prime ----

using ModPoly = std::vector<std::int64_t>;

void mod_trim(ModPoly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

std::int64_t mod_inv(std::int64_t a, std::int64_t q)
{
  std::int64_t t = 0, nt = 1, r = q, nr = ((a % q) + q) % q;
  while (nr) {
    std::int64_t quo = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - quo * nt);
    std::tie(r, nr) = std::make_pair(nr, r - quo * nr);
  }
  return ((t % q) + q) % q;
}

ModPoly mod_rem(ModPoly a, const ModPoly &b, std::int64_t q)
{
  const std::int64_t inv = mod_inv(b.back(), q);
  while (a.size() >= b.size()) {
    std::int64_t f = a.back() * inv % q;
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = ((a[shift + j] - f * b[j]) % q + q) % q;
    mod_trim(a);
  }
  return a;
}

bool mod_coprime(ModPoly a, ModPoly b, std::int64_t q)
{
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

bool is_small_prime(std::int64_t v)
{
  if (v < 2)
    return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0)
      return false;
  return true;
}

Integer eval_int(const std::vector<Integer> &c, const Integer &x)
{
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

// Integer roots of a squarefree monic integer polynomial: find the roots modulo
// a prime for which the reduction stays squarefree, lift each one p-adically
// past the Cauchy bound, and keep the lifts that are genuine roots.
std::vector<Integer> integer_roots_monic(const std::vector<Integer> &g)
{
  const int d = static_cast<int>(g.size()) - 1;
  std::vector<Integer> roots;
  if (d <= 0)
    return roots;
  if (d == 1) {
    roots.push_back(-g[0]);
    return roots;
  }
  Integer bound = 0;
  for (int i = 0; i < d; ++i)
    if (abs(g[i]) > bound)
      bound = abs(g[i]);
  bound += 1;

  std::vector<Integer> dg(d);
  for (int i = 1; i <= d; ++i)
    dg[i - 1] = g[i] * i;

  for (std::int64_t q = 3;; q += 2) {
    if (!is_small_prime(q))
      continue;
    ModPoly gm(d + 1), dgm;
    for (int i = 0; i <= d; ++i) {
      Integer r = g[i] % q;
      if (r < 0)
        r += q;
      gm[i] = r.get_si();
    }
    for (int i = 1; i <= d; ++i)
      dgm.push_back(gm[i] * i % q);
    mod_trim(dgm);
    if (dgm.empty() || !mod_coprime(gm, dgm, q))
      continue;

    const Integer target = 2 * bound + 1;
    for (std::int64_t x = 0; x < q; ++x) {
      std::int64_t acc = 0;
      for (int i = d; i >= 0; --i)
        acc = (acc * x + gm[i]) % q;
      if (acc != 0)
        continue;
      Integer r = x, modulus = q;
      while (modulus < target) {
        modulus *= modulus;
        Integer f = eval_int(g, r) % modulus;
        Integer fp = eval_int(dg, r) % modulus;
        if (fp < 0)
          fp += modulus;
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), fp.get_mpz_t(), modulus.get_mpz_t()) == 0)
          throw std::logic_error("hensel lift hit a non-invertible derivative");
        r = (r - f * inv) % modulus;
        if (r < 0)
          r += modulus;
      }
      if (2 * r > modulus)
        r -= modulus;
      if (eval_int(g, r) == 0)
        roots.push_back(r);
    }
    return roots;
  }
}

} // namespace

RationalRootSplit rational_roots(const UPoly &p)
{
  if (p.is_zero())
    throw std::domain_error("zero polynomial");
  RationalRootSplit out;
  UPoly s = squarefree_part(p);
  if (s.degree() >= 1) {
    // Primitive integer form f of s, then the monic transform
    // g(w) = lc^(n-1) f(w / lc): rational roots of f are w / lc for integer roots w of g.
    const Integer den = lcm_of_denominators(s.coefficients());
    std::vector<Integer> f;
    for (const auto &c : s.coefficients())
      f.push_back(Integer(c * den));
    Integer content = 0;
    for (const auto &c : f)
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    for (auto &c : f)
      c /= content;
    const int n = static_cast<int>(f.size()) - 1;
    const Integer lc = f.back();
    std::vector<Integer> g(n + 1);
    Integer lc_pow = 1;
    for (int i = n - 1; i >= 0; --i) {
      g[i] = f[i] * lc_pow;
      lc_pow *= lc;
    }
    g[n] = 1;
    for (const auto &w : integer_roots_monic(g)) {
      Rational r(w, lc);
      r.canonicalize();
      out.roots.push_back(r);
    }
    std::sort(out.roots.begin(), out.roots.end());
  }
  UPoly cof = p;
  for (const auto &r : out.roots) {
    const UPoly lin = UPoly::linear_factor(r);
    while (true) {
      auto [qt, rem] = cof.divmod(lin);
      if (!rem.is_zero())
        break;
      cof = std::move(qt);
    }
  }
  out.cofactor = cof.monic();
  return out;
}

} // namespace tforge
