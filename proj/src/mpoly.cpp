#include "tforge/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace tforge {

MPoly MPoly::constant(std::size_t nvars, const Integer &c)
{
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index)
{
  if (index >= nvars)
    throw std::out_of_range("variable index");
  MPoly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

void MPoly::add_term(const Monomial &m, const Integer &c)
{
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

unsigned MPoly::total_degree() const
{
  unsigned d = 0;
  for (const auto &[m, c] : terms_) {
    unsigned s = 0;
    for (auto e : m)
      s += e;
    d = std::max(d, s);
  }
  return d;
}

MPoly MPoly::operator+(const MPoly &o) const
{
  MPoly r = *this;
  for (const auto &[m, c] : o.terms_)
    r.add_term(m, c);
  return r;
}

MPoly MPoly::operator-() const
{
  MPoly r(nvars_);
  for (const auto &[m, c] : terms_)
    r.terms_.emplace(m, -c);
  return r;
}

MPoly MPoly::operator-(const MPoly &o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly &o) const
{
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("variable count mismatch");
  MPoly r(nvars_);
  Monomial m(nvars_);
  for (const auto &[ma, ca] : terms_)
    for (const auto &[mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i)
        m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MPoly MPoly::operator*(const Integer &c) const
{
  MPoly r(nvars_);
  if (c != 0)
    for (const auto &[m, v] : terms_)
      r.terms_.emplace(m, v * c);
  return r;
}

Integer MPoly::evaluate(const std::vector<Integer> &x) const
{
  Integer s = 0;
  for (const auto &[m, c] : terms_) {
    Integer t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e)
        t *= x[i];
    s += t;
  }
  return s;
}

std::complex<double> MPoly::evaluate(const std::vector<std::complex<double>> &x) const
{
  std::complex<double> s = 0;
  for (const auto &[m, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e)
        t *= x[i];
    s += t;
  }
  return s;
}

MPoly MPoly::derivative(std::size_t i) const
{
  MPoly r(nvars_);
  for (const auto &[m, c] : terms_) {
    if (m[i] == 0)
      continue;
    Monomial d = m;
    --d[i];
    r.add_term(d, c * m[i]);
  }
  return r;
}

std::string MPoly::to_string(const std::vector<std::string> &names) const
{
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[m, c] = *it;
    Integer mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool any = false;
    if (mag != 1) {
      os << mag.get_str();
      any = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0)
        continue;
      os << (any ? "*" : "") << names.at(i);
      if (m[i] > 1)
        os << '^' << m[i];
      any = true;
    }
    if (!any)
      os << '1';
  }
  return os.str();
}

MPoly pow(const MPoly &p, unsigned k)
{
  MPoly r = MPoly::constant(p.variable_count(), 1);
  for (unsigned i = 0; i < k; ++i)
    r = r * p;
  return r;
}

} // namespace tforge
