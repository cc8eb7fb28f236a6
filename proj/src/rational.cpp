#include "tforge/rational.hpp"

#include <stdexcept>

namespace tforge {

namespace {

bool valid_integer_text(std::string_view s)
{
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      return false;
  return true;
}

Integer parse_integer(std::string_view s)
{
  if (!valid_integer_text(s))
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+')
    s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

std::string_view strip(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
  text = strip(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text));
  Integer num = parse_integer(strip(text.substr(0, slash)));
  Integer den = parse_integer(strip(text.substr(slash + 1)));
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational &value) { return value.get_str(); }

std::string to_string(const Integer &value) { return value.get_str(); }

Integer lcm_of_denominators(const std::vector<Rational> &values)
{
  Integer l = 1;
  for (const auto &v : values)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

} // namespace tforge
