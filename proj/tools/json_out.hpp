#pragma once

#include "tforge/beauville.hpp"
#include "tforge/perm.hpp"
#include "tforge/rational.hpp"
#include "tforge/spherical.hpp"

#include <json.hpp>

#include <chrono>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace tforge::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view schema_version = "tforge-report/1";

inline Json to_json(const Integer &v) { return v.get_str(); }
inline Json to_json(const Rational &v) { return v.get_str(); }
inline Json to_json(const perm::Perm &p) { return p.to_string(); }

inline Json to_json(const perm::SphericalTriple &t)
{
  return Json::array({t.a1.to_string(), t.a2.to_string(), t.a3.to_string()});
}

inline Json to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

template <class T>
Json to_json_list(const std::vector<T> &values)
{
  Json out = Json::array();
  for (const auto &v : values)
    out.push_back(to_json(v));
  return out;
}

inline Json to_json(const beauville::SurfaceInvariants &s)
{
  return {{"g1", to_json(s.g1)}, {"g2", to_json(s.g2)}, {"e", to_json(s.euler_e)},
          {"chi", to_json(s.chi)}, {"K2", to_json(s.K2)}};
}

/// Wall-clock phases in milliseconds, reported only on request so that
/// reports stay byte-identical across runs.
class Timings
{
public:
  void record(std::string phase, std::chrono::steady_clock::time_point start)
  {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    phases_[std::move(phase)] = ms;
  }
  const Json &json() const { return phases_; }

private:
  Json phases_ = Json::object();
};

} // namespace tforge::cli
