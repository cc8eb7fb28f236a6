#pragma once

#include "json_out.hpp"

#include <cstdint>
#include <string>

namespace tforge::cli {

/// Marked triples of A7 checked by the reproduction run, "a1;a2;a3" each.
struct ReproduceOptions
{
  std::string triple1 = "(1,2)(3,4);(1,5,7)(2,3)(4,6);(1,7,5,2,4,6,3)";
  std::string triple2 = "(1,2)(3,4);(1,7,4)(2,5)(3,6);(1,3,6,4,7,2,5)";
  std::string triple555 = "(1,7,6,5,4);(1,3,2,6,7);(2,3,4,5,6)";
  bool skip_snf = false;
  std::uint64_t seed = 1;
};

struct ReproduceReport
{
  Json items = Json::array(); ///< {item, status: pass|fail|skipped, detail}
  std::vector<std::string> failed;
};

/// Runs the A7 pipeline item by item. An exception inside an item fails that
/// item only.
ReproduceReport reproduce(const ReproduceOptions &opt, Timings &timings);

} // namespace tforge::cli
