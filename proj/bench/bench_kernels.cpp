// Serial reference versus OpenMP version of each parallel kernel. Each pair
// runs on the same input; compare the Serial/Parallel rows.

#include "tforge/beauville.hpp"
#include "tforge/dessins.hpp"
#include "tforge/fpgroup.hpp"
#include "tforge/special_curves.hpp"
#include "tforge/spherical.hpp"
#include "tforge/twocrit.hpp"

#include <benchmark/benchmark.h>

using namespace tforge;

namespace {

const perm::FiniteGroup &a7()
{
  static const perm::FiniteGroup g(perm::PermGroup::alternating(7));
  return g;
}

const perm::FiniteGroup &a6()
{
  static const perm::FiniteGroup g(perm::PermGroup::alternating(6));
  return g;
}

template <auto Kernel>
void spherical(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(a7(), perm::make_signature(5, 5, 5)));
}

template <auto Kernel>
void classify(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(7, {2, 2, 1, 1, 1}, {3, 2, 2}));
}

template <auto Kernel>
void mobius(benchmark::State &state)
{
  const auto b1 = curves::branch_set(12, Rational(47)).affine_part();
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(b1, b1));
}

const fp::Pi1Data &pi1_data()
{
  static const fp::Pi1Data d = [] {
    const auto t = [](const char *a, const char *b, const char *c) { return perm::SphericalTriple::parse(a, b, c, 7); };
    const beauville::UnmixedStructure s{t("(1,2)(3,4)", "(1,5,7)(2,3)(4,6)", "(1,7,5,2,4,6,3)"),
                                        t("(1,7,6,5,4)", "(1,3,2,6,7)", "(2,3,4,5,6)")};
    return fp::pi1_surface(s, a7());
  }();
  return d;
}

template <auto Kernel>
void relators(benchmark::State &state)
{
  const auto &d = pi1_data();
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(d.table, d.product));
}

template <auto Kernel>
void search(benchmark::State &state)
{
  const std::vector<perm::Signature> sigs{perm::make_signature(4, 4, 5), perm::make_signature(5, 5, 5)};
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(a6(), sigs));
}

template <auto Kernel>
void solve(benchmark::State &state)
{
  const auto sys = twocrit::build_system(7, {2, 2, 1, 1, 1}, {3, 2, 2});
  twocrit::SolveOptions opt;
  opt.attempts = 256;
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(sys, opt));
}

using SearchFn = std::vector<beauville::UnmixedStructure> (*)(const perm::FiniteGroup &,
                                                              const std::vector<perm::Signature> &);
constexpr SearchFn search_parallel = &beauville::search_beauville;
constexpr SearchFn search_serial = &beauville::search_beauville_serial;

} // namespace

BENCHMARK(spherical<perm::enumerate_spherical_serial>)->Name("enumerate_spherical/Serial")->Unit(benchmark::kMillisecond);
BENCHMARK(spherical<perm::enumerate_spherical>)->Name("enumerate_spherical/Parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(classify<dessins::classify_polynomial_monodromies_serial>)
  ->Name("classify_polynomial_monodromies/Serial")
  ->Unit(benchmark::kMillisecond);
BENCHMARK(classify<dessins::classify_polynomial_monodromies>)
  ->Name("classify_polynomial_monodromies/Parallel")
  ->Unit(benchmark::kMillisecond);
BENCHMARK(mobius<curves::mobius_equivalences_serial>)->Name("mobius_equivalences/Serial")->Unit(benchmark::kMillisecond);
BENCHMARK(mobius<curves::mobius_equivalences>)->Name("mobius_equivalences/Parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(relators<fp::relators_act_trivially_serial>)->Name("relators_act_trivially/Serial")->Unit(benchmark::kMillisecond);
BENCHMARK(relators<fp::relators_act_trivially>)->Name("relators_act_trivially/Parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(search<search_serial>)->Name("search_beauville/Serial")->Unit(benchmark::kMillisecond);
BENCHMARK(search<search_parallel>)->Name("search_beauville/Parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(solve<twocrit::solve_numeric_serial>)->Name("solve_numeric/Serial")->Unit(benchmark::kMillisecond);
BENCHMARK(solve<twocrit::solve_numeric>)->Name("solve_numeric/Parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
