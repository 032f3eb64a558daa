#include <benchmark/benchmark.h>

#include "ualg/algebra.hpp"
#include "ualg/commutator.hpp"
#include "ualg/lattice.hpp"
#include "ualg/subpower.hpp"

namespace {

// Full closure of the square cube M(theta,theta) of the builtin z6 algebra.
void BM_CubeClosureThetaSquare(benchmark::State& state) {
  ualg::FiniteAlgebra a = ualg::builtin_algebra("paper-z6");
  std::pair<ualg::Element, ualg::Element> seed[] = {{0, 3}};
  ualg::Partition theta = ualg::congruence_generated(a, seed);
  std::vector<ualg::Partition> thetas{theta, theta};
  for (auto _ : state) {
    ualg::Subpower m = ualg::cube(a, thetas);
    benchmark::DoNotOptimize(m.size());
  }
}
BENCHMARK(BM_CubeClosureThetaSquare);

// Full closure of M(1,1) over cyclic groups of growing order.
void BM_CubeClosureFullSquare(benchmark::State& state) {
  ualg::FiniteAlgebra a = ualg::builtin_algebra("cyclic-" + std::to_string(state.range(0)));
  std::vector<ualg::Partition> thetas(2, ualg::Partition::one(a.size()));
  for (auto _ : state) {
    ualg::Subpower m = ualg::cube(a, thetas);
    benchmark::DoNotOptimize(m.size());
  }
}
BENCHMARK(BM_CubeClosureFullSquare)->Arg(3)->Arg(5)->Arg(7);

// First-collision search inside the dimension-3 cube of the z6 algebra.
void BM_SupernilZeroTest(benchmark::State& state) {
  ualg::FiniteAlgebra a = ualg::builtin_algebra("paper-z6");
  ualg::Partition one = ualg::Partition::one(a.size());
  for (auto _ : state) {
    ualg::SupernilpotenceResult r = ualg::is_supernilpotent(a, one, 2);
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_SupernilZeroTest);

void BM_CongruenceLattice(benchmark::State& state) {
  ualg::FiniteAlgebra a = ualg::builtin_algebra("cyclic-" + std::to_string(state.range(0)));
  for (auto _ : state) {
    auto lattice = ualg::congruence_lattice(a);
    benchmark::DoNotOptimize(lattice.size());
  }
}
BENCHMARK(BM_CongruenceLattice)->Arg(6)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
