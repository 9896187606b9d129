#include <benchmark/benchmark.h>

#include "polaris/fixtures.hpp"
#include "polaris/majorana.hpp"
#include "polaris/multipole.hpp"
#include "polaris/search.hpp"

namespace {

polaris::SpinState random_state(polaris::HalfInt S, unsigned seed) {
  std::srand(seed);
  Eigen::VectorXcd v = Eigen::VectorXcd::Random(S.twice() + 1);
  return polaris::SpinState(S, std::move(v));
}

void BM_ClebschGordanCold(benchmark::State& state) {
  using polaris::HalfInt;
  const HalfInt S = HalfInt::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    double acc = 0.0;
    for (int K = 0; K <= S.twice(); ++K) {
      for (int tm = -S.twice(); tm <= S.twice(); tm += 2) {
        const HalfInt m = HalfInt::from_twice(tm);
        acc += polaris::clebsch_gordan(S, m, HalfInt(K), HalfInt(0), S, m);
      }
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ClebschGordanCold)->Arg(8)->Arg(20)->Arg(40);

void BM_CumulativePure(benchmark::State& state) {
  const auto S = polaris::HalfInt::from_twice(static_cast<int>(state.range(0)));
  const auto psi = random_state(S, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polaris::cumulative_pure(psi, S.twice()));
  }
}
BENCHMARK(BM_CumulativePure)->Arg(8)->Arg(20)->Arg(40);

void BM_Constellation(benchmark::State& state) {
  const auto S = polaris::HalfInt::from_twice(static_cast<int>(state.range(0)));
  const auto psi = random_state(S, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polaris::constellation(psi));
  }
}
BENCHMARK(BM_Constellation)->Arg(8)->Arg(20)->Arg(40);

void BM_SearchObjective(benchmark::State& state) {
  const auto S = polaris::HalfInt::from_twice(static_cast<int>(state.range(0)));
  Eigen::VectorXd p = Eigen::VectorXd::Random(2 * (S.twice() + 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(polaris::objective_and_gradient(p, S, S.twice()));
  }
}
BENCHMARK(BM_SearchObjective)->Arg(8)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
