#include <benchmark/benchmark.h>

#include "dwl/quantifiers.hpp"
#include "dwl/wigner.hpp"

using namespace dwl;

namespace {

landau::LandauState state(int n) {
  return landau::LandauState(n, landau::Parity::Positive, landau::Spin::Up,
                             landau::PhysParams::from_dimensionless(1.0, 1.0));
}

void BM_Kernels(benchmark::State& s) {
  const int n = static_cast<int>(s.range(0));
  double x = 0.1;
  for (auto _ : s) {
    benchmark::DoNotOptimize(wigner::kernels(n, PhasePoint{x, 0.7}, 1.0));
    x += 1e-9;
  }
}
BENCHMARK(BM_Kernels)->Arg(1)->Arg(5)->Arg(20);

void BM_OmegaMatrix(benchmark::State& s) {
  const auto st = state(static_cast<int>(s.range(0)));
  double x = 0.1;
  for (auto _ : s) {
    benchmark::DoNotOptimize(wigner::omega_matrix(st, PhasePoint{x, 0.7}));
    x += 1e-9;
  }
}
BENCHMARK(BM_OmegaMatrix)->Arg(1)->Arg(5);

void BM_Decompose(benchmark::State& s) {
  auto w = wigner::omega_matrix(state(3), PhasePoint{0.4, -0.2});
  for (auto _ : s) {
    benchmark::DoNotOptimize(decompose(w));
    w(0, 0) += 1e-12;
  }
}
BENCHMARK(BM_Decompose);

void BM_WeylOracle(benchmark::State& s) {
  const auto st = state(3);
  const auto psi = [&](double x) { return landau::spinor_at_s(st, x); };
  const auto u = wigner::default_u_grid(3);
  for (auto _ : s) benchmark::DoNotOptimize(wigner::weyl_transform(psi, PhasePoint{0.5, 1.0}, u));
}
BENCHMARK(BM_WeylOracle)->Unit(benchmark::kMicrosecond);

void BM_PurityRoutes(benchmark::State& s) {
  const auto field = wigner::WignerMatrixField::landau(state(2));
  const auto grid = numerics::default_grid(2, 6.0, static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(quant::purity_routes(field, grid));
}
BENCHMARK(BM_PurityRoutes)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
