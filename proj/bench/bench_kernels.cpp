// Benchmarks comparing the serial reference kernels with their
// OpenMP-parallel counterparts.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "stwave/assembly.hpp"
#include "stwave/spectral.hpp"

namespace {

using namespace stwave;

MeshPtr make_mesh(int n) {
  return std::make_shared<const LateralMesh>(
      LateralMesh::uniform(ProblemGeometry(3.0, 6.0), n, n));
}

void BM_AssembleEnergetic(benchmark::State& state) {
  MeshPtr mesh = make_mesh(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    DenseMatrix a = assemble_energetic(*mesh);
    benchmark::DoNotOptimize(a.data());
  }
}
BENCHMARK(BM_AssembleEnergetic)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_AssembleHtKernel(benchmark::State& state, Exec exec) {
  MeshPtr mesh = make_mesh(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    DenseMatrix a = assemble_ht(*mesh, AssemblyMethod::kernel_quadrature, exec);
    benchmark::DoNotOptimize(a.data());
  }
}
BENCHMARK_CAPTURE(BM_AssembleHtKernel, serial, Exec::serial)
    ->Arg(32)
    ->Arg(64)
    ->Arg(128)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AssembleHtKernel, parallel, Exec::parallel)
    ->Arg(32)
    ->Arg(64)
    ->Arg(128)
    ->Unit(benchmark::kMillisecond);

void BM_RhsKernel(benchmark::State& state, Exec exec) {
  MeshPtr mesh = make_mesh(static_cast<int>(state.range(0)));
  ProblemGeometry geometry(3.0, 6.0);
  ManufacturedCase c = case_smooth(geometry);
  TracePair g_h = project_trace(mesh, c.trace, c.kinks);
  for (auto _ : state) {
    Vector b = assemble_rhs(*mesh, g_h, Formulation::ht,
                            AssemblyMethod::kernel_quadrature, exec);
    benchmark::DoNotOptimize(b.data());
  }
}
BENCHMARK_CAPTURE(BM_RhsKernel, serial, Exec::serial)
    ->Arg(128)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RhsKernel, parallel, Exec::parallel)
    ->Arg(128)
    ->Unit(benchmark::kMillisecond);

void BM_CouplingMatvec(benchmark::State& state, Exec exec) {
  const int m = static_cast<int>(state.range(0));
  const int k_max = 8 * (m + 1);
  CouplingFactor factor(1.0, 2.0, m, k_max);
  std::vector<double> x(m + 1), y(k_max + 1);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (double& v : x) v = unif(rng);
  for (auto _ : state) {
    factor.apply(x.data(), y.data(), exec);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK_CAPTURE(BM_CouplingMatvec, serial, Exec::serial)
    ->Arg(500)
    ->Arg(2000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CouplingMatvec, parallel, Exec::parallel)
    ->Arg(500)
    ->Arg(2000)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
