// Serial vs OpenMP quadrature kernels.  Both paths give bit-identical results.
#include <benchmark/benchmark.h>

#include "su11/resolutions.hpp"
#include "su11/two_photon.hpp"

using namespace su11;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_DiskIdentity(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(disk_identity_check(BargmannIndex{1.0}, 8, {}, exec_of(st)));
  label(st);
}

void BM_BgIdentity(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bg_identity_check(BargmannIndex{0.25}, 8, {}, exec_of(st)));
  label(st);
}

void BM_WeakIdentity(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(weak_identity_check(BargmannIndex{0.25}, 6, {}, exec_of(st)));
  label(st);
}

void BM_WeakScalarProduct(benchmark::State& st) {
  const auto s = extend(perelomov_coefficients(0.3, BargmannIndex{0.3}));
  for (auto _ : st) benchmark::DoNotOptimize(weak_scalar_product(s, s, {}, exec_of(st)));
  label(st);
}

void BM_SqueezedResolution(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(squeezed_resolution_check(6, 0.5, {}, exec_of(st)));
  label(st);
}

}  // namespace

BENCHMARK(BM_DiskIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BgIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeakIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeakScalarProduct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SqueezedResolution)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
