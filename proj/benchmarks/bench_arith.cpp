#include <benchmark/benchmark.h>

#include "linorbit/corrections.hpp"
#include "linorbit/orbit.hpp"

using namespace linorbit;

namespace {

CurveSpec spec_of(std::int64_t m, std::int64_t n, std::vector<std::int64_t> s = {1}) {
  CurveSpec spec;
  spec.n = n;
  spec.m = m;
  for (auto v : s) spec.components.push_back({v, std::nullopt});
  return spec;
}

void BM_BezoutPower(benchmark::State& state) {
  const RingPtr ring = make_assembly_ring(true);
  const TruncPoly d = TruncPoly::generator(ring, "S") * Rational(7) +
                      TruncPoly::generator(ring, "q") + TruncPoly::generator(ring, "qbar") +
                      TruncPoly::generator(ring, "r");
  for (auto _ : state) benchmark::DoNotOptimize(d.pow(7));
}
BENCHMARK(BM_BezoutPower);

void BM_InvUnit(benchmark::State& state) {
  const RingPtr ring = Ring::make({{"k", 3}, {"e1", 5}, {"e2", 7}});
  const TruncPoly den = (TruncPoly::constant(ring, 1) + TruncPoly::generator(ring, "k") -
                         TruncPoly::generator(ring, "e1") * Rational(2))
                            .pow(3) *
                        (TruncPoly::constant(ring, 1) + TruncPoly::generator(ring, "e2"));
  for (auto _ : state) benchmark::DoNotOptimize(den.inv_unit());
}
BENCHMARK(BM_InvUnit);

void BM_LocalCorrection(benchmark::State& state) {
  const CurveSpec spec = spec_of(4, 7, {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(local_correction(spec));
}
BENCHMARK(BM_LocalCorrection);

void BM_DegreePipeline(benchmark::State& state) {
  const CurveSpec spec = spec_of(4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_degree(spec, DegreeMethod::Pipeline).degree);
}
BENCHMARK(BM_DegreePipeline);

void BM_DegreeClosed(benchmark::State& state) {
  const CurveSpec spec = spec_of(4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_degree(spec).degree);
}
BENCHMARK(BM_DegreeClosed);

void BM_CharacteristicTable(benchmark::State& state) {
  const CurveSpec spec = spec_of(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_table(spec));
}
BENCHMARK(BM_CharacteristicTable);

} // namespace

BENCHMARK_MAIN();
