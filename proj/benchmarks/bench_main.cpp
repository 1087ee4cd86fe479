/*
   Copyright 2026 The specunits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "specunits/specunits.hpp"

namespace {

using namespace specunits;

CyclicVector random_vector(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  CyclicVector v(n);
  for (int k = 0; k < n; ++k) v[k] = make_rational(num(rng), den(rng));
  return v;
}

void BM_EnumerateUnits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = enumerate_units(n, [](const SpectralUnit&) { return true; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * group_order(n)));
}
BENCHMARK(BM_EnumerateUnits)->Arg(7)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_Dft(benchmark::State& state) {
  const CyclicVector a = random_vector(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dft(a));
}
BENCHMARK(BM_Dft)->Arg(12)->Arg(16)->Arg(30);

void BM_DftRoundTrip(benchmark::State& state) {
  const CyclicVector a = random_vector(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(idft(dft(a)));
}
BENCHMARK(BM_DftRoundTrip)->Arg(12)->Arg(30);

void BM_CycloMul(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = make_rational(static_cast<long>(i) - 3, 7);
  const CycloNum x = CycloNum::from_power_sum(m, c);
  const CycloNum y = conj(x);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CycloMul)->Arg(12)->Arg(30)->Arg(60);

void BM_Connect(benchmark::State& state) {
  const CyclicVector a = from_set(12, Subset{0, 2, 3, 5, 7, 9, 11});
  const CyclicVector b = from_set(12, Subset{0, 2, 4, 6, 8, 9, 11});
  for (auto _ : state) benchmark::DoNotOptimize(connect(a, b, ConnectPolicy::enumerate));
}
BENCHMARK(BM_Connect);

}  // namespace

BENCHMARK_MAIN();
