#include <benchmark/benchmark.h>

#include <vector>

#include "wronski/cell.hpp"
#include "wronski/chars.hpp"
#include "wronski/degen.hpp"
#include "wronski/solve.hpp"

using namespace wronski;

namespace {

QPoly real_rooted(int n) {
  QPoly g = QPoly::constant(Rational(1));
  for (int k = 0; k < n; ++k) g = g * QPoly(std::vector<Rational>{Rational(k * k + 1, 3), Rational(1)});
  return g;
}

void BM_chi(benchmark::State& state) {
  const Partition l(std::vector<int>(5, 3));
  const Composition mu = two_one(4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(chi(l, mu));
}
BENCHMARK(BM_chi);

void BM_enumerate_tab(benchmark::State& state) {
  const Partition l({4, 3, 1});
  const Composition mu = two_one(2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tab(l, mu));
}
BENCHMARK(BM_enumerate_tab);

void BM_wronski_affine(benchmark::State& state) {
  const Partition l({3, 2, 1});
  QPoint x(l);
  for (std::size_t k = 0; k < x.coords.size(); ++k) x.coords[k] = Rational(static_cast<long>(k) + 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(wronski_affine(x));
}
BENCHMARK(BM_wronski_affine);

void BM_exact_solve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition l = n == 4 ? Partition({2, 2}) : (n == 5 ? Partition({3, 2}) : Partition({3, 2, 1}));
  const QPoly g = real_rooted(n);
  for (auto _ : state) benchmark::DoNotOptimize(exact_solve(l, g, ExactOptions{n == 6, 1}));
}
BENCHMARK(BM_exact_solve)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_label_fibre_cached(benchmark::State& state) {
  const Partition l({3, 2});
  const Composition mu = Composition::parse("2,1,2");
  for (auto _ : state) benchmark::DoNotOptimize(label_fibre(l, mu, Rational(1, 2)));
}
BENCHMARK(BM_label_fibre_cached)->Unit(benchmark::kMillisecond);

void BM_character_signs(benchmark::State& state) {
  const Partition l({3, 2});
  const Composition mu = Composition::parse("2,1,2");
  for (auto _ : state) benchmark::DoNotOptimize(character_signs(l, mu));
}
BENCHMARK(BM_character_signs)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
