// Serial against OpenMP sweeps on the heaviest kernels.

#include <benchmark/benchmark.h>

#include "lcm/isg.hpp"
#include "lcm/parallel.hpp"
#include "lcm/shift_groupoid.hpp"

using namespace lcm;

namespace {

void associativity(benchmark::State& state, Exec exec) {
  InverseSemigroup<FreeMonoid> isg(FreeMonoid(2));
  auto const ts = isg.enumerate(static_cast<std::size_t>(state.range(0)));
  std::size_t const n = ts.size();
  for (auto _ : state) {
    auto r = sweep(exec, n * n * n, [&](std::size_t i) -> std::optional<std::string> {
      auto const& a = ts[i / (n * n)];
      auto const& b = ts[(i / n) % n];
      auto const& c = ts[i % n];
      if (!isg.eq(isg.product(isg.product(a, b), c), isg.product(a, isg.product(b, c)))) {
        return "x";
      }
      return std::nullopt;
    });
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n * n));
}

void full_shift(benchmark::State& state, Exec exec) {
  InverseSemigroup<FreeMonoid> isg(FreeMonoid(2));
  for (auto _ : state) {
    auto r = check_full_shift(isg, static_cast<std::size_t>(state.range(0)), 2, 2, 2, exec);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK_CAPTURE(associativity, serial, Exec::serial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(associativity, parallel, Exec::parallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(full_shift, serial, Exec::serial)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(full_shift, parallel, Exec::parallel)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
