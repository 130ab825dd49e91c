#include <benchmark/benchmark.h>

#include "bargain/afp.hpp"
#include "bargain/characterize.hpp"
#include "bargain/equilibria.hpp"
#include "bargain/mechanisms.hpp"
#include "bargain/rng.hpp"

namespace {

using bargain::Collection;
using bargain::MechanismKind;
using bargain::MechanismParams;
using bargain::NeOptions;
using bargain::Rational;
using bargain::TrialRng;

Collection bench_collection(int n) {
  TrialRng rng(1, static_cast<std::uint64_t>(n));
  return random_collection(rng, n, 8);
}

void subset_oracle(benchmark::State& state) {
  Collection a = bench_collection(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_afps_oracle(a));
  }
}
BENCHMARK(subset_oracle)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void fixed_point_iteration(benchmark::State& state) {
  Collection a = bench_collection(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_boundaries_included(a));
  }
}
BENCHMARK(fixed_point_iteration)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void diagonal_scan(benchmark::State& state) {
  Collection a = bargain::pie_collection(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_diagonal_afps(a));
  }
}
BENCHMARK(diagonal_scan)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void ne_scan_integer_path(benchmark::State& state) {
  Collection a = bench_collection(static_cast<int>(state.range(0)));
  MechanismParams params;
  params.delta = Rational(1, 2);
  auto mech = build_mechanism_for(MechanismKind::kSaDelta, params, a);
  NeOptions opt;
  opt.collect_profiles = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_pure_ne(*mech, a, opt));
  }
}
BENCHMARK(ne_scan_integer_path)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void ne_scan_generic_path(benchmark::State& state) {
  Collection a = bench_collection(static_cast<int>(state.range(0)));
  MechanismParams params;
  params.delta = Rational(1, 2);
  auto mech = build_mechanism_for(MechanismKind::kSaDelta, params, a);
  NeOptions opt;
  opt.collect_profiles = false;
  opt.force_generic = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_pure_ne(*mech, a, opt));
  }
}
BENCHMARK(ne_scan_generic_path)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void list_characterization(benchmark::State& state) {
  Collection a = bargain::pie_collection(static_cast<int>(state.range(0)));
  Rational delta(1, 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sa_delta_neo(a, delta));
  }
}
BENCHMARK(list_characterization)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
