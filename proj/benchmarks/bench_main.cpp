#include <benchmark/benchmark.h>

#include "crvar/congruence.hpp"
#include "crvar/free_band.hpp"
#include "crvar/network.hpp"
#include "crvar/standard_tables.hpp"
#include "crvar/variety.hpp"
#include "crvar/word.hpp"
#include "crvar/zeta.hpp"

using namespace crvar;

static void BM_ParseMirror(benchmark::State& state) {
  std::string text = "p(q(rs)^-1t)^-1u";
  for (int i = 0; i < state.range(0); ++i) text = "(" + text + "x)^-1y";
  for (auto _ : state) {
    benchmark::DoNotOptimize(mirror_term(parse_term(text)));
  }
}
BENCHMARK(BM_ParseMirror)->Arg(1)->Arg(8)->Arg(32);

static void BM_FreeBand(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_band(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_FreeBand)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_GreenAndL0(benchmark::State& state) {
  auto s = right_zero_extension(free_band(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(L0(s));
  }
}
BENCHMARK(BM_GreenAndL0)->Unit(benchmark::kMillisecond);

static void BM_MemberKl(benchmark::State& state) {
  auto b = op_Kl(catalog("SG"));
  auto s = tables::curated_battery();
  for (auto _ : state) {
    for (auto const& t : s) benchmark::DoNotOptimize(member(t, b));
  }
}
BENCHMARK(BM_MemberKl)->Unit(benchmark::kMillisecond);

static void BM_Zeta(benchmark::State& state) {
  auto u = parse_term("x(x)^-1xy");
  auto v = parse_term("((x)^-1)^-1y(y)^-1y");
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_equivalent(u, v, 4));
  }
}
BENCHMARK(BM_Zeta)->Unit(benchmark::kMillisecond);

static void BM_LadderLattice(benchmark::State& state) {
  auto net = gen_ladder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lattice(net));
  }
}
BENCHMARK(BM_LadderLattice)->Arg(1)->Arg(4)->Arg(12);
BENCHMARK_MAIN();
