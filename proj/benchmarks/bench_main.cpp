#include <benchmark/benchmark.h>

#include "radiolb/adversary.hpp"
#include "radiolb/engine.hpp"
#include "radiolb/protocols.hpp"
#include "radiolb/prune.hpp"
#include "radiolb/reductions.hpp"
#include "radiolb/selective.hpp"

using namespace radiolb;

static void BM_StepRound(benchmark::State& state) {
  const C2Params p{static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0))};
  TopologyVector tv{std::vector<std::uint64_t>(p.m, p.tau_limit() - 1)};
  const auto net = build_c2(p, tv);
  std::vector<Action> acts(net.size(), Action::listen());
  const auto mu = make_payload(kDefaultPayload);
  for (std::size_t i = 1; i < net.size(); i += 3) acts[i] = Action::transmit(mu);
  for (auto _ : state) benchmark::DoNotOptimize(step_round(net, acts, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(net.size()));
}
BENCHMARK(BM_StepRound)->Arg(4)->Arg(16)->Arg(32);

static void BM_RunStage(benchmark::State& state) {
  const C2Params p{2, 3};
  const int R = 8;
  const auto chain = reduce(round_robin(p), R);
  const auto net = build_c2(p, {{5, 2}});
  const auto p0 = round_robin(p);
  const int s = static_cast<int>(state.range(0));
  const Protocol& proto = s == 0 ? p0 : chain.stage(s);
  const int rounds = s == 0 ? R : 3 * R;
  for (auto _ : state) benchmark::DoNotOptimize(run(net, proto, rounds));
}
BENCHMARK(BM_RunStage)->DenseRange(0, 4);

static void BM_Prune(benchmark::State& state) {
  const C2Params p{2, 3};
  const int r = static_cast<int>(state.range(0));
  const auto p3 = reduce(round_robin(p), r).pi3;
  for (auto _ : state) benchmark::DoNotOptimize(run_prune(p3, r, p));
}
BENCHMARK(BM_Prune)->Arg(2)->Arg(4);

static void BM_Adversary(benchmark::State& state) {
  const C2Params p{2, 4};
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(round_robin(p), 2, p));
}
BENCHMARK(BM_Adversary);

static void BM_IsSelective(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto fam = greedy_selective(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_selective(fam, n, n / 2));
}
BENCHMARK(BM_IsSelective)->Arg(8)->Arg(12);
BENCHMARK_MAIN();
