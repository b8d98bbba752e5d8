#include <benchmark/benchmark.h>

#include "gf/pipeline.hpp"

using namespace gf;

namespace {

RunConfig bench_config(std::size_t agents, std::size_t modes, std::size_t steps) {
  RunConfig c;
  c.model.agents = agents;
  c.model.modes = modes;
  c.solver.steps = steps;
  c.finalize();
  return c;
}

struct ModeSetup {
  RunConfig cfg;
  Scenario scenario;
  ModelParams params;
};

ModeSetup setup(std::size_t agents, std::size_t modes, std::size_t steps) {
  ModeSetup s{bench_config(agents, modes, steps), {}, {}};
  std::mt19937_64 rng(agents * 100 + modes);
  s.scenario = synthetic_scenario(rng, s.cfg);
  s.params = ModelParams::init(s.cfg.model, 1);
  return s;
}

void solve_modes(benchmark::State& state, bool parallel) {
  const ModeSetup s = setup(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 2);
  const PotentialGame game = scenario_game(s.scenario, s.cfg);
  for (auto _ : state) {
    ad::Tape tape;
    Network net(tape, s.cfg.model, s.params, false);
    const Observation obs = Observation::from(s.scenario);
    DecodedParameters d = decode_parameters(net, encode_observation(net, obs), obs);
    std::vector<ModeInput> in;
    for (std::size_t m = 0; m < d.modes.size(); ++m) in.push_back({d.init[m], d.modes[m]});
    auto out = parallel ? batched_solve(game, in, s.cfg.solver) : batched_solve_serial(game, in, s.cfg.solver);
    benchmark::DoNotOptimize(out);
  }
}

void BM_BatchedSolveSerial(benchmark::State& state) { solve_modes(state, false); }
void BM_BatchedSolveParallel(benchmark::State& state) { solve_modes(state, true); }

void batch_gradient_bench(benchmark::State& state, bool deterministic) {
  ModeSetup s = setup(2, 2, 2);
  s.cfg.deterministic = deterministic;
  std::mt19937_64 rng(3);
  std::vector<Scenario> samples;
  for (int i = 0; i < state.range(0); ++i) samples.push_back(synthetic_scenario(rng, s.cfg));
  std::vector<const Scenario*> batch;
  for (const auto& x : samples) batch.push_back(&x);
  for (auto _ : state) benchmark::DoNotOptimize(batch_gradient(s.params, s.cfg, batch));
}

void BM_BatchGradientSerial(benchmark::State& state) { batch_gradient_bench(state, true); }
void BM_BatchGradientParallel(benchmark::State& state) { batch_gradient_bench(state, false); }

void BM_Forward(benchmark::State& state) {
  const ModeSetup s = setup(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)),
                            static_cast<std::size_t>(state.range(2)));
  for (auto _ : state) {
    ad::Tape tape;
    Network net(tape, s.cfg.model, s.params, false);
    benchmark::DoNotOptimize(forward(net, s.scenario, s.cfg));
  }
}

}  // namespace

BENCHMARK(BM_BatchedSolveSerial)->Args({2, 1})->Args({2, 4})->Args({4, 4})->Args({4, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchedSolveParallel)->Args({2, 1})->Args({2, 4})->Args({4, 4})->Args({4, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchGradientSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchGradientParallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Forward)->Args({2, 2, 2})->Args({4, 2, 2})->Args({4, 8, 2})->Args({4, 2, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
