#include <benchmark/benchmark.h>

#include "qaco/aco/classical.hpp"
#include "qaco/mndas/engine.hpp"
#include "qaco/mndas/oracle.hpp"

namespace {

using namespace qaco;

const std::vector<std::uint64_t> kTable1{21, 18, 16, 11, 5, 2, 11, 14};
const std::vector<std::uint64_t> kTable2{12, 9, 24, 131, 17, 99, 11, 100, 24, 31, 64, 79, 73, 6, 67, 101};

void BM_RunTable1(benchmark::State& state) {
  const auto inst = mndas::ProblemInstance::from_costs(kTable1, 200, 4);
  for (auto _ : state) benchmark::DoNotOptimize(mndas::run_mndas(inst));
}
BENCHMARK(BM_RunTable1)->Unit(benchmark::kMillisecond);

void BM_RunTable2(benchmark::State& state) {
  const auto inst = mndas::ProblemInstance::from_costs(kTable2, 200, 4);
  for (auto _ : state) benchmark::DoNotOptimize(mndas::run_mndas(inst));
}
BENCHMARK(BM_RunTable2)->Unit(benchmark::kMillisecond);

void BM_BoxOracleTable2(benchmark::State& state) {
  mndas::EngineModes modes;
  modes.evaporation = mndas::EvaporationPolicy::verbatim();
  const auto inst = mndas::ProblemInstance::from_costs(kTable2, 200, 4, modes);
  for (auto _ : state) benchmark::DoNotOptimize(mndas::classical_box_oracle(inst, 200));
}
BENCHMARK(BM_BoxOracleTable2);

void BM_BuildProgram(benchmark::State& state) {
  const std::vector<std::uint64_t> ones(static_cast<std::size_t>(state.range(0)), 1);
  const auto inst = mndas::ProblemInstance::from_costs(ones, 8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(mndas::build_program(inst, 8));
}
BENCHMARK(BM_BuildProgram)->RangeMultiplier(2)->Range(4, 64);

void BM_ClassicalAcoTable1(benchmark::State& state) {
  std::vector<mndas::PathWeight> w(kTable1.begin(), kTable1.end());
  for (auto _ : state) benchmark::DoNotOptimize(aco::run_simple_aco(w, aco::AcoParams{}));
}
BENCHMARK(BM_ClassicalAcoTable1)->Unit(benchmark::kMillisecond);

}  // namespace
