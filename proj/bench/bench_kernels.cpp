// Serial reference vs OpenMP batch solving. Run with OMP_NUM_THREADS set to
// compare scaling; the Arg is the thread count for the parallel variant.

#include "fg/families.hpp"
#include "fg/profile.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

namespace {

namespace cov = fg::cover;
namespace fam = fg::families;

std::vector<cov::SolveJob> mixed_jobs(cov::Method method) {
  std::vector<cov::SolveJob> jobs;
  for (long long n = 3; n <= 7; ++n) {
    for (std::size_t N = 1; N <= 2; ++N) {
      jobs.push_back({fam::gen_Y(4, 2, n), N, method});
      jobs.push_back({fam::gen_c(4, 1, n), N, method});
    }
  }
  for (std::uint64_t i = 0; i < 40; ++i) {
    jobs.push_back({fam::random_reduced(4, 40, {5, i}), 2, method});
  }
  return jobs;
}

void BM_SolveBatchSerial(benchmark::State& state) {
  const auto jobs = mixed_jobs(cov::Method::Exact);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cov::solve_batch(jobs, cov::kDefaultNodeBudget, cov::Execution::Serial));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(jobs.size()));
}

void BM_SolveBatchParallel(benchmark::State& state) {
  const auto jobs = mixed_jobs(cov::Method::Exact);
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cov::solve_batch(jobs, cov::kDefaultNodeBudget, cov::Execution::Parallel));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(jobs.size()));
}

void BM_GreedyBatchSerial(benchmark::State& state) {
  const auto jobs = mixed_jobs(cov::Method::Greedy);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cov::solve_batch(jobs, cov::kDefaultNodeBudget, cov::Execution::Serial));
  }
}

void BM_GreedyBatchParallel(benchmark::State& state) {
  const auto jobs = mixed_jobs(cov::Method::Greedy);
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cov::solve_batch(jobs, cov::kDefaultNodeBudget, cov::Execution::Parallel));
  }
}

void BM_ProfileY(benchmark::State& state) {
  cov::ProfileRequest req;
  req.ns = {3, 4, 5, 6, 7};
  req.Ns = {1, 2};
  req.exec = state.range(0) == 0 ? cov::Execution::Serial : cov::Execution::Parallel;
  const auto spec = fam::FamilySpec::parse("Y k=2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cov::family_profile(spec, req));
  }
}

}  // namespace

BENCHMARK(BM_SolveBatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveBatchParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GreedyBatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GreedyBatchParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ProfileY)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
