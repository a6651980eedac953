#include <benchmark/benchmark.h>

#include "hardy/exponents.hpp"
#include "hardy/factors.hpp"
#include "hardy/families.hpp"
#include "hardy/operators.hpp"
#include "hardy/oracle.hpp"
#include "hardy/refine.hpp"

namespace {

void BM_ComputeB(benchmark::State& state) {
  const hardy::Exponents e(2.0, 4.0);
  const hardy::BlissFamily fam(e);
  const auto w = fam.weights(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::compute_B(w, e));
  }
}
BENCHMARK(BM_ComputeB)->Arg(64)->Arg(400)->Arg(4096);

void BM_OperatorScan(benchmark::State& state) {
  const hardy::Exponents e(2.0, 4.0);
  const hardy::BlissFamily fam(e);
  const auto w = fam.weights(static_cast<std::size_t>(state.range(0)));
  const hardy::WeightTables tables(w, e);
  const auto x = hardy::seed_upper(w, e);
  for (auto _ : state) {
    hardy::OperatorScan scan(hardy::OperatorKind::ii_star, x, tables);
    benchmark::DoNotOptimize(scan.sup().value);
  }
}
BENCHMARK(BM_OperatorScan)->Arg(400)->Arg(4096);

void BM_DeltaUpper(benchmark::State& state) {
  const hardy::Exponents e(2.0, 4.0);
  const hardy::BlissFamily fam(e);
  const auto w = fam.weights(static_cast<std::size_t>(state.range(0)));
  hardy::RefineOptions opts;
  opts.m_max = 5;
  opts.tol = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::delta_upper(w, e, opts).steps.back().delta);
  }
}
BENCHMARK(BM_DeltaUpper)->Arg(256)->Arg(2000);

void BM_DeltaLowerScan(benchmark::State& state) {
  const hardy::GeometricFamily fam(0.5, 1.0);
  const hardy::Exponents e(2.0, 2.0);
  const auto w = fam.weights(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::delta_lower(w, e).delta_bar);
  }
}
BENCHMARK(BM_DeltaLowerScan)->Arg(128)->Arg(400);

void BM_IncompleteBeta(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::incomplete_beta(2.5, 7.5, x));
    x = x < 0.9 ? x + 1e-4 : 0.1;
  }
}
BENCHMARK(BM_IncompleteBeta);

void BM_EigenOracle(benchmark::State& state) {
  const hardy::GeometricFamily fam(0.5, 1.0);
  const auto w = fam.weights(static_cast<std::size_t>(state.range(0)));
  hardy::OracleConfig cfg;
  cfg.max_iters = 2000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::eigen_check_p2q2(w, cfg));
  }
}
BENCHMARK(BM_EigenOracle)->Arg(64)->Arg(400);

void BM_FixedPointOracle(benchmark::State& state) {
  const hardy::Exponents e(2.0, 4.0);
  const hardy::BlissFamily fam(e);
  const auto w = fam.weights(static_cast<std::size_t>(state.range(0)));
  hardy::OracleConfig cfg;
  cfg.max_iters = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::maximize_quotient(w, e, cfg).a_estimate);
  }
}
BENCHMARK(BM_FixedPointOracle)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
