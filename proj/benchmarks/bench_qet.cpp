#include <benchmark/benchmark.h>

#include "qet/analysis.hpp"
#include "qet/closed_form.hpp"
#include "qet/hamiltonian.hpp"
#include "qet/pauli.hpp"
#include "qet/protocol.hpp"

namespace {

void BM_ClosedFormEfficiency(benchmark::State& state) {
  const auto params = qet::params_from_ratio(state.range(0), 10.0);
  const auto part = qet::Partition::trailing(params, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qet::efficiency(params, part));
}
BENCHMARK(BM_ClosedFormEfficiency)->Arg(10)->Arg(100000);

void BM_NOpt(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qet::n_opt(static_cast<double>(state.range(0))));
}
BENCHMARK(BM_NOpt)->Arg(10)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ApplyPauliString(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto params = qet::params_from_ratio(n, 1.0);
  const auto psi = qet::analytic_ground_state(params);
  auto p = qet::PauliString(n);
  for (unsigned q = 1; q <= n; ++q) p.set(q, q % 2 ? qet::Pauli::X : qet::Pauli::Y);
  for (auto _ : state) benchmark::DoNotOptimize(qet::apply_pauli_string(psi, p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.dimension()));
}
BENCHMARK(BM_ApplyPauliString)->Arg(10)->Arg(16)->Arg(20);

void BM_ExtractedEnergy(benchmark::State& state) {
  const auto params = qet::params_from_ratio(state.range(0), 1.0);
  const auto part = qet::Partition::trailing(params, 1);
  const double theta = qet::optimal_theta(params, part).theta;
  qet::ProtocolOptions options;
  options.keep_branches = false;
  for (auto _ : state) benchmark::DoNotOptimize(qet::extracted_energy(params, part, theta, options));
}
BENCHMARK(BM_ExtractedEnergy)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_FigureDataset(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qet::figure_dataset(qet::FigureId::Fig4a));
}
BENCHMARK(BM_FigureDataset)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
