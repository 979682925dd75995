#include "qet/protocol.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qet/error.hpp"
#include "qet/hamiltonian.hpp"
#include "qet/numeric.hpp"

namespace qet {

namespace {

unsigned oracle_register(const ModelParams& params, unsigned cap) {
  if (params.n_qubits() > cap) {
    throw Error(ErrorCode::OracleCapExceeded, "N = " + std::to_string(params.n_qubits()) +
                                                  " exceeds the oracle cap of " + std::to_string(cap));
  }
  return static_cast<unsigned>(params.n_qubits());
}

// Weighted ensemble sum sum_b p_b f(b), reduced pairwise in branch order.
template <class PerBranch>
double ensemble_average(std::span<const OutcomeBranch> branches, PerBranch&& value) {
  std::vector<double> terms(branches.size(), 0.0);
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (!branches[b].null_branch) terms[b] = branches[b].probability * value(branches[b]);
  }
  return pairwise_sum(terms);
}

// Energy bookkeeping for one branch after the rotation.
struct BranchEnergies {
  double output_side;
  double total;
};

struct ExtractionOperators {
  PauliSum output_side;
  PauliSum total;
};

ExtractionOperators extraction_operators(const ModelParams& params, const Partition& part) {
  const auto n = static_cast<unsigned>(params.n_qubits());
  PauliSum out(n);
  for (auto q : part.outputs()) out.add(local_term(params, q));
  out.add(interaction_term(params));
  return {std::move(out), hamiltonian_terms(params)};
}

}  // namespace

std::vector<OutcomeBranch> measure_branches(const ModelParams& params, const Partition& part,
                                            const ProtocolOptions& options) {
  const unsigned n = oracle_register(params, options.oracle_cap);
  if (part.n_qubits() != params.n_qubits()) {
    throw Error(ErrorCode::InvalidPartition, "partition and model disagree on N");
  }
  const auto inputs = part.inputs();
  const std::size_t n_in = inputs.size();
  const std::size_t count = std::size_t{1} << n_in;
  const StateVector ground = analytic_ground_state(params);

  std::vector<std::optional<OutcomeBranch>> slots(count);
  parallel_for(count, options.threads, [&](std::size_t b) {
    std::vector<int> alpha(n_in);
    int product = 1;
    StateVector psi = ground;
    for (std::size_t j = 0; j < n_in; ++j) {
      alpha[j] = ((b >> (n_in - 1 - j)) & 1u) ? -1 : 1;
      product *= alpha[j];
      // (1 + a X_j)/2 |psi>
      StateVector flipped = apply_pauli_string(psi, PauliString::single(n, inputs[j], Pauli::X));
      psi.add_scaled(static_cast<double>(alpha[j]), flipped);
      psi.scale(0.5);
    }
    const double p = psi.norm_squared();
    const bool null_branch = !(p > 0.0);
    if (!null_branch) psi.normalize();
    slots[b] = OutcomeBranch{std::move(alpha), null_branch ? 0.0 : p, std::move(psi), product, null_branch};
  });

  std::vector<OutcomeBranch> branches;
  branches.reserve(count);
  for (auto& s : slots) branches.push_back(std::move(*s));
  return branches;
}

InjectedEnergy injected_energy(std::span<const OutcomeBranch> branches, const ModelParams& params,
                               const Partition& part) {
  InjectedEnergy result{0.0, {}};
  for (auto q : part.inputs()) {
    const PauliSum term = local_term(params, q);
    result.per_qubit.push_back(
        ensemble_average(branches, [&](const OutcomeBranch& br) { return expectation(br.post_state, term); }));
  }
  result.total = pairwise_sum(result.per_qubit);
  return result;
}

PostMeasurementAverages post_measurement_averages(std::span<const OutcomeBranch> branches,
                                                  const ModelParams& params, const Partition& part) {
  PostMeasurementAverages result{{}, 0.0};
  for (auto q : part.outputs()) {
    const PauliSum term = local_term(params, q);
    result.output_local.push_back(
        ensemble_average(branches, [&](const OutcomeBranch& br) { return expectation(br.post_state, term); }));
  }
  const PauliSum v = interaction_term(params);
  result.interaction =
      ensemble_average(branches, [&](const OutcomeBranch& br) { return expectation(br.post_state, v); });
  return result;
}

PauliString rotation_generator(const Partition& part, std::optional<std::uint64_t> rotation_qubit) {
  const auto outputs = part.outputs();
  const std::uint64_t y_qubit = rotation_qubit.value_or(outputs.front());
  if (!part.is_output(y_qubit)) {
    throw Error(ErrorCode::InvalidPartition, "the sigma^y factor must sit on an output qubit");
  }
  PauliString g(static_cast<unsigned>(part.n_qubits()));
  for (auto q : outputs) g.set(q, q == y_qubit ? Pauli::Y : Pauli::X);
  return g;
}

StateVector apply_conditional_unitary(const OutcomeBranch& branch, const Partition& part, double theta,
                                      std::optional<std::uint64_t> rotation_qubit) {
  const PauliString generator = rotation_generator(part, rotation_qubit);
  StateVector rotated = apply_pauli_string(branch.post_state, generator);
  rotated.scale(Complex(0.0, -static_cast<double>(branch.alpha_product) * std::sin(theta)));
  rotated.add_scaled(std::cos(theta), branch.post_state);
  return rotated;
}

ProtocolReport extracted_energy(const ModelParams& params, const Partition& part, double theta,
                                const ProtocolOptions& options) {
  auto branches = measure_branches(params, part, options);
  const auto injected = injected_energy(branches, params, part);
  const auto ops = extraction_operators(params, part);

  std::vector<BranchEnergies> per_branch(branches.size(), {0.0, 0.0});
  parallel_for(branches.size(), options.threads, [&](std::size_t b) {
    if (branches[b].null_branch) return;
    const StateVector after = apply_conditional_unitary(branches[b], part, theta, options.rotation_qubit);
    per_branch[b] = {expectation(after, ops.output_side), expectation(after, ops.total)};
  });

  std::vector<double> out_terms(branches.size());
  std::vector<double> total_terms(branches.size());
  for (std::size_t b = 0; b < branches.size(); ++b) {
    out_terms[b] = branches[b].probability * per_branch[b].output_side;
    total_terms[b] = branches[b].probability * per_branch[b].total;
  }
  const double e_out = -pairwise_sum(out_terms);
  const double trace = pairwise_sum(total_terms);

  ProtocolReport report{injected.total, injected.per_qubit, theta, e_out, injected.total - trace,
                        trace, e_out / injected.total, {}};
  if (options.keep_branches) report.branches = std::move(branches);
  return report;
}

ThetaChoice optimize_theta_numeric(const ModelParams& params, const Partition& part,
                                   const ProtocolOptions& options) {
  const auto branches = measure_branches(params, part, options);
  const auto ops = extraction_operators(params, part);
  auto extracted = [&](double theta) {
    std::vector<double> terms(branches.size(), 0.0);
    parallel_for(branches.size(), options.threads, [&](std::size_t b) {
      if (branches[b].null_branch) return;
      const StateVector after = apply_conditional_unitary(branches[b], part, theta, options.rotation_qubit);
      terms[b] = branches[b].probability * expectation(after, ops.output_side);
    });
    return -pairwise_sum(terms);
  };
  const auto best = golden_section_maximize(extracted, 0.0, std::numbers::pi / 2.0, 1e-9);
  return {best.argmax, std::cos(2.0 * best.argmax), std::sin(2.0 * best.argmax)};
}

ProtocolReport simulate_with_outputs(const ModelParams& params, std::vector<std::uint64_t> outputs,
                                     double theta, const ProtocolOptions& options) {
  const Partition part = Partition::with_outputs(params, std::move(outputs));
  return extracted_energy(params, part, theta, options);
}

SampledRun sample_protocol(const ModelParams& params, const Partition& part, double theta,
                           std::uint64_t shots, std::uint64_t seed, const ProtocolOptions& options) {
  const auto branches = measure_branches(params, part, options);
  const auto ops = extraction_operators(params, part);
  const auto inputs = part.inputs();

  std::vector<double> in_energy(branches.size(), 0.0);
  std::vector<double> out_energy(branches.size(), 0.0);
  std::vector<double> weights(branches.size(), 0.0);
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (branches[b].null_branch) continue;
    weights[b] = branches[b].probability;
    for (auto q : inputs) in_energy[b] += expectation(branches[b].post_state, local_term(params, q));
    const StateVector after = apply_conditional_unitary(branches[b], part, theta, options.rotation_qubit);
    out_energy[b] = -expectation(after, ops.output_side);
  }

  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  SampledRun run{shots, seed, 0.0, 0.0, std::vector<std::uint64_t>(branches.size(), 0)};
  for (std::uint64_t s = 0; s < shots; ++s) ++run.branch_counts[pick(rng)];
  std::vector<double> in_terms(branches.size());
  std::vector<double> out_terms(branches.size());
  for (std::size_t b = 0; b < branches.size(); ++b) {
    in_terms[b] = static_cast<double>(run.branch_counts[b]) * in_energy[b];
    out_terms[b] = static_cast<double>(run.branch_counts[b]) * out_energy[b];
  }
  if (shots > 0) {
    run.e_in = pairwise_sum(in_terms) / static_cast<double>(shots);
    run.e_out = pairwise_sum(out_terms) / static_cast<double>(shots);
  }
  return run;
}

}  // namespace qet
