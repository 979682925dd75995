#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qet/closed_form.hpp"
#include "qet/model.hpp"
#include "qet/pauli.hpp"
#include "qet/state_vector.hpp"

namespace qet {

/// One joint outcome of the sigma^x measurements on the input qubits.
struct OutcomeBranch {
  /// +1/-1 per input qubit, in the order of Partition::inputs().
  std::vector<int> alpha;
  double probability;
  /// Normalised post-measurement state; left unnormalised when null_branch.
  StateVector post_state;
  int alpha_product;
  /// Probability is zero; the branch contributes nothing to any average.
  bool null_branch;
};

struct ProtocolOptions {
  unsigned oracle_cap = kDefaultOracleCap;
  /// Branches are evaluated on this many workers; sums are reduced in a
  /// fixed pairwise order so the result does not depend on it.
  unsigned threads = 1;
  /// Output qubit carrying the sigma^y factor of the rotation. Defaults to
  /// the lowest-labelled output.
  std::optional<std::uint64_t> rotation_qubit;
  /// Keep the branch list in the report. Switch off for large sweeps.
  bool keep_branches = true;
};

struct InjectedEnergy {
  double total;
  /// One entry per input qubit, ordered as Partition::inputs().
  std::vector<double> per_qubit;
};

struct ProtocolReport {
  double e_in;
  std::vector<double> per_qubit_e_in;
  double theta_used;
  /// -sum_alpha p(alpha) <psi'|sum_{outputs} H_j + V|psi'>.
  double e_out;
  /// e_in - Tr[rho H].
  double e_out_via_trace;
  double trace_rho_h;
  double eta;
  std::vector<OutcomeBranch> branches;
};

/// Ensemble averages right after measurement, before any rotation.
struct PostMeasurementAverages {
  /// <H_j> for each output qubit j, ordered as Partition::outputs().
  std::vector<double> output_local;
  double interaction;
};

/// Enumerates all 2^(N-m) outcomes alpha, applying prod_j (1 + alpha_j X_j)/2
/// to the analytic ground state. Branch b has alpha_j = -1 exactly when bit
/// (N-m-j) of b is set, so branch 0 is all +1.
std::vector<OutcomeBranch> measure_branches(const ModelParams& params, const Partition& part,
                                            const ProtocolOptions& options = {});

InjectedEnergy injected_energy(std::span<const OutcomeBranch> branches, const ModelParams& params,
                               const Partition& part);

PostMeasurementAverages post_measurement_averages(std::span<const OutcomeBranch> branches,
                                                  const ModelParams& params, const Partition& part);

/// sigma^y on `rotation_qubit` (default: lowest output) and sigma^x on every
/// other output qubit.
PauliString rotation_generator(const Partition& part,
                               std::optional<std::uint64_t> rotation_qubit = std::nullopt);

/// (cos theta - i alpha sin theta G)|psi_alpha> with alpha the outcome product.
StateVector apply_conditional_unitary(const OutcomeBranch& branch, const Partition& part, double theta,
                                      std::optional<std::uint64_t> rotation_qubit = std::nullopt);

/// Full protocol at a fixed angle, with two independent accountings of the
/// extracted energy.
ProtocolReport extracted_energy(const ModelParams& params, const Partition& part, double theta,
                                const ProtocolOptions& options = {});

/// Golden-section maximisation of the oracle's extracted energy over
/// theta in [0, pi/2] to 1e-9.
ThetaChoice optimize_theta_numeric(const ModelParams& params, const Partition& part,
                                   const ProtocolOptions& options = {});

/// extracted_energy() for an arbitrary output set.
ProtocolReport simulate_with_outputs(const ModelParams& params, std::vector<std::uint64_t> outputs,
                                     double theta, const ProtocolOptions& options = {});

/// Monte Carlo run of the protocol: outcomes drawn from the exact branch
/// distribution. Demonstration only; the exact paths above are authoritative.
struct SampledRun {
  std::uint64_t shots;
  std::uint64_t seed;
  double e_in;
  double e_out;
  std::vector<std::uint64_t> branch_counts;
};

SampledRun sample_protocol(const ModelParams& params, const Partition& part, double theta,
                           std::uint64_t shots, std::uint64_t seed, const ProtocolOptions& options = {});

}  // namespace qet
