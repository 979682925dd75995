#pragma once

#include "qet/model.hpp"

namespace qet {

/// Rotation angle of the output unitary. theta lies in [0, pi/4], where both
/// cos 2theta and sin 2theta are nonnegative.
struct ThetaChoice {
  double theta;
  double cos_2theta;
  double sin_2theta;
};

struct ClosedFormReport {
  double e_in;
  double e_out_max;
  ThetaChoice theta_opt;
  double eta;
};

/// (N-m) N h^2 / c: energy deposited by the sigma^x measurements.
double input_energy(const ModelParams& params, const Partition& part);

/// Energy extracted by the conditional rotation at angle theta:
///   (1/c) [2(N-m)hk sin 2theta - (Nmh^2 + 4k^2)(1 - cos 2theta)].
/// Negative for poorly chosen theta.
double output_energy_at_theta(const ModelParams& params, const Partition& part, double theta);

/// Maximiser of output_energy_at_theta.
ThetaChoice optimal_theta(const ModelParams& params, const Partition& part);

/// Maximum of output_energy_at_theta over theta. Evaluated as
/// (A/c) r^2 / (sqrt(1 + r^2) + 1) with A = Nmh^2 + 4k^2, r = 2(N-m)hk / A,
/// which is free of the sqrt(1 + r^2) - 1 cancellation at large k/h.
double max_output_energy(const ModelParams& params, const Partition& part);

/// max_output_energy / input_energy. Zero in the k -> 0 limit.
double efficiency(const ModelParams& params, const Partition& part);

/// efficiency() for the single-output partition m = 1.
double single_output_efficiency(const ModelParams& params);

/// k/h -> infinity limit of efficiency(): (N-m) / (2N).
double asymptotic_efficiency(const ModelParams& params, const Partition& part);

ClosedFormReport closed_form_report(const ModelParams& params, const Partition& part);

}  // namespace qet
