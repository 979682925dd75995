#include "qet/closed_form.hpp"

#include <cmath>

namespace qet {

namespace {

// A = N m h^2 + 4 k^2 (the "cost" coefficient), B = 2 (N-m) h k (the "gain").
struct RotationCoefficients {
  double cost;
  double gain;
  double scale;
};

RotationCoefficients coefficients(const ModelParams& params, const Partition& part) {
  const double n = static_cast<double>(params.n_qubits());
  const double m = static_cast<double>(part.m_outputs());
  const double h = params.h();
  const double k = params.k();
  return {n * m * h * h + 4.0 * k * k, 2.0 * (n - m) * h * k, params.coupling_scale()};
}

}  // namespace

double input_energy(const ModelParams& params, const Partition& part) {
  return static_cast<double>(part.n_inputs()) * local_constant(params);
}

double output_energy_at_theta(const ModelParams& params, const Partition& part, double theta) {
  const auto [cost, gain, scale] = coefficients(params, part);
  const double s = std::sin(theta);
  // 1 - cos 2theta = 2 sin^2 theta
  return (gain * std::sin(2.0 * theta) - cost * 2.0 * s * s) / scale;
}

ThetaChoice optimal_theta(const ModelParams& params, const Partition& part) {
  const auto [cost, gain, scale] = coefficients(params, part);
  const double norm = std::hypot(cost, gain);
  return {0.5 * std::atan2(gain, cost), cost / norm, gain / norm};
}

double max_output_energy(const ModelParams& params, const Partition& part) {
  const auto [cost, gain, scale] = coefficients(params, part);
  const double r = gain / cost;
  const double sqrt1pm1 = r * r / (std::sqrt(1.0 + r * r) + 1.0);
  return cost / scale * sqrt1pm1;
}

double efficiency(const ModelParams& params, const Partition& part) {
  return max_output_energy(params, part) / input_energy(params, part);
}

double single_output_efficiency(const ModelParams& params) {
  return efficiency(params, Partition::trailing(params, 1));
}

double asymptotic_efficiency(const ModelParams& params, const Partition& part) {
  return static_cast<double>(part.n_inputs()) /
         (2.0 * static_cast<double>(params.n_qubits()));
}

ClosedFormReport closed_form_report(const ModelParams& params, const Partition& part) {
  const double e_in = input_energy(params, part);
  const double e_out = max_output_energy(params, part);
  return {e_in, e_out, optimal_theta(params, part), e_out / e_in};
}

}  // namespace qet
