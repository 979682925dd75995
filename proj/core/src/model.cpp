#include "qet/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qet/error.hpp"

namespace qet {

double ModelParams::coupling_scale() const noexcept {
  return std::hypot(static_cast<double>(n_) * h_, 2.0 * k_);
}

ModelParams ModelParams::zero_coupling_limit(std::uint64_t n_qubits, double h) {
  if (n_qubits < 2) {
    throw Error(ErrorCode::TooFewQubits, "N must be at least 2");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::NonPositiveCoupling, "h must be positive and finite");
  }
  return ModelParams(n_qubits, h, 0.0);
}

ModelParams validate_params(std::int64_t n_qubits, double h, double k,
                            std::optional<unsigned> oracle_cap) {
  if (n_qubits < 2) {
    throw Error(ErrorCode::TooFewQubits, "N must be at least 2, got " + std::to_string(n_qubits));
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::NonPositiveCoupling, "h must be positive and finite");
  }
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorCode::NonPositiveCoupling, "k must be positive and finite");
  }
  if (oracle_cap && static_cast<std::uint64_t>(n_qubits) > *oracle_cap) {
    throw Error(ErrorCode::Overflow, "N = " + std::to_string(n_qubits) +
                                         " exceeds the oracle cap of " +
                                         std::to_string(*oracle_cap));
  }
  ModelParams params(static_cast<std::uint64_t>(n_qubits), h, k);
  if (!std::isfinite(params.coupling_scale())) {
    throw Error(ErrorCode::Overflow, "coupling scale is not finite");
  }
  return params;
}

ModelParams params_from_ratio(std::int64_t n_qubits, double ratio, double h,
                              std::optional<unsigned> oracle_cap) {
  if (ratio == 0.0) {
    if (n_qubits < 2) {
      throw Error(ErrorCode::TooFewQubits, "N must be at least 2, got " + std::to_string(n_qubits));
    }
    if (oracle_cap && static_cast<std::uint64_t>(n_qubits) > *oracle_cap) {
      throw Error(ErrorCode::Overflow, "N exceeds the oracle cap");
    }
    return ModelParams::zero_coupling_limit(static_cast<std::uint64_t>(n_qubits), h);
  }
  return validate_params(n_qubits, h, ratio * h, oracle_cap);
}

Partition Partition::trailing(const ModelParams& params, std::uint64_t m_outputs) {
  const auto n = params.n_qubits();
  if (m_outputs < 1 || m_outputs > n - 1) {
    throw Error(ErrorCode::InvalidPartition,
                "m must satisfy 1 <= m <= N-1 (N = " + std::to_string(n) +
                    ", m = " + std::to_string(m_outputs) + ")");
  }
  return Partition(n, m_outputs, std::nullopt);
}

Partition Partition::with_outputs(const ModelParams& params, std::vector<std::uint64_t> outputs) {
  const auto n = params.n_qubits();
  std::sort(outputs.begin(), outputs.end());
  if (std::adjacent_find(outputs.begin(), outputs.end()) != outputs.end()) {
    throw Error(ErrorCode::InvalidPartition, "output qubits must be distinct");
  }
  if (outputs.empty() || outputs.size() > n - 1) {
    throw Error(ErrorCode::InvalidPartition, "need between 1 and N-1 output qubits");
  }
  if (outputs.front() < 1 || outputs.back() > n) {
    throw Error(ErrorCode::InvalidPartition, "output qubit labels must lie in [1, N]");
  }
  const auto m = outputs.size();
  return Partition(n, m, std::move(outputs));
}

std::vector<std::uint64_t> Partition::outputs() const {
  if (explicit_outputs_) return *explicit_outputs_;
  std::vector<std::uint64_t> out(m_);
  for (std::uint64_t i = 0; i < m_; ++i) out[i] = n_ - m_ + 1 + i;
  return out;
}

std::vector<std::uint64_t> Partition::inputs() const {
  std::vector<std::uint64_t> in;
  in.reserve(n_ - m_);
  for (std::uint64_t q = 1; q <= n_; ++q) {
    if (!is_output(q)) in.push_back(q);
  }
  return in;
}

bool Partition::is_output(std::uint64_t qubit) const {
  if (explicit_outputs_) {
    return std::binary_search(explicit_outputs_->begin(), explicit_outputs_->end(), qubit);
  }
  return qubit > n_ - m_ && qubit <= n_;
}

GroundStateAmplitudes ground_state_amplitudes(const ModelParams& params) {
  const double nh = static_cast<double>(params.n_qubits()) * params.h();
  const double c = params.coupling_scale();
  // 1 - Nh/c = 4k^2 / (c (c + Nh))
  const double a0 = params.k() * std::sqrt(2.0 / (c * (c + nh)));
  const double a1 = -std::sqrt(0.5 * (1.0 + nh / c));
  return {a0, a1};
}

double local_constant(const ModelParams& params) {
  const double h = params.h();
  return static_cast<double>(params.n_qubits()) * h * h / params.coupling_scale();
}

double interaction_constant(const ModelParams& params) {
  const double k = params.k();
  return 4.0 * k * k / params.coupling_scale();
}

}  // namespace qet
