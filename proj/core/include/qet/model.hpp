#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qet {

/// Largest qubit count the dense/brute-force paths accept by default.
inline constexpr unsigned kDefaultOracleCap = 12;
/// Largest qubit count the 2x2 block ground-state solver accepts.
inline constexpr unsigned kBlockOracleCap = 30;

/// Qubit count N and couplings (h, k) of the all-to-all model
///   H = sum_i h Z_i + 2k X_1 X_2 ... X_N + sqrt(N^2 h^2 + 4k^2).
/// Instances are immutable and only obtainable through validate_params(),
/// params_from_ratio() or zero_coupling_limit(), so every live value satisfies
/// N >= 2, h > 0, k > 0 (k == 0 only for the explicit zero-coupling limit).
class ModelParams {
 public:
  std::uint64_t n_qubits() const noexcept { return n_; }
  double h() const noexcept { return h_; }
  double k() const noexcept { return k_; }
  double ratio() const noexcept { return k_ / h_; }

  /// c = sqrt(N^2 h^2 + 4 k^2), evaluated with hypot so large N cannot overflow.
  double coupling_scale() const noexcept;

  /// The k -> 0+ limit point. Every closed form is continuous there.
  static ModelParams zero_coupling_limit(std::uint64_t n_qubits, double h = 1.0);

  bool operator==(const ModelParams&) const = default;

 private:
  ModelParams(std::uint64_t n, double h, double k) : n_(n), h_(h), k_(k) {}

  friend ModelParams validate_params(std::int64_t, double, double, std::optional<unsigned>);

  std::uint64_t n_;
  double h_;
  double k_;
};

/// Checks N >= 2 and h, k > 0. When `oracle_cap` is set the caller intends to
/// build 2^N-sized objects and N above the cap raises Overflow.
ModelParams validate_params(std::int64_t n_qubits, double h, double k,
                            std::optional<unsigned> oracle_cap = std::nullopt);

/// k = ratio * h. A ratio of exactly 0 yields zero_coupling_limit().
ModelParams params_from_ratio(std::int64_t n_qubits, double ratio, double h = 1.0,
                              std::optional<unsigned> oracle_cap = std::nullopt);

/// Split of qubits 1..N into N-m measured inputs and m outputs.
/// Qubit labels are 1-based throughout the library.
class Partition {
 public:
  /// Outputs {N-m+1, ..., N}; inputs {1, ..., N-m}.
  static Partition trailing(const ModelParams& params, std::uint64_t m_outputs);
  /// Arbitrary output set; must hold 1..N-1 distinct labels in [1, N].
  static Partition with_outputs(const ModelParams& params, std::vector<std::uint64_t> outputs);

  std::uint64_t n_qubits() const noexcept { return n_; }
  std::uint64_t m_outputs() const noexcept { return m_; }
  std::uint64_t n_inputs() const noexcept { return n_ - m_; }

  /// Sorted ascending.
  std::vector<std::uint64_t> outputs() const;
  /// Sorted ascending; the complement of outputs().
  std::vector<std::uint64_t> inputs() const;
  bool is_output(std::uint64_t qubit) const;

 private:
  Partition(std::uint64_t n, std::uint64_t m, std::optional<std::vector<std::uint64_t>> outputs)
      : n_(n), m_(m), explicit_outputs_(std::move(outputs)) {}

  std::uint64_t n_;
  std::uint64_t m_;
  std::optional<std::vector<std::uint64_t>> explicit_outputs_;
};

/// |g> = a_all_zero |0...0> + a_all_one |1...1>, with |0> the +1 eigenstate of Z.
struct GroundStateAmplitudes {
  double a_all_zero;
  double a_all_one;
};

/// a0 = sqrt((1 - Nh/c)/2) >= 0 and a1 = -sqrt((1 + Nh/c)/2) <= 0. The first
/// amplitude is evaluated as k sqrt(2 / (c (c + Nh))) to avoid cancellation.
GroundStateAmplitudes ground_state_amplitudes(const ModelParams& params);

/// N h^2 / c: the constant that zeroes <g|H_i|g>.
double local_constant(const ModelParams& params);

/// 4 k^2 / c: the constant that zeroes <g|V|g>.
double interaction_constant(const ModelParams& params);

}  // namespace qet
