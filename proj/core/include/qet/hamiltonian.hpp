#pragma once

#include <cstdint>

#include "qet/dense_operator.hpp"
#include "qet/model.hpp"
#include "qet/pauli.hpp"
#include "qet/state_vector.hpp"

namespace qet {

/// H_i = h Z_i + N h^2 / c.
PauliSum local_term(const ModelParams& params, std::uint64_t qubit);
/// V = 2k X_1 ... X_N + 4 k^2 / c.
PauliSum interaction_term(const ModelParams& params);
/// H = sum_i H_i + V as a Pauli sum (never materialised).
PauliSum hamiltonian_terms(const ModelParams& params);

/// P_j(alpha) = (1 + alpha X_j) / 2.
PauliSum measurement_projector(const ModelParams& params, std::uint64_t qubit, int alpha);

/// |0...0> and |1...1> weighted by ground_state_amplitudes().
StateVector analytic_ground_state(const ModelParams& params);

/// Dense 2^N x 2^N matrix of H. Throws OracleCapExceeded above `oracle_cap`.
DenseOperator build_hamiltonian(const ModelParams& params, unsigned oracle_cap = kDefaultOracleCap);

enum class GroundStateMethod { Dense, Block };

struct GroundState {
  double energy;
  StateVector state;
};

/// Lowest eigenvalue of H in the 2x2 block spanned by a basis state of
/// Hamming weight w and its bitwise complement. X_1...X_N couples only such
/// pairs, so these blocks exhaust the spectrum.
struct BlockSolution {
  double energy;
  std::uint64_t weight;
  /// Amplitude on the weight-w representative (lowest w bits set).
  double amp_low_weight;
  /// Amplitude on its complement.
  double amp_complement;
};

/// Scans all weight classes and returns the overall minimum. Never builds a
/// state, so any N is accepted.
BlockSolution block_ground_state(const ModelParams& params);

/// Dense: lowest eigenpair of build_hamiltonian(); requires N <= oracle_cap.
/// Block: block_ground_state() materialised; requires N <= kBlockOracleCap.
GroundState exact_ground_state(const ModelParams& params, GroundStateMethod method,
                               unsigned oracle_cap = kDefaultOracleCap);

}  // namespace qet
