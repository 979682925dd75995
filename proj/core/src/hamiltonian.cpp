#include "qet/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qet/error.hpp"

namespace qet {

namespace {

unsigned register_size(const ModelParams& params, unsigned cap) {
  if (params.n_qubits() > cap) {
    throw Error(ErrorCode::OracleCapExceeded, "N = " + std::to_string(params.n_qubits()) +
                                                  " exceeds the oracle cap of " + std::to_string(cap));
  }
  return static_cast<unsigned>(params.n_qubits());
}

// Lower eigenpair of [[mid + half_gap, b], [b, mid - half_gap]] by the
// Jacobi rotation angle.
struct Lower2x2 {
  double value;
  double first;
  double second;
};

Lower2x2 lower_eigenpair(double mid, double half_gap, double b) {
  const double radius = std::hypot(half_gap, b);
  const double phi = 0.5 * std::atan2(b, half_gap);
  // (cos phi, sin phi) carries mid + radius; its orthogonal partner the lower one.
  return {mid - radius, -std::sin(phi), std::cos(phi)};
}

}  // namespace

PauliSum local_term(const ModelParams& params, std::uint64_t qubit) {
  const auto n = static_cast<unsigned>(params.n_qubits());
  PauliSum term(n);
  term.add(PauliString::single(n, qubit, Pauli::Z, params.h()));
  term.add_constant(local_constant(params));
  return term;
}

PauliSum interaction_term(const ModelParams& params) {
  const auto n = static_cast<unsigned>(params.n_qubits());
  PauliString all_x(n, 2.0 * params.k());
  for (unsigned q = 1; q <= n; ++q) all_x.set(q, Pauli::X);
  PauliSum term(n);
  term.add(std::move(all_x));
  term.add_constant(interaction_constant(params));
  return term;
}

PauliSum hamiltonian_terms(const ModelParams& params) {
  const auto n = static_cast<unsigned>(params.n_qubits());
  PauliSum h(n);
  for (unsigned q = 1; q <= n; ++q) h.add(local_term(params, q));
  h.add(interaction_term(params));
  return h;
}

PauliSum measurement_projector(const ModelParams& params, std::uint64_t qubit, int alpha) {
  const auto n = static_cast<unsigned>(params.n_qubits());
  PauliSum p(n);
  p.add_constant(0.5);
  p.add(PauliString::single(n, qubit, Pauli::X, 0.5 * alpha));
  return p;
}

StateVector analytic_ground_state(const ModelParams& params) {
  const auto n = register_size(params, 63);
  const auto amps = ground_state_amplitudes(params);
  StateVector g(n);
  g[0] = amps.a_all_zero;
  g[g.dimension() - 1] = amps.a_all_one;
  return g;
}

DenseOperator build_hamiltonian(const ModelParams& params, unsigned oracle_cap) {
  register_size(params, oracle_cap);
  return DenseOperator::from_pauli_sum(hamiltonian_terms(params));
}

BlockSolution block_ground_state(const ModelParams& params) {
  const std::uint64_t n = params.n_qubits();
  const double h = params.h();
  const double c = params.coupling_scale();
  const double off_diagonal = 2.0 * params.k();
  BlockSolution best{std::numeric_limits<double>::infinity(), 0, 0.0, 0.0};
  for (std::uint64_t w = 0; 2 * w <= n; ++w) {
    // sum_i h Z_i on a weight-w basis state is h (N - 2w); on its complement the negative.
    const double field = h * (static_cast<double>(n) - 2.0 * static_cast<double>(w));
    const auto pair = lower_eigenpair(c, field, off_diagonal);
    if (pair.value < best.energy) best = {pair.value, w, pair.first, pair.second};
  }
  // Sign convention: nonnegative amplitude on the low-weight side.
  if (best.amp_low_weight < 0.0 || (best.amp_low_weight == 0.0 && best.amp_complement > 0.0)) {
    best.amp_low_weight = -best.amp_low_weight;
    best.amp_complement = -best.amp_complement;
  }
  return best;
}

GroundState exact_ground_state(const ModelParams& params, GroundStateMethod method,
                               unsigned oracle_cap) {
  if (method == GroundStateMethod::Dense) {
    auto [value, vector] = smallest_eigenpair(build_hamiltonian(params, oracle_cap));
    return {value, std::move(vector)};
  }
  const auto n = register_size(params, kBlockOracleCap);
  const auto block = block_ground_state(params);
  StateVector state(n);
  const std::uint64_t low = (std::uint64_t{1} << block.weight) - 1;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  state[0] = 0.0;
  state[low] = block.amp_low_weight;
  state[low ^ mask] = block.amp_complement;
  return {block.energy, std::move(state)};
}

}  // namespace qet
