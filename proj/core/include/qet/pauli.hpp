#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qet/state_vector.hpp"

namespace qet {

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// coefficient * P_1 (x) P_2 (x) ... (x) P_N. Letter i-1 acts on qubit i.
class PauliString {
 public:
  explicit PauliString(unsigned n_qubits, Complex coefficient = 1.0);

  /// Parses e.g. "XIYZ"; position i is qubit i+1.
  static PauliString parse(std::string_view letters, Complex coefficient = 1.0);
  static PauliString single(unsigned n_qubits, std::uint64_t qubit, Pauli letter,
                            Complex coefficient = 1.0);

  PauliString& set(std::uint64_t qubit, Pauli letter);
  Pauli at(std::uint64_t qubit) const;

  unsigned n_qubits() const noexcept { return static_cast<unsigned>(letters_.size()); }
  Complex coefficient() const noexcept { return coefficient_; }
  void set_coefficient(Complex c) noexcept { coefficient_ = c; }

  /// Basis-index bits flipped by the string (X and Y positions).
  std::uint64_t x_mask() const noexcept;
  /// Basis-index bits picking up a sign (Z and Y positions).
  std::uint64_t z_mask() const noexcept;
  unsigned y_count() const noexcept;

  /// Hermitian iff the coefficient is real.
  bool is_hermitian(double tolerance = 0.0) const noexcept;

  std::string to_string() const;

 private:
  std::vector<Pauli> letters_;
  Complex coefficient_;
};

/// Returns p|psi> in O(2^N): every basis index i maps to i ^ x_mask with
/// phase coefficient * i^{#Y} * (-1)^{popcount(i & z_mask)} (Y = i X Z).
StateVector apply_pauli_string(const StateVector& state, const PauliString& p);

/// Hermitian combination of Pauli strings, e.g. a Hamiltonian term with its
/// constant (an all-identity string).
class PauliSum {
 public:
  explicit PauliSum(unsigned n_qubits) : n_qubits_(n_qubits) {}

  PauliSum& add(PauliString term);
  PauliSum& add(const PauliSum& other);
  PauliSum& add_constant(double value);

  unsigned n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliString>& terms() const noexcept { return terms_; }

  bool is_hermitian(double tolerance = 0.0) const noexcept;

 private:
  unsigned n_qubits_;
  std::vector<PauliString> terms_;
};

StateVector apply_pauli_sum(const StateVector& state, const PauliSum& op);

/// <psi|p|psi> without materialising p|psi>.
Complex expectation_complex(const StateVector& state, const PauliString& p);

/// Real part of <psi|O|psi>. Throws NonHermitian when the operator has a
/// complex coefficient or the imaginary part exceeds 1e-10.
double expectation(const StateVector& state, const PauliString& p);
double expectation(const StateVector& state, const PauliSum& op);

/// max_{ij} |([A, B])_{ij}|, built column by column from basis states.
/// Costs O(4^N * terms) and never stores a full matrix.
double commutator_max_norm(const PauliSum& a, const PauliSum& b);

}  // namespace qet
