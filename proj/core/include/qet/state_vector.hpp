#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qet {

using Complex = std::complex<double>;

/// Bit position of 1-based `qubit` inside a basis index of an n-qubit register.
/// Qubit 1 is the most significant bit: |b1 b2 ... bN> <-> sum_j b_j 2^(N-j).
constexpr unsigned qubit_bit(unsigned n_qubits, std::uint64_t qubit) {
  return n_qubits - static_cast<unsigned>(qubit);
}

/// Dense 2^N amplitude vector over the computational basis, |0> being the
/// +1 eigenstate of Z.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(unsigned n_qubits);
  StateVector(unsigned n_qubits, std::vector<Complex> amplitudes);

  static StateVector basis(unsigned n_qubits, std::uint64_t index);

  unsigned n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }

  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }

  double norm_squared() const noexcept;
  /// Rescales to unit norm and returns the previous squared norm. A zero
  /// vector is left untouched.
  double normalize() noexcept;

  /// <this|other>.
  Complex inner(const StateVector& other) const;

  void scale(Complex factor) noexcept;
  /// this += factor * other.
  void add_scaled(Complex factor, const StateVector& other);

 private:
  unsigned n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// |<a|b>|^2.
double overlap(const StateVector& a, const StateVector& b);

}  // namespace qet
