#pragma once

#include <cstddef>
#include <vector>

#include "qet/pauli.hpp"
#include "qet/state_vector.hpp"

namespace qet {

/// Square complex matrix on the 2^N-dimensional register, column-major.
class DenseOperator {
 public:
  explicit DenseOperator(unsigned n_qubits);

  static DenseOperator from_pauli_sum(const PauliSum& op);

  unsigned n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return dim_; }

  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[col * dim_ + row]; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[col * dim_ + row]; }

  /// max_{ij} |A_ij - conj(A_ji)|.
  double hermitian_defect() const noexcept;
  bool is_real() const noexcept;

  StateVector apply(const StateVector& state) const;

 private:
  unsigned n_qubits_;
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Real part of <psi|A|psi>. Throws NonHermitian when A is not Hermitian to
/// 1e-12 or the imaginary part of the result exceeds 1e-10.
double expectation(const StateVector& state, const DenseOperator& op);

struct Eigenpair {
  double value;
  StateVector vector;
};

/// Lowest eigenpair of a Hermitian operator via LAPACK's relatively-robust
/// representation driver (dsyevr for real matrices, zheevr otherwise), which
/// tridiagonalises and extracts only the requested eigenpair.
Eigenpair smallest_eigenpair(const DenseOperator& op);

}  // namespace qet
