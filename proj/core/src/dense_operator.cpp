#include "qet/dense_operator.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qet/error.hpp"

namespace qet {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr unsigned kMaxDenseQubits = 14;

// Eigenvectors are defined up to a phase; make the largest-magnitude
// amplitude real and negative, matching the sign of the |1...1> amplitude
// in the analytic ground state.
void fix_phase(std::vector<Complex>& v) {
  const auto it = std::max_element(v.begin(), v.end(),
                                   [](const Complex& a, const Complex& b) { return std::abs(a) < std::abs(b); });
  if (it == v.end() || std::abs(*it) == 0.0) return;
  const Complex phase = -std::conj(*it) / std::abs(*it);
  for (auto& a : v) a *= phase;
}

}  // namespace

DenseOperator::DenseOperator(unsigned n_qubits) : n_qubits_(n_qubits), dim_(0) {
  if (n_qubits > kMaxDenseQubits) {
    throw Error(ErrorCode::OracleCapExceeded,
                "dense operators are limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  dim_ = std::size_t{1} << n_qubits;
  data_.assign(dim_ * dim_, Complex{});
}

DenseOperator DenseOperator::from_pauli_sum(const PauliSum& op) {
  DenseOperator m(op.n_qubits());
  for (const auto& term : op.terms()) {
    const std::uint64_t flip = term.x_mask();
    const std::uint64_t sign = term.z_mask();
    Complex prefactor = term.coefficient();
    for (unsigned y = 0; y < term.y_count(); ++y) prefactor *= Complex(0.0, 1.0);
    for (std::uint64_t col = 0; col < m.dim_; ++col) {
      const Complex phase = (std::popcount(col & sign) & 1) ? -prefactor : prefactor;
      m(col ^ flip, col) += phase;
    }
  }
  return m;
}

double DenseOperator::hermitian_defect() const noexcept {
  double worst = 0.0;
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t r = 0; r <= c; ++r) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

bool DenseOperator::is_real() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) { return z.imag() == 0.0; });
}

StateVector DenseOperator::apply(const StateVector& state) const {
  if (state.n_qubits() != n_qubits_) {
    throw Error(ErrorCode::DimensionMismatch, "operator and state sizes differ");
  }
  std::vector<Complex> out(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    const Complex x = state[c];
    if (x == Complex{}) continue;
    const Complex* column = &data_[c * dim_];
    for (std::size_t r = 0; r < dim_; ++r) out[r] += column[r] * x;
  }
  return StateVector(n_qubits_, std::move(out));
}

double expectation(const StateVector& state, const DenseOperator& op) {
  if (op.hermitian_defect() > kHermitianTolerance) {
    throw Error(ErrorCode::NonHermitian, "operator is not Hermitian");
  }
  const Complex value = state.inner(op.apply(state));
  if (std::abs(value.imag()) > 1e-10) {
    throw Error(ErrorCode::NonHermitian, "expectation value has an imaginary part");
  }
  return value.real();
}

Eigenpair smallest_eigenpair(const DenseOperator& op) {
  if (op.hermitian_defect() > kHermitianTolerance) {
    throw Error(ErrorCode::NonHermitian, "eigensolver requires a Hermitian operator");
  }
  const auto n = static_cast<lapack_int>(op.dimension());
  lapack_int found = 0;
  std::vector<double> eigenvalues(static_cast<std::size_t>(n));
  std::vector<lapack_int> support(2);
  std::vector<Complex> vec(static_cast<std::size_t>(n));
  lapack_int info = 0;

  if (op.is_real()) {
    std::vector<double> a(op.dimension() * op.dimension());
    for (std::size_t c = 0; c < op.dimension(); ++c) {
      for (std::size_t r = 0; r < op.dimension(); ++r) a[c * op.dimension() + r] = op(r, c).real();
    }
    std::vector<double> z(static_cast<std::size_t>(n));
    info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1, 1, 0.0,
                          &found, eigenvalues.data(), z.data(), n, support.data());
    for (std::size_t i = 0; i < z.size(); ++i) vec[i] = z[i];
  } else {
    std::vector<Complex> a(op.dimension() * op.dimension());
    for (std::size_t c = 0; c < op.dimension(); ++c) {
      for (std::size_t r = 0; r < op.dimension(); ++r) a[c * op.dimension() + r] = op(r, c);
    }
    info = LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1, 1, 0.0,
                          &found, eigenvalues.data(), vec.data(), n, support.data());
  }
  if (info != 0 || found != 1) {
    throw Error(ErrorCode::LinearAlgebraFailure, "eigensolver returned info = " + std::to_string(info));
  }
  fix_phase(vec);
  return {eigenvalues[0], StateVector(op.n_qubits(), std::move(vec))};
}

}  // namespace qet
