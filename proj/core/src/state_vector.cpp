#include "qet/state_vector.hpp"

#include <cmath>
#include <string>

#include "qet/error.hpp"

namespace qet {

namespace {

constexpr unsigned kMaxQubits = 34;

std::size_t checked_dimension(unsigned n_qubits) {
  if (n_qubits > kMaxQubits) {
    throw Error(ErrorCode::Overflow,
                "a " + std::to_string(n_qubits) + "-qubit state vector does not fit in memory");
  }
  return std::size_t{1} << n_qubits;
}

}  // namespace

StateVector::StateVector(unsigned n_qubits)
    : n_qubits_(n_qubits), amplitudes_(checked_dimension(n_qubits)) {
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(unsigned n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != checked_dimension(n_qubits)) {
    throw Error(ErrorCode::DimensionMismatch, "amplitude count must be 2^N");
  }
}

StateVector StateVector::basis(unsigned n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

double StateVector::normalize() noexcept {
  const double n2 = norm_squared();
  if (n2 > 0.0) scale(1.0 / std::sqrt(n2));
  return n2;
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dimension() != dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "inner product of states with different sizes");
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    sum += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  }
  return sum;
}

void StateVector::scale(Complex factor) noexcept {
  for (auto& a : amplitudes_) a *= factor;
}

void StateVector::add_scaled(Complex factor, const StateVector& other) {
  if (other.dimension() != dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "adding states with different sizes");
  }
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    amplitudes_[i] += factor * other.amplitudes_[i];
  }
}

double overlap(const StateVector& a, const StateVector& b) { return std::norm(a.inner(b)); }

}  // namespace qet
