#include "qet/pauli.hpp"

#include <bit>
#include <cmath>

#include "qet/error.hpp"

namespace qet {

namespace {

constexpr double kImaginaryTolerance = 1e-10;

void check_qubit(unsigned n, std::uint64_t qubit) {
  if (qubit < 1 || qubit > n) {
    throw Error(ErrorCode::DimensionMismatch, "qubit label outside [1, N]");
  }
}

void check_sizes(const StateVector& state, unsigned n) {
  if (state.n_qubits() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator acts on " + std::to_string(n) + " qubits, state has " +
                    std::to_string(state.n_qubits()));
  }
}

// i^k for k in 0..3.
Complex i_power(unsigned k) {
  switch (k & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

struct Action {
  std::uint64_t flip;
  std::uint64_t sign;
  Complex prefactor;
};

Action action_of(const PauliString& p) {
  return {p.x_mask(), p.z_mask(), p.coefficient() * i_power(p.y_count())};
}

inline Complex phase_at(const Action& a, std::uint64_t index) {
  return (std::popcount(index & a.sign) & 1) ? -a.prefactor : a.prefactor;
}

}  // namespace

PauliString::PauliString(unsigned n_qubits, Complex coefficient)
    : letters_(n_qubits, Pauli::I), coefficient_(coefficient) {
  if (n_qubits > 63) throw Error(ErrorCode::Overflow, "Pauli strings support at most 63 qubits");
}

PauliString PauliString::parse(std::string_view letters, Complex coefficient) {
  PauliString p(static_cast<unsigned>(letters.size()), coefficient);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    Pauli letter;
    switch (letters[i]) {
      case 'I': letter = Pauli::I; break;
      case 'X': letter = Pauli::X; break;
      case 'Y': letter = Pauli::Y; break;
      case 'Z': letter = Pauli::Z; break;
      default:
        throw Error(ErrorCode::DimensionMismatch, std::string("unknown Pauli letter '") +
                                                      letters[i] + "'");
    }
    p.letters_[i] = letter;
  }
  return p;
}

PauliString PauliString::single(unsigned n_qubits, std::uint64_t qubit, Pauli letter,
                                Complex coefficient) {
  PauliString p(n_qubits, coefficient);
  p.set(qubit, letter);
  return p;
}

PauliString& PauliString::set(std::uint64_t qubit, Pauli letter) {
  check_qubit(n_qubits(), qubit);
  letters_[qubit - 1] = letter;
  return *this;
}

Pauli PauliString::at(std::uint64_t qubit) const {
  check_qubit(n_qubits(), qubit);
  return letters_[qubit - 1];
}

std::uint64_t PauliString::x_mask() const noexcept {
  std::uint64_t mask = 0;
  const unsigned n = n_qubits();
  for (unsigned q = 1; q <= n; ++q) {
    const Pauli l = letters_[q - 1];
    if (l == Pauli::X || l == Pauli::Y) mask |= std::uint64_t{1} << qubit_bit(n, q);
  }
  return mask;
}

std::uint64_t PauliString::z_mask() const noexcept {
  std::uint64_t mask = 0;
  const unsigned n = n_qubits();
  for (unsigned q = 1; q <= n; ++q) {
    const Pauli l = letters_[q - 1];
    if (l == Pauli::Z || l == Pauli::Y) mask |= std::uint64_t{1} << qubit_bit(n, q);
  }
  return mask;
}

unsigned PauliString::y_count() const noexcept {
  unsigned count = 0;
  for (auto l : letters_) count += (l == Pauli::Y);
  return count;
}

bool PauliString::is_hermitian(double tolerance) const noexcept {
  return std::abs(coefficient_.imag()) <= tolerance;
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto l : letters_) s.push_back("IXYZ"[static_cast<int>(l)]);
  return s;
}

StateVector apply_pauli_string(const StateVector& state, const PauliString& p) {
  check_sizes(state, p.n_qubits());
  const Action a = action_of(p);
  std::vector<Complex> out(state.dimension());
  const auto in = state.amplitudes();
  for (std::uint64_t i = 0; i < in.size(); ++i) {
    out[i ^ a.flip] = phase_at(a, i) * in[i];
  }
  return StateVector(state.n_qubits(), std::move(out));
}

PauliSum& PauliSum::add(PauliString term) {
  if (term.n_qubits() != n_qubits_) {
    throw Error(ErrorCode::DimensionMismatch, "term size differs from the sum it joins");
  }
  terms_.push_back(std::move(term));
  return *this;
}

PauliSum& PauliSum::add(const PauliSum& other) {
  for (const auto& t : other.terms()) add(t);
  return *this;
}

PauliSum& PauliSum::add_constant(double value) {
  return add(PauliString(n_qubits_, value));
}

bool PauliSum::is_hermitian(double tolerance) const noexcept {
  for (const auto& t : terms_) {
    if (!t.is_hermitian(tolerance)) return false;
  }
  return true;
}

StateVector apply_pauli_sum(const StateVector& state, const PauliSum& op) {
  check_sizes(state, op.n_qubits());
  std::vector<Complex> out(state.dimension());
  const auto in = state.amplitudes();
  for (const auto& term : op.terms()) {
    const Action a = action_of(term);
    for (std::uint64_t i = 0; i < in.size(); ++i) {
      out[i ^ a.flip] += phase_at(a, i) * in[i];
    }
  }
  return StateVector(state.n_qubits(), std::move(out));
}

Complex expectation_complex(const StateVector& state, const PauliString& p) {
  check_sizes(state, p.n_qubits());
  const Action a = action_of(p);
  const auto psi = state.amplitudes();
  Complex sum = 0.0;
  for (std::uint64_t i = 0; i < psi.size(); ++i) {
    sum += std::conj(psi[i ^ a.flip]) * phase_at(a, i) * psi[i];
  }
  return sum;
}

double expectation(const StateVector& state, const PauliString& p) {
  if (!p.is_hermitian()) {
    throw Error(ErrorCode::NonHermitian, "Pauli string " + p.to_string() + " has a complex coefficient");
  }
  const Complex value = expectation_complex(state, p);
  if (std::abs(value.imag()) > kImaginaryTolerance) {
    throw Error(ErrorCode::NonHermitian, "expectation value has an imaginary part");
  }
  return value.real();
}

double expectation(const StateVector& state, const PauliSum& op) {
  if (!op.is_hermitian()) {
    throw Error(ErrorCode::NonHermitian, "Pauli sum has a complex coefficient");
  }
  check_sizes(state, op.n_qubits());
  Complex sum = 0.0;
  for (const auto& term : op.terms()) sum += expectation_complex(state, term);
  if (std::abs(sum.imag()) > kImaginaryTolerance) {
    throw Error(ErrorCode::NonHermitian, "expectation value has an imaginary part");
  }
  return sum.real();
}

double commutator_max_norm(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw Error(ErrorCode::DimensionMismatch, "commutator of operators on different registers");
  }
  const unsigned n = a.n_qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  double worst = 0.0;
  for (std::uint64_t col = 0; col < dim; ++col) {
    const StateVector e = StateVector::basis(n, col);
    const StateVector ab = apply_pauli_sum(apply_pauli_sum(e, b), a);
    const StateVector ba = apply_pauli_sum(apply_pauli_sum(e, a), b);
    for (std::uint64_t row = 0; row < dim; ++row) {
      worst = std::max(worst, std::abs(ab[row] - ba[row]));
    }
  }
  return worst;
}

}  // namespace qet
