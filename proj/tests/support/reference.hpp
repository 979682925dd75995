#pragma once

// Small dense model of the protocol built from explicit Kronecker products.
// Everything involved is real: Z and X are real, and -iY = [[0,-1],[1,0]].
// Independent of the library on purpose; keep N <= 7.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace ref {

struct Matrix {
  std::size_t n = 0;
  std::vector<double> a;

  explicit Matrix(std::size_t dim = 0) : n(dim), a(dim * dim, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

using Vector = std::vector<double>;

inline Matrix identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

inline Matrix two_by_two(double a, double b, double c, double d) {
  Matrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

inline const Matrix& pauli_x() {
  static const Matrix m = two_by_two(0, 1, 1, 0);
  return m;
}
inline const Matrix& pauli_z() {
  static const Matrix m = two_by_two(1, 0, 0, -1);
  return m;
}
/// -i times Pauli Y.
inline const Matrix& minus_i_y() {
  static const Matrix m = two_by_two(0, -1, 1, 0);
  return m;
}

inline Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out(x.n * y.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j)
      for (std::size_t k = 0; k < y.n; ++k)
        for (std::size_t l = 0; l < y.n; ++l) out(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
  return out;
}

inline Matrix mul(const Matrix& x, const Matrix& y) {
  Matrix out(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      const double v = x(i, k);
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < x.n; ++j) out(i, j) += v * y(k, j);
    }
  return out;
}

inline Matrix axpy(double s, const Matrix& x, Matrix y) {
  for (std::size_t i = 0; i < y.a.size(); ++i) y.a[i] += s * x.a[i];
  return y;
}

/// Single-qubit operator on 1-based `qubit`; qubit 1 is the leftmost factor.
inline Matrix on_qubit(unsigned n_qubits, unsigned qubit, const Matrix& op) {
  Matrix out = identity(1);
  for (unsigned q = 1; q <= n_qubits; ++q) out = kron(out, q == qubit ? op : identity(2));
  return out;
}

inline Vector matvec(const Matrix& m, const Vector& v) {
  Vector out(m.n, 0.0);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline double dot(const Vector& x, const Vector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double quad(const Matrix& m, const Vector& v) { return dot(v, matvec(m, v)); }

/// Cyclic Jacobi rotations. Returns eigenvalues and eigenvectors (columns).
inline std::pair<Vector, Matrix> jacobi_eigen(Matrix a) {
  const std::size_t n = a.n;
  Matrix v = identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-40) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  Vector values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  return {values, v};
}

struct Model {
  unsigned n;
  double h, k, c;
  std::vector<Matrix> local;  // H_i, index i-1
  Matrix interaction;         // V
  Matrix total;               // H
};

inline Model build_model(unsigned n, double h, double k) {
  Model m{n, h, k, std::sqrt(n * n * h * h + 4 * k * k), {}, Matrix(), Matrix()};
  const std::size_t dim = std::size_t{1} << n;
  Matrix all_x = identity(1);
  for (unsigned q = 1; q <= n; ++q) all_x = kron(all_x, pauli_x());
  m.interaction = axpy(2 * k, all_x, Matrix(dim));
  for (std::size_t i = 0; i < dim; ++i) m.interaction(i, i) += 4 * k * k / m.c;
  m.total = m.interaction;
  for (unsigned q = 1; q <= n; ++q) {
    Matrix hq = on_qubit(n, q, pauli_z());
    for (double& x : hq.a) x *= h;
    for (std::size_t i = 0; i < dim; ++i) hq(i, i) += n * h * h / m.c;
    m.total = axpy(1.0, hq, m.total);
    m.local.push_back(std::move(hq));
  }
  return m;
}

struct GroundState {
  double energy;
  Vector state;
};

inline GroundState ground_state(const Model& model) {
  auto [values, vectors] = jacobi_eigen(model.total);
  const auto it = std::min_element(values.begin(), values.end());
  const std::size_t col = static_cast<std::size_t>(it - values.begin());
  Vector g(vectors.n);
  for (std::size_t i = 0; i < vectors.n; ++i) g[i] = vectors(i, col);
  return {*it, g};
}

struct Run {
  double e_in = 0.0;
  /// Total energy removed by the rotation, summed over branches.
  double e_out = 0.0;
  std::vector<double> probabilities;
};

/// Measures every non-output qubit in the X basis, then applies
/// cos(theta) + alpha sin(theta) (-iY on rotation_qubit) X on other outputs.
inline Run protocol(const Model& model, const std::vector<unsigned>& outputs, double theta,
                    unsigned rotation_qubit) {
  const unsigned n = model.n;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<unsigned> inputs;
  for (unsigned q = 1; q <= n; ++q)
    if (std::find(outputs.begin(), outputs.end(), q) == outputs.end()) inputs.push_back(q);

  Matrix generator = identity(1);
  for (unsigned q = 1; q <= n; ++q) {
    const bool out = std::find(outputs.begin(), outputs.end(), q) != outputs.end();
    generator = kron(generator, q == rotation_qubit ? minus_i_y() : out ? pauli_x() : identity(2));
  }
  const auto g = ground_state(model).state;
  const double e_ground = quad(model.total, g);

  Run run;
  for (std::size_t b = 0; b < (std::size_t{1} << inputs.size()); ++b) {
    Matrix projector = identity(dim);
    int alpha_product = 1;
    for (std::size_t j = 0; j < inputs.size(); ++j) {
      const int alpha = (b >> j) & 1 ? -1 : 1;
      alpha_product *= alpha;
      Matrix p = axpy(alpha, on_qubit(n, inputs[j], pauli_x()), identity(dim));
      for (double& x : p.a) x *= 0.5;
      projector = mul(projector, p);
    }
    const Vector psi = matvec(projector, g);
    const double p = dot(psi, psi);
    run.probabilities.push_back(p);
    if (p == 0.0) continue;
    run.e_in += quad(model.total, psi);
    Matrix u = identity(dim);
    for (double& x : u.a) x *= std::cos(theta);
    u = axpy(alpha_product * std::sin(theta), generator, u);
    const Vector rotated = matvec(u, psi);
    run.e_out += quad(model.total, psi) - quad(model.total, rotated);
  }
  run.e_in -= e_ground;
  return run;
}

}  // namespace ref
