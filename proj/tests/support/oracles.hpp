#pragma once

// Dense-matrix reference implementations used as independent oracles.

#include <cmath>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "fockbound/fock_state.hpp"

namespace oracle {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using fockbound::Complex;

inline MatrixXcd lowering(std::size_t d) {
  MatrixXcd a = MatrixXcd::Zero(d, d);
  for (std::size_t n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline MatrixXcd number(std::size_t d) {
  MatrixXcd m = MatrixXcd::Zero(d, d);
  for (std::size_t n = 0; n < d; ++n) m(n, n) = static_cast<double>(n);
  return m;
}

inline MatrixXcd shift(std::size_t d) {
  MatrixXcd e = MatrixXcd::Zero(d, d);
  for (std::size_t n = 0; n + 1 < d; ++n) e(n, n + 1) = 1.0;
  return e;
}

/// State vector zero-padded to length d (d = 0 keeps the state's dim).
inline VectorXcd vec(const fockbound::FockState& s, std::size_t d = 0) {
  if (d == 0) d = s.dim();
  VectorXcd v = VectorXcd::Zero(d);
  for (std::size_t n = 0; n < s.dim(); ++n) v(n) = s[n];
  return v;
}

inline Complex expect(const MatrixXcd& op, const VectorXcd& v) { return v.dot(op * v); }

inline MatrixXcd displacement(Complex alpha, std::size_t d) {
  const MatrixXcd a = lowering(d);
  const MatrixXcd gen = alpha * a.adjoint() - std::conj(alpha) * a;
  return gen.exp();
}

/// S(zeta) = exp[(zeta^* a^2 - zeta a^dagger^2)/2]
inline MatrixXcd squeeze(Complex zeta, std::size_t d) {
  const MatrixXcd a = lowering(d);
  const MatrixXcd gen = 0.5 * (std::conj(zeta) * a * a - zeta * a.adjoint() * a.adjoint());
  return gen.exp();
}

inline VectorXcd basis(std::size_t n, std::size_t d) {
  VectorXcd v = VectorXcd::Zero(d);
  v(n) = 1.0;
  return v;
}

}  // namespace oracle
