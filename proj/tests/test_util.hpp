#pragma once

// Test-only oracles: dense matrix forms of Paulis and local Cliffords,
// direct Pauli action on statevectors and projector-built stabilizer
// states. These stay independent of the bit-packed library path.

#include <bit>
#include <complex>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "cws/pauli.hpp"
#include "cws/standard_form.hpp"

namespace cws::testutil {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using namespace std::complex_literals;

inline Mat mat_i() { return Mat::Identity(2, 2); }
inline Mat mat_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Mat mat_y() {
  Mat m(2, 2);
  m << 0, -1i, 1i, 0;
  return m;
}
inline Mat mat_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
inline Mat mat_h() {
  Mat m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}
inline Mat mat_p() {
  Mat m(2, 2);
  m << 1, 0, 0, 1i;
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Dense matrix of i^p X^u Z^v; qubit 0 is the least significant index bit,
// so it sits in the rightmost tensor factor.
inline Mat pauli_matrix(const PauliOperator& op) {
  const std::size_t n = op.num_qubits();
  Mat full = Mat::Identity(1, 1);
  for (std::size_t q = n; q-- > 0;) {
    Mat letter = mat_i();
    if (op.x_part().get(q)) letter = mat_x() * letter;
    if (op.z_part().get(q)) letter = letter * mat_z();
    full = kron(full, letter);
  }
  static const std::complex<double> phases[4] = {1.0, 1i, -1.0, -1i};
  return phases[op.phase_exponent() % 4] * full;
}

inline Mat local_gate_matrix(LocalGate g) {
  switch (g) {
    case LocalGate::H: return mat_h();
    case LocalGate::P: return mat_p();
    case LocalGate::X: return mat_x();
    case LocalGate::Y: return mat_y();
    case LocalGate::Z: return mat_z();
  }
  throw std::logic_error("unknown gate");
}

inline Mat local_circuit_matrix(const LocalCliffordCircuit& c) {
  Mat full = Mat::Identity(1, 1);
  for (std::size_t q = c.n; q-- > 0;) {
    Mat m = Mat::Identity(2, 2);
    for (LocalGate g : c.gates[q]) m = local_gate_matrix(g) * m;
    full = kron(full, m);
  }
  return full;
}

// Direct action on a statevector without forming the matrix.
inline Vec apply_pauli(const PauliOperator& op, const Vec& psi) {
  const std::size_t dim = static_cast<std::size_t>(psi.size());
  const std::uint64_t u = op.x_part().to_bits();
  const std::uint64_t v = op.z_part().to_bits();
  static const std::complex<double> phases[4] = {1.0, 1i, -1.0, -1i};
  const std::complex<double> ph = phases[op.phase_exponent() % 4];
  Vec out(psi.size());
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t y = x ^ u;
    const bool flip = std::popcount(y & v) & 1u;
    out[x] = ph * (flip ? -psi[y] : psi[y]);
  }
  return out;
}

// Unique +1 eigenvector of a maximal stabilizer, via the projector
// applied to successive basis states.
inline Vec stabilizer_state(const PauliGroupSubset& group) {
  const std::size_t dim = std::size_t{1} << group.n;
  for (std::size_t x0 = 0; x0 < dim; ++x0) {
    Vec psi = Vec::Zero(dim);
    psi[x0] = 1.0;
    for (const PauliOperator& g : group.generators) {
      psi = 0.5 * (psi + apply_pauli(g, psi));
    }
    const double norm = psi.norm();
    if (norm > 1e-6) return psi / norm;
  }
  throw std::logic_error("projector annihilated every basis state");
}

inline PauliOperator random_pauli(std::mt19937_64& rng, std::size_t n) {
  BitVec u(n), v(n);
  for (std::size_t q = 0; q < n; ++q) {
    u.set(q, rng() & 1u);
    v.set(q, rng() & 1u);
  }
  return PauliOperator(std::move(u), std::move(v),
                       static_cast<int>(rng() % 4));
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace cws::testutil
