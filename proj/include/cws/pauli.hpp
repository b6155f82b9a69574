#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cws/bitvec.hpp"

namespace cws {

// An n-qubit Pauli in binary symplectic form with quartic phase:
//
//   operator = i^p * X^u * Z^v   (X block on the left)
//
// u and v are the X- and Z-support vectors, p is the phase exponent mod 4.
// Values are immutable after construction; all operations are pure.
class PauliOperator {
public:
  // n-qubit identity.
  explicit PauliOperator(std::size_t n)
      : u_(n), v_(n), phase_(0) {}

  PauliOperator(BitVec u, BitVec v, int phase = 0);

  // Parses e.g. "ZXZII", "-XIY", "+iZZ", "-iX". Leftmost letter is qubit 0.
  static PauliOperator from_string(std::string_view s);

  // Single letter from {I,X,Y,Z} at qubit q of an n-qubit identity.
  static PauliOperator single(std::size_t n, std::size_t q, char letter);

  std::size_t num_qubits() const { return u_.size(); }
  const BitVec& x_part() const { return u_; }
  const BitVec& z_part() const { return v_; }
  int phase_exponent() const { return phase_; }

  bool is_identity() const { return u_.none() && v_.none(); }

  // p == u.v mod 2, i.e. the operator squares to +I.
  bool is_hermitian() const {
    return ((phase_ + (u_.dot(v_) ? 1 : 0)) & 1) == 0;
  }

  // +1 or -1 for a Hermitian operator.
  int sign() const;

  PauliOperator adjoint() const;

  // Same Pauli with phase exponent forced to 0.
  PauliOperator phaseless() const { return PauliOperator(u_, v_, 0); }

  std::size_t weight() const;

  std::string str() const;

  friend bool operator==(const PauliOperator& a, const PauliOperator& b) {
    return a.u_ == b.u_ && a.v_ == b.v_ && a.phase_ == b.phase_;
  }

  // Equality of the symplectic part, ignoring phase.
  bool same_pauli(const PauliOperator& other) const {
    return u_ == other.u_ && v_ == other.v_;
  }

private:
  BitVec u_;
  BitVec v_;
  std::uint8_t phase_;
};

// Group product in canonical (u, v, p) form.  Moving b's X block past a's
// Z block contributes (-1)^(a.v . b.u), so p = a.p + b.p + 2*(a.v . b.u).
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

inline PauliOperator operator*(const PauliOperator& a,
                               const PauliOperator& b) {
  return multiply(a, b);
}

// True iff the symplectic form (a.u . b.v + a.v . b.u) vanishes mod 2.
bool commutes(const PauliOperator& a, const PauliOperator& b);

inline std::size_t weight(const PauliOperator& a) { return a.weight(); }

// Every non-identity Pauli of weight 1..max_weight, once each, phase 0.
// Order: weight ascending, supports in lexicographic order, letters in
// Z < X < Y order per position (last support position varies fastest).
std::vector<PauliOperator> enumerate_errors(std::size_t n, int max_weight);

// The weight-w slice of enumerate_errors, in the same order.
std::vector<PauliOperator> enumerate_errors_of_weight(std::size_t n, int w);

// A subset of the Pauli group given by generators (or plain elements).
struct PauliGroupSubset {
  std::size_t n = 0;
  std::vector<PauliOperator> generators;
};

// True iff all generator pairs commute, the generators are independent
// over GF(2) as symplectic vectors, and no product of generators equals
// the identity Pauli with a nontrivial phase (so -I is not generated).
bool is_valid_stabilizer(const PauliGroupSubset& group);

}  // namespace cws
