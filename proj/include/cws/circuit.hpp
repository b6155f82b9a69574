#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cws/graph.hpp"
#include "cws/standard_form.hpp"

namespace cws {

// One circuit gate. LOOKUP permutes computational basis states by an
// injective index -> bit-vector table, extended canonically to a full
// permutation (unmapped sources to unused targets in ascending order).
struct Gate {
  enum class Kind { H, CZ, X, Z, CX, Lookup };
  Kind kind;
  std::size_t q0 = 0;
  std::size_t q1 = 0;            // CZ partner / CX target
  std::vector<BitVec> table;     // Lookup only; entry i is the image of |i>

  static Gate h(std::size_t q) { return {Kind::H, q, 0, {}}; }
  static Gate cz(std::size_t a, std::size_t b) { return {Kind::CZ, a, b, {}}; }
  static Gate x(std::size_t q) { return {Kind::X, q, 0, {}}; }
  static Gate z(std::size_t q) { return {Kind::Z, q, 0, {}}; }
  static Gate cx(std::size_t ctrl, std::size_t tgt) {
    return {Kind::CX, ctrl, tgt, {}};
  }
  static Gate lookup(std::vector<BitVec> table) {
    return {Kind::Lookup, 0, 0, std::move(table)};
  }
};

struct Circuit {
  std::size_t n = 0;
  std::vector<Gate> gates;

  // Throws on out-of-range qubits, coincident CZ/CX arguments or a
  // non-injective lookup table.
  void validate() const;
};

// H on every qubit, then one CZ per edge in lexicographic order; prepares
// the graph state from |0...0>.
Circuit graph_circuit(const Graph& g);

// Maps |i> (index on the low qubits, the rest zero) to the i-th codeword.
// GF(2)-linear sets containing zero compile to a CX network indexed by the
// RREF generator matrix; anything else becomes a single LOOKUP gate with
// the stored order.
Circuit classical_encoder(std::size_t n, const std::vector<BitVec>& codewords);

// Codeword sequence the encoder actually realizes: the XOR-indexed RREF
// enumeration on the linear path, the stored order otherwise.
std::vector<BitVec> encoder_codeword_order(std::size_t n,
                                           const std::vector<BitVec>& codewords);

// classical_encoder followed by graph_circuit: |i> -> Z^{c_i}|S>, exactly.
Circuit cws_encoder(const CwsCode& code);

// Statevector simulation from a computational basis state, n <= 12.
Eigen::VectorXcd simulate(const Circuit& c, std::uint64_t input_index);

}  // namespace cws
