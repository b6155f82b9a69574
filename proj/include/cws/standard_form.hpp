#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cws/bitvec.hpp"
#include "cws/graph.hpp"
#include "cws/pauli.hpp"

namespace cws {

// Single-qubit Clifford gate labels. P is the phase gate diag(1, i).
enum class LocalGate { H, P, X, Y, Z };

char to_char(LocalGate g);

// A tensor product of single-qubit Cliffords, one gate sequence per qubit.
// Within a qubit, gates are listed in application order (first applied
// first), so the qubit's unitary is gates.back() * ... * gates.front().
struct LocalCliffordCircuit {
  std::size_t n = 0;
  std::vector<std::vector<LocalGate>> gates;

  explicit LocalCliffordCircuit(std::size_t n_ = 0) : n(n_), gates(n_) {}

  bool is_identity() const {
    for (const auto& seq : gates) {
      if (!seq.empty()) return false;
    }
    return true;
  }
};

// Conjugation a -> C a C^† for the whole local circuit.
PauliOperator conjugate(const PauliOperator& a,
                        const LocalCliffordCircuit& circuit);

// A CWS code in standard form: a graph-state stabilizer plus Z-type word
// operators Z^c, one per codeword bit-vector.
struct CwsCode {
  Graph graph;
  std::vector<BitVec> codewords;
  std::optional<int> claimed_distance;

  std::size_t num_qubits() const { return graph.num_vertices(); }
  std::size_t dimension() const { return codewords.size(); }

  // Throws unless codewords are distinct, nonempty and of matching length.
  void validate() const;
};

using StandardFormCode = CwsCode;

// Generators S_l = X_l Z^{r_l}, r_l the adjacency rows, all phases +1.
PauliGroupSubset graph_stabilizer(const Graph& g);

// Reduces a maximal stabilizer plus word operators to standard form.
// Returns the code together with the local Clifford circuit C such that
// conjugating the input generators by C generates graph_stabilizer(code.graph)
// and each conjugated word operator reduces to +/- Z^c modulo the graph
// generators. Codewords are translated so the first one is zero.
std::pair<CwsCode, LocalCliffordCircuit> to_standard_form(
    const PauliGroupSubset& stabilizer,
    const std::vector<PauliOperator>& word_ops);

// Effective classical error of an arbitrary Pauli on the graph state:
// v XOR (sum of adjacency rows over the X support). Phase is ignored.
BitVec translate_error(const Graph& g, const PauliOperator& e);

struct TranslatedError {
  PauliOperator error;
  BitVec classical;  // translate_error(g, error)
  BitVec x_support;  // the error's X part, needed by the degeneracy test
};

// translate_error over the full bounded-weight enumeration.
std::vector<TranslatedError> translate_error_set(const Graph& g,
                                                 int max_weight);

}  // namespace cws
