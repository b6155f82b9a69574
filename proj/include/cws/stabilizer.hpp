#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cws/pauli.hpp"
#include "cws/standard_form.hpp"

namespace cws {

// An [n, k] stabilizer code: n-k generators plus k logical X/Z pairs.
struct StabilizerPresentation {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<PauliOperator> generators;
  std::vector<PauliOperator> logical_x;
  std::vector<PauliOperator> logical_z;

  // Throws unless the generators form a valid stabilizer, the logicals
  // commute with it, and logical_x_i anticommutes with exactly logical_z_i.
  void validate() const;
};

// The CWS presentation of a stabilizer code: the word stabilizer
// <generators, logical Z's> plus the 2^k products of logical X's.
// Feed the result to to_standard_form to obtain a CwsCode.
std::pair<PauliGroupSubset, std::vector<PauliOperator>> stabilizer_to_cws(
    const StabilizerPresentation& p);

// For a code in standard form the word operators are Z-type, so the code
// is a stabilizer code exactly when the codeword set is a GF(2) subspace.
// Returns log2(K) when it is, nullopt otherwise.
std::optional<std::size_t> is_stabilizer_code(const CwsCode& code);

// Inverse direction: the subgroup of the graph stabilizer commuting with
// every word operator, plus canonical logical operators read off the
// codeword space. Requires is_stabilizer_code(code).
StabilizerPresentation extract_stabilizer_presentation(const CwsCode& code);

}  // namespace cws
