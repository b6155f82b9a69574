#include "cws/stabilizer.hpp"

#include <stdexcept>

#include "cws/gf2.hpp"

namespace cws {

void StabilizerPresentation::validate() const {
  if (generators.size() != n - k || logical_x.size() != k ||
      logical_z.size() != k) {
    throw std::invalid_argument("stabilizer presentation has wrong counts");
  }
  if (!is_valid_stabilizer({n, generators})) {
    throw std::invalid_argument("generators do not form a valid stabilizer");
  }
  auto commutes_with_all = [&](const PauliOperator& a,
                               const std::vector<PauliOperator>& list) {
    for (const PauliOperator& b : list) {
      if (!commutes(a, b)) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (!commutes_with_all(logical_x[i], generators) ||
        !commutes_with_all(logical_z[i], generators)) {
      throw std::invalid_argument("logical operator anticommutes with the "
                                  "stabilizer");
    }
    if (!commutes_with_all(logical_x[i], logical_x) ||
        !commutes_with_all(logical_z[i], logical_z)) {
      throw std::invalid_argument("logical X (or Z) operators must commute "
                                  "among themselves");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (commutes(logical_x[i], logical_z[j]) == (i == j)) {
        throw std::invalid_argument(
            "logical_x_i must anticommute with logical_z_i only");
      }
    }
  }
  // <generators, logical Z's> must be a maximal stabilizer.
  PauliGroupSubset full{n, generators};
  full.generators.insert(full.generators.end(), logical_z.begin(),
                         logical_z.end());
  if (!is_valid_stabilizer(full)) {
    throw std::invalid_argument(
        "generators plus logical Z's do not form a maximal stabilizer");
  }
}

std::pair<PauliGroupSubset, std::vector<PauliOperator>> stabilizer_to_cws(
    const StabilizerPresentation& p) {
  p.validate();
  PauliGroupSubset word_stabilizer{p.n, p.generators};
  word_stabilizer.generators.insert(word_stabilizer.generators.end(),
                                    p.logical_z.begin(), p.logical_z.end());

  std::vector<PauliOperator> word_ops;
  word_ops.reserve(std::size_t{1} << p.k);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << p.k); ++v) {
    PauliOperator w(p.n);
    for (std::size_t i = 0; i < p.k; ++i) {
      if ((v >> i) & 1u) w = multiply(w, p.logical_x[i]);
    }
    word_ops.push_back(std::move(w));
  }
  return {std::move(word_stabilizer), std::move(word_ops)};
}

std::optional<std::size_t> is_stabilizer_code(const CwsCode& code) {
  code.validate();
  if (!gf2_is_subspace(code.codewords)) return std::nullopt;
  std::size_t k = 0;
  while ((std::size_t{1} << k) < code.codewords.size()) ++k;
  return k;
}

StabilizerPresentation extract_stabilizer_presentation(const CwsCode& code) {
  const auto k = is_stabilizer_code(code);
  if (!k) {
    throw std::invalid_argument(
        "extract_stabilizer_presentation requires a stabilizer CWS code");
  }
  const std::size_t n = code.num_qubits();
  const PauliGroupSubset s = graph_stabilizer(code.graph);

  // Element of S for a given X support, with its accumulated sign.
  auto stabilizer_element = [&](const BitVec& b) {
    PauliOperator out(n);
    for (std::size_t l = 0; l < n; ++l) {
      if (b.get(l)) out = multiply(out, s.generators[l]);
    }
    return out;
  };

  const std::vector<BitVec> basis = gf2_rref(code.codewords);
  const std::vector<std::size_t> pivots = gf2_pivots(basis);

  StabilizerPresentation out;
  out.n = n;
  out.k = *k;
  // T = elements of S whose X support is orthogonal to the codeword space.
  for (const BitVec& h : gf2_null_space(basis, n)) {
    out.generators.push_back(stabilizer_element(h));
  }
  for (std::size_t i = 0; i < *k; ++i) {
    // S_l at the i-th pivot anticommutes with Z^{g_i} only.
    out.logical_x.push_back(s.generators[pivots[i]]);
    out.logical_z.emplace_back(BitVec(n), basis[i], 0);
  }
  out.validate();
  return out;
}

}  // namespace cws
