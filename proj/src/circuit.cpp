#include "cws/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "cws/gf2.hpp"

namespace cws {

namespace {

constexpr std::size_t kMaxSimQubits = 12;

}  // namespace

void Circuit::validate() const {
  for (const Gate& g : gates) {
    switch (g.kind) {
      case Gate::Kind::H:
      case Gate::Kind::X:
      case Gate::Kind::Z:
        if (g.q0 >= n) throw std::invalid_argument("gate qubit out of range");
        break;
      case Gate::Kind::CZ:
      case Gate::Kind::CX:
        if (g.q0 >= n || g.q1 >= n) {
          throw std::invalid_argument("gate qubit out of range");
        }
        if (g.q0 == g.q1) {
          throw std::invalid_argument("two-qubit gate needs distinct qubits");
        }
        break;
      case Gate::Kind::Lookup: {
        std::unordered_set<std::uint64_t> targets;
        for (const BitVec& t : g.table) {
          if (t.size() != n) {
            throw std::invalid_argument("lookup entry has wrong length");
          }
          if (!targets.insert(t.to_bits()).second) {
            throw std::invalid_argument("lookup table is not injective");
          }
        }
        break;
      }
    }
  }
}

Circuit graph_circuit(const Graph& g) {
  Circuit c{g.num_vertices(), {}};
  for (std::size_t q = 0; q < c.n; ++q) c.gates.push_back(Gate::h(q));
  for (const auto& [i, j] : g.edges()) c.gates.push_back(Gate::cz(i, j));
  return c;
}

Circuit classical_encoder(std::size_t n,
                          const std::vector<BitVec>& codewords) {
  if (codewords.empty()) {
    throw std::invalid_argument("no codewords to encode");
  }
  {
    std::vector<BitVec> sorted = codewords;
    for (const BitVec& c : sorted) {
      if (c.size() != n) {
        throw std::invalid_argument("codeword length differs from n");
      }
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate codewords");
    }
  }

  Circuit c{n, {}};
  if (codewords.size() == 1 && codewords[0].none()) {
    return c;  // |0...0> -> |0...0|
  }

  if (gf2_is_subspace(codewords)) {
    const std::vector<BitVec> basis = gf2_rref(codewords);
    const std::vector<std::size_t> pivots = gf2_pivots(basis);
    const std::size_t k = basis.size();
    // Move input bit j onto its pivot qubit (the pair clears the source),
    // descending so every target is already free.
    for (std::size_t j = k; j-- > 0;) {
      if (pivots[j] != j) {
        c.gates.push_back(Gate::cx(j, pivots[j]));
        c.gates.push_back(Gate::cx(pivots[j], j));
      }
    }
    // Spread each basis row from its pivot.
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t q = 0; q < n; ++q) {
        if (q != pivots[j] && basis[j].get(q)) {
          c.gates.push_back(Gate::cx(pivots[j], q));
        }
      }
    }
    return c;
  }

  c.gates.push_back(Gate::lookup(codewords));
  return c;
}

std::vector<BitVec> encoder_codeword_order(
    std::size_t n, const std::vector<BitVec>& codewords) {
  if (codewords.size() > 1 && gf2_is_subspace(codewords)) {
    const std::vector<BitVec> basis = gf2_rref(codewords);
    std::vector<BitVec> order;
    order.reserve(codewords.size());
    for (std::size_t i = 0; i < codewords.size(); ++i) {
      BitVec c(n);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if ((i >> b) & 1u) c ^= basis[b];
      }
      order.push_back(std::move(c));
    }
    return order;
  }
  return codewords;
}

Circuit cws_encoder(const CwsCode& code) {
  code.validate();
  Circuit c = classical_encoder(code.num_qubits(), code.codewords);
  for (Gate& g : graph_circuit(code.graph).gates) {
    c.gates.push_back(std::move(g));
  }
  return c;
}

Eigen::VectorXcd simulate(const Circuit& c, std::uint64_t input_index) {
  if (c.n > kMaxSimQubits) {
    throw std::runtime_error("simulate is limited to " +
                             std::to_string(kMaxSimQubits) + " qubits");
  }
  c.validate();
  const std::size_t dim = std::size_t{1} << c.n;
  if (input_index >= dim) {
    throw std::invalid_argument("input index out of range");
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi[input_index] = 1.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::H: {
        const std::uint64_t bit = std::uint64_t{1} << g.q0;
        for (std::size_t x = 0; x < dim; ++x) {
          if (x & bit) continue;
          const auto a = psi[x], b = psi[x | bit];
          psi[x] = (a + b) * inv_sqrt2;
          psi[x | bit] = (a - b) * inv_sqrt2;
        }
        break;
      }
      case Gate::Kind::CZ: {
        const std::uint64_t mask =
            (std::uint64_t{1} << g.q0) | (std::uint64_t{1} << g.q1);
        for (std::size_t x = 0; x < dim; ++x) {
          if ((x & mask) == mask) psi[x] = -psi[x];
        }
        break;
      }
      case Gate::Kind::X: {
        const std::uint64_t bit = std::uint64_t{1} << g.q0;
        for (std::size_t x = 0; x < dim; ++x) {
          if (!(x & bit)) std::swap(psi[x], psi[x | bit]);
        }
        break;
      }
      case Gate::Kind::Z: {
        const std::uint64_t bit = std::uint64_t{1} << g.q0;
        for (std::size_t x = 0; x < dim; ++x) {
          if (x & bit) psi[x] = -psi[x];
        }
        break;
      }
      case Gate::Kind::CX: {
        const std::uint64_t ctrl = std::uint64_t{1} << g.q0;
        const std::uint64_t tgt = std::uint64_t{1} << g.q1;
        for (std::size_t x = 0; x < dim; ++x) {
          if ((x & ctrl) && !(x & tgt)) std::swap(psi[x], psi[x | tgt]);
        }
        break;
      }
      case Gate::Kind::Lookup: {
        // Extend the injective table to a permutation: unmapped sources
        // take the unused targets in ascending order.
        std::vector<std::uint64_t> perm(dim, dim);
        std::vector<bool> used(dim, false);
        for (std::size_t i = 0; i < g.table.size(); ++i) {
          const std::uint64_t t = g.table[i].to_bits();
          perm[i] = t;
          used[t] = true;
        }
        std::size_t next = 0;
        for (std::size_t x = 0; x < dim; ++x) {
          if (perm[x] != dim) continue;
          while (used[next]) ++next;
          perm[x] = next;
          used[next] = true;
        }
        Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
        for (std::size_t x = 0; x < dim; ++x) out[perm[x]] = psi[x];
        psi = std::move(out);
        break;
      }
    }
  }
  return psi;
}

}  // namespace cws
