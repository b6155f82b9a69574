#include "cws/standard_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "cws/gf2.hpp"

namespace cws {

namespace {

struct TableauRow {
  BitVec u, v;
  int p;  // phase exponent mod 4
};

// Conjugation action of a single gate on one qubit's (x, z) letter.
// Returns the phase increment mod 4.
int conjugate_letter(LocalGate g, bool& x, bool& z) {
  if (!x && !z) return 0;
  switch (g) {
    case LocalGate::H:
      std::swap(x, z);
      return (x && z) ? 2 : 0;
    case LocalGate::P:
      if (x) {
        z = !z;
        return 1;
      }
      return 0;
    case LocalGate::X:
      return z ? 2 : 0;
    case LocalGate::Y:
      return (x != z) ? 2 : 0;
    case LocalGate::Z:
      return x ? 2 : 0;
  }
  return 0;
}

void apply_gate(TableauRow& row, LocalGate g, std::size_t q) {
  bool x = row.u.get(q), z = row.v.get(q);
  row.p = (row.p + conjugate_letter(g, x, z)) % 4;
  row.u.set(q, x);
  row.v.set(q, z);
}

}  // namespace

char to_char(LocalGate g) {
  switch (g) {
    case LocalGate::H: return 'H';
    case LocalGate::P: return 'P';
    case LocalGate::X: return 'X';
    case LocalGate::Y: return 'Y';
    case LocalGate::Z: return 'Z';
  }
  return '?';
}

PauliOperator conjugate(const PauliOperator& a,
                        const LocalCliffordCircuit& circuit) {
  if (a.num_qubits() != circuit.n) {
    throw std::invalid_argument("conjugate: qubit counts differ");
  }
  TableauRow row{a.x_part(), a.z_part(), a.phase_exponent()};
  for (std::size_t q = 0; q < circuit.n; ++q) {
    for (LocalGate g : circuit.gates[q]) apply_gate(row, g, q);
  }
  return PauliOperator(std::move(row.u), std::move(row.v), row.p);
}

void CwsCode::validate() const {
  if (codewords.empty()) {
    throw std::invalid_argument("CWS code has no codewords");
  }
  const std::size_t n = graph.num_vertices();
  std::vector<BitVec> sorted = codewords;
  for (const BitVec& c : sorted) {
    if (c.size() != n) {
      throw std::invalid_argument("codeword length differs from qubit count");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("codewords are not distinct");
  }
}

PauliGroupSubset graph_stabilizer(const Graph& g) {
  const std::size_t n = g.num_vertices();
  PauliGroupSubset s{n, {}};
  s.generators.reserve(n);
  for (std::size_t l = 0; l < n; ++l) {
    s.generators.emplace_back(BitVec::unit(n, l), g.row(l), 0);
  }
  return s;
}

BitVec translate_error(const Graph& g, const PauliOperator& e) {
  if (e.num_qubits() != g.num_vertices()) {
    throw std::invalid_argument("translate_error: qubit counts differ");
  }
  BitVec out = e.z_part();
  for (std::size_t l = 0; l < g.num_vertices(); ++l) {
    if (e.x_part().get(l)) out ^= g.row(l);
  }
  return out;
}

std::vector<TranslatedError> translate_error_set(const Graph& g,
                                                 int max_weight) {
  std::vector<TranslatedError> out;
  for (PauliOperator& e : enumerate_errors(g.num_vertices(), max_weight)) {
    BitVec cl = translate_error(g, e);
    BitVec u = e.x_part();
    out.push_back({std::move(e), std::move(cl), std::move(u)});
  }
  return out;
}

std::pair<CwsCode, LocalCliffordCircuit> to_standard_form(
    const PauliGroupSubset& stabilizer,
    const std::vector<PauliOperator>& word_ops) {
  const std::size_t n = stabilizer.n;
  if (n == 0 || stabilizer.generators.size() != n ||
      !is_valid_stabilizer(stabilizer)) {
    throw std::invalid_argument(
        "to_standard_form requires a maximal stabilizer: n independent "
        "commuting generators squaring to +I");
  }
  if (word_ops.empty()) {
    throw std::invalid_argument("at least one word operator is required");
  }
  for (const PauliOperator& w : word_ops) {
    if (w.num_qubits() != n) {
      throw std::invalid_argument("word operator qubit count differs");
    }
  }

  std::vector<TableauRow> rows;
  rows.reserve(n);
  for (const PauliOperator& g : stabilizer.generators) {
    rows.push_back({g.x_part(), g.z_part(), g.phase_exponent()});
  }
  LocalCliffordCircuit circuit(n);

  auto apply_gate_all = [&](LocalGate g, std::size_t q) {
    for (TableauRow& row : rows) apply_gate(row, g, q);
    circuit.gates[q].push_back(g);
  };
  auto row_mul = [&](std::size_t i, std::size_t k) {
    // Rows commute, so the product phase is order-independent.
    rows[i].p = (rows[i].p + rows[k].p + (rows[i].v.dot(rows[k].u) ? 2 : 0)) % 4;
    rows[i].u ^= rows[k].u;
    rows[i].v ^= rows[k].v;
  };
  // RREF of the X block, pivots in increasing qubit order.
  auto reduce_x_block = [&]() -> std::size_t {
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
      std::size_t pivot = r;
      while (pivot < n && !rows[pivot].u.get(col)) ++pivot;
      if (pivot == n) continue;
      std::swap(rows[r], rows[pivot]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i != r && rows[i].u.get(col)) row_mul(i, r);
      }
      ++r;
    }
    return r;
  };

  std::size_t rank = reduce_x_block();
  if (rank < n) {
    // Swap X/Z columns on every pivotless qubit; the rows below the X-rank
    // are pure-Z there and their Z columns restore full X rank.
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < rank; ++i) is_pivot[rows[i].u.first_set()] = true;
    for (std::size_t q = 0; q < n; ++q) {
      if (!is_pivot[q]) apply_gate_all(LocalGate::H, q);
    }
    rank = reduce_x_block();
    if (rank != n) {
      throw std::logic_error("standard-form reduction lost X-block rank");
    }
  }

  // X block is now the identity and commutation forces a symmetric Z block.
  // Clear the diagonal with phase gates; only row l has X support at l.
  for (std::size_t l = 0; l < n; ++l) {
    if (rows[l].v.get(l)) apply_gate_all(LocalGate::P, l);
  }
  // Fix generator signs with Z gates, which flip exactly row l.
  for (std::size_t l = 0; l < n; ++l) {
    if (rows[l].p == 2) apply_gate_all(LocalGate::Z, l);
    if (rows[l].p != 0) {
      throw std::logic_error("standard-form reduction left a complex phase");
    }
  }

  std::vector<BitVec> adjacency;
  adjacency.reserve(n);
  for (const TableauRow& row : rows) adjacency.push_back(row.v);
  Graph graph = Graph::from_adjacency(std::move(adjacency));

  // Word operators: conjugate, then cancel the X part against the graph
  // generators; the leftover Z support is the codeword.
  std::vector<BitVec> codewords;
  codewords.reserve(word_ops.size());
  for (const PauliOperator& w : word_ops) {
    codewords.push_back(translate_error(graph, conjugate(w, circuit)));
  }
  const BitVec shift = codewords.front();
  for (BitVec& c : codewords) c ^= shift;

  std::vector<BitVec> sorted = codewords;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument(
        "word operators coincide modulo the stabilizer; the code dimension "
        "would collapse");
  }

  return {CwsCode{std::move(graph), std::move(codewords), std::nullopt},
          circuit};
}

}  // namespace cws
