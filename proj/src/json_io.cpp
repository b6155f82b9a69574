#include "cws/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cws {

namespace {

using nlohmann::json;

std::vector<PauliOperator> paulis_from_json(const json& j, std::size_t n) {
  std::vector<PauliOperator> out;
  for (const auto& s : j) {
    PauliOperator p = PauliOperator::from_string(s.get<std::string>());
    if (p.num_qubits() != n) {
      throw ParseError("Pauli string has wrong length: " +
                       s.get<std::string>());
    }
    out.push_back(std::move(p));
  }
  return out;
}

json paulis_to_json(const std::vector<PauliOperator>& list) {
  json out = json::array();
  for (const PauliOperator& p : list) out.push_back(p.str());
  return out;
}

}  // namespace

nlohmann::json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  return json{{"n", g.num_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  const std::size_t n = j.at("n").get<std::size_t>();
  if (j.contains("adjacency")) {
    std::vector<BitVec> rows;
    for (const auto& s : j.at("adjacency")) {
      rows.push_back(BitVec::from_string(s.get<std::string>()));
    }
    if (rows.size() != n) {
      throw ParseError("adjacency row count differs from n");
    }
    return Graph::from_adjacency(std::move(rows));
  }
  Graph g(n);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("edge entries must be [i, j] pairs");
    }
    g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return g;
}

nlohmann::json code_to_json(const CwsCode& code) {
  json words = json::array();
  for (const BitVec& c : code.codewords) words.push_back(c.str());
  json j{{"n", code.num_qubits()},
         {"graph", graph_to_json(code.graph)},
         {"codewords", words}};
  if (code.claimed_distance) j["claimed_distance"] = *code.claimed_distance;
  return j;
}

CwsCode code_from_json(const nlohmann::json& j) {
  const std::size_t n = j.at("n").get<std::size_t>();
  Graph g = graph_from_json(j.at("graph"));
  if (g.num_vertices() != n) {
    throw ParseError("graph size differs from n");
  }
  CwsCode code{std::move(g), {}, std::nullopt};
  for (const auto& s : j.at("codewords")) {
    BitVec c = BitVec::from_string(s.get<std::string>());
    if (c.size() != n) {
      throw ParseError("codeword has wrong length: " + s.get<std::string>());
    }
    code.codewords.push_back(std::move(c));
  }
  if (j.contains("claimed_distance")) {
    code.claimed_distance = j.at("claimed_distance").get<int>();
  }
  code.validate();
  return code;
}

nlohmann::json stabilizer_to_json(const StabilizerPresentation& p) {
  return json{{"n", p.n},
              {"k", p.k},
              {"generators", paulis_to_json(p.generators)},
              {"logical_x", paulis_to_json(p.logical_x)},
              {"logical_z", paulis_to_json(p.logical_z)}};
}

StabilizerPresentation stabilizer_from_json(const nlohmann::json& j) {
  StabilizerPresentation p;
  p.n = j.at("n").get<std::size_t>();
  p.k = j.at("k").get<std::size_t>();
  p.generators = paulis_from_json(j.at("generators"), p.n);
  p.logical_x = paulis_from_json(j.at("logical_x"), p.n);
  p.logical_z = paulis_from_json(j.at("logical_z"), p.n);
  p.validate();
  return p;
}

nlohmann::json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::H: gates.push_back({{"g", "H"}, {"q", g.q0}}); break;
      case Gate::Kind::X: gates.push_back({{"g", "X"}, {"q", g.q0}}); break;
      case Gate::Kind::Z: gates.push_back({{"g", "Z"}, {"q", g.q0}}); break;
      case Gate::Kind::CZ:
        gates.push_back({{"g", "CZ"}, {"q", {g.q0, g.q1}}});
        break;
      case Gate::Kind::CX:
        gates.push_back({{"g", "CX"}, {"q", {g.q0, g.q1}}});
        break;
      case Gate::Kind::Lookup: {
        json table = json::object();
        for (std::size_t i = 0; i < g.table.size(); ++i) {
          table[std::to_string(i)] = g.table[i].str();
        }
        gates.push_back({{"g", "LOOKUP"}, {"table", table}});
        break;
      }
    }
  }
  return json{{"n", c.n}, {"gates", gates}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit c;
  c.n = j.at("n").get<std::size_t>();
  for (const auto& jg : j.at("gates")) {
    const std::string kind = jg.at("g").get<std::string>();
    if (kind == "H" || kind == "X" || kind == "Z") {
      const std::size_t q = jg.at("q").get<std::size_t>();
      c.gates.push_back(kind == "H"   ? Gate::h(q)
                        : kind == "X" ? Gate::x(q)
                                      : Gate::z(q));
    } else if (kind == "CZ" || kind == "CX") {
      const auto& q = jg.at("q");
      if (!q.is_array() || q.size() != 2) {
        throw ParseError("two-qubit gate needs q = [a, b]");
      }
      const std::size_t a = q[0].get<std::size_t>();
      const std::size_t b = q[1].get<std::size_t>();
      c.gates.push_back(kind == "CZ" ? Gate::cz(a, b) : Gate::cx(a, b));
    } else if (kind == "LOOKUP") {
      const auto& table = jg.at("table");
      std::vector<BitVec> entries(table.size());
      for (const auto& [key, value] : table.items()) {
        const std::size_t idx = std::stoul(key);
        if (idx >= entries.size()) {
          throw ParseError("lookup table keys must be 0..K-1");
        }
        entries[idx] = BitVec::from_string(value.get<std::string>());
      }
      c.gates.push_back(Gate::lookup(std::move(entries)));
    } else {
      throw ParseError("unknown gate kind: " + kind);
    }
  }
  c.validate();
  return c;
}

nlohmann::json local_circuit_to_json(const LocalCliffordCircuit& c) {
  json per_qubit = json::array();
  for (const auto& seq : c.gates) {
    json gates = json::array();
    for (LocalGate g : seq) gates.push_back(std::string(1, to_char(g)));
    per_qubit.push_back(gates);
  }
  return json{{"n", c.n}, {"gates", per_qubit}};
}

nlohmann::json report_to_json(const DetectionReport& report) {
  json j{{"passed", report.passed}};
  if (report.failing_error) {
    j["failing_error"] = report.failing_error->str();
    j["failure_kind"] = to_string(*report.failure_kind);
  }
  json degenerate = json::array();
  for (const PauliOperator& e : report.degenerate_errors) {
    degenerate.push_back(e.str());
  }
  j["degenerate_errors"] = degenerate;
  return j;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column position.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(path + ": malformed JSON at line " +
                     std::to_string(line) + ", column " +
                     std::to_string(column));
  }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << j.dump(2) << "\n";
}

}  // namespace cws
