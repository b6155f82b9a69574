// Command-line front end for building, verifying and searching CWS codes.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cws/circuit.hpp"
#include "cws/json_io.hpp"
#include "cws/search.hpp"
#include "cws/stabilizer.hpp"
#include "cws/standard_form.hpp"
#include "cws/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

constexpr double kOracleTol = 1e-9;

cws::Graph parse_graph_spec(const std::string& spec) {
  if (spec.rfind("family:", 0) == 0) {
    const auto second = spec.find(':', 7);
    if (second == std::string::npos) {
      throw cws::ParseError("graph family spec must be family:<kind>:<n>");
    }
    const std::string kind = spec.substr(7, second - 7);
    const std::size_t n = std::stoul(spec.substr(second + 1));
    if (kind == "ring") return cws::family(cws::GraphFamily::ring, n);
    if (kind == "double_ring") {
      return cws::family(cws::GraphFamily::double_ring, n);
    }
    if (kind == "star") return cws::family(cws::GraphFamily::star, n);
    throw cws::ParseError("unknown graph family: " + kind);
  }
  return cws::graph_from_json(cws::load_json_file(spec));
}

void emit_if_requested(const std::string& path, const nlohmann::json& j) {
  if (!path.empty()) {
    cws::write_json_file(path, j);
    std::cout << "wrote " << path << "\n";
  }
}

int run_verify(const std::string& file, int max_weight, bool oracle,
               unsigned threads, const std::string& emit) {
  const cws::CwsCode code = cws::code_from_json(cws::load_json_file(file));
  nlohmann::json out;

  if (max_weight > 0) {
    const cws::DetectionReport report = cws::check_detection(code, max_weight);
    out["report"] = cws::report_to_json(report);
    out["max_weight"] = max_weight;
    if (oracle) {
      const double violation =
          cws::kl_oracle(code, max_weight, threads).max_violation;
      out["oracle_max_violation"] = violation;
      if ((violation < kOracleTol) != report.passed) {
        std::cout << "oracle disagrees with the detection check\n";
        emit_if_requested(emit, out);
        return kExitFail;
      }
    }
    emit_if_requested(emit, out);
    if (report.passed) {
      std::cout << "detects all errors up to weight " << max_weight
                << (report.degenerate_errors.empty() ? " (nondegenerate)"
                                                     : " (degenerate)")
                << "\n";
      return kExitPass;
    }
    std::cout << "fails at weight " << report.failing_error->weight()
              << ": " << report.failing_error->str() << " ["
              << to_string(*report.failure_kind) << "]\n";
    return kExitFail;
  }

  const int cap = code.claimed_distance
                      ? *code.claimed_distance
                      : static_cast<int>(code.num_qubits());
  const cws::DistanceResult d = cws::distance(code, cap);
  bool degenerate = false;
  if (d.weight > 1) {
    degenerate =
        !cws::check_detection(code, d.weight - 1).degenerate_errors.empty();
  }
  std::cout << "distance " << (d.lower_bound_only ? ">= " : "= ")
            << d.weight << ", " << (degenerate ? "degenerate" : "nondegenerate")
            << "\n";
  out["distance"] = d.weight;
  out["distance_is_lower_bound"] = d.lower_bound_only;
  out["degenerate"] = degenerate;

  bool pass = true;
  if (code.claimed_distance) {
    pass = !d.lower_bound_only && d.weight == *code.claimed_distance;
    if (!pass) {
      std::cout << "claimed distance " << *code.claimed_distance
                << " not confirmed\n";
      if (!d.lower_bound_only) {
        const auto report = cws::check_detection(code, d.weight);
        std::cout << "failing error: " << report.failing_error->str() << " ["
                  << to_string(*report.failure_kind) << "]\n";
        out["failing_error"] = report.failing_error->str();
      }
    }
  }
  if (oracle && pass && code.num_qubits() <= 12) {
    const int low = d.weight - 1;
    if (low >= 1) {
      const double v = cws::kl_oracle(code, low, threads).max_violation;
      out["oracle_max_violation"] = v;
      if (v >= kOracleTol) {
        std::cout << "oracle disagrees below the distance\n";
        pass = false;
      }
    }
    if (pass && !d.lower_bound_only) {
      const double v = cws::kl_oracle(code, d.weight, threads).max_violation;
      if (v < kOracleTol) {
        std::cout << "oracle disagrees at the distance\n";
        pass = false;
      }
    }
  }
  emit_if_requested(emit, out);
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"codeword-stabilized quantum code toolkit"};
  app.require_subcommand(1);

  std::string file, graph_spec, emit;
  int max_weight = 0, target_distance = 2, cap = 0;
  bool oracle = false, exact = false, heuristic = false;
  double budget = 60.0;
  std::uint64_t seed = 0;
  std::size_t stop_at = 0, n_arg = 5;
  unsigned threads = 0;

  auto* verify = app.add_subcommand("verify", "check a code file");
  verify->add_option("file", file)->required();
  verify->add_option("--max-weight", max_weight);
  verify->add_flag("--oracle", oracle);
  verify->add_option("--threads", threads);
  verify->add_option("--emit", emit);

  auto* dist = app.add_subcommand("distance", "compute code distance");
  dist->add_option("file", file)->required();
  dist->add_option("--cap", cap);
  dist->add_option("--emit", emit);

  auto* search = app.add_subcommand("search", "search codewords for a graph");
  search->add_option("--graph", graph_spec,
                     "graph file or family:<kind>:<n>")->required();
  search->add_option("--distance", target_distance)->required();
  search->add_flag("--exact", exact);
  search->add_flag("--heuristic", heuristic);
  search->add_option("--budget", budget, "seconds");
  search->add_option("--seed", seed);
  search->add_option("--stop-at", stop_at, "stop once K reaches this");
  search->add_option("--emit", emit);

  auto* fam = app.add_subcommand("family", "emit a named graph");
  std::string fam_kind;
  fam->add_option("kind", fam_kind, "ring|double_ring|star")->required();
  fam->add_option("n", n_arg)->required();
  fam->add_option("--emit", emit);

  auto* ssw = app.add_subcommand("ssw", "build the odd-n distance-2 family");
  ssw->add_option("n", n_arg)->required();
  ssw->add_option("--emit", emit);

  auto* tostd = app.add_subcommand(
      "to-standard-form", "reduce a stabilizer + word operators");
  tostd->add_option("file", file)->required();
  tostd->add_option("--emit", emit);

  auto* fromstab =
      app.add_subcommand("from-stabilizer", "stabilizer code to CWS form");
  fromstab->add_option("file", file)->required();
  fromstab->add_option("--emit", emit);

  auto* isstab =
      app.add_subcommand("is-stabilizer", "test for a stabilizer code");
  isstab->add_option("file", file)->required();

  auto* encode = app.add_subcommand("encode", "synthesize an encoding circuit");
  encode->add_option("file", file)->required();
  encode->add_option("--emit", emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitPass;
  }

  try {
    if (verify->parsed()) {
      return run_verify(file, max_weight, oracle, threads, emit);
    }

    if (dist->parsed()) {
      const cws::CwsCode code = cws::code_from_json(cws::load_json_file(file));
      const int limit = cap > 0 ? cap : static_cast<int>(code.num_qubits());
      const cws::DistanceResult d = cws::distance(code, limit);
      std::cout << "distance " << (d.lower_bound_only ? ">= " : "= ")
                << d.weight << "\n";
      emit_if_requested(emit, {{"distance", d.weight},
                               {"distance_is_lower_bound", d.lower_bound_only}});
      return kExitPass;
    }

    if (search->parsed()) {
      if (exact && heuristic) {
        std::cerr << "choose one of --exact / --heuristic\n";
        return kExitUsage;
      }
      const cws::Graph g = parse_graph_spec(graph_spec);
      const cws::SearchProblem problem = cws::build_problem(g, target_distance);
      const cws::SearchResult result = cws::search_clique(
          problem, exact ? cws::SearchMode::exact : cws::SearchMode::heuristic,
          budget, seed, stop_at);
      std::cout << "K = " << result.K
                << (result.exact ? " (proved maximum)" : " (best found)")
                << ", elapsed " << result.elapsed_seconds << " s\n";
      cws::CwsCode code{g, result.codewords, target_distance};
      emit_if_requested(emit, cws::code_to_json(code));
      return kExitPass;
    }

    if (fam->parsed()) {
      cws::GraphFamily kind;
      if (fam_kind == "ring") {
        kind = cws::GraphFamily::ring;
      } else if (fam_kind == "double_ring") {
        kind = cws::GraphFamily::double_ring;
      } else if (fam_kind == "star") {
        kind = cws::GraphFamily::star;
      } else {
        std::cerr << "unknown family: " << fam_kind << "\n";
        return kExitUsage;
      }
      const nlohmann::json j = cws::graph_to_json(cws::family(kind, n_arg));
      if (emit.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        emit_if_requested(emit, j);
      }
      return kExitPass;
    }

    if (ssw->parsed()) {
      const cws::CwsCode code = cws::ssw_code(n_arg);
      std::cout << "K = " << code.dimension() << " on " << code.num_qubits()
                << " qubits\n";
      emit_if_requested(emit, cws::code_to_json(code));
      return kExitPass;
    }

    if (tostd->parsed()) {
      const nlohmann::json j = cws::load_json_file(file);
      const std::size_t n = j.at("n").get<std::size_t>();
      cws::PauliGroupSubset stab{n, {}};
      for (const auto& s : j.at("stabilizer")) {
        stab.generators.push_back(
            cws::PauliOperator::from_string(s.get<std::string>()));
      }
      std::vector<cws::PauliOperator> word_ops;
      for (const auto& s : j.at("word_operators")) {
        word_ops.push_back(
            cws::PauliOperator::from_string(s.get<std::string>()));
      }
      const auto [code, circuit] = cws::to_standard_form(stab, word_ops);
      std::cout << "standard form with K = " << code.dimension() << "\n";
      emit_if_requested(emit,
                        {{"code", cws::code_to_json(code)},
                         {"local_circuit", cws::local_circuit_to_json(circuit)}});
      return kExitPass;
    }

    if (fromstab->parsed()) {
      const cws::StabilizerPresentation p =
          cws::stabilizer_from_json(cws::load_json_file(file));
      const auto [stab, word_ops] = cws::stabilizer_to_cws(p);
      cws::CwsCode code = cws::to_standard_form(stab, word_ops).first;
      std::cout << "CWS code with K = " << code.dimension() << " on "
                << code.num_qubits() << " qubits\n";
      emit_if_requested(emit, cws::code_to_json(code));
      return kExitPass;
    }

    if (isstab->parsed()) {
      const cws::CwsCode code = cws::code_from_json(cws::load_json_file(file));
      const auto k = cws::is_stabilizer_code(code);
      if (k) {
        std::cout << "stabilizer code: yes, k = " << *k << "\n";
      } else {
        std::cout << "stabilizer code: no\n";
      }
      return kExitPass;
    }

    if (encode->parsed()) {
      const cws::CwsCode code = cws::code_from_json(cws::load_json_file(file));
      const cws::Circuit circuit = cws::cws_encoder(code);
      std::cout << "encoder with " << circuit.gates.size() << " gates\n";
      if (code.num_qubits() <= 12) {
        const auto basis = cws::build_statevector(
            {code.graph,
             cws::encoder_codeword_order(code.num_qubits(), code.codewords),
             code.claimed_distance});
        double worst = 1.0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
          const Eigen::VectorXcd out = cws::simulate(circuit, i);
          worst = std::min(worst, std::abs(basis[i].dot(out)));
        }
        std::cout << "simulated basis fidelity >= " << worst << "\n";
        if (worst < 1.0 - 1e-10) return kExitFail;
      }
      emit_if_requested(emit, cws::circuit_to_json(circuit));
      return kExitPass;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
