#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cws/pauli.hpp"
#include "cws/standard_form.hpp"

namespace cws {

enum class FailureKind { codeword_confusion, undetected_diagonal };

std::string to_string(FailureKind kind);

struct DetectionReport {
  bool passed = true;
  std::optional<PauliOperator> failing_error;
  std::optional<FailureKind> failure_kind;
  // Errors with zero classical image absorbed via commutation with every
  // word operator; nonempty marks the code degenerate.
  std::vector<PauliOperator> degenerate_errors;
};

// Checks every error of weight 1..max_weight against the classical
// detection conditions induced by the graph. The first failure in
// enumeration order is reported.
DetectionReport check_detection(const CwsCode& code, int max_weight);

struct DistanceResult {
  int weight = 0;           // distance, or cap+1 when lower_bound_only
  bool lower_bound_only = false;

  std::string str() const {
    return lower_bound_only ? ">=" + std::to_string(weight)
                            : std::to_string(weight);
  }
};

// Smallest weight at which detection fails; ">= cap+1" if none up to cap.
DistanceResult distance(const CwsCode& code, int cap);

// The K orthonormal code basis vectors Z^{c}|S>, for n <= 12 qubits.
// Qubit q is bit q of the amplitude index.
std::vector<Eigen::VectorXcd> build_statevector(const CwsCode& code);

struct KLCheckResult {
  double max_violation = 0.0;
  // Mean diagonal matrix element per enumerated error.
  std::vector<std::complex<double>> c_values;
};

// Brute-force check of <c_i|E|c_j> = c_E delta_ij over the bounded-weight
// error set; independent of the symbolic path in check_detection.
// threads = 0 picks a hardware default; the result is thread-count
// independent.
KLCheckResult kl_oracle(const CwsCode& code, int max_weight,
                        unsigned threads = 0);

}  // namespace cws
