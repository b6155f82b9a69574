#include "cws/verify.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace cws {

namespace {

constexpr std::size_t kMaxOracleQubits = 12;

std::unordered_set<BitVec, BitVecHash> difference_set(
    const std::vector<BitVec>& codewords) {
  std::unordered_set<BitVec, BitVecHash> diffs;
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t j = i + 1; j < codewords.size(); ++j) {
      diffs.insert(codewords[i] ^ codewords[j]);
    }
  }
  return diffs;
}

// Scans one weight class; fills the report on the first failure.
bool check_weight_class(const CwsCode& code,
                        const std::unordered_set<BitVec, BitVecHash>& diffs,
                        int w, DetectionReport& report) {
  for (PauliOperator& e : enumerate_errors_of_weight(code.num_qubits(), w)) {
    const BitVec cl = translate_error(code.graph, e);
    if (diffs.count(cl)) {
      report.passed = false;
      report.failure_kind = FailureKind::codeword_confusion;
      report.failing_error = std::move(e);
      return false;
    }
    if (cl.none()) {
      for (const BitVec& c : code.codewords) {
        if (c.dot(e.x_part())) {
          report.passed = false;
          report.failure_kind = FailureKind::undetected_diagonal;
          report.failing_error = std::move(e);
          return false;
        }
      }
      report.degenerate_errors.push_back(std::move(e));
    }
  }
  return true;
}

void check_oracle_size(const CwsCode& code) {
  if (code.num_qubits() > kMaxOracleQubits) {
    throw std::runtime_error("statevector oracle is limited to " +
                             std::to_string(kMaxOracleQubits) + " qubits");
  }
}

}  // namespace

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::codeword_confusion: return "codeword-confusion";
    case FailureKind::undetected_diagonal: return "undetected-diagonal";
  }
  return "?";
}

DetectionReport check_detection(const CwsCode& code, int max_weight) {
  code.validate();
  if (max_weight < 1 ||
      static_cast<std::size_t>(max_weight) > code.num_qubits()) {
    throw std::invalid_argument("max_weight out of range");
  }
  const auto diffs = difference_set(code.codewords);
  DetectionReport report;
  for (int w = 1; w <= max_weight; ++w) {
    if (!check_weight_class(code, diffs, w, report)) break;
  }
  return report;
}

DistanceResult distance(const CwsCode& code, int cap) {
  code.validate();
  if (cap > static_cast<int>(code.num_qubits())) {
    throw std::invalid_argument("distance cap exceeds qubit count");
  }
  const auto diffs = difference_set(code.codewords);
  for (int w = 1; w <= cap; ++w) {
    DetectionReport report;
    if (!check_weight_class(code, diffs, w, report)) {
      return {w, false};
    }
  }
  return {cap + 1, true};
}

std::vector<Eigen::VectorXcd> build_statevector(const CwsCode& code) {
  code.validate();
  check_oracle_size(code);
  const std::size_t n = code.num_qubits();
  const std::size_t dim = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  const auto edges = code.graph.edges();

  Eigen::VectorXcd base(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    int parity = 0;
    for (const auto& [j, k] : edges) {
      parity ^= static_cast<int>((x >> j) & (x >> k) & 1u);
    }
    base[x] = parity ? -amp : amp;
  }

  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(code.dimension());
  for (const BitVec& c : code.codewords) {
    const std::uint64_t cb = c.to_bits();
    Eigen::VectorXcd psi = base;
    for (std::size_t x = 0; x < dim; ++x) {
      if (std::popcount(x & cb) & 1u) psi[x] = -psi[x];
    }
    basis.push_back(std::move(psi));
  }
  return basis;
}

KLCheckResult kl_oracle(const CwsCode& code, int max_weight,
                        unsigned threads) {
  check_oracle_size(code);
  const auto basis = build_statevector(code);
  const auto errors = enumerate_errors(code.num_qubits(), max_weight);
  const std::size_t dim = std::size_t{1} << code.num_qubits();
  const std::size_t K = basis.size();

  KLCheckResult result;
  result.c_values.resize(errors.size());
  std::vector<double> worst(errors.size(), 0.0);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    Eigen::MatrixXcd m(K, K);
    Eigen::VectorXcd applied(dim);
    for (std::size_t idx = begin; idx < end; ++idx) {
      const PauliOperator& e = errors[idx];
      const std::uint64_t ub = e.x_part().to_bits();
      const std::uint64_t vb = e.z_part().to_bits();
      for (std::size_t j = 0; j < K; ++j) {
        for (std::size_t x = 0; x < dim; ++x) {
          const std::size_t y = x ^ ub;
          const auto a = basis[j][y];
          applied[x] = (std::popcount(y & vb) & 1u) ? -a : a;
        }
        for (std::size_t i = 0; i < K; ++i) {
          m(i, j) = basis[i].dot(applied);
        }
      }
      const std::complex<double> c_e = m.trace() / static_cast<double>(K);
      double v = 0.0;
      for (std::size_t i = 0; i < K; ++i) {
        for (std::size_t j = 0; j < K; ++j) {
          const std::complex<double> want = (i == j) ? c_e : 0.0;
          v = std::max(v, std::abs(m(i, j) - want));
        }
      }
      result.c_values[idx] = c_e;
      worst[idx] = v;
    }
  };

  unsigned nthreads = threads ? threads : std::thread::hardware_concurrency();
  nthreads = std::max(1u, std::min<unsigned>(nthreads, errors.size()));
  if (nthreads == 1) {
    run_range(0, errors.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (errors.size() + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(errors.size(), begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  for (double v : worst) result.max_violation = std::max(result.max_violation, v);
  return result;
}

}  // namespace cws
