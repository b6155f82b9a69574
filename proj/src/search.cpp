#include "cws/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <iostream>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "cws/gf2.hpp"
#include "cws/verify.hpp"

namespace cws {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Flat bitset sized at construction; enough for the clique solver.
class VertexSet {
public:
  explicit VertexSet(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) {
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }
  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    }
    return n_;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  void and_not(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  }

private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

constexpr std::size_t kMaxExactVertices = std::size_t{1} << 13;
constexpr std::size_t kSampledPoolSize = std::size_t{1} << 16;

// All vectors satisfying the forced constraints, ascending as integers.
std::vector<std::uint64_t> constraint_subspace(const SearchProblem& problem) {
  const std::size_t n = problem.graph.num_vertices();
  const auto basis =
      gf2_null_space(problem.forced_constraints, n);  // whole space if empty
  std::vector<std::uint64_t> pool;
  pool.reserve(std::size_t{1} << basis.size());
  std::vector<std::uint64_t> gen_bits;
  for (const BitVec& b : basis) gen_bits.push_back(b.to_bits());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << basis.size()); ++m) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < gen_bits.size(); ++i) {
      if ((m >> i) & 1u) x ^= gen_bits[i];
    }
    pool.push_back(x);
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

struct CliqueInstance {
  // Neighbours of the zero vertex; every clique is translated to contain 0,
  // which is sound because the confusability graph is a Cayley graph under
  // XOR translation.
  std::vector<std::uint64_t> verts;
  std::unordered_set<std::uint64_t> forbidden;

  bool adjacent(std::uint64_t a, std::uint64_t b) const {
    return !forbidden.count(a ^ b);
  }
};

struct ExactSolver {
  const CliqueInstance& inst;
  std::vector<VertexSet> adj;
  std::vector<std::size_t> best;     // indices into order
  std::vector<std::size_t> current;
  Clock::time_point start;
  double budget;
  std::size_t stop_at;
  std::uint64_t nodes = 0;
  bool aborted = false;

  ExactSolver(const CliqueInstance& inst_, Clock::time_point start_,
              double budget_, std::size_t stop_at_)
      : inst(inst_), start(start_), budget(budget_), stop_at(stop_at_) {}

  void run() {
    const std::size_t v = inst.verts.size();
    adj.assign(v, VertexSet(v));
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) {
        if (inst.adjacent(inst.verts[i], inst.verts[j])) {
          adj[i].set(j);
          adj[j].set(i);
        }
      }
    }
    VertexSet all(v);
    for (std::size_t i = 0; i < v; ++i) all.set(i);
    expand(all);
  }

  bool out_of_time() {
    if ((++nodes & 1023u) == 0 && seconds_since(start) > budget) {
      aborted = true;
    }
    return aborted;
  }

  void expand(VertexSet candidates) {
    if (out_of_time()) return;
    // Greedy coloring bound; vertices emitted in ascending color.
    std::vector<std::size_t> order;
    std::vector<std::size_t> color;
    VertexSet uncolored = candidates;
    std::size_t c = 0;
    while (uncolored.any()) {
      ++c;
      VertexSet eligible = uncolored;
      while (eligible.any()) {
        const std::size_t u = eligible.first();
        eligible.reset(u);
        uncolored.reset(u);
        eligible.and_not(adj[u]);
        order.push_back(u);
        color.push_back(c);
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + color[idx] <= best.size()) return;
      const std::size_t u = order[idx];
      current.push_back(u);
      VertexSet next = candidates;
      next &= adj[u];
      if (next.any()) {
        expand(next);
      } else if (current.size() > best.size()) {
        best = current;
        if (stop_at > 0 && best.size() + 1 >= stop_at) {
          aborted = true;
        }
      }
      current.pop_back();
      if (aborted) return;
      candidates.reset(u);
    }
  }
};

struct HeuristicSolver {
  const CliqueInstance& inst;
  std::mt19937_64 rng;
  Clock::time_point start;
  double budget;
  std::size_t stop_at;
  std::vector<std::uint64_t> best;

  HeuristicSolver(const CliqueInstance& inst_, std::uint64_t seed,
                  Clock::time_point start_, double budget_,
                  std::size_t stop_at_)
      : inst(inst_), rng(seed), start(start_), budget(budget_),
        stop_at(stop_at_) {}

  bool adjacent_to_all(std::uint64_t v,
                       const std::vector<std::uint64_t>& clique) const {
    for (std::uint64_t c : clique) {
      if (!inst.adjacent(v, c)) return false;
    }
    return true;
  }

  void run() {
    std::vector<std::uint64_t> perm = inst.verts;
    do {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::uint64_t> clique;
      for (std::uint64_t v : perm) {
        if (adjacent_to_all(v, clique)) clique.push_back(v);
      }
      plateau(clique);
      if (clique.size() > best.size()) best = clique;
      if (stop_at > 0 && best.size() + 1 >= stop_at) return;
    } while (seconds_since(start) < budget);
  }

  // (1,2)-swaps: drop one member whenever that frees two additions.
  void plateau(std::vector<std::uint64_t>& clique) {
    const int max_rounds = 40;
    for (int round = 0; round < max_rounds; ++round) {
      bool improved = false;
      for (std::size_t drop = 0; drop < clique.size() && !improved; ++drop) {
        std::swap(clique[drop], clique.back());
        const std::uint64_t removed = clique.back();
        clique.pop_back();
        std::vector<std::uint64_t> additions;
        for (std::uint64_t v : inst.verts) {
          if (v != removed && adjacent_to_all(v, clique) &&
              std::find(clique.begin(), clique.end(), v) == clique.end()) {
            additions.push_back(v);
          }
        }
        std::shuffle(additions.begin(), additions.end(), rng);
        std::vector<std::uint64_t> added;
        for (std::uint64_t v : additions) {
          if (adjacent_to_all(v, added)) added.push_back(v);
        }
        if (added.size() >= 2) {
          clique.insert(clique.end(), added.begin(), added.end());
          improved = true;
        } else {
          clique.push_back(removed);
        }
      }
      if (!improved) break;
      if (seconds_since(start) > budget) break;
    }
  }
};

}  // namespace

SearchProblem build_problem(const Graph& g, int distance) {
  if (distance < 1) {
    throw std::invalid_argument("target distance must be at least 1");
  }
  SearchProblem problem{g, distance, {}, {}};
  if (distance > 1) {
    for (const TranslatedError& t : translate_error_set(g, distance - 1)) {
      if (t.classical.none()) {
        problem.forced_constraints.push_back(t.x_support);
      } else {
        problem.forbidden_differences.push_back(t.classical);
      }
    }
    auto dedupe = [](std::vector<BitVec>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(problem.forced_constraints);
    dedupe(problem.forbidden_differences);
  }
  return problem;
}

SearchResult search_clique(const SearchProblem& problem, SearchMode mode,
                           double budget_seconds, std::uint64_t seed,
                           std::size_t stop_at) {
  const std::size_t n = problem.graph.num_vertices();
  if (n > 64) {
    throw std::runtime_error("search supports at most 64 qubits");
  }
  if (mode == SearchMode::exact && n > 20) {
    throw std::runtime_error(
        "exact search refuses n > 20; use heuristic mode");
  }
  const auto start = Clock::now();

  CliqueInstance inst;
  for (const BitVec& d : problem.forbidden_differences) {
    inst.forbidden.insert(d.to_bits());
  }

  std::vector<std::uint64_t> pool;
  if (n > 20) {
    std::cerr << "search: vertex set too large to enumerate; sampling "
              << kSampledPoolSize << " candidates\n";
    const auto basis = gf2_null_space(problem.forced_constraints, n);
    std::vector<std::uint64_t> gen_bits;
    for (const BitVec& b : basis) gen_bits.push_back(b.to_bits());
    std::mt19937_64 rng(seed ^ 0x5eedu);
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t draw = 0;
         draw < 4 * kSampledPoolSize && seen.size() < kSampledPoolSize;
         ++draw) {
      std::uint64_t x = 0;
      for (std::size_t i = 0; i < gen_bits.size(); ++i) {
        if (rng() & 1u) x ^= gen_bits[i];
      }
      seen.insert(x);
    }
    pool.assign(seen.begin(), seen.end());
    std::sort(pool.begin(), pool.end());
  } else {
    pool = constraint_subspace(problem);
  }

  // Work inside the neighbourhood of the zero vertex; XOR translation makes
  // this lossless and the result is canonical with 0 as a codeword.
  for (std::uint64_t v : pool) {
    if (v != 0 && !inst.forbidden.count(v)) inst.verts.push_back(v);
  }

  SearchResult result;
  std::vector<std::uint64_t> clique_bits;
  if (mode == SearchMode::exact) {
    if (inst.verts.size() > kMaxExactVertices) {
      throw std::runtime_error("exact search limited to " +
                               std::to_string(kMaxExactVertices) +
                               " candidate vectors");
    }
    // Descending degree, ties by numeric value.
    {
      std::vector<std::size_t> degree(inst.verts.size(), 0);
      for (std::size_t i = 0; i < inst.verts.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.verts.size(); ++j) {
          if (inst.adjacent(inst.verts[i], inst.verts[j])) {
            ++degree[i];
            ++degree[j];
          }
        }
      }
      std::vector<std::size_t> idx(inst.verts.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return inst.verts[a] < inst.verts[b];
      });
      std::vector<std::uint64_t> sorted;
      sorted.reserve(idx.size());
      for (std::size_t i : idx) sorted.push_back(inst.verts[i]);
      inst.verts = std::move(sorted);
    }
    ExactSolver solver(inst, start, budget_seconds, stop_at);
    solver.run();
    for (std::size_t i : solver.best) clique_bits.push_back(inst.verts[i]);
    result.exact = !solver.aborted;
  } else {
    HeuristicSolver solver(inst, seed, start, budget_seconds, stop_at);
    solver.run();
    clique_bits = solver.best;
    result.exact = false;
  }

  std::sort(clique_bits.begin(), clique_bits.end());
  result.codewords.push_back(BitVec(n));  // the zero vector
  for (std::uint64_t v : clique_bits) {
    result.codewords.push_back(BitVec::from_bits(v, n));
  }
  result.K = result.codewords.size();
  result.elapsed_seconds = seconds_since(start);

  // Post-search verification is mandatory.
  if (problem.target_distance > 1) {
    CwsCode code{problem.graph, result.codewords, std::nullopt};
    if (!check_detection(code, problem.target_distance - 1).passed) {
      throw std::logic_error("search produced a codeword set that fails "
                             "detection; this is a bug");
    }
  }
  return result;
}

Graph family(GraphFamily kind, std::size_t n) {
  switch (kind) {
    case GraphFamily::ring: {
      if (n < 3) throw std::invalid_argument("ring requires n >= 3");
      Graph g(n);
      for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
      return g;
    }
    case GraphFamily::double_ring: {
      if (n < 6 || n % 2 != 0) {
        throw std::invalid_argument("double ring requires even n >= 6");
      }
      const std::size_t m = n / 2;
      Graph g(n);
      for (std::size_t i = 0; i < m; ++i) {
        g.add_edge(i, (i + 1) % m);          // outer ring
        g.add_edge(m + i, m + (i + 1) % m);  // inner ring
        g.add_edge(i, m + i);                // spoke
      }
      return g;
    }
    case GraphFamily::star: {
      if (n < 2) throw std::invalid_argument("star requires n >= 2");
      Graph g(n);
      for (std::size_t i = 1; i < n; ++i) g.add_edge(0, i);
      return g;
    }
  }
  throw std::invalid_argument("unknown graph family");
}

CwsCode ssw_code(std::size_t n) {
  if (n % 2 == 0 || n < 5) {
    throw std::invalid_argument("ssw_code requires odd n >= 5");
  }
  // GHZ-type stabilizer <X_0 Z_1..Z_{n-1}, Z_0 X_1, ..., Z_0 X_{n-1}>.
  PauliGroupSubset stab{n, {}};
  {
    BitVec v(n);
    for (std::size_t q = 1; q < n; ++q) v.set(q, true);
    stab.generators.emplace_back(BitVec::unit(n, 0), std::move(v), 0);
  }
  for (std::size_t q = 1; q < n; ++q) {
    stab.generators.emplace_back(BitVec::unit(n, q), BitVec::unit(n, 0), 0);
  }

  // Word operators X^{x_0} Z^{(x_1..x_{n-1})} for x of the allowed parity
  // and weight below (n-1)/2, ascending as integers.
  const std::size_t parity = (n % 4 == 1) ? 1 : 0;
  const std::size_t max_weight = (n - 1) / 2;
  std::vector<PauliOperator> word_ops;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const std::size_t w = std::popcount(bits);
    if (w >= max_weight || (w % 2) != parity) continue;
    BitVec x = BitVec::from_bits(bits, n);
    BitVec u(n), v(n);
    u.set(0, x.get(0));
    for (std::size_t q = 1; q < n; ++q) v.set(q, x.get(q));
    word_ops.emplace_back(std::move(u), std::move(v), 0);
  }

  CwsCode code = to_standard_form(stab, word_ops).first;
  code.claimed_distance = 2;
  return code;
}

}  // namespace cws
