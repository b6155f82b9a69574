#pragma once

#include <cstdint>
#include <vector>

#include "cws/graph.hpp"
#include "cws/standard_form.hpp"

namespace cws {

// The classical code-search problem induced by a graph and a target
// distance: codewords must avoid the forbidden pairwise differences and
// satisfy c . u = 0 for every forced constraint u.
struct SearchProblem {
  Graph graph;
  int target_distance = 1;
  std::vector<BitVec> forced_constraints;     // sorted, deduplicated
  std::vector<BitVec> forbidden_differences;  // sorted, deduplicated, nonzero
};

SearchProblem build_problem(const Graph& g, int distance);

enum class SearchMode { exact, heuristic };

struct SearchResult {
  std::vector<BitVec> codewords;  // always contains the zero vector first
  std::size_t K = 0;
  bool exact = false;  // proved maximum (exact mode, completed in budget)
  double elapsed_seconds = 0.0;
};

// Maximum-clique search over the confusability graph. Exact mode runs
// branch-and-bound with greedy-coloring bounds to proved optimality within
// the budget; heuristic mode runs seeded multi-start greedy construction
// with plateau swaps. stop_at > 0 ends the search once a clique of that
// size is found. Results are verified with check_detection before return.
SearchResult search_clique(const SearchProblem& problem, SearchMode mode,
                           double budget_seconds, std::uint64_t seed,
                           std::size_t stop_at = 0);

enum class GraphFamily { ring, double_ring, star };

// ring: i -- i+1 mod n (n >= 3).
// double_ring: two n/2 rings, outer 0..n/2-1 and inner n/2..n-1, plus
//              spokes i -- i+n/2 (even n >= 6).
// star: center 0 (n >= 2).
Graph family(GraphFamily kind, std::size_t n);

// The odd-blocklength distance-two family on a star-graph stabilizer,
// built from its GHZ-type presentation and reduced to standard form.
CwsCode ssw_code(std::size_t n);

}  // namespace cws
