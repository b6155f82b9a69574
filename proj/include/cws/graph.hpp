#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cws/bitvec.hpp"

namespace cws {

// Simple undirected graph on n vertices; adjacency rows are bit-vectors.
// The adjacency matrix is kept symmetric with a zero diagonal.
class Graph {
public:
  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n, BitVec(n)) {}

  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<std::size_t,
                                                      std::size_t>>& edges) {
    Graph g(n);
    for (const auto& [i, j] : edges) g.add_edge(i, j);
    return g;
  }

  // Rows must form a symmetric 0/1 matrix with zero diagonal.
  static Graph from_adjacency(std::vector<BitVec> rows);

  std::size_t num_vertices() const { return adj_.size(); }

  void add_edge(std::size_t i, std::size_t j) {
    check_pair(i, j);
    adj_[i].set(j, true);
    adj_[j].set(i, true);
  }

  bool has_edge(std::size_t i, std::size_t j) const {
    check_pair(i, j);
    return adj_[i].get(j);
  }

  const BitVec& row(std::size_t i) const { return adj_[i]; }

  std::size_t degree(std::size_t i) const { return adj_[i].popcount(); }

  // Edges (i, j) with i < j, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
      for (std::size_t j = i + 1; j < adj_.size(); ++j) {
        if (adj_[i].get(j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

private:
  void check_pair(std::size_t i, std::size_t j) const {
    if (i >= adj_.size() || j >= adj_.size()) {
      throw std::invalid_argument("vertex index out of range");
    }
    if (i == j) {
      throw std::invalid_argument("self-loops are not allowed");
    }
  }

  std::vector<BitVec> adj_;
};

}  // namespace cws
