#include "cws/graph.hpp"

namespace cws {

Graph Graph::from_adjacency(std::vector<BitVec> rows) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw std::invalid_argument("adjacency matrix is not square");
    }
    if (rows[i].get(i)) {
      throw std::invalid_argument("adjacency matrix has a nonzero diagonal");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i].get(j) != rows[j].get(i)) {
        throw std::invalid_argument("adjacency matrix is not symmetric");
      }
    }
  }
  Graph g;
  g.adj_ = std::move(rows);
  return g;
}

}  // namespace cws
