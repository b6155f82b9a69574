#include "cws/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace cws {

std::vector<BitVec> gf2_rref(std::vector<BitVec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t gf2_rank(std::vector<BitVec> rows) {
  return gf2_rref(std::move(rows)).size();
}

std::vector<std::size_t> gf2_pivots(const std::vector<BitVec>& rref) {
  std::vector<std::size_t> pivots;
  pivots.reserve(rref.size());
  for (const BitVec& row : rref) {
    pivots.push_back(row.first_set());
  }
  return pivots;
}

bool gf2_in_span(const std::vector<BitVec>& rref, BitVec v) {
  for (const BitVec& row : rref) {
    const std::size_t p = row.first_set();
    if (p < v.size() && v.get(p)) v ^= row;
  }
  return v.none();
}

std::vector<BitVec> gf2_null_space(const std::vector<BitVec>& rows,
                                   std::size_t n) {
  const std::vector<BitVec> rref = gf2_rref(rows);
  const std::vector<std::size_t> pivots = gf2_pivots(rref);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<BitVec> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    BitVec x(n);
    x.set(free_col, true);
    for (std::size_t i = 0; i < rref.size(); ++i) {
      if (rref[i].get(free_col)) x.set(pivots[i], true);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

bool gf2_is_subspace(const std::vector<BitVec>& vectors) {
  if (vectors.empty()) return false;
  const std::size_t k = gf2_rank(vectors);
  if (k >= 64) {
    throw std::invalid_argument("gf2_is_subspace: dimension too large");
  }
  if (vectors.size() != (std::size_t{1} << k)) return false;
  std::vector<BitVec> sorted = vectors;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  // 2^k distinct vectors spanning a k-dimensional space form the whole space.
  return true;
}

}  // namespace cws
