#pragma once

#include <cstddef>
#include <vector>

#include "cws/bitvec.hpp"

namespace cws {

// Row echelon helpers over GF(2). Rows are BitVecs of equal length;
// pivots are always chosen in increasing column order.

// Reduced row echelon form; zero rows dropped.
std::vector<BitVec> gf2_rref(std::vector<BitVec> rows);

std::size_t gf2_rank(std::vector<BitVec> rows);

// Pivot column of each RREF row (rows must be the output of gf2_rref).
std::vector<std::size_t> gf2_pivots(const std::vector<BitVec>& rref);

// Membership of v in the row space of an RREF basis.
bool gf2_in_span(const std::vector<BitVec>& rref, BitVec v);

// Basis of {x : r . x = 0 for every row r}, for vectors of length n.
std::vector<BitVec> gf2_null_space(const std::vector<BitVec>& rows,
                                   std::size_t n);

// True iff the set is closed under XOR and contains the zero vector,
// i.e. it is exactly a linear subspace of GF(2)^n.
bool gf2_is_subspace(const std::vector<BitVec>& vectors);

}  // namespace cws
