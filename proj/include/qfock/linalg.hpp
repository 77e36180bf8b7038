#pragma once

#include <vector>

#include "qfock/ratfn.hpp"

namespace qfock {

using Matrix = std::vector<std::vector<RatFn>>;

// Exact basis of the right kernel {v : M v = 0}. Rows may be dependent;
// the matrix may be rectangular. Elimination is fraction-free on cleared
// rows; the result vectors are deterministic for a given input.
std::vector<std::vector<RatFn>> matrix_kernel(const Matrix& M);

// Rank of M specialized at q = x, by exact rational elimination.
// Throws if any denominator vanishes at x.
std::size_t rank_at(const Matrix& M, const Rat& x);

// Clears denominators and content: the result spans the same line, has
// Laurent entries with overall gcd 1, minimal exponent 0 across entries,
// and leading coefficient 1 in the first nonzero entry.
std::vector<Laurent> primitive_scale(const std::vector<RatFn>& v);

}  // namespace qfock
