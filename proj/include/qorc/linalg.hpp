#pragma once

#include "qorc/numeric.hpp"

namespace qorc {

// Exact rank by fraction-free (Bareiss) elimination. Rational input is
// first cleared to integers row by row; ranks over Q and Z agree.
int rank(const MatZ& m);
int rank(const MatQ& m);

Int det(const MatZ& m);
Rat det(const MatQ& m);

// Reduced row echelon form over Q. Returns the pivot columns.
MatQ rref(MatQ m, std::vector<int>* pivot_cols = nullptr);

// Columns form a basis of the right kernel {x : m x = 0}.
MatQ kernel_basis(const MatQ& m);

// Columns form a basis of the column space.
MatQ column_space_basis(const MatQ& m);

// Columns form a basis of {x : m x lies in the column span of s}.
MatQ preimage_basis(const MatQ& m, const MatQ& s);

MatQ inverse(const MatQ& m);
bool is_invertible(const MatQ& m);

// Solves a x = b exactly; returns false when inconsistent. On success x
// is one solution (minimal in the free variables = 0 sense).
bool solve(const MatQ& a, const MatQ& b, MatQ& x);

// Row-wise denominator clearing: returns an integer matrix with the same
// row spans (hence the same rank) as m.
MatZ clear_denominators(const MatQ& m);

}  // namespace qorc
