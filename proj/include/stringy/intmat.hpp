#pragma once

#include <gmpxx.h>

#include <vector>

namespace stringy {

using IntVec = std::vector<mpz_class>;
using IntMat = std::vector<IntVec>;  // row major

// Row-style Hermite normal form of a full-column-rank integer matrix whose
// rows span a finite-index sublattice of Z^n: returns the n x n upper
// triangular canonical basis (positive diagonal, entries above each pivot
// reduced into [0, pivot)).
IntMat hermite_basis(IntMat rows, int n);

mpz_class det(IntMat m);  // fraction-free Gaussian elimination

// Solve x * basis = target over the integers for upper triangular basis
// (forward substitution).  Returns false if some step does not divide.
bool solve_row_triangular(const IntMat& basis, const IntVec& target, IntVec& x);

// Solve sum_i lambda_i rows[i] = target over the rationals; requires rows
// linearly independent.  Returns false when target is outside their span.
bool solve_rational(const IntMat& rows, const IntVec& target, std::vector<mpq_class>& lambda);

}  // namespace stringy
