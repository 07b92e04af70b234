#include "stringy/intmat.hpp"

#include <cassert>
#include <cstdlib>

namespace stringy {

IntMat hermite_basis(IntMat rows, int n) {
    // Column-by-column elimination with gcd combinations of rows.
    int pivot_row = 0;
    for (int col = 0; col < n; ++col) {
        // Find a row with nonzero entry in this column.
        int nz = -1;
        for (int r = pivot_row; r < (int)rows.size(); ++r)
            if (rows[r][col] != 0) {
                nz = r;
                break;
            }
        assert(nz >= 0 && "rows must span a finite-index sublattice");
        std::swap(rows[pivot_row], rows[nz]);
        // Zero out the column below the pivot via extended-gcd row ops.
        for (int r = pivot_row + 1; r < (int)rows.size(); ++r) {
            while (rows[r][col] != 0) {
                mpz_class f = rows[pivot_row][col] / rows[r][col];  // truncated
                for (int c = 0; c < n; ++c) rows[pivot_row][c] -= f * rows[r][c];
                std::swap(rows[pivot_row], rows[r]);
            }
        }
        if (rows[pivot_row][col] < 0)
            for (int c = 0; c < n; ++c) rows[pivot_row][c] = -rows[pivot_row][c];
        ++pivot_row;
    }
    rows.resize(n);
    // Reduce entries above each pivot into [0, pivot).
    for (int col = 1; col < n; ++col)
        for (int r = 0; r < col; ++r) {
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), rows[r][col].get_mpz_t(), rows[col][col].get_mpz_t());
            if (f != 0)
                for (int c = 0; c < n; ++c) rows[r][c] -= f * rows[col][c];
        }
    return rows;
}

mpz_class det(IntMat m) {
    // Bareiss fraction-free elimination.
    int n = (int)m.size();
    if (n == 0) return 1;
    mpz_class sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

bool solve_row_triangular(const IntMat& basis, const IntVec& target, IntVec& x) {
    int n = (int)basis.size();
    x.assign(n, 0);
    IntVec rem = target;
    for (int col = 0; col < n; ++col) {
        mpz_class num = rem[col];
        if (num % basis[col][col] != 0) return false;
        x[col] = num / basis[col][col];
        for (int c = col; c < n; ++c) rem[c] -= x[col] * basis[col][c];
    }
    for (int c = 0; c < n; ++c)
        if (rem[c] != 0) return false;
    return true;
}

bool solve_rational(const IntMat& rows, const IntVec& target, std::vector<mpq_class>& lambda) {
    int k = (int)rows.size();
    int n = k == 0 ? (int)target.size() : (int)rows[0].size();
    // Gaussian elimination on the transposed system (n equations, k unknowns).
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(k + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) aug[i][j] = rows[j][i];
        aug[i][k] = target[i];
    }
    int row = 0;
    std::vector<int> pivot_of_col(k, -1);
    for (int col = 0; col < k && row < n; ++col) {
        int nz = -1;
        for (int r = row; r < n; ++r)
            if (aug[r][col] != 0) {
                nz = r;
                break;
            }
        if (nz < 0) return false;  // dependent rows not supported
        std::swap(aug[row], aug[nz]);
        for (int r = 0; r < n; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            mpq_class f = aug[r][col] / aug[row][col];
            for (int c = col; c <= k; ++c) {
                aug[r][c] -= f * aug[row][c];
                aug[r][c].canonicalize();
            }
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (int col = 0; col < k; ++col)
        if (pivot_of_col[col] < 0) return false;  // more rows than the rank allows
    // Consistency: remaining rows must have zero rhs.
    for (int r = row; r < n; ++r)
        if (aug[r][k] != 0) return false;
    lambda.assign(k, 0);
    for (int col = 0; col < k; ++col) {
        int pr = pivot_of_col[col];
        lambda[col] = aug[pr][k] / aug[pr][col];
        lambda[col].canonicalize();
    }
    return true;
}

}  // namespace stringy
