#pragma once

#include <vector>

#include "curvefactor/solve.hpp"

namespace curvefactor {

// n x n block with lambda repeated on the diagonal and ones directly below
// it.  The subdiagonal convention makes the solution spaces below come out
// lower triangular rather than upper.
Mat jordan_block(int n, const FieldElem& lambda);
Mat jordan_block(int n, const Scalar& lambda, FieldTag tag = FieldTag::Real);

// Same shape one level up: m x m grid of k x k blocks, seed on the block
// diagonal and identity blocks directly below.
Mat block_jordan(int m, const Mat& seed);

// Ones on the antidiagonal.  Conjugating by it reverses row or column order,
// which carries corner-anchored patterns onto the lower triangle.
Mat exchange_matrix(int n, FieldTag tag);

// Affine solution set of X1 Y + Y X2 = C for Y of size m x n.  Over H the map
// is linear only over the scalars, so the system is vectorized componentwise.
struct SylvesterSolution {
    bool consistent = false;
    Mat particular;          // one solution; left 0x0 when inconsistent
    std::vector<Mat> basis;  // basis of the homogeneous solution space

    int dimension() const { return int(basis.size()); }
};

SylvesterSolution sylvester_nullspace(const Mat& x1, const Mat& x2, const Mat& c);

// Diagonal-constancy patterns anchored at the bottom-left corner.  In an m x n
// matrix the admissible diagonals are i - j = max(0, m - n), ..., m - 1; all
// entries above them must vanish.
enum class ToeplitzKind {
    LowerAlternating,       // each step down a diagonal flips the sign
    Lower,                  // constant along each diagonal
    BlockLowerAlternating,  // same as LowerAlternating for the 2x2 block grid
    BlockSymmetricTraceless,  // every 2x2 block has the shape [[x, y], [y, -x]]
};

// Exact pattern test; no tolerance.  The block kinds return false when a
// dimension is odd.
bool toeplitz_structure_check(const Mat& y, ToeplitzKind kind);

}  // namespace curvefactor
