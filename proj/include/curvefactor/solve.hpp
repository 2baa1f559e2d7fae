#pragma once

#include <vector>

#include "curvefactor/matrix.hpp"

namespace curvefactor {

struct LinearSolution {
    bool consistent = false;
    int rank = 0;
    std::vector<Scalar> particular;              // free variables set to zero
    std::vector<std::vector<Scalar>> nullspace;  // one basis vector per free column
};

// Solves A x = b exactly over the scalar field.  Forward elimination is
// fraction-free (two-term cross-multiplication with exact division by the
// previous pivot) with deterministic first-nonzero pivoting, so results are
// reproducible across runs.
LinearSolution solve_linear(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b,
                            bool want_nullspace = false);

// Inverse over the entry ring (field, or division ring for quaternions); row
// operations multiply from the left throughout, which is what makes the
// noncommutative case come out right.
Mat mat_inverse(const Mat& m);
bool mat_invertible(const Mat& m);
int mat_rank(const Mat& m);

}  // namespace curvefactor
