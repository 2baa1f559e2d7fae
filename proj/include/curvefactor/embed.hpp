#pragma once

#include "curvefactor/poly.hpp"

namespace curvefactor {

// Real block picture of a complex or quaternionic matrix: n x n over C maps
// to 2n x 2n over R, over H to 4n x 4n.  Multiplicative, injective, and sends
// conjugate transpose to plain transpose.  Real input passes through
// unchanged (documented no-op).
Mat realify(const Mat& m);
MatPoly realify(const MatPoly& p);

// Inverse of realify on its image; throws internal_error when the block
// pattern is inconsistent with an embedded matrix of the requested tag.
Mat unrealify(const Mat& m, FieldTag tag);

}  // namespace curvefactor
