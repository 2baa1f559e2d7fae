#pragma once

#include <utility>
#include <vector>

#include "curvefactor/curve.hpp"
#include "curvefactor/factorize.hpp"

namespace curvefactor {

// Rectangular matrix-valued rational function num(t) / den(t).  num is kept
// as ascending Mat coefficients with trailing zeros trimmed, den as merged
// real-rootless quadratic factors; no factor divides every entry of num.
struct RatMat {
    std::vector<Mat> num;
    std::vector<QuadFactor> den;
    int rows = 0, cols = 0;
    FieldTag tag = FieldTag::Real;

    int degree() const { return int(num.size()) - 1; }
    bool is_constant() const { return den.empty(); }
    // Zero at infinity; constants other than zero fail this.
    bool vanishes_at_infinity() const;
};

RatMat ratmat_zero(int rows, int cols, FieldTag tag);
RatMat ratmat_constant(const Mat& value);
// Merges and validates den, cancels common factors, trims num.
RatMat ratmat_normalize(std::vector<Mat> num, std::vector<QuadFactor> den);
Mat ratmat_eval(const RatMat& x, const Scalar& t);
RatMat ratmat_add(const RatMat& a, const RatMat& b);
RatMat ratmat_scale_left(const Mat& m, const RatMat& x);
bool ratmat_equal(const RatMat& a, const RatMat& b);
// gamma(t) * x(t); denominators multiply, then common factors cancel.
RatMat curve_apply(const RationalCurve& gamma, const RatMat& x);

// Curve [[Q/q1, u/q2],[0,1]] on an inhomogeneous orthogonal group: rotational
// part on the linear group with value I at infinity, translational part a
// real column vanishing at infinity.
struct AffineCurve {
    AffineGroupDescriptor group;
    RationalCurve rotational;
    RatMat translational;

    int dim() const { return group.dim(); }
};

AffineCurve make_affine_curve(AffineGroupDescriptor group, RationalCurve rotational,
                              RatMat translational);
AffineCurve affine_identity(const AffineGroupDescriptor& group);
// The (n+1) x (n+1) value at t.
Mat affine_value(const AffineCurve& g, const Scalar& t);
AffineCurve affine_multiply(const AffineCurve& a, const AffineCurve& b);
// c g c^{-1} for a constant member c = [[R, v],[0,1]] of the affine group.
AffineCurve affine_conjugated(const AffineCurve& g, const Mat& c);

// gamma = [[I, u/q2],[0,1]] * product of diag-embedded rotation factors; the
// factors come from decomposing the rotational part.
std::pair<AffineCurve, Factorization> iso_split(const AffineCurve& g);
AffineCurve iso_recombine(const AffineCurve& translation, const Factorization& rotation);

}  // namespace curvefactor
