#pragma once

#include <vector>

#include "curvefactor/curve.hpp"

namespace curvefactor {

// One peeling move: alpha has its only pole at the requested pair and
// multiplying it onto the curve removes that pole entirely.
struct ReductionStep {
    RationalCurve alpha;      // degree 2s, identity at infinity
    RationalCurve remainder;  // alpha * curve, degree dropped by 2s
};

// Finds alpha = A / f^s with A = I t^{2s} + lower orders such that f^{2s}
// divides A * P entrywise, then certifies A B A^sigma = f^{2s} B.  The curve
// must be the identity at infinity and carry the pole with multiplicity at
// least pole.s.  Throws membership_error when no such alpha exists, which is
// how a deliberate attempt to split below the true multiplicity is refused.
ReductionStep degree_reduce(const RationalCurve& curve, const QuadFactor& pole);

// Entry point for curves over C or H.  The unknown coefficients are solved
// componentwise over the reals with one shared real leading scalar, which is
// the same system the real block picture of the curve produces, so the result
// commutes with realify.
ReductionStep degree_reduce_embedded(const RationalCurve& curve, const QuadFactor& pole);

// gamma = constant * factors[0] * ... * factors[l-1], each factor carrying
// exactly one pole pair, recorded in certificates in matching order.
struct Factorization {
    Mat constant;
    std::vector<RationalCurve> factors;
    std::vector<QuadFactor> certificates;

    RationalCurve reassembled(const GroupDescriptor& group) const;
};

// Peels poles in denominator order (sorted by coefficient pair); each factor
// is the inverse of the peeled alpha, so simple poles give quadratic factors
// and an s-fold pole gives one factor of degree 2s.
Factorization decompose(const RationalCurve& curve);

}  // namespace curvefactor
