#pragma once

#include <vector>

#include "curvefactor/affine.hpp"

namespace curvefactor {

enum class ActionKind { Linear, Affine };

// Product of group-curve factors acting on a base point, either by plain
// matrix action or by the affine action on real columns.  An affine factor
// may carry a constant translation applied before the curve, which lets the
// factor equal the identity at t = 0 while the curve part stays normalized
// at infinity.
struct OrbitSpec {
    ActionKind action = ActionKind::Linear;
    Mat base_point;
    std::vector<RationalCurve> linear;
    std::vector<AffineCurve> affine;
    std::vector<Mat> shifts;  // empty, or one per affine factor
};

OrbitSpec make_linear_orbit_spec(std::vector<RationalCurve> factors, Mat base_point);
OrbitSpec make_affine_orbit_spec(std::vector<AffineCurve> factors, Mat base_point,
                                 std::vector<Mat> shifts = {});

// factors[0](t) ... factors[s-1](t) . base_point, exact.
RatMat orbit_curve(const OrbitSpec& spec);

// [[I, x],[0,1]] on SE(n) for a real column x vanishing at infinity.
AffineCurve lift_translation_section(const RatMat& x);

// Splits x by pole pair into single-pole translations pinned to the identity
// at t = 0; the product traces x from base point x(0).
OrbitSpec make_orbit_spec(const RatMat& x);

// (a) every factor has exactly one pole pair, (b) the pairs are pairwise
// distinct, (c) the orbit equals gamma exactly.  Any structural mismatch
// reports false rather than throwing.
bool verify_kempe(const RatMat& gamma, const OrbitSpec& spec);

}  // namespace curvefactor
