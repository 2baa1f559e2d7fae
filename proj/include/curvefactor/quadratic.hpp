#pragma once

#include <vector>

#include "curvefactor/curve.hpp"

namespace curvefactor {

// Degree-two curve with a single simple pole pair a +- b i, b > 0:
//
//   alpha(t) = ((t-a)^2 I + b (t-a) A1 + b^2 A0) / ((t-a)^2 + b^2),
//
// so alpha(infinity) = I and alpha(a) = A0.
struct QuadraticData {
    GroupDescriptor group;
    Mat a0;
    Mat a1;
    Scalar center;  // a
    Scalar radius;  // b > 0
};

// The four identities on (A0, A1) whose conjunction is equivalent to the
// degree-two curve lying in the group of B.
struct QuadraticRelations {
    bool skew;        // B A1^s + A1 B = 0
    bool shift;       // B A0^s + A0 B = (2I + A1^2) B
    bool twist;       // A1 B A0^s = A0 A1 B
    bool involution;  // A0 B A0^s = B
    bool all() const { return skew && shift && twist && involution; }
};

QuadraticRelations check_quadratic_relations(const Mat& a0, const Mat& a1,
                                             const GroupDescriptor& group);

// Membership is certified during normalization; a non-member pair throws.
RationalCurve quadratic_curve(const QuadraticData& data);

// Inverse of quadratic_curve.  Requires degree two, a single simple pole pair
// whose imaginary part lies in the scalar field, and identity at infinity.
QuadraticData extract_quadratic(const RationalCurve& curve);

// ---------------------------------------------------------------------------
// Canonical families.  Every constructor below returns a curve with the pole
// pair +-i; parameters are validated up front and the result is certified by
// normalization.  Arbitrary pole pairs and conjugates are reached through
// reparametrized() and conjugated().

// One block of the canonical U(n) family: mult coordinate pairs sharing
// a = 2s in (0, 2] and b = 2sc where s^2 + c^2 = 1, i.e. 4b^2 = a^2(4 - a^2).
struct UnitaryBlock {
    int mult;
    Scalar a;
    Scalar b;
};

// Block-diagonal U(n) curve; coordinates not covered by a block are fixed
// pointwise.  The a-values must be pairwise distinct.
RationalCurve make_unitary_quadratic(int n, const std::vector<UnitaryBlock>& blocks);

struct CirclePoint {
    Scalar h;
    Scalar g;  // h^2 + g^2 = 1
};

// One block of the canonical O(n) family: mult coordinate quadruples sharing
// lambda in (0, 2) and mu with 4 mu^2 = lambda^2 (4 - lambda^2), plus one
// circle point per quadruple.
struct OrthogonalBlock {
    int mult;
    Scalar lambda;
    Scalar mu;
    std::vector<CirclePoint> circle;
};

// Block-diagonal O(n) curve: rot_pairs coordinate pairs carrying plane
// rotations, then the lambda blocks, then fixed coordinates.  The lambda
// values must be pairwise distinct.
RationalCurve make_orthogonal_quadratic(int n, int rot_pairs,
                                        const std::vector<OrthogonalBlock>& blocks);

// O(n,1) curve rotating 2r spatial coordinates by an O(2r) degree-two curve
// whose A1 is invertible; the remaining coordinates are fixed.
RationalCurve make_lorentz_rotation(int n, int r, const RationalCurve& rotating);

// O(n,1) null rotation: a shear along an isotropic direction spanned by the
// last coordinates, an optional O(2r) rotating block, and a unit vector y of
// length n - 2r - 2.  Requires 2r <= n - 3.  `rotating` may be null.
RationalCurve make_lorentz_null_rotation(int n, const RationalCurve* rotating,
                                         const std::vector<Scalar>& y);

// ---------------------------------------------------------------------------
// O(n,2) families.

// P (first ⊕ second) P^T where first lives on O(m,1), second on O(n-m,1) and
// P is the permutation aligning the split signature with diag(I_n, -I_2).
RationalCurve make_split_pair(int n, int m, const RationalCurve& first,
                              const RationalCurve& second);

// Direct sum of an O(n) curve and an O(2) curve acting on the negative plane.
RationalCurve make_compact_pair(int n, const RationalCurve& spatial,
                                const RationalCurve& plane);

// Rotation coupling the negative plane to one positive plane through the tail
//   [[0, l, a, b], [-l, 0, db, -da], [a, db, 0, dl], [b, -da, -dl, 0]] / (t^2+1)
// added off the diagonal, with a^2 + b^2 = l^2 and d = +-1.  `spatial` is an
// optional O(n-2) curve on the untouched coordinates.
RationalCurve make_coupled_rotation(int n, const RationalCurve* spatial,
                                    const Scalar& l, const Scalar& a, const Scalar& b,
                                    int d);

// Nilpotent chain through one isotropic direction: an optional O(2r) rotating
// block, m coupling coordinates with a unit weight vector w, and a
// length-four tail.  Requires n = 2r + m + 2 and m >= 1.
RationalCurve make_null_chain(int n, const RationalCurve* rotating,
                              const std::vector<Scalar>& w);

// Two coupled nilpotent chains with coupling vectors x, y of length m >= 0
// and scalars z1, z2 subject to x.y = 0, x.x = y.y = 1 - z2^2 (for m = 0 this
// forces z2 = +-1).  Requires n = 2r + m + 4.
RationalCurve make_double_null_chain(int n, const RationalCurve* rotating,
                                     const std::vector<Scalar>& x,
                                     const std::vector<Scalar>& y,
                                     const Scalar& z1, const Scalar& z2);

// Mixed rotation with off-circle eigenvalues: tail with diagonal
// t^2 + 1 - b^2/2 over t^2 + 1, b > 2, and x^2 + y^2 = b^2 (b^2/4 - 1).
RationalCurve make_hyperbolic_rotation(int n, const RationalCurve* spatial,
                                       const Scalar& b, const Scalar& x, const Scalar& y);

// Shear by t + a along a pair of isotropic directions.
RationalCurve make_parabolic_shear(int n, const RationalCurve* spatial, const Scalar& a);

}  // namespace curvefactor
