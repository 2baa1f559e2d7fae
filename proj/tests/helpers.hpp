#pragma once

#include <random>

#include "curvefactor/curve.hpp"
#include "curvefactor/poly.hpp"
#include "curvefactor/solve.hpp"

// Deterministic random data for property tests.
namespace testutil {

using namespace curvefactor;

inline Scalar rand_rational(std::mt19937& rng, int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Scalar(num(rng), (unsigned long)den(rng));
}

inline FieldElem rand_elem(std::mt19937& rng, FieldTag tag, int num_range = 9, int den_range = 4) {
    FieldElem x(tag);
    for (int k = 0; k < components(tag); ++k)
        x = x + rand_rational(rng, num_range, den_range) * FieldElem::unit(tag, k);
    return x;
}

inline Mat rand_mat(std::mt19937& rng, int n, FieldTag tag, int num_range = 9, int den_range = 4) {
    Mat m(n, n, tag);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rand_elem(rng, tag, num_range, den_range);
    return m;
}

inline ScalarPoly rand_poly(std::mt19937& rng, int deg) {
    std::vector<Scalar> c;
    for (int k = 0; k <= deg; ++k) c.push_back(rand_rational(rng));
    return ScalarPoly(std::move(c));
}

inline MatPoly rand_mat_poly(std::mt19937& rng, int n, FieldTag tag, int deg) {
    MatPoly p(n, tag);
    for (int k = 0; k <= deg; ++k) p.set_coeff(k, rand_mat(rng, n, tag));
    return p;
}

// [[t^2-1, 2t], [-2t, t^2-1]] / (t^2+1), the in-plane turn with poles +-i.
inline MatPoly rotation_numerator() {
    Mat c0(2, 2, FieldTag::Real), c1(2, 2, FieldTag::Real);
    c0.set(0, 0, Scalar(-1));
    c0.set(1, 1, Scalar(-1));
    c1.set(0, 1, Scalar(2));
    c1.set(1, 0, Scalar(-2));
    MatPoly p(2, FieldTag::Real);
    p.set_coeff(0, c0);
    p.set_coeff(1, c1);
    p.set_coeff(2, Mat::identity(2, FieldTag::Real));
    return p;
}

inline RationalCurve rotation_curve() {
    return RationalCurve::normalize(rotation_numerator(), {{Scalar(0), Scalar(1), 1}},
                                    orthogonal_group(2));
}

// Rational point on the unit circle from a Pythagorean pair.
inline std::pair<Scalar, Scalar> rand_circle_point(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(1, 6);
    int m = d(rng), n = d(rng) + 6;  // n > m so both legs are positive
    Scalar den(n * n + m * m);
    return {Scalar(2 * m * n) / den, Scalar(n * n - m * m) / den};
}

// Cofactor-expansion determinant; fine for the small commutative matrices in
// tests, unusable over H.
inline FieldElem naive_det(const Mat& m) {
    int n = m.rows();
    if (n == 1) return m.at(0, 0);
    FieldElem sum(m.tag());
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Mat minor(n - 1, n - 1, m.tag());
        for (int i = 1; i < n; ++i)
            for (int k = 0, c = 0; k < n; ++k)
                if (k != j) minor.at(i - 1, c++) = m.at(i, k);
        FieldElem term = m.at(0, j) * naive_det(minor);
        sum = (j % 2 == 0) ? sum + term : sum + Scalar(-1) * term;
    }
    return sum;
}

// Member of the Lie algebra of g: Y = S B^{-1} with S^sigma = -eps S.
inline Mat rand_lie_element(std::mt19937& rng, const GroupDescriptor& g, int num_range = 3) {
    Mat w = rand_mat(rng, g.n(), g.field(), num_range, 3);
    Mat s = g.epsilon() == 1 ? w - w.star(g.sigma()) : w + w.star(g.sigma());
    return s * g.B_inverse();
}

// Cayley transform of a random Lie algebra element; retries until I + Y is
// invertible, so the result is always a group member.
inline Mat rand_group_member(std::mt19937& rng, const GroupDescriptor& g, int num_range = 3) {
    for (;;) {
        Mat y = rand_lie_element(rng, g, num_range);
        Mat ip = Mat::identity(g.n(), g.field()) + y;
        if (!mat_invertible(ip)) continue;
        return (Mat::identity(g.n(), g.field()) - y) * mat_inverse(ip);
    }
}

}  // namespace testutil
