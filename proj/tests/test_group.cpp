#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvefactor/group.hpp"
#include "curvefactor/solve.hpp"
#include "helpers.hpp"

using namespace curvefactor;

TEST_CASE("named forms") {
    auto o2 = orthogonal_group(2);
    CHECK(o2.B() == Mat::identity(2, FieldTag::Real));
    CHECK(o2.epsilon() == 1);
    CHECK(o2.field() == FieldTag::Real);

    auto sp2 = symplectic_group(2);
    Mat j(2, 2, FieldTag::Real);
    j.set(0, 1, Scalar(1));
    j.set(1, 0, Scalar(-1));
    CHECK(sp2.B() == j);
    CHECK(sp2.epsilon() == -1);

    auto o21 = indefinite_orthogonal_group(2, 1);
    CHECK(o21.B().at(2, 2).real() == Scalar(-1));
    CHECK(o21.B().at(0, 0).real() == Scalar(1));
    CHECK(o21.epsilon() == 1);

    CHECK(unitary_group(3).sigma() == Involution::ConjTranspose);
    CHECK(complex_orthogonal_group(3).sigma() == Involution::Transpose);
    CHECK(quaternion_unitary_group(1, 1).epsilon() == 1);
}

TEST_CASE("construction rejects bad data") {
    CHECK_THROWS_AS(symplectic_group(3), constraint_error);
    // real with conjugate transpose is not a legal pairing
    CHECK_THROWS_AS(custom_group(Mat::identity(2, FieldTag::Real), Involution::ConjTranspose),
                    constraint_error);
    CHECK_THROWS_AS(custom_group(Mat::identity(2, FieldTag::Quaternion), Involution::Transpose),
                    constraint_error);
    // neither symmetric nor antisymmetric
    Mat bad = Mat::identity(2, FieldTag::Real);
    bad.set(0, 1, Scalar(1));
    CHECK_THROWS_AS(custom_group(bad, Involution::Transpose), constraint_error);
    // singular
    Mat sing(2, 2, FieldTag::Real);
    sing.set(0, 0, Scalar(1));
    CHECK_THROWS_AS(custom_group(sing, Involution::Transpose), constraint_error);
}

TEST_CASE("membership") {
    auto o2 = orthogonal_group(2);
    CHECK(o2.is_member(Mat::identity(2, FieldTag::Real)));

    Mat rot(2, 2, FieldTag::Real);  // rational circle point (3/5, 4/5)
    rot.set(0, 0, Scalar(3, 5));
    rot.set(0, 1, Scalar(4, 5));
    rot.set(1, 0, Scalar(-4, 5));
    rot.set(1, 1, Scalar(3, 5));
    CHECK(o2.is_member(rot));

    Mat d22(2, 2, FieldTag::Real);
    d22.set(0, 0, Scalar(2));
    d22.set(1, 1, Scalar(2));
    CHECK(!o2.is_member(d22));

    auto sp2 = symplectic_group(2);
    Mat d(2, 2, FieldTag::Real);
    d.set(0, 0, Scalar(2));
    d.set(1, 1, Scalar(1, 2));
    CHECK(sp2.is_member(d));
    CHECK(!sp2.is_member(rot + d));

    CHECK_THROWS_AS(o2.is_member(Mat::identity(3, FieldTag::Real)), schema_error);
}

TEST_CASE("lie algebra membership and adjoint invariance") {
    auto o2 = orthogonal_group(2);
    CHECK(o2.is_lie_algebra_member(Mat::zero(2, 2, FieldTag::Real)));
    Mat skew(2, 2, FieldTag::Real);
    skew.set(0, 1, Scalar(1));
    skew.set(1, 0, Scalar(-1));
    CHECK(o2.is_lie_algebra_member(skew));
    Mat sym(2, 2, FieldTag::Real);
    sym.set(0, 1, Scalar(1));
    sym.set(1, 0, Scalar(1));
    CHECK(!o2.is_lie_algebra_member(sym));

    // conjugating an algebra element by a member lands in the algebra
    Mat rot(2, 2, FieldTag::Real);
    rot.set(0, 0, Scalar(5, 13));
    rot.set(0, 1, Scalar(12, 13));
    rot.set(1, 0, Scalar(-12, 13));
    rot.set(1, 1, Scalar(5, 13));
    REQUIRE(o2.is_member(rot));
    CHECK(o2.is_lie_algebra_member(rot * skew * mat_inverse(rot)));

    auto sp4 = symplectic_group(4);
    std::mt19937 rng(9);
    // Y in sp(4) iff BY^T + YB = 0; build one from a symmetric S via Y = B S
    Mat s = testutil::rand_mat(rng, 4, FieldTag::Real);
    s = s + s.transpose();
    Mat y = sp4.B() * s;
    CHECK(sp4.is_lie_algebra_member(y));
}

TEST_CASE("inverse law inside the group") {
    auto u2 = unitary_group(2);
    Mat m(2, 2, FieldTag::Complex);  // diag(exp(i theta)) with rational circle point
    m.at(0, 0) = FieldElem(FieldTag::Complex, Scalar(3, 5), Scalar(4, 5));
    m.at(1, 1) = FieldElem(FieldTag::Complex, Scalar(0), Scalar(1));
    REQUIRE(u2.is_member(m));
    // the involution formula for the inverse: B M^sigma B^{-1}
    Mat minv = u2.B() * m.star(u2.sigma()) * u2.B_inverse();
    CHECK(m * minv == Mat::identity(2, FieldTag::Complex));
    CHECK(u2.is_member(minv));
    CHECK(u2.is_member(m * minv));
}

TEST_CASE("affine wrapper") {
    auto se2 = special_euclidean_group(2);
    CHECK(se2.dim() == 2);
    Mat g = Mat::identity(3, FieldTag::Real);
    g.set(0, 2, Scalar(5));
    g.set(1, 2, Scalar(-1, 3));
    CHECK(se2.is_member(g));
    g.set(2, 0, Scalar(1));
    CHECK(!se2.is_member(g));
    Mat bad = Mat::identity(3, FieldTag::Real);
    bad.set(0, 0, Scalar(2));
    CHECK(!se2.is_member(bad));

    auto iso21 = inhomogeneous_orthogonal_group(2, 1);
    CHECK(iso21.linear().B().at(2, 2).real() == Scalar(-1));
    Mat boost = Mat::identity(4, FieldTag::Real);
    // hyperbolic rotation with cosh = 5/4, sinh = 3/4 in coordinates (2,3)
    boost.set(1, 1, Scalar(5, 4));
    boost.set(1, 2, Scalar(3, 4));
    boost.set(2, 1, Scalar(3, 4));
    boost.set(2, 2, Scalar(5, 4));
    boost.set(0, 3, Scalar(7));
    CHECK(iso21.is_member(boost));
}

TEST_CASE("group identity comparison") {
    CHECK(orthogonal_group(2).same_group(indefinite_orthogonal_group(2, 0)));
    CHECK(!orthogonal_group(2).same_group(symplectic_group(2)));
    CHECK(!unitary_group(2).same_group(complex_orthogonal_group(2)));
}
