#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <curvefactor/affine.hpp>
#include <curvefactor/factorize.hpp>
#include <curvefactor/quadratic.hpp>
#include <curvefactor/solve.hpp>

#include <random>
#include <vector>

#include "helpers.hpp"

using namespace curvefactor;

namespace {

QuadFactor qf(long p, long r, int s) { return QuadFactor{Scalar(p), Scalar(r), s}; }

Mat col(std::vector<Scalar> entries) {
    Mat m(int(entries.size()), 1, FieldTag::Real);
    for (int i = 0; i < int(entries.size()); ++i) m.set(i, 0, entries[std::size_t(i)]);
    return m;
}

Mat rand_col(std::mt19937& rng, int n, int range = 4) {
    std::uniform_int_distribution<int> d(-range, range);
    Mat m(n, 1, FieldTag::Real);
    for (int i = 0; i < n; ++i) m.set(i, 0, Scalar(d(rng)));
    return m;
}

// Degree-two orthogonal factor with a randomly moved pole pair, conjugated
// into general position.
RationalCurve rand_rotation_factor(std::mt19937& rng, int n) {
    QuadraticData data = extract_quadratic(make_orthogonal_quadratic(n, 1, {}));
    std::uniform_int_distribution<int> cd(-2, 2), rd(1, 3);
    data.center = Scalar(cd(rng));
    data.radius = Scalar(rd(rng));
    RationalCurve curve = quadratic_curve(data);
    return curve.conjugated(testutil::rand_group_member(rng, data.group));
}

RatMat rand_translation(std::mt19937& rng, int n) {
    static const QuadFactor table[] = {QuadFactor{Scalar(0), Scalar(1), 1},
                                       QuadFactor{Scalar(1), Scalar(1), 1},
                                       QuadFactor{Scalar(0), Scalar(2), 1},
                                       QuadFactor{Scalar(-1), Scalar(3), 1}};
    std::uniform_int_distribution<int> pick(0, 3), count(1, 2), mult(1, 2);
    std::vector<QuadFactor> den;
    int a = pick(rng);
    int b = pick(rng);
    den.push_back(table[a]);
    if (count(rng) == 2 && b != a) den.push_back(table[b]);
    den[0].s = mult(rng);
    int deg = denominator_degree(den);
    std::vector<Mat> num;
    for (int k = 0; k < deg; ++k) num.push_back(rand_col(rng, n));
    return ratmat_normalize(num, den);
}

// Column of the lifted coordinates (x1, x2, (|x|^2-1)/2, (|x|^2+1)/2).
Mat null_lift(const Scalar& x1, const Scalar& x2) {
    Scalar norm = x1 * x1 + x2 * x2;
    return col({x1, x2, (norm - Scalar(1)) / Scalar(2), (norm + Scalar(1)) / Scalar(2)});
}

// Degree-two Lorentz curve whose projective action on the light cone is the
// planar translation by (-t, 1) / (t^2 + 1).
RationalCurve circular_translation() {
    Mat a2 = Mat::identity(4, FieldTag::Real);
    Mat a1(4, 4, FieldTag::Real);
    a1.set(0, 2, Scalar(1));
    a1.set(0, 3, Scalar(-1));
    a1.set(2, 0, Scalar(-1));
    a1.set(3, 0, Scalar(-1));
    Mat a0(4, 4, FieldTag::Real);
    a0.set(0, 0, Scalar(1));
    a0.set(1, 1, Scalar(1));
    a0.set(1, 2, Scalar(-1));
    a0.set(1, 3, Scalar(1));
    a0.set(2, 1, Scalar(1));
    a0.set(2, 2, Scalar(1, 2));
    a0.set(2, 3, Scalar(1, 2));
    a0.set(3, 1, Scalar(1));
    a0.set(3, 2, Scalar(-1, 2));
    a0.set(3, 3, Scalar(3, 2));
    MatPoly num = MatPoly::from_coeffs({a0, a1, a2});
    return RationalCurve::normalize(num, {qf(0, 1, 1)}, indefinite_orthogonal_group(3, 1));
}

}  // namespace

TEST_CASE("rational matrix normalization cancels shared factors") {
    Mat v = col({Scalar(2), Scalar(-3)});
    // (t^2 + 1) v over (t^2 + 1)^2 reduces to v over t^2 + 1.
    std::vector<Mat> num = {v, Mat(2, 1, FieldTag::Real), v};
    RatMat x = ratmat_normalize(num, {qf(0, 1, 2)});
    REQUIRE(x.den.size() == 1);
    CHECK(x.den[0].s == 1);
    CHECK(x.num.size() == 1);
    CHECK(x.num[0] == v);
    CHECK(x.vanishes_at_infinity());

    RatMat zero = ratmat_normalize({Mat(2, 1, FieldTag::Real)}, {qf(0, 1, 1)});
    CHECK(zero.is_constant());
    CHECK(ratmat_equal(zero, ratmat_zero(2, 1, FieldTag::Real)));

    RatMat c = ratmat_constant(v);
    CHECK(c.is_constant());
    CHECK_FALSE(c.vanishes_at_infinity());

    // t^2 - 1 has real roots and is not a valid pole factor.
    CHECK_THROWS_AS(ratmat_normalize({v}, {qf(0, -1, 1)}), factor_error);
}

TEST_CASE("rational matrix arithmetic is exact") {
    RatMat a = ratmat_normalize({col({Scalar(1), Scalar(0)})}, {qf(0, 1, 1)});
    Mat neg = Mat::identity(2, FieldTag::Real).scale(Scalar(-1));
    RatMat diff = ratmat_add(a, ratmat_scale_left(neg, a));
    CHECK(ratmat_equal(diff, ratmat_zero(2, 1, FieldTag::Real)));

    // 1/(t^2+1) + 1/(t^2+2) = (2 t^2 + 3) / ((t^2+1)(t^2+2)).
    RatMat u = ratmat_normalize({col({Scalar(1)})}, {qf(0, 1, 1)});
    RatMat w = ratmat_normalize({col({Scalar(1)})}, {qf(0, 2, 1)});
    RatMat sum = ratmat_add(u, w);
    REQUIRE(sum.den.size() == 2);
    REQUIRE(sum.num.size() == 3);
    CHECK(sum.num[0].at(0, 0).real() == Scalar(3));
    CHECK(sum.num[1].is_zero());
    CHECK(sum.num[2].at(0, 0).real() == Scalar(2));

    Mat at_half = ratmat_eval(a, Scalar(1, 2));
    CHECK(at_half.at(0, 0).real() == Scalar(4, 5));
    CHECK(at_half.at(1, 0).real() == Scalar(0));
}

TEST_CASE("affine product and conjugation act pointwise") {
    std::mt19937 rng(5501);
    AffineGroupDescriptor se2 = special_euclidean_group(2);
    for (int trial = 0; trial < 5; ++trial) {
        AffineCurve a = make_affine_curve(se2, rand_rotation_factor(rng, 2),
                                          rand_translation(rng, 2));
        AffineCurve b = make_affine_curve(se2, rand_rotation_factor(rng, 2),
                                          rand_translation(rng, 2));
        AffineCurve ab = affine_multiply(a, b);
        for (const Scalar& t : {Scalar(0), Scalar(1), Scalar(-2), Scalar(1, 3)}) {
            CHECK(affine_value(ab, t) == affine_value(a, t) * affine_value(b, t));
        }

        Mat r = testutil::rand_group_member(rng, se2.linear());
        Mat c = Mat::identity(3, FieldTag::Real);
        c.insert_block(0, 0, r);
        c.set(0, 2, Scalar(1));
        c.set(1, 2, Scalar(-2));
        REQUIRE(se2.is_member(c));
        AffineCurve conj = affine_conjugated(a, c);
        Mat cinv = mat_inverse(c);
        for (const Scalar& t : {Scalar(0), Scalar(2), Scalar(-1, 2)}) {
            CHECK(affine_value(conj, t) == c * affine_value(a, t) * cinv);
        }
    }
}

TEST_CASE("pure translation splits into itself") {
    AffineGroupDescriptor se2 = special_euclidean_group(2);
    RatMat u = ratmat_normalize({col({Scalar(1), Scalar(0)})}, {qf(0, 1, 1)});
    AffineCurve g = make_affine_curve(se2, RationalCurve::identity(orthogonal_group(2)), u);

    auto [translation, rotation] = iso_split(g);
    CHECK(ratmat_equal(translation.translational, u));
    CHECK(translation.rotational.is_constant());
    CHECK(rotation.factors.empty());
    CHECK(rotation.constant == Mat::identity(2, FieldTag::Real));

    AffineCurve back = iso_recombine(translation, rotation);
    CHECK(back.rotational == g.rotational);
    CHECK(ratmat_equal(back.translational, g.translational));
}

TEST_CASE("pure rotation splits into factors only") {
    AffineGroupDescriptor se2 = special_euclidean_group(2);
    AffineCurve g = make_affine_curve(se2, testutil::rotation_curve(),
                                      ratmat_zero(2, 1, FieldTag::Real));

    auto [translation, rotation] = iso_split(g);
    CHECK(ratmat_equal(translation.translational, ratmat_zero(2, 1, FieldTag::Real)));
    REQUIRE(rotation.factors.size() == 1);
    CHECK(rotation.reassembled(se2.linear()) == g.rotational);

    AffineCurve back = iso_recombine(translation, rotation);
    CHECK(back.rotational == g.rotational);
    CHECK(ratmat_equal(back.translational, g.translational));
}

TEST_CASE("planar curve with rotation and translation splits exactly") {
    AffineGroupDescriptor se2 = special_euclidean_group(2);
    RatMat u = ratmat_normalize({col({Scalar(1), Scalar(0)})}, {qf(0, 1, 1)});
    AffineCurve g = make_affine_curve(se2, testutil::rotation_curve(), u);

    auto [translation, rotation] = iso_split(g);
    CHECK(ratmat_equal(translation.translational, u));
    CHECK(rotation.reassembled(se2.linear()) == g.rotational);

    AffineCurve back = iso_recombine(translation, rotation);
    CHECK(back.rotational == g.rotational);
    CHECK(ratmat_equal(back.translational, g.translational));
    for (const Scalar& t : {Scalar(0), Scalar(1), Scalar(-3)}) {
        CHECK(affine_value(back, t) == affine_value(g, t));
    }
}

TEST_CASE("random affine curves split and recombine exactly") {
    std::mt19937 rng(5502);
    std::uniform_int_distribution<int> dim(2, 4), layers(1, 2), kind(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        int n = dim(rng);
        AffineGroupDescriptor group = special_euclidean_group(n);
        RationalCurve rot = RationalCurve::identity(group.linear());
        if (kind(rng) == 3 && n == 3) {
            // Indefinite signature: plane rotation embedded in ISO(2,1).
            group = inhomogeneous_orthogonal_group(2, 1);
            RationalCurve base = make_lorentz_rotation(2, 1, make_orthogonal_quadratic(2, 1, {}));
            rot = base.conjugated(testutil::rand_group_member(rng, group.linear()));
        } else {
            int k = layers(rng);
            for (int j = 0; j < k; ++j) {
                rot = rot.multiply(rand_rotation_factor(rng, n));
            }
        }
        AffineCurve g = make_affine_curve(group, rot, rand_translation(rng, n));

        auto [translation, rotation] = iso_split(g);
        CHECK(ratmat_equal(translation.translational, g.translational));
        CHECK(translation.rotational.is_constant());

        // One degree-two factor per pole, counted with multiplicity.
        for (const QuadFactor& pole : g.rotational.denominator()) {
            int hits = 0;
            for (const RationalCurve& f : rotation.factors) {
                REQUIRE(f.denominator().size() == 1);
                if (f.denominator()[0].same_roots(pole)) hits += f.denominator()[0].s;
            }
            CHECK(hits == pole.s);
        }

        AffineCurve back = iso_recombine(translation, rotation);
        CHECK(back.rotational == g.rotational);
        CHECK(ratmat_equal(back.translational, g.translational));
        CHECK(affine_value(back, Scalar(1, 3)) == affine_value(g, Scalar(1, 3)));
    }
}

TEST_CASE("circular translation matches its conformal form") {
    RationalCurve alpha = circular_translation();
    // Planar form: x maps to x + (-t, 1) / (t^2 + 1).
    RatMat shift = ratmat_normalize({col({Scalar(0), Scalar(1)}), col({Scalar(-1), Scalar(0)})},
                                    {qf(0, 1, 1)});

    std::vector<std::pair<Scalar, Scalar>> points = {
        {Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}, {Scalar(-1), Scalar(2)},
        {Scalar(1, 2), Scalar(-3)}};
    for (const auto& [x1, x2] : points) {
        for (const Scalar& t : {Scalar(0), Scalar(1), Scalar(-2), Scalar(1, 3)}) {
            Mat lifted = alpha.evaluate(t) * null_lift(x1, x2);
            Scalar chart = lifted.at(3, 0).real() - lifted.at(2, 0).real();
            REQUIRE(chart != Scalar(0));
            Mat moved = ratmat_eval(shift, t);
            CHECK(lifted.at(0, 0).real() / chart == x1 + moved.at(0, 0).real());
            CHECK(lifted.at(1, 0).real() / chart == x2 + moved.at(1, 0).real());
        }
    }
}

TEST_CASE("affine construction rejects malformed data") {
    AffineGroupDescriptor se2 = special_euclidean_group(2);
    RationalCurve rot = testutil::rotation_curve();
    RatMat good = ratmat_normalize({col({Scalar(1), Scalar(0)})}, {qf(0, 1, 1)});

    // Translation height must match the linear part.
    RatMat tall = ratmat_normalize({col({Scalar(1), Scalar(0), Scalar(0)})}, {qf(0, 1, 1)});
    CHECK_THROWS_AS(make_affine_curve(se2, rot, tall), constraint_error);

    // Translations are real columns that vanish at infinity.
    CHECK_THROWS_AS(make_affine_curve(se2, rot, ratmat_constant(col({Scalar(1), Scalar(0)}))),
                    constraint_error);
    RatMat wide = ratmat_normalize({Mat::identity(2, FieldTag::Real)}, {qf(0, 1, 1)});
    CHECK_THROWS_AS(make_affine_curve(se2, rot, wide), constraint_error);

    // Rotational part must live on the declared linear group.
    RationalCurve rot3 = RationalCurve::identity(orthogonal_group(3));
    CHECK_THROWS_AS(make_affine_curve(se2, rot3, good), constraint_error);

    AffineCurve a = make_affine_curve(se2, rot, good);
    AffineCurve b = affine_identity(special_euclidean_group(3));
    CHECK_THROWS_AS(affine_multiply(a, b), constraint_error);

    Mat not_member = Mat::identity(3, FieldTag::Real);
    not_member.set(2, 0, Scalar(1));
    CHECK_THROWS_AS(affine_conjugated(a, not_member), membership_error);
}
