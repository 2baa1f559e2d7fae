#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "curvefactor/quadratic.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace curvefactor;
using testutil::rand_group_member;
using testutil::rand_mat;
using testutil::rotation_curve;

namespace {

Scalar q(long num, long den) { return Scalar(num, (unsigned long)den); }

ScalarPoly sp(std::vector<Scalar> c) { return ScalarPoly(std::move(c)); }

// Real matrix of polynomial entries, rows listed top to bottom.
MatPoly from_rows(const std::vector<std::vector<ScalarPoly>>& rows) {
    int n = int(rows.size());
    int deg = 0;
    for (const auto& row : rows)
        for (const auto& e : row) deg = std::max(deg, e.degree());
    std::vector<Mat> cs(deg + 1, Mat::zero(n, n, FieldTag::Real));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k <= rows[i][j].degree(); ++k) cs[k].set(i, j, rows[i][j].coeff(k));
    return MatPoly::from_coeffs(std::move(cs));
}

Mat turn_a0() {
    Mat m = Mat::identity(2, FieldTag::Real);
    return Scalar(-1) * m;
}

Mat turn_a1() {
    Mat m(2, 2, FieldTag::Real);
    m.set(0, 1, Scalar(2));
    m.set(1, 0, Scalar(-2));
    return m;
}

// A0, A1 of the one-block U(2) family with (a, b) = (6/5, 24/25).
std::pair<Mat, Mat> unitary_block_data() {
    Mat a0(2, 2, FieldTag::Complex), a1(2, 2, FieldTag::Complex);
    a0.set(0, 0, q(7, 25));
    a0.set(1, 1, q(7, 25));
    a0.set(0, 1, q(24, 25));
    a0.set(1, 0, q(-24, 25));
    a1.set(0, 0, Scalar(0), q(6, 5));
    a1.set(1, 1, Scalar(0), q(-6, 5));
    return {a0, a1};
}

bool constructs(const QuadraticData& d) {
    try {
        quadratic_curve(d);
        return true;
    } catch (const membership_error&) {
        return false;
    }
}

RationalCurve conformal_rotation() {
    ScalarPoly den2 = sp({Scalar(1), Scalar(0), Scalar(1)});
    MatPoly num = from_rows({
        {sp({Scalar(-1), Scalar(0), Scalar(1)}), sp({Scalar(0), q(-5, 2)}), sp({Scalar(0), q(-3, 2)})},
        {sp({Scalar(0), q(5, 2)}), sp({q(-17, 8), Scalar(0), Scalar(1)}), sp({q(-15, 8)})},
        {sp({Scalar(0), q(-3, 2)}), sp({q(15, 8)}), sp({q(17, 8), Scalar(0), Scalar(1)})},
    });
    return RationalCurve::normalize(std::move(num), {{Scalar(0), Scalar(1), 1}},
                                    indefinite_orthogonal_group(2, 1));
}

}  // namespace

TEST_CASE("four relations on hand data") {
    GroupDescriptor g = orthogonal_group(2);
    Mat id = Mat::identity(2, FieldTag::Real);
    Mat zero = Mat::zero(2, 2, FieldTag::Real);

    auto r = check_quadratic_relations(id, zero, g);
    CHECK(r.all());

    r = check_quadratic_relations(turn_a0(), turn_a1(), g);
    CHECK(r.all());

    Mat upper(2, 2, FieldTag::Real);
    upper.set(0, 1, Scalar(1));
    r = check_quadratic_relations(id, upper, g);
    CHECK_FALSE(r.skew);
    CHECK(r.shift);
    CHECK(r.twist);
    CHECK(r.involution);

    r = check_quadratic_relations(id, turn_a1(), g);
    CHECK(r.skew);
    CHECK_FALSE(r.shift);
    CHECK(r.twist);
    CHECK(r.involution);

    auto [ua0, ua1] = unitary_block_data();
    CHECK(check_quadratic_relations(ua0, ua1, unitary_group(2)).all());
}

TEST_CASE("quadratic curve from data and back") {
    QuadraticData d{orthogonal_group(2), turn_a0(), turn_a1(), Scalar(0), Scalar(1)};
    RationalCurve c = quadratic_curve(d);
    CHECK(c == rotation_curve());

    QuadraticData back = extract_quadratic(c);
    CHECK(back.a0 == d.a0);
    CHECK(back.a1 == d.a1);
    CHECK(back.center == d.center);
    CHECK(back.radius == d.radius);

    // Pole pair 1 +- 2i; matches the reparametrized plane turn.
    QuadraticData d2{orthogonal_group(2), turn_a0(), turn_a1(), Scalar(1), Scalar(2)};
    RationalCurve c2 = quadratic_curve(d2);
    CHECK(c2.denominator() == std::vector<QuadFactor>{{Scalar(-2), Scalar(5), 1}});
    CHECK(c2.evaluate(Scalar(1)) == turn_a0());
    CHECK(c2 == rotation_curve().reparametrized(q(-1, 2), q(1, 2)));
    QuadraticData back2 = extract_quadratic(c2);
    CHECK(back2.center == Scalar(1));
    CHECK(back2.radius == Scalar(2));
    CHECK(back2.a0 == d2.a0);
    CHECK(back2.a1 == d2.a1);

    CHECK_THROWS_AS(quadratic_curve({orthogonal_group(2), turn_a0(), turn_a1(), Scalar(0), Scalar(0)}),
                    constraint_error);
    CHECK_THROWS_AS(quadratic_curve({orthogonal_group(2), Mat::identity(2, FieldTag::Real),
                                     turn_a1(), Scalar(0), Scalar(1)}),
                    membership_error);
    CHECK_THROWS_AS(extract_quadratic(RationalCurve::identity(orthogonal_group(2))),
                    constraint_error);

    // Non-identity value at infinity is out of scope for the (A0, A1) form.
    Mat flip(2, 2, FieldTag::Real);
    flip.set(0, 1, Scalar(1));
    flip.set(1, 0, Scalar(1));
    RationalCurve shifted = RationalCurve::constant_curve(flip, orthogonal_group(2)).multiply(c);
    CHECK_THROWS_AS(extract_quadratic(shifted), constraint_error);
}

TEST_CASE("relations hold exactly for member curves") {
    std::mt19937 rng(2024);
    std::vector<QuadraticData> members;
    members.push_back({orthogonal_group(2), turn_a0(), turn_a1(), Scalar(0), Scalar(1)});
    auto [ua0, ua1] = unitary_block_data();
    members.push_back({unitary_group(2), ua0, ua1, Scalar(0), Scalar(1)});
    // The unitary turn carried to Sp(2, R): A1 = 2J is a multiple of B.
    members.push_back({symplectic_group(2), turn_a0(), turn_a1(), Scalar(0), Scalar(1)});
    members.push_back(extract_quadratic(make_lorentz_rotation(2, 1, rotation_curve())));

    int positives = 0, negatives = 0;
    for (int i = 0; i < 60; ++i) {
        const QuadraticData& base = members[i % members.size()];
        const GroupDescriptor& g = base.group;
        if (i % 2 == 0) {
            Mat r = rand_group_member(rng, g);
            QuadraticData moved{g, r * base.a0 * mat_inverse(r), r * base.a1 * mat_inverse(r),
                                Scalar(0), Scalar(1)};
            CHECK(check_quadratic_relations(moved.a0, moved.a1, g).all());
            CHECK(constructs(moved));
            ++positives;
        } else {
            Mat a0 = rand_mat(rng, g.n(), g.field(), 3, 2);
            Mat a1 = rand_mat(rng, g.n(), g.field(), 3, 2);
            bool relations = check_quadratic_relations(a0, a1, g).all();
            CHECK(relations == constructs({g, a0, a1, Scalar(0), Scalar(1)}));
            if (!relations) ++negatives;
        }
    }
    CHECK(positives == 30);
    CHECK(negatives >= 25);
}

TEST_CASE("relations survive change of basis and scaling of B") {
    std::mt19937 rng(77);
    std::vector<QuadraticData> members;
    members.push_back({orthogonal_group(2), turn_a0(), turn_a1(), Scalar(0), Scalar(1)});
    auto [ua0, ua1] = unitary_block_data();
    members.push_back({unitary_group(2), ua0, ua1, Scalar(0), Scalar(1)});
    members.push_back({symplectic_group(2), turn_a0(), turn_a1(), Scalar(0), Scalar(1)});
    members.push_back(extract_quadratic(make_lorentz_rotation(2, 1, rotation_curve())));

    for (const auto& base : members) {
        const GroupDescriptor& g = base.group;
        for (int i = 0; i < 5; ++i) {
            Mat r(0, 0, g.field());
            do {
                r = rand_mat(rng, g.n(), g.field(), 3, 2);
            } while (!mat_invertible(r));
            Scalar c = testutil::rand_rational(rng, 5, 3);
            if (c.is_zero()) c = Scalar(2);
            Mat b2 = c * (r * g.B() * r.star(g.sigma()));
            GroupDescriptor moved = custom_group(b2, g.sigma());
            Mat rinv = mat_inverse(r);
            CHECK(check_quadratic_relations(r * base.a0 * rinv, r * base.a1 * rinv, moved).all());
        }
    }
}

TEST_CASE("unitary family") {
    RationalCurve u5 = make_unitary_quadratic(
        5, {{1, q(6, 5), q(24, 25)}, {1, q(10, 13), q(120, 169)}});
    CHECK(u5.degree() == 2);
    CHECK(u5.denominator() == std::vector<QuadFactor>{{Scalar(0), Scalar(1), 1}});
    CHECK(u5.at_infinity() == Mat::identity(5, FieldTag::Complex));

    // The numerator determinant is (t^2 + 1)^5, so the curve lands in SU(5).
    MatPoly num = u5.full_numerator();
    for (long tv = -5; tv <= 5; ++tv) {
        Scalar t(tv);
        Scalar expect(1);
        for (int k = 0; k < 5; ++k) expect *= t * t + Scalar(1);
        CHECK(testutil::naive_det(num.eval(t)) == FieldElem(FieldTag::Complex, expect));
    }

    // a = 2 sits on the boundary and forces b = 0.
    RationalCurve u2 = make_unitary_quadratic(2, {{1, Scalar(2), Scalar(0)}});
    CHECK(u2.evaluate(Scalar(0)) == Scalar(-1) * Mat::identity(2, FieldTag::Complex));

    CHECK_THROWS_AS(make_unitary_quadratic(2, {{1, Scalar(3), Scalar(1)}}), constraint_error);
    CHECK_THROWS_AS(make_unitary_quadratic(2, {{1, q(6, 5), Scalar(1)}}), constraint_error);
    CHECK_THROWS_AS(make_unitary_quadratic(4, {{1, q(6, 5), q(24, 25)}, {1, q(6, 5), q(-24, 25)}}),
                    constraint_error);
    CHECK_THROWS_AS(make_unitary_quadratic(3, {{1, q(6, 5), q(24, 25)}, {1, q(10, 13), q(120, 169)}}),
                    constraint_error);
}

TEST_CASE("orthogonal family") {
    CHECK(make_orthogonal_quadratic(2, 1, {}) == rotation_curve());

    RationalCurve o9 = make_orthogonal_quadratic(9, 1, {{1, q(6, 5), q(24, 25), {{q(3, 5), q(4, 5)}}}});
    CHECK(o9.degree() == 2);
    CHECK(o9.at_infinity() == Mat::identity(9, FieldTag::Real));

    RationalCurve o8 = make_orthogonal_quadratic(
        8, 0,
        {{1, q(6, 5), q(24, 25), {{Scalar(1), Scalar(0)}}},
         {1, q(10, 13), q(120, 169), {{q(3, 5), q(4, 5)}}}});
    CHECK(o8.degree() == 2);

    // lambda = 2 belongs to the rotation block, not a lambda block.
    CHECK_THROWS_AS(make_orthogonal_quadratic(4, 0, {{1, Scalar(2), Scalar(0), {{Scalar(1), Scalar(0)}}}}),
                    constraint_error);
    CHECK_THROWS_AS(make_orthogonal_quadratic(4, 0, {{1, q(6, 5), q(24, 25), {}}}), constraint_error);
    CHECK_THROWS_AS(make_orthogonal_quadratic(4, 0, {{1, q(6, 5), q(24, 25), {{Scalar(1), Scalar(1)}}}}),
                    constraint_error);
    CHECK_THROWS_AS(make_orthogonal_quadratic(4, 0, {{1, q(6, 5), Scalar(1), {{Scalar(1), Scalar(0)}}}}),
                    constraint_error);
    CHECK_THROWS_AS(make_orthogonal_quadratic(
                        7, 0,
                        {{1, q(6, 5), q(24, 25), {{Scalar(1), Scalar(0)}}},
                         {1, q(10, 13), q(120, 169), {{q(3, 5), q(4, 5)}}}}),
                    constraint_error);
    CHECK_THROWS_AS(make_orthogonal_quadratic(2, 0, {}), constraint_error);
}

TEST_CASE("lorentz rotation and the conformal golden pair") {
    RationalCurve lr = make_lorentz_rotation(2, 1, rotation_curve());
    Mat at0(3, 3, FieldTag::Real);
    at0.set(0, 0, Scalar(-1));
    at0.set(1, 1, Scalar(-1));
    at0.set(2, 2, Scalar(1));
    CHECK(lr.evaluate(Scalar(0)) == at0);

    Mat p(3, 3, FieldTag::Real);
    p.set(0, 1, Scalar(-1));
    p.set(1, 0, q(-5, 4));
    p.set(1, 2, q(-3, 4));
    p.set(2, 0, q(3, 4));
    p.set(2, 2, q(5, 4));
    CHECK(lr.conjugated(p) == conformal_rotation());

    CHECK_THROWS_AS(make_lorentz_rotation(2, 1, RationalCurve::identity(orthogonal_group(2))),
                    constraint_error);
    // A1 of rank 2 is not invertible inside O(4).
    RationalCurve partial = make_orthogonal_quadratic(4, 1, {});
    CHECK_THROWS_AS(make_lorentz_rotation(4, 2, partial), constraint_error);
}

TEST_CASE("null rotation and the circular translation golden pair") {
    RationalCurve nr = make_lorentz_null_rotation(3, nullptr, {Scalar(1)});
    CHECK(nr.degree() == 2);

    Scalar s34(mpq_class(0), mpq_class(-3, 4), 2);  // -3 sqrt(2) / 4
    Scalar s14(mpq_class(0), mpq_class(-1, 4), 2);
    Mat p(4, 4, FieldTag::Real);
    p.set(0, 1, Scalar(1));
    p.set(1, 0, Scalar(1));
    p.set(2, 2, s34);
    p.set(2, 3, s14);
    p.set(3, 2, s14);
    p.set(3, 3, s34);

    MatPoly lhs_num = from_rows({
        {sp({Scalar(1), Scalar(0), Scalar(1)}), sp({}), sp({Scalar(0), Scalar(1)}), sp({Scalar(0), Scalar(-1)})},
        {sp({}), sp({Scalar(1), Scalar(0), Scalar(1)}), sp({Scalar(-1)}), sp({Scalar(1)})},
        {sp({Scalar(0), Scalar(-1)}), sp({Scalar(1)}), sp({q(1, 2), Scalar(0), Scalar(1)}), sp({q(1, 2)})},
        {sp({Scalar(0), Scalar(-1)}), sp({Scalar(1)}), sp({q(-1, 2)}), sp({q(3, 2), Scalar(0), Scalar(1)})},
    });
    RationalCurve lhs = RationalCurve::normalize(std::move(lhs_num), {{Scalar(0), Scalar(1), 1}},
                                                 indefinite_orthogonal_group(3, 1));

    RationalCurve moved = nr.conjugated(p);
    CHECK(moved != lhs);
    CHECK(moved.reparametrized(Scalar(0), Scalar(-1)) == lhs);

    RationalCurve rot = rotation_curve();
    CHECK(make_lorentz_null_rotation(6, &rot, {q(3, 5), q(4, 5)}).degree() == 2);

    CHECK_THROWS_AS(make_lorentz_null_rotation(3, nullptr, {q(1, 2)}), constraint_error);
    CHECK_THROWS_AS(make_lorentz_null_rotation(3, nullptr, {Scalar(1), Scalar(0)}), constraint_error);
    CHECK_THROWS_AS(make_lorentz_null_rotation(4, &rot, {}), constraint_error);
}

TEST_CASE("split and compact pairs") {
    Mat boost(2, 2, FieldTag::Real);
    boost.set(0, 0, q(5, 4));
    boost.set(0, 1, q(3, 4));
    boost.set(1, 0, q(3, 4));
    boost.set(1, 1, q(5, 4));
    RationalCurve boost_curve =
        RationalCurve::constant_curve(boost, indefinite_orthogonal_group(1, 1));

    Mat refl(2, 2, FieldTag::Real);
    refl.set(0, 0, Scalar(1));
    refl.set(1, 1, Scalar(-1));
    RationalCurve refl_curve = RationalCurve::constant_curve(refl, indefinite_orthogonal_group(1, 1));

    RationalCurve conf = conformal_rotation();
    CHECK(make_split_pair(3, 2, conf, refl_curve).degree() == 2);
    CHECK(make_split_pair(3, 1, boost_curve, conf).degree() == 2);

    RationalCurve rot = rotation_curve();
    RationalCurve pair = make_compact_pair(2, rot, rot);
    MatPoly expect(4, FieldTag::Real);
    for (int k = 0; k <= 2; ++k)
        expect.set_coeff(k, direct_sum(rot.full_numerator().coeff(k), rot.full_numerator().coeff(k)));
    CHECK(pair == RationalCurve::normalize(std::move(expect), {{Scalar(0), Scalar(1), 1}},
                                           indefinite_orthogonal_group(2, 2)));

    CHECK_THROWS_AS(make_compact_pair(2, conf, rot), constraint_error);
}

TEST_CASE("coupled rotation tails") {
    RationalCurve rot = rotation_curve();
    CHECK(make_coupled_rotation(4, &rot, Scalar(5), Scalar(3), Scalar(4), 1).degree() == 2);
    CHECK(make_coupled_rotation(4, &rot, Scalar(5), Scalar(3), Scalar(4), -1).degree() == 2);
    CHECK(make_coupled_rotation(2, nullptr, q(13, 4), q(5, 4), Scalar(3), 1).degree() == 2);

    // Entry-level pin for n=2, orientation -1.
    MatPoly expect = from_rows({
        {sp({Scalar(1), Scalar(0), Scalar(1)}), sp({Scalar(5)}), sp({Scalar(3)}), sp({Scalar(4)})},
        {sp({Scalar(-5)}), sp({Scalar(1), Scalar(0), Scalar(1)}), sp({Scalar(-4)}), sp({Scalar(3)})},
        {sp({Scalar(3)}), sp({Scalar(-4)}), sp({Scalar(1), Scalar(0), Scalar(1)}), sp({Scalar(-5)})},
        {sp({Scalar(4)}), sp({Scalar(3)}), sp({Scalar(5)}), sp({Scalar(1), Scalar(0), Scalar(1)})},
    });
    RationalCurve direct = RationalCurve::normalize(std::move(expect), {{Scalar(0), Scalar(1), 1}},
                                                    indefinite_orthogonal_group(2, 2));
    CHECK(make_coupled_rotation(2, nullptr, Scalar(5), Scalar(3), Scalar(4), -1) == direct);

    CHECK_THROWS_AS(make_coupled_rotation(2, nullptr, Scalar(5), Scalar(3), Scalar(3), 1),
                    constraint_error);
    CHECK_THROWS_AS(make_coupled_rotation(2, nullptr, Scalar(5), Scalar(3), Scalar(4), 0),
                    constraint_error);
}

TEST_CASE("hyperbolic rotation tails") {
    RationalCurve hyp = make_hyperbolic_rotation(2, nullptr, q(5, 2), q(15, 8), Scalar(0));
    ScalarPoly dd = sp({q(-17, 8), Scalar(0), Scalar(1)});  // t^2 + (2 - b^2)/2
    MatPoly expect = from_rows({
        {dd, sp({Scalar(0), q(5, 2)}), sp({q(15, 8)}), sp({})},
        {sp({Scalar(0), q(-5, 2)}), dd, sp({}), sp({q(-15, 8)})},
        {sp({q(15, 8)}), sp({}), dd, sp({Scalar(0), q(5, 2)})},
        {sp({}), sp({q(-15, 8)}), sp({Scalar(0), q(-5, 2)}), dd},
    });
    CHECK(hyp == RationalCurve::normalize(std::move(expect), {{Scalar(0), Scalar(1), 1}},
                                          indefinite_orthogonal_group(2, 2)));

    RationalCurve rot = rotation_curve();
    CHECK(make_hyperbolic_rotation(4, &rot, q(5, 2), q(3, 2), q(9, 8)).degree() == 2);

    CHECK_THROWS_AS(make_hyperbolic_rotation(2, nullptr, Scalar(2), Scalar(0), Scalar(0)),
                    constraint_error);
    CHECK_THROWS_AS(make_hyperbolic_rotation(2, nullptr, q(5, 2), Scalar(1), Scalar(1)),
                    constraint_error);
}

TEST_CASE("null chains") {
    RationalCurve rot = rotation_curve();
    CHECK(make_null_chain(5, &rot, {Scalar(1)}).degree() == 2);
    CHECK(make_null_chain(3, nullptr, {Scalar(1)}).degree() == 2);
    CHECK(make_null_chain(4, nullptr, {q(3, 5), q(4, 5)}).degree() == 2);

    CHECK_THROWS_AS(make_null_chain(2, nullptr, {}), constraint_error);
    CHECK_THROWS_AS(make_null_chain(4, nullptr, {Scalar(1), Scalar(1)}), constraint_error);
    CHECK_THROWS_AS(make_null_chain(4, nullptr, {Scalar(1)}), constraint_error);
}

TEST_CASE("double null chains") {
    RationalCurve rot = rotation_curve();
    CHECK(make_double_null_chain(8, &rot, {q(4, 5), Scalar(0)}, {Scalar(0), q(4, 5)}, q(7, 3), q(3, 5))
              .degree() == 2);
    CHECK(make_double_null_chain(6, nullptr, {q(4, 5), Scalar(0)}, {Scalar(0), q(4, 5)}, q(7, 3), q(3, 5))
              .degree() == 2);
    // m = 1 forces z2 = +-1 through the norm constraints.
    CHECK(make_double_null_chain(5, nullptr, {Scalar(0)}, {Scalar(0)}, q(7, 3), Scalar(1)).degree() == 2);
    // m = 0 keeps only the two chains.
    CHECK(make_double_null_chain(4, nullptr, {}, {}, q(7, 3), Scalar(-1)).degree() == 2);

    CHECK_THROWS_AS(
        make_double_null_chain(6, nullptr, {q(4, 5), Scalar(0)}, {q(4, 5), Scalar(0)}, q(7, 3), q(3, 5)),
        constraint_error);
    CHECK_THROWS_AS(
        make_double_null_chain(6, nullptr, {Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, q(7, 3), q(3, 5)),
        constraint_error);
    CHECK_THROWS_AS(make_double_null_chain(4, nullptr, {}, {}, q(7, 3), q(3, 5)), constraint_error);
    CHECK_THROWS_AS(
        make_double_null_chain(7, nullptr, {q(4, 5), Scalar(0)}, {Scalar(0), q(4, 5)}, q(7, 3), q(3, 5)),
        constraint_error);
}

TEST_CASE("parabolic shears") {
    RationalCurve ps = make_parabolic_shear(2, nullptr, q(3, 7));
    CHECK(ps.degree() == 2);

    // Compare the value at t = 0 against the conjugated inner shear.
    Scalar h(mpq_class(0), mpq_class(1, 2), 2);
    Mat q4(4, 4, FieldTag::Real);
    q4.set(0, 1, -h);
    q4.set(0, 2, -h);
    q4.set(1, 0, h);
    q4.set(1, 3, h);
    q4.set(2, 1, -h);
    q4.set(2, 2, h);
    q4.set(3, 0, h);
    q4.set(3, 3, -h);
    Mat inner = Mat::identity(4, FieldTag::Real);
    inner.set(1, 0, q(3, 7));
    inner.set(2, 3, q(-3, 7));
    CHECK(ps.evaluate(Scalar(0)) == q4.transpose() * inner * q4);

    RationalCurve rot = rotation_curve();
    CHECK(make_parabolic_shear(4, &rot, Scalar(0)).degree() == 2);
}
