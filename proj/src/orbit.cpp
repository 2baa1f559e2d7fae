#include "curvefactor/orbit.hpp"

#include <utility>

namespace curvefactor {
namespace {

RatMat apply_affine_factor(const AffineCurve& f, const RatMat& point) {
    return ratmat_add(curve_apply(f.rotational, point), f.translational);
}

// Distinct pole pairs appearing anywhere in the factor.
std::vector<QuadFactor> factor_poles(const AffineCurve& f) {
    std::vector<QuadFactor> ps = f.rotational.denominator();
    ps.insert(ps.end(), f.translational.den.begin(), f.translational.den.end());
    return merge_factors(std::move(ps));
}

ScalarPoly column_entry(const RatMat& x, std::size_t i) {
    std::vector<Scalar> c;
    for (const Mat& m : x.num) c.push_back(m.at(int(i), 0)[0]);
    return ScalarPoly(std::move(c));
}

}  // namespace

OrbitSpec make_linear_orbit_spec(std::vector<RationalCurve> factors, Mat base_point) {
    if (factors.empty()) throw constraint_error("orbit needs at least one factor");
    for (const RationalCurve& f : factors)
        if (!f.group().same_group(factors[0].group()))
            throw constraint_error("orbit factors lie on different groups");
    if (base_point.rows() != factors[0].group().n() ||
        base_point.tag() != factors[0].group().field())
        throw constraint_error("base point does not match the group action");
    OrbitSpec spec;
    spec.action = ActionKind::Linear;
    spec.base_point = std::move(base_point);
    spec.linear = std::move(factors);
    return spec;
}

OrbitSpec make_affine_orbit_spec(std::vector<AffineCurve> factors, Mat base_point,
                                 std::vector<Mat> shifts) {
    if (factors.empty()) throw constraint_error("orbit needs at least one factor");
    for (const AffineCurve& f : factors)
        if (!f.group.linear().same_group(factors[0].group.linear()))
            throw constraint_error("orbit factors lie on different groups");
    if (base_point.rows() != factors[0].dim() || base_point.cols() != 1 ||
        base_point.tag() != factors[0].group.linear().field())
        throw constraint_error("base point does not match the group action");
    if (!shifts.empty() && shifts.size() != factors.size())
        throw constraint_error("one shift per factor, or none");
    for (const Mat& s : shifts)
        if (s.rows() != base_point.rows() || s.cols() != 1 || s.tag() != base_point.tag())
            throw constraint_error("shift dimension mismatch");
    OrbitSpec spec;
    spec.action = ActionKind::Affine;
    spec.base_point = std::move(base_point);
    spec.affine = std::move(factors);
    spec.shifts = std::move(shifts);
    return spec;
}

RatMat orbit_curve(const OrbitSpec& spec) {
    RatMat point = ratmat_constant(spec.base_point);
    if (spec.action == ActionKind::Linear) {
        for (std::size_t j = spec.linear.size(); j-- > 0;)
            point = curve_apply(spec.linear[j], point);
        return point;
    }
    for (std::size_t j = spec.affine.size(); j-- > 0;) {
        if (!spec.shifts.empty()) point = ratmat_add(point, ratmat_constant(spec.shifts[j]));
        point = apply_affine_factor(spec.affine[j], point);
    }
    return point;
}

AffineCurve lift_translation_section(const RatMat& x) {
    if (x.cols != 1 || x.tag != FieldTag::Real)
        throw constraint_error("translation section lifts real columns only");
    return make_affine_curve(special_euclidean_group(x.rows),
                             RationalCurve::identity(orthogonal_group(x.rows)), x);
}

OrbitSpec make_orbit_spec(const RatMat& x) {
    AffineCurve whole = lift_translation_section(x);  // validates x
    OrbitSpec spec;
    spec.action = ActionKind::Affine;
    spec.base_point = ratmat_eval(x, Scalar(0));
    if (x.den.empty()) return spec;  // constant zero: no factors needed

    std::vector<std::vector<ScalarPoly>> parts(x.den.size());
    for (std::size_t i = 0; i < std::size_t(x.rows); ++i) {
        std::vector<ScalarPoly> split = partial_fractions(column_entry(x, i), x.den);
        for (std::size_t j = 0; j < x.den.size(); ++j) parts[j].push_back(split[j]);
    }
    for (std::size_t j = 0; j < x.den.size(); ++j) {
        int deg = -1;
        for (const ScalarPoly& p : parts[j]) deg = std::max(deg, p.degree());
        std::vector<Mat> num(std::size_t(deg) + 1, Mat::zero(x.rows, 1, FieldTag::Real));
        for (int k = 0; k <= deg; ++k)
            for (int i = 0; i < x.rows; ++i) num[std::size_t(k)].set(i, 0, parts[j][std::size_t(i)].coeff(k));
        RatMat piece = ratmat_normalize(std::move(num), {x.den[j]});
        spec.affine.push_back(lift_translation_section(piece));
        spec.shifts.push_back(-ratmat_eval(piece, Scalar(0)));
    }
    return spec;
}

bool verify_kempe(const RatMat& gamma, const OrbitSpec& spec) {
    try {
        std::vector<QuadFactor> pairs;
        if (spec.action == ActionKind::Linear) {
            for (const RationalCurve& f : spec.linear) {
                if (f.denominator().size() != 1) return false;
                pairs.push_back(f.denominator()[0]);
            }
        } else {
            for (const AffineCurve& f : spec.affine) {
                std::vector<QuadFactor> ps = factor_poles(f);
                if (ps.size() != 1) return false;
                pairs.push_back(ps[0]);
            }
        }
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = i + 1; j < pairs.size(); ++j)
                if (pairs[i].same_roots(pairs[j])) return false;
        return ratmat_equal(orbit_curve(spec), gamma);
    } catch (const error&) {
        return false;
    }
}

}  // namespace curvefactor
