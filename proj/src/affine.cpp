#include "curvefactor/affine.hpp"

#include <utility>

namespace curvefactor {
namespace {

void trim_coeffs(std::vector<Mat>& num) {
    while (!num.empty() && num.back().is_zero()) num.pop_back();
}

// a = q * f + r with f monic scalar; returns q and leaves r in a.
std::vector<Mat> divrem_monic(std::vector<Mat>& a, const ScalarPoly& f) {
    int df = f.degree();
    std::vector<Mat> q;
    if (int(a.size()) - 1 < df) return q;
    q.assign(a.size() - std::size_t(df), Mat());
    for (int k = int(a.size()) - 1; k >= df; --k) {
        Mat c = a[std::size_t(k)];
        q[std::size_t(k - df)] = c;
        for (int i = 0; i <= df; ++i) a[std::size_t(k - df + i)] -= f.coeff(i) * c;
    }
    a.resize(std::size_t(df));
    trim_coeffs(a);
    return q;
}

bool all_zero(const std::vector<Mat>& a) {
    for (const Mat& m : a)
        if (!m.is_zero()) return false;
    return true;
}

std::vector<Mat> scale_coeffs(const std::vector<Mat>& a, const ScalarPoly& f) {
    if (a.empty() || f.is_zero()) return {};
    std::vector<Mat> out(a.size() + std::size_t(f.degree()),
                         Mat::zero(a[0].rows(), a[0].cols(), a[0].tag()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j <= f.degree(); ++j) out[i + std::size_t(j)] += f.coeff(j) * a[i];
    trim_coeffs(out);
    return out;
}

// Union with per-root maximum multiplicity.
std::vector<QuadFactor> lcm_factors(const std::vector<QuadFactor>& a,
                                    const std::vector<QuadFactor>& b) {
    std::vector<QuadFactor> out = a;
    for (const QuadFactor& f : b) {
        bool found = false;
        for (QuadFactor& g : out)
            if (g.same_roots(f)) {
                if (f.s > g.s) g.s = f.s;
                found = true;
            }
        if (!found) out.push_back(f);
    }
    return merge_factors(std::move(out));
}

// Expanded product of the part of `full` missing from `have`.
ScalarPoly complement_poly(const std::vector<QuadFactor>& full,
                           const std::vector<QuadFactor>& have) {
    ScalarPoly out = ScalarPoly::constant(Scalar(1));
    for (const QuadFactor& f : full) {
        int s = f.s;
        for (const QuadFactor& g : have)
            if (g.same_roots(f)) s -= g.s;
        for (int k = 0; k < s; ++k) out *= f.poly();
    }
    return out;
}

}  // namespace

bool RatMat::vanishes_at_infinity() const {
    if (den.empty()) return num.empty();
    return degree() < denominator_degree(den);
}

RatMat ratmat_zero(int rows, int cols, FieldTag tag) {
    RatMat out;
    out.rows = rows;
    out.cols = cols;
    out.tag = tag;
    return out;
}

RatMat ratmat_constant(const Mat& value) {
    RatMat out = ratmat_zero(value.rows(), value.cols(), value.tag());
    if (!value.is_zero()) out.num.push_back(value);
    return out;
}

RatMat ratmat_normalize(std::vector<Mat> num, std::vector<QuadFactor> den) {
    if (num.empty()) throw constraint_error("rational matrix needs at least one coefficient");
    RatMat out = ratmat_zero(num[0].rows(), num[0].cols(), num[0].tag());
    for (const Mat& m : num)
        if (m.rows() != out.rows || m.cols() != out.cols || m.tag() != out.tag)
            throw constraint_error("rational matrix coefficients disagree in shape");
    out.den = merge_factors(std::move(den));
    trim_coeffs(num);
    if (all_zero(num)) {
        out.den.clear();
        return out;
    }
    for (QuadFactor& f : out.den) {
        while (f.s > 0) {
            std::vector<Mat> rem = num;
            std::vector<Mat> q = divrem_monic(rem, f.poly());
            if (!all_zero(rem)) break;
            num = std::move(q);
            --f.s;
        }
    }
    std::erase_if(out.den, [](const QuadFactor& f) { return f.s == 0; });
    out.num = std::move(num);
    return out;
}

Mat ratmat_eval(const RatMat& x, const Scalar& t) {
    Mat acc = Mat::zero(x.rows, x.cols, x.tag);
    for (std::size_t k = x.num.size(); k-- > 0;) {
        acc.scale(t);
        acc += x.num[k];
    }
    Scalar d(1);
    for (const QuadFactor& f : x.den) d = d * f.poly_pow().eval(t);
    acc.scale(d.inv());
    return acc;
}

RatMat ratmat_add(const RatMat& a, const RatMat& b) {
    if (a.rows != b.rows || a.cols != b.cols || a.tag != b.tag)
        throw constraint_error("rational matrix shapes disagree");
    if (a.num.empty()) return b;
    if (b.num.empty()) return a;
    std::vector<QuadFactor> den = lcm_factors(a.den, b.den);
    std::vector<Mat> na = scale_coeffs(a.num, complement_poly(den, a.den));
    std::vector<Mat> nb = scale_coeffs(b.num, complement_poly(den, b.den));
    if (na.size() < nb.size()) na.swap(nb);
    for (std::size_t k = 0; k < nb.size(); ++k) na[k] += nb[k];
    if (all_zero(na)) return ratmat_zero(a.rows, a.cols, a.tag);
    return ratmat_normalize(std::move(na), std::move(den));
}

RatMat ratmat_scale_left(const Mat& m, const RatMat& x) {
    if (m.cols() != x.rows || m.tag() != x.tag)
        throw constraint_error("rational matrix shapes disagree");
    std::vector<Mat> num;
    num.reserve(x.num.size());
    for (const Mat& c : x.num) num.push_back(m * c);
    if (num.empty() || all_zero(num)) return ratmat_zero(m.rows(), x.cols, x.tag);
    return ratmat_normalize(std::move(num), x.den);
}

bool ratmat_equal(const RatMat& a, const RatMat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.tag == b.tag && a.num == b.num &&
           a.den == b.den;
}

RatMat curve_apply(const RationalCurve& gamma, const RatMat& x) {
    if (gamma.group().field() != x.tag || gamma.group().n() != x.rows)
        throw constraint_error("curve and point shapes disagree");
    if (x.num.empty()) return ratmat_zero(x.rows, x.cols, x.tag);
    MatPoly p = gamma.full_numerator();
    std::vector<Mat> num(std::size_t(p.degree() + x.degree()) + 1,
                         Mat::zero(x.rows, x.cols, x.tag));
    for (int i = 0; i <= p.degree(); ++i)
        for (int j = 0; j <= x.degree(); ++j)
            num[std::size_t(i + j)] += p.coeff(i) * x.num[std::size_t(j)];
    std::vector<QuadFactor> den = gamma.denominator();
    den.insert(den.end(), x.den.begin(), x.den.end());
    if (all_zero(num)) return ratmat_zero(x.rows, x.cols, x.tag);
    return ratmat_normalize(std::move(num), std::move(den));
}

AffineCurve make_affine_curve(AffineGroupDescriptor group, RationalCurve rotational,
                              RatMat translational) {
    if (!rotational.group().same_group(group.linear()))
        throw constraint_error("rotational part is on the wrong linear group");
    if (rotational.at_infinity() != Mat::identity(group.dim(), group.linear().field()))
        throw constraint_error("rotational part must be the identity at infinity");
    if (translational.rows != group.dim() || translational.cols != 1 ||
        translational.tag != group.linear().field())
        throw constraint_error("translation dimension mismatch");
    if (!translational.vanishes_at_infinity())
        throw constraint_error("translation must vanish at infinity");
    return AffineCurve{std::move(group), std::move(rotational), std::move(translational)};
}

AffineCurve affine_identity(const AffineGroupDescriptor& group) {
    return AffineCurve{group, RationalCurve::identity(group.linear()),
                       ratmat_zero(group.dim(), 1, group.linear().field())};
}

Mat affine_value(const AffineCurve& g, const Scalar& t) {
    int n = g.dim();
    Mat out = Mat::identity(n + 1, g.group.linear().field());
    out.insert_block(0, 0, g.rotational.evaluate(t));
    out.insert_block(0, n, ratmat_eval(g.translational, t));
    return out;
}

AffineCurve affine_multiply(const AffineCurve& a, const AffineCurve& b) {
    if (!a.group.linear().same_group(b.group.linear()) || a.group.p() != b.group.p() ||
        a.group.q() != b.group.q())
        throw constraint_error("affine curves lie on different groups");
    RationalCurve rot = a.rotational.multiply(b.rotational);
    RatMat trans = ratmat_add(curve_apply(a.rotational, b.translational), a.translational);
    return make_affine_curve(a.group, std::move(rot), std::move(trans));
}

AffineCurve affine_conjugated(const AffineCurve& g, const Mat& c) {
    if (!g.group.is_member(c))
        throw membership_error("conjugator is not a member of the affine group");
    int n = g.dim();
    Mat r = c.block(0, 0, n, n);
    Mat v = c.block(0, n, n, 1);
    RationalCurve rot = g.rotational.conjugated(r);
    RatMat trans = ratmat_add(ratmat_constant(v), curve_apply(rot, ratmat_constant(-v)));
    trans = ratmat_add(trans, ratmat_scale_left(r, g.translational));
    return make_affine_curve(g.group, std::move(rot), std::move(trans));
}

std::pair<AffineCurve, Factorization> iso_split(const AffineCurve& g) {
    AffineCurve translation = make_affine_curve(
        g.group, RationalCurve::identity(g.group.linear()), g.translational);
    return {std::move(translation), decompose(g.rotational)};
}

AffineCurve iso_recombine(const AffineCurve& translation, const Factorization& rotation) {
    RationalCurve rot = rotation.reassembled(translation.group.linear());
    AffineCurve wrapped = make_affine_curve(
        translation.group, std::move(rot),
        ratmat_zero(translation.dim(), 1, translation.group.linear().field()));
    return affine_multiply(translation, wrapped);
}

}  // namespace curvefactor
