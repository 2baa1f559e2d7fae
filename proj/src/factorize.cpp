#include "curvefactor/factorize.hpp"

#include <utility>

#include "curvefactor/solve.hpp"

namespace curvefactor {

namespace {

// Shifted remainders S_j = (t^j P) mod f, j = 0..count-1, each of degree
// strictly below deg f.
std::vector<MatPoly> shifted_remainders(const MatPoly& p, const ScalarPoly& f, int count) {
    std::vector<MatPoly> s;
    s.reserve(std::size_t(count));
    MatPoly cur = MatPoly::divrem(p, f).second;
    for (int j = 0; j < count; ++j) {
        s.push_back(cur);
        cur = MatPoly::divrem(cur.scaled(ScalarPoly::t()), f).second;
    }
    return s;
}

}  // namespace

ReductionStep degree_reduce(const RationalCurve& curve, const QuadFactor& pole) {
    const GroupDescriptor& g = curve.group();
    const int n = g.n();
    const FieldTag tag = g.field();
    if (curve.at_infinity() != Mat::identity(n, tag))
        throw constraint_error("degree reduction needs the identity at infinity");
    pole.validate();

    int available = 0;
    for (const QuadFactor& f : curve.denominator())
        if (f.same_roots(pole)) available = f.s;
    if (pole.s > available) throw constraint_error("requested factor is not a pole of the curve");
    const int s = pole.s;

    const ScalarPoly fpow = QuadFactor{pole.p, pole.r, 2 * s}.poly_pow();
    const MatPoly& p = curve.monic_numerator();
    const std::vector<MatPoly> shifts = shifted_remainders(p, fpow, 2 * s + 1);

    // The divisibility condition f^{2s} | A P splits by rows of A: row u of
    // every coefficient A_j meets only row u of the product.  Unknowns per
    // row: the 2s lower coefficients; the leading one is pinned to I.
    const int comps = components(tag);
    const int cols = 2 * s * n * comps;       // unknown components in one row
    const int rows = 4 * s * n * comps;       // polynomial identity, columnwise
    std::vector<Mat> coeffs(std::size_t(2 * s), Mat::zero(n, n, tag));

    for (int u = 0; u < n; ++u) {
        std::vector<std::vector<Scalar>> a(static_cast<std::size_t>(rows),
                                           std::vector<Scalar>(static_cast<std::size_t>(cols)));
        std::vector<Scalar> b(static_cast<std::size_t>(rows));
        for (int j = 0; j < 2 * s; ++j)
            for (int k = 0; k < n; ++k)
                for (int c = 0; c < comps; ++c) {
                    const int col = (j * n + k) * comps + c;
                    const FieldElem unit = FieldElem::unit(tag, c);
                    for (int m = 0; m <= shifts[std::size_t(j)].degree(); ++m) {
                        const Mat sm = shifts[std::size_t(j)].coeff(m);
                        for (int v = 0; v < n; ++v) {
                            const FieldElem contrib = unit * sm.at(k, v);
                            for (int rc = 0; rc < comps; ++rc)
                                a[std::size_t((v * 4 * s + m) * comps + rc)][std::size_t(col)] += contrib[rc];
                        }
                    }
                }
        const MatPoly& lead = shifts[std::size_t(2 * s)];
        for (int m = 0; m <= lead.degree(); ++m) {
            const Mat lm = lead.coeff(m);
            for (int v = 0; v < n; ++v) {
                const FieldElem& e = lm.at(u, v);
                for (int rc = 0; rc < comps; ++rc) b[std::size_t((v * 4 * s + m) * comps + rc)] = -e[rc];
            }
        }

        const LinearSolution sol = solve_linear(std::move(a), std::move(b));
        if (!sol.consistent)
            throw membership_error("pole admits no degree drop with a unit leading coefficient");
        for (int j = 0; j < 2 * s; ++j)
            for (int k = 0; k < n; ++k) {
                FieldElem& e = coeffs[std::size_t(j)].at(u, k);
                for (int c = 0; c < comps; ++c) e[c] = sol.particular[std::size_t((j * n + k) * comps + c)];
            }
    }

    MatPoly a_poly(n, tag);
    for (int j = 0; j < 2 * s; ++j) a_poly.set_coeff(j, coeffs[std::size_t(j)]);
    a_poly.set_coeff(2 * s, Mat::identity(n, tag));

    const MatPoly b_poly = MatPoly::constant(g.B());
    if (a_poly * b_poly * a_poly.star(g.sigma()) != b_poly.scaled(fpow))
        throw membership_error("degree drop candidate is not a curve on the group");

    ReductionStep step{
        RationalCurve::normalize(a_poly, {QuadFactor{pole.p, pole.r, s}}, g, true),
        RationalCurve::identity(g)};
    if (step.alpha.degree() != 2 * s) throw internal_error("reduction factor has unexpected degree");
    step.remainder = step.alpha.multiply(curve);
    if (step.remainder.degree() != curve.degree() - 2 * s)
        throw internal_error("reduction did not cancel the pole exactly");
    for (const QuadFactor& f : step.remainder.denominator())
        if (f.same_roots(pole)) throw internal_error("reduction left part of the pole behind");
    return step;
}

ReductionStep degree_reduce_embedded(const RationalCurve& curve, const QuadFactor& pole) {
    if (curve.group().field() == FieldTag::Real)
        throw constraint_error("embedded reduction expects a complex or quaternionic curve");
    return degree_reduce(curve, pole);
}

RationalCurve Factorization::reassembled(const GroupDescriptor& group) const {
    RationalCurve acc = RationalCurve::constant_curve(constant, group);
    for (const RationalCurve& f : factors) acc = acc.multiply(f);
    return acc;
}

Factorization decompose(const RationalCurve& curve) {
    Factorization out;
    out.constant = curve.at_infinity();
    RationalCurve work =
        RationalCurve::normalize(curve.monic_numerator(), curve.denominator(), curve.group(), true);
    while (!work.is_constant()) {
        const QuadFactor f = work.pole_structure().front();
        ReductionStep step = degree_reduce(work, f);
        out.factors.push_back(step.alpha.inverse());
        out.certificates.push_back(f);
        work = std::move(step.remainder);
    }
    if (work.at_infinity() != Mat::identity(curve.group().n(), curve.group().field()))
        throw internal_error("peeling finished on a nonidentity constant");
    return out;
}

}  // namespace curvefactor
