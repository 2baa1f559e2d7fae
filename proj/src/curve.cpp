#include "curvefactor/curve.hpp"

#include "curvefactor/solve.hpp"

namespace curvefactor {

namespace {

bool identity_holds(const MatPoly& monic, const ScalarPoly& q, const GroupDescriptor& g) {
    MatPoly b = MatPoly::constant(g.B());
    return monic * b * monic.star(g.sigma()) == b.scaled(q * q);
}

}  // namespace

RationalCurve RationalCurve::normalize(MatPoly P, std::vector<QuadFactor> denom,
                                       GroupDescriptor group, bool trusted) {
    if (P.n() != group.n() || P.tag() != group.field())
        throw schema_error("numerator shape does not match the group");
    denom = merge_factors(std::move(denom));

    // cancel declared factors dividing every entry
    for (std::size_t k = 0; k < denom.size();) {
        ScalarPoly f = denom[k].poly();
        while (denom[k].s > 0) {
            auto [quot, rem] = MatPoly::divrem(P, f);
            if (!rem.is_zero()) break;
            P = std::move(quot);
            --denom[k].s;
        }
        if (denom[k].s == 0)
            denom.erase(denom.begin() + k);
        else
            ++k;
    }

    int d = denominator_degree(denom);
    if (P.degree() > d) throw membership_error("curve is unbounded at infinity");
    if (P.degree() < d) throw membership_error("leading coefficient is singular");

    Mat constant = P.coeff(d);
    Mat cinv;
    try {
        cinv = mat_inverse(constant);
    } catch (const internal_error&) {
        throw membership_error("leading coefficient is singular");
    }
    MatPoly monic = cinv * P;

#ifdef NDEBUG
    bool check = !trusted;
#else
    bool check = true;
    (void)trusted;
#endif
    if (check) {
        if (!group.is_member(constant))
            throw membership_error("value at infinity is not a group member");
        if (!identity_holds(monic, expand_denominator(denom), group))
            throw membership_error("membership identity fails: not a curve on this group");
    }
    return RationalCurve(std::move(group), std::move(constant), std::move(monic), std::move(denom));
}

RationalCurve RationalCurve::constant_curve(Mat value, GroupDescriptor group) {
    if (!group.is_member(value)) throw membership_error("constant is not a group member");
    MatPoly monic = MatPoly::constant(Mat::identity(group.n(), group.field()));
    return RationalCurve(std::move(group), std::move(value), std::move(monic), {});
}

RationalCurve RationalCurve::identity(GroupDescriptor group) {
    Mat id = Mat::identity(group.n(), group.field());
    return constant_curve(std::move(id), std::move(group));
}

Mat RationalCurve::evaluate(const Scalar& t) const {
    Scalar q(1);
    for (const auto& f : denom_) {
        Scalar v = f.poly().eval(t);
        for (int k = 0; k < f.s; ++k) q *= v;
    }
    Mat v = monic_.eval(t);
    v.scale(q.inv());
    return constant_ * v;
}

RationalCurve RationalCurve::multiply(const RationalCurve& o) const {
    if (!group_.same_group(o.group_)) throw schema_error("curves live on different groups");
    MatPoly num = full_numerator() * o.full_numerator();
    std::vector<QuadFactor> denom = denom_;
    denom.insert(denom.end(), o.denom_.begin(), o.denom_.end());
    return normalize(std::move(num), std::move(denom), group_, true);
}

RationalCurve RationalCurve::inverse() const {
    Mat tail = constant_.star(group_.sigma()) * group_.B_inverse();
    MatPoly num = group_.B() * (monic_.star(group_.sigma()) * tail);
    return normalize(std::move(num), denom_, group_, true);
}

RationalCurve RationalCurve::conjugated(const Mat& c) const {
    if (!group_.is_member(c)) throw constraint_error("conjugator is not a group member");
    MatPoly num = c * full_numerator() * mat_inverse(c);
    return normalize(std::move(num), denom_, group_, true);
}

RationalCurve RationalCurve::reparametrized(const Scalar& x, const Scalar& y) const {
    if (y.is_zero()) throw constraint_error("reparametrization needs a nonzero slope");
    MatPoly num = full_numerator().compose_linear(x, y);
    Scalar yinv2 = (y * y).inv();
    std::vector<QuadFactor> denom;
    Scalar scale(1);
    for (const auto& f : denom_) {
        // (t^2 + p t + r) composed with x + y t, divided by y^2
        Scalar p2 = (Scalar(2) * x + f.p) / y;
        Scalar r2 = (x * x + f.p * x + f.r) * yinv2;
        denom.push_back({p2, r2, f.s});
        for (int k = 0; k < 2 * f.s; ++k) scale *= y;
    }
    num = num.scaled(scale.inv());
    return normalize(std::move(num), std::move(denom), group_, true);
}

bool RationalCurve::operator==(const RationalCurve& o) const {
    return group_.same_group(o.group_) && constant_ == o.constant_ && monic_ == o.monic_ &&
           denom_ == o.denom_;
}

}  // namespace curvefactor
