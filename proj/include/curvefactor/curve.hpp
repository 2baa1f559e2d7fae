#pragma once

#include "curvefactor/group.hpp"
#include "curvefactor/poly.hpp"

namespace curvefactor {

// A matrix-valued rational function gamma = M * P(t) / q(t) with value M at
// infinity, P monic (leading coefficient I), q a product of real-rootless
// monic quadratics kept in factored form, and the membership identity
// P B P^sigma = q^2 B holding as an exact polynomial identity.
class RationalCurve {
  public:
    // Validates and normalizes: merges/sorts denominator factors, cancels
    // factors dividing every entry of P, extracts the constant at infinity,
    // and checks the membership identity.  `trusted` skips the identity
    // check in release builds for internally produced numerators.
    static RationalCurve normalize(MatPoly P, std::vector<QuadFactor> denom,
                                   GroupDescriptor group, bool trusted = false);
    static RationalCurve constant_curve(Mat value, GroupDescriptor group);
    static RationalCurve identity(GroupDescriptor group);

    const GroupDescriptor& group() const { return group_; }
    const Mat& at_infinity() const { return constant_; }
    const MatPoly& monic_numerator() const { return monic_; }
    MatPoly full_numerator() const { return constant_ * monic_; }
    const std::vector<QuadFactor>& denominator() const { return denom_; }
    ScalarPoly denominator_poly() const { return expand_denominator(denom_); }

    int degree() const { return denominator_degree(denom_); }
    bool is_constant() const { return denom_.empty(); }
    std::vector<QuadFactor> pole_structure() const { return denom_; }

    Mat evaluate(const Scalar& t) const;

    RationalCurve multiply(const RationalCurve& o) const;
    RationalCurve inverse() const;
    // c gamma c^{-1} for a member c of the same group.
    RationalCurve conjugated(const Mat& c) const;
    // t -> x + y t with y != 0.
    RationalCurve reparametrized(const Scalar& x, const Scalar& y) const;

    bool operator==(const RationalCurve& o) const;
    bool operator!=(const RationalCurve& o) const { return !(*this == o); }

  private:
    RationalCurve(GroupDescriptor g, Mat constant, MatPoly monic, std::vector<QuadFactor> denom)
        : group_(std::move(g)), constant_(std::move(constant)), monic_(std::move(monic)),
          denom_(std::move(denom)) {}

    GroupDescriptor group_;
    Mat constant_;
    MatPoly monic_;
    std::vector<QuadFactor> denom_;
};

}  // namespace curvefactor
