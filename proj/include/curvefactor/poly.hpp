#pragma once

#include <utility>
#include <vector>

#include "curvefactor/matrix.hpp"

namespace curvefactor {

// Univariate polynomial over Scalar, coefficients ascending.  Trailing zeros
// trimmed; the zero polynomial has an empty coefficient list and degree -1.
class ScalarPoly {
  public:
    ScalarPoly() = default;
    explicit ScalarPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ScalarPoly constant(Scalar v);
    static ScalarPoly t();

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    Scalar coeff(int k) const;
    const Scalar& leading() const;

    bool operator==(const ScalarPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ScalarPoly& o) const { return !(*this == o); }

    ScalarPoly operator-() const;
    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    ScalarPoly& operator+=(const ScalarPoly& o) { return *this = *this + o; }
    ScalarPoly& operator*=(const ScalarPoly& o) { return *this = *this * o; }
    ScalarPoly scaled(const Scalar& s) const;

    Scalar eval(const Scalar& t) const;
    ScalarPoly pow(int e) const;
    // p(x + y t)
    ScalarPoly compose_linear(const Scalar& x, const Scalar& y) const;

    // a = q*b + r with deg r < deg b; b nonzero.
    static std::pair<ScalarPoly, ScalarPoly> divrem(const ScalarPoly& a, const ScalarPoly& b);
    // Monic gcd; gcd(0,0) = 0.
    static ScalarPoly gcd(ScalarPoly a, ScalarPoly b);
    // (g, u, v) with u*a + v*b = g, g the monic gcd.
    static std::array<ScalarPoly, 3> ext_gcd(const ScalarPoly& a, const ScalarPoly& b);

    friend std::ostream& operator<<(std::ostream& os, const ScalarPoly& p);

  private:
    std::vector<Scalar> c_;
    void trim();
};

// (t^2 + p t + r)^s with p^2 - 4r < 0, so the roots are a conjugate pair off
// the real axis.
struct QuadFactor {
    Scalar p, r;
    int s = 1;

    void validate() const;
    bool same_roots(const QuadFactor& o) const { return p == o.p && r == o.r; }
    bool operator==(const QuadFactor& o) const { return same_roots(o) && s == o.s; }
    bool operator!=(const QuadFactor& o) const { return !(*this == o); }
    ScalarPoly poly() const;       // t^2 + p t + r
    ScalarPoly poly_pow() const;   // (t^2 + p t + r)^s
    // Roots are a +- b i with a = -p/2, b = sqrt(r - p^2/4); returns (a, b)
    // when b lies in the scalar field, else throws constraint_error.
    std::pair<Scalar, Scalar> pole_pair() const;
};

bool quadfactor_less(const QuadFactor& a, const QuadFactor& b);
// Sorts lexicographically by (p, r), merges equal-root entries by adding
// multiplicities, validates each factor.
std::vector<QuadFactor> merge_factors(std::vector<QuadFactor> fs);
ScalarPoly expand_denominator(const std::vector<QuadFactor>& fs);
int denominator_degree(const std::vector<QuadFactor>& fs);

// Splits num / prod f_j^{s_j} into sum u_j / f_j^{s_j} (deg num < deg denom,
// factors pairwise distinct).  Returns the u_j in input order.
std::vector<ScalarPoly> partial_fractions(const ScalarPoly& num, const std::vector<QuadFactor>& denom);

// Square-matrix-coefficient polynomial, coefficients ascending, trailing zero
// matrices trimmed.  All coefficients share dimension and field tag.
class MatPoly {
  public:
    MatPoly(int n, FieldTag tag) : n_(n), tag_(tag) {}
    static MatPoly constant(Mat m);
    static MatPoly from_coeffs(std::vector<Mat> coeffs);

    int n() const { return n_; }
    FieldTag tag() const { return tag_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Mat coeff(int k) const;
    const Mat& leading() const;
    void set_coeff(int k, Mat m);

    bool operator==(const MatPoly& o) const;
    bool operator!=(const MatPoly& o) const { return !(*this == o); }

    MatPoly operator-() const;
    friend MatPoly operator+(const MatPoly& a, const MatPoly& b);
    friend MatPoly operator-(const MatPoly& a, const MatPoly& b);
    friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
    friend MatPoly operator*(const Mat& a, const MatPoly& b);
    friend MatPoly operator*(const MatPoly& a, const Mat& b);
    MatPoly scaled(const Scalar& s) const;
    MatPoly scaled(const ScalarPoly& s) const;

    Mat eval(const Scalar& t) const;
    // Coefficient-wise transpose / conjugate transpose; the variable is real
    // so it is untouched.
    MatPoly star(Involution inv) const;
    MatPoly compose_linear(const Scalar& x, const Scalar& y) const;

    // A = q*f + r, f a nonzero scalar polynomial with invertible leading
    // coefficient (monic in all uses here); deg r < deg f.
    static std::pair<MatPoly, MatPoly> divrem(const MatPoly& a, const ScalarPoly& f);
    bool divisible_by(const ScalarPoly& f) const;

    friend std::ostream& operator<<(std::ostream& os, const MatPoly& p);

  private:
    int n_;
    FieldTag tag_;
    std::vector<Mat> c_;
    void trim();
    void check_compat(const MatPoly& o) const;
};

}  // namespace curvefactor
