#pragma once

#include <complex>
#include <vector>

#include "curvefactor/quadratic.hpp"

namespace curvefactor {

// Dense complex floating-point matrix, the working type of the numeric
// classifier.  Real data is carried with exactly zero imaginary parts.
struct NumMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> e;

    NumMat() = default;
    NumMat(int r, int c) : rows(r), cols(c), e(std::size_t(r) * std::size_t(c)) {}
    static NumMat identity(int n);

    std::complex<double>& at(int i, int j) { return e[std::size_t(i) * cols + j]; }
    const std::complex<double>& at(int i, int j) const { return e[std::size_t(i) * cols + j]; }

    NumMat adjoint() const;
    friend NumMat operator*(const NumMat& a, const NumMat& b);
    friend NumMat operator-(NumMat a, const NumMat& b);

    double max_abs() const;
    double max_imag() const;
};

// Componentwise conversion; accepts real and complex entries only.
NumMat to_numeric(const Mat& m);

// Default acceptance threshold for reconstruction residuals.
inline constexpr double kClassifyTol = 1e-9;

// Eigenvalues closer than this gap are merged into one cluster when
// multiplicities are read off a spectrum.
inline constexpr double kClusterGap = 1e-6;

// One rotation rate of a skew matrix.  Over R the two senses always balance,
// so plus == minus == number of invariant planes; over C they may differ.
struct SkewLine {
    double lambda;
    int plus;
    int minus;
};

// Spectral normal form A = transform * middle() * transform^*.  The lines are
// sorted by decreasing rate; middle() is the canonical block matrix: paired
// plane blocks lambda [[0, I], [-I, 0]] for real input, i * diag(lambda I_plus,
// -lambda I_minus, ..., 0) for complex input.  transform is orthogonal
// respectively unitary to working precision.
struct SkewNormalForm {
    bool real_form = true;
    std::vector<SkewLine> lines;
    int zero = 0;
    NumMat transform;

    NumMat middle() const;
};

// Requires a^sigma = -a within tol (transpose over R, conjugate transpose
// over C); the eigenproblem itself is solved to working precision.
SkewNormalForm skew_normal_form_numeric(const Mat& a, double tol = kClassifyTol);

// Canonical summands recovered from a degree-two curve.  Unitary data: rate a
// in (0, 2], mult coordinate pairs per rate.  Orthogonal data: rate lambda in
// (0, 2), mult coordinate quadruples per rate, one circle point (h, g) with
// h^2 + g^2 = 1 per quadruple, plus rot_pairs coordinate pairs turning at the
// full rate 2.
struct UnitaryClassBlock {
    double a;
    int mult;
};

struct NumCircle {
    double h;
    double g;
};

struct OrthogonalClassBlock {
    double lambda;
    int mult;
    std::vector<NumCircle> circle;
};

struct ClassificationRecord {
    FieldTag field = FieldTag::Real;  // Real: orthogonal data, Complex: unitary data
    int n = 0;
    int rot_pairs = 0;
    std::vector<UnitaryClassBlock> unitary;
    std::vector<OrthogonalClassBlock> orthogonal;
    NumMat conjugator;
    double residual = 0.0;
};

// Block matrices described by a record, in the layout of the exact canonical
// constructors: full-rate pairs first, then rate blocks in record order, then
// fixed coordinates.
NumMat canonical_a1(const ClassificationRecord& rec);
NumMat canonical_a0(const ClassificationRecord& rec);

// Spectral classification of a degree-two curve on O(n) or U(n) with pole
// pair +-i.  The record satisfies, within tol in the max norm,
//   A1 = conjugator * canonical_a1 * conjugator^*   (and likewise A0);
// residual reports the error actually achieved.  Throws membership_error when
// the residual cannot be brought under tol, which covers curves off the group
// to working precision and spectra too degenerate for the block layout.
ClassificationRecord classify_quadratic_numeric(const RationalCurve& curve,
                                                double tol = kClassifyTol);

}  // namespace curvefactor
