#pragma once

#include <vector>

#include "curvefactor/field.hpp"

namespace curvefactor {

enum class Involution { Transpose, ConjTranspose };

// Dense matrix over R, C or H.  Row-major, value semantics.  All entries share
// one field tag; arithmetic across tags is an internal error.
class Mat {
  public:
    Mat() : rows_(0), cols_(0), tag_(FieldTag::Real) {}
    Mat(int rows, int cols, FieldTag tag);

    static Mat identity(int n, FieldTag tag);
    static Mat zero(int rows, int cols, FieldTag tag) { return Mat(rows, cols, tag); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldTag tag() const { return tag_; }
    bool is_square() const { return rows_ == cols_; }

    FieldElem& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const FieldElem& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    // Convenience for real/complex writes.
    void set(int i, int j, Scalar re) { at(i, j) = FieldElem(tag_, std::move(re)); }
    void set(int i, int j, Scalar re, Scalar im) { at(i, j) = FieldElem(tag_, std::move(re), std::move(im)); }

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator-() const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);

    Mat& scale(const Scalar& s);
    friend Mat operator*(const Scalar& s, Mat m) { return m.scale(s); }

    Mat transpose() const;
    Mat conj() const;
    Mat conj_transpose() const { return conj().transpose(); }
    Mat star(Involution s) const { return s == Involution::Transpose ? transpose() : conj_transpose(); }

    // Places b's top-left corner at (i0, j0); overwrites.
    void insert_block(int i0, int j0, const Mat& b);
    Mat block(int i0, int j0, int rows, int cols) const;

    friend std::ostream& operator<<(std::ostream& os, const Mat& m);

  private:
    int rows_, cols_;
    FieldTag tag_;
    std::vector<FieldElem> e_;

    void check_shape(const Mat& o) const;
};

// diag(a, b): block-diagonal stacking.
Mat direct_sum(const Mat& a, const Mat& b);

}  // namespace curvefactor
