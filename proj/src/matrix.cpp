#include "curvefactor/matrix.hpp"

#include <ostream>

namespace curvefactor {

Mat::Mat(int rows, int cols, FieldTag tag)
    : rows_(rows), cols_(cols), tag_(tag), e_(std::size_t(rows) * cols, FieldElem(tag)) {
    if (rows < 0 || cols < 0) throw internal_error("negative matrix dimension");
}

Mat Mat::identity(int n, FieldTag tag) {
    Mat m(n, n, tag);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElem(tag, Scalar(1));
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || tag_ != o.tag_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!(e_[k] == o.e_[k])) return false;
    return true;
}

void Mat::check_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix shape mismatch");
    if (tag_ != o.tag_) throw internal_error("mixed field tags in matrix arithmetic");
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    check_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    check_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw internal_error("matrix product shape mismatch");
    if (a.tag_ != b.tag_) throw internal_error("mixed field tags in matrix product");
    Mat r(a.rows_, b.cols_, a.tag_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const FieldElem& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const FieldElem& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Mat& Mat::scale(const Scalar& s) {
    for (auto& x : e_) x.scale(s);
    return *this;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_, tag_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::conj() const {
    Mat r = *this;
    for (auto& x : r.e_) x = x.conj();
    return r;
}

void Mat::insert_block(int i0, int j0, const Mat& b) {
    if (i0 < 0 || j0 < 0 || i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_)
        throw internal_error("block insert out of range");
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

Mat Mat::block(int i0, int j0, int rows, int cols) const {
    if (i0 < 0 || j0 < 0 || i0 + rows > rows_ || j0 + cols > cols_)
        throw internal_error("block extract out of range");
    Mat r(rows, cols, tag_);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

Mat direct_sum(const Mat& a, const Mat& b) {
    if (a.tag() != b.tag()) throw internal_error("mixed field tags in direct sum");
    Mat r(a.rows() + b.rows(), a.cols() + b.cols(), a.tag());
    r.insert_block(0, 0, a);
    r.insert_block(a.rows(), a.cols(), b);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m.at(i, j);
    }
    return os << "]";
}

}  // namespace curvefactor
