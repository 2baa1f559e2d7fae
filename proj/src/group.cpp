#include "curvefactor/group.hpp"

#include "curvefactor/solve.hpp"

namespace curvefactor {

GroupDescriptor::GroupDescriptor(std::string name, std::vector<int> params, Mat B, Involution sigma)
    : name_(std::move(name)), params_(std::move(params)), B_(std::move(B)), sigma_(sigma) {
    if (!B_.is_square() || B_.rows() == 0) throw constraint_error("group form must be square and nonempty");
    if (B_.tag() == FieldTag::Real && sigma_ == Involution::ConjTranspose)
        throw constraint_error("real groups use the plain transpose");
    if (B_.tag() == FieldTag::Quaternion && sigma_ == Involution::Transpose)
        throw constraint_error("quaternion groups use the conjugate transpose");
    Mat bs = B_.star(sigma_);
    if (bs == B_)
        epsilon_ = 1;
    else if (bs == -B_)
        epsilon_ = -1;
    else
        throw constraint_error("group form is neither symmetric nor antisymmetric under the involution");
    try {
        Binv_ = mat_inverse(B_);
    } catch (const internal_error&) {
        throw constraint_error("group form is singular");
    }
}

bool GroupDescriptor::is_member(const Mat& m) const {
    if (m.rows() != n() || m.cols() != n() || m.tag() != field())
        throw schema_error("matrix shape does not match the group");
    return m * B_ * m.star(sigma_) == B_;
}

bool GroupDescriptor::is_lie_algebra_member(const Mat& y) const {
    if (y.rows() != n() || y.cols() != n() || y.tag() != field())
        throw schema_error("matrix shape does not match the group");
    return (B_ * y.star(sigma_) + y * B_).is_zero();
}

bool GroupDescriptor::same_group(const GroupDescriptor& o) const {
    return sigma_ == o.sigma_ && B_ == o.B_;
}

Mat signature_matrix(int p, int q, FieldTag tag) {
    if (p < 0 || q < 0 || p + q == 0) throw constraint_error("signature must be nonnegative and nonzero");
    Mat b = Mat::identity(p + q, tag);
    for (int i = p; i < p + q; ++i) b.at(i, i) = -b.at(i, i);
    return b;
}

GroupDescriptor orthogonal_group(int n) {
    return {"O", {n, 0}, signature_matrix(n, 0, FieldTag::Real), Involution::Transpose};
}

GroupDescriptor indefinite_orthogonal_group(int p, int q) {
    return {"O", {p, q}, signature_matrix(p, q, FieldTag::Real), Involution::Transpose};
}

GroupDescriptor symplectic_group(int dim) {
    if (dim <= 0 || dim % 2) throw constraint_error("symplectic dimension must be even and positive");
    int h = dim / 2;
    Mat b(dim, dim, FieldTag::Real);
    for (int i = 0; i < h; ++i) {
        b.set(i, h + i, Scalar(1));
        b.set(h + i, i, Scalar(-1));
    }
    return {"Sp", {dim}, std::move(b), Involution::Transpose};
}

GroupDescriptor unitary_group(int n) {
    return {"U", {n}, Mat::identity(n, FieldTag::Complex), Involution::ConjTranspose};
}

GroupDescriptor quaternion_unitary_group(int p, int q) {
    return {"SpH", {p, q}, signature_matrix(p, q, FieldTag::Quaternion), Involution::ConjTranspose};
}

GroupDescriptor complex_orthogonal_group(int n) {
    return {"OC", {n}, Mat::identity(n, FieldTag::Complex), Involution::Transpose};
}

GroupDescriptor custom_group(Mat B, Involution sigma) {
    return {"custom", {}, std::move(B), sigma};
}

AffineGroupDescriptor::AffineGroupDescriptor(GroupDescriptor linear, int p, int q)
    : linear_(std::move(linear)), p_(p), q_(q) {
    if (linear_.n() != p + q) throw constraint_error("affine signature does not match the linear part");
    if (linear_.field() != FieldTag::Real) throw constraint_error("affine groups are real");
}

bool AffineGroupDescriptor::is_member(const Mat& m) const {
    int n = dim();
    if (m.rows() != n + 1 || m.cols() != n + 1 || m.tag() != FieldTag::Real)
        throw schema_error("matrix shape does not match the affine group");
    for (int j = 0; j < n; ++j)
        if (!m.at(n, j).is_zero()) return false;
    if (!(m.at(n, n) == FieldElem::one(FieldTag::Real))) return false;
    return linear_.is_member(m.block(0, 0, n, n));
}

AffineGroupDescriptor special_euclidean_group(int n) {
    return {orthogonal_group(n), n, 0};
}

AffineGroupDescriptor inhomogeneous_orthogonal_group(int p, int q) {
    return {indefinite_orthogonal_group(p, q), p, q};
}

}  // namespace curvefactor
