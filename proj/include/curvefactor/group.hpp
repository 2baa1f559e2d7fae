#pragma once

#include <string>
#include <vector>

#include "curvefactor/matrix.hpp"

namespace curvefactor {

// G = { X : X B X^sigma = B } for an invertible B with B^sigma = epsilon B.
// Immutable after construction; B's inverse is computed once and cached.
class GroupDescriptor {
  public:
    GroupDescriptor(std::string name, std::vector<int> params, Mat B, Involution sigma);

    const std::string& name() const { return name_; }
    const std::vector<int>& params() const { return params_; }
    FieldTag field() const { return B_.tag(); }
    Involution sigma() const { return sigma_; }
    const Mat& B() const { return B_; }
    const Mat& B_inverse() const { return Binv_; }
    int epsilon() const { return epsilon_; }
    int n() const { return B_.rows(); }

    bool is_member(const Mat& m) const;
    bool is_lie_algebra_member(const Mat& y) const;

    // Same B, field and involution; the display name does not matter.
    bool same_group(const GroupDescriptor& o) const;

  private:
    std::string name_;
    std::vector<int> params_;
    Mat B_, Binv_;
    Involution sigma_;
    int epsilon_;
};

GroupDescriptor orthogonal_group(int n);                    // B = I_n over R
GroupDescriptor indefinite_orthogonal_group(int p, int q);  // B = diag(I_p, -I_q)
GroupDescriptor symplectic_group(int dim);                  // dim = 2n, B = [[0,I],[-I,0]]
GroupDescriptor unitary_group(int n);                       // B = I_n over C, conj-transpose
GroupDescriptor quaternion_unitary_group(int p, int q);     // B = diag(I_p,-I_q) over H
GroupDescriptor complex_orthogonal_group(int n);            // B = I_n over C, plain transpose
GroupDescriptor custom_group(Mat B, Involution sigma);

// Affine wrapper: members are [[Q, u],[0, 1]] with Q in the linear group.
class AffineGroupDescriptor {
  public:
    AffineGroupDescriptor(GroupDescriptor linear, int p, int q);
    const GroupDescriptor& linear() const { return linear_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int dim() const { return linear_.n(); }
    bool is_member(const Mat& m) const;  // enforces the block shape

  private:
    GroupDescriptor linear_;
    int p_, q_;
};

AffineGroupDescriptor special_euclidean_group(int n);            // SE(n)
AffineGroupDescriptor inhomogeneous_orthogonal_group(int p, int q);

Mat signature_matrix(int p, int q, FieldTag tag);  // diag(I_p, -I_q)

}  // namespace curvefactor
