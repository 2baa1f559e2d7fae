#include "curvefactor/embed.hpp"

namespace curvefactor {

namespace {

struct BlockEntry {
    int comp;
    int sign;
};

// 4x4 pattern of component blocks for the quaternion embedding; comp indexes
// the 1,i,j,k components.
constexpr BlockEntry kQuatPattern[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, -1}, {0, 1}, {3, -1}, {2, 1}},
    {{2, -1}, {3, 1}, {0, 1}, {1, -1}},
    {{3, -1}, {2, -1}, {1, 1}, {0, 1}},
};

constexpr BlockEntry kComplexPattern[2][2] = {
    {{0, 1}, {1, 1}},
    {{1, -1}, {0, 1}},
};

}  // namespace

Mat realify(const Mat& m) {
    if (m.tag() == FieldTag::Real) return m;
    const int n = m.rows(), nc = m.cols();
    const int blocks = components(m.tag()) == 2 ? 2 : 4;
    Mat r(blocks * n, blocks * nc, FieldTag::Real);
    for (int bi = 0; bi < blocks; ++bi)
        for (int bj = 0; bj < blocks; ++bj) {
            BlockEntry e = blocks == 2 ? kComplexPattern[bi][bj] : kQuatPattern[bi][bj];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < nc; ++j) {
                    Scalar v = m.at(i, j)[e.comp];
                    if (e.sign < 0) v = -v;
                    r.set(bi * n + i, bj * nc + j, std::move(v));
                }
        }
    return r;
}

MatPoly realify(const MatPoly& p) {
    if (p.tag() == FieldTag::Real) return p;
    const int blocks = components(p.tag()) == 2 ? 2 : 4;
    MatPoly r(blocks * p.n(), FieldTag::Real);
    for (int k = 0; k <= p.degree(); ++k) r.set_coeff(k, realify(p.coeff(k)));
    return r;
}

Mat unrealify(const Mat& m, FieldTag tag) {
    if (tag == FieldTag::Real) return m;
    const int blocks = components(tag) == 2 ? 2 : 4;
    if (m.tag() != FieldTag::Real || m.rows() % blocks || m.cols() % blocks)
        throw internal_error("matrix is not an embedded image");
    const int n = m.rows() / blocks, nc = m.cols() / blocks;
    Mat out(n, nc, tag);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < nc; ++j) {
            FieldElem x(tag);
            for (int c = 0; c < blocks; ++c) x[c] = m.at(i, c * nc + j).real();
            out.at(i, j) = x;
        }
    if (realify(out) != m) throw internal_error("matrix is not an embedded image");
    return out;
}

}  // namespace curvefactor
