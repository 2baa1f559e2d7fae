#include "curvefactor/sylvester.hpp"

#include <algorithm>

namespace curvefactor {

Mat jordan_block(int n, const FieldElem& lambda) {
    Mat j(n, n, lambda.tag());
    for (int i = 0; i < n; ++i) {
        j.at(i, i) = lambda;
        if (i + 1 < n) j.at(i + 1, i) = FieldElem::one(lambda.tag());
    }
    return j;
}

Mat jordan_block(int n, const Scalar& lambda, FieldTag tag) {
    return jordan_block(n, FieldElem(tag, lambda));
}

Mat block_jordan(int m, const Mat& seed) {
    if (!seed.is_square()) throw internal_error("block seed must be square");
    const int k = seed.rows();
    Mat j(m * k, m * k, seed.tag());
    const Mat eye = Mat::identity(k, seed.tag());
    for (int i = 0; i < m; ++i) {
        j.insert_block(i * k, i * k, seed);
        if (i + 1 < m) j.insert_block((i + 1) * k, i * k, eye);
    }
    return j;
}

Mat exchange_matrix(int n, FieldTag tag) {
    Mat h(n, n, tag);
    for (int i = 0; i < n; ++i) h.at(i, n - 1 - i) = FieldElem::one(tag);
    return h;
}

namespace {

// Component layout of the vectorized unknown: entry (i, j), component k of Y
// lands at ((i * n + j) * comps + k).
Mat unvectorize(const std::vector<Scalar>& v, int m, int n, FieldTag tag) {
    const int comps = components(tag);
    Mat y(m, n, tag);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < comps; ++k) y.at(i, j)[k] = v[std::size_t((i * n + j) * comps + k)];
    return y;
}

}  // namespace

SylvesterSolution sylvester_nullspace(const Mat& x1, const Mat& x2, const Mat& c) {
    if (!x1.is_square() || !x2.is_square()) throw internal_error("sylvester coefficients must be square");
    const int m = x1.rows(), n = x2.rows();
    if (c.rows() != m || c.cols() != n) throw internal_error("sylvester right-hand side shape mismatch");
    if (x1.tag() != c.tag() || x2.tag() != c.tag()) throw internal_error("mixed field tags in sylvester system");

    const FieldTag tag = c.tag();
    const int comps = components(tag);
    const std::size_t dim = std::size_t(m) * n * comps;

    // One column of the system per unknown component: push a basis matrix
    // through Y -> X1 Y + Y X2 and record where its components land.
    std::vector<std::vector<Scalar>> a(dim, std::vector<Scalar>(dim));
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < n; ++q)
            for (int k = 0; k < comps; ++k) {
                const std::size_t col = std::size_t((p * n + q) * comps + k);
                const FieldElem unit = FieldElem::unit(tag, k);
                for (int i = 0; i < m; ++i) {
                    // X1 E_{pq} contributes to row block (i, q).
                    const FieldElem lhs = x1.at(i, p) * unit;
                    for (int r = 0; r < comps; ++r) a[std::size_t((i * n + q) * comps + r)][col] += lhs[r];
                }
                for (int j = 0; j < n; ++j) {
                    // E_{pq} X2 contributes to row block (p, j).
                    const FieldElem rhs = unit * x2.at(q, j);
                    for (int r = 0; r < comps; ++r) a[std::size_t((p * n + j) * comps + r)][col] += rhs[r];
                }
            }

    std::vector<Scalar> b(dim);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < comps; ++k) b[std::size_t((i * n + j) * comps + k)] = c.at(i, j)[k];

    LinearSolution lin = solve_linear(a, std::move(b), true);
    if (!lin.consistent) {
        // The affine set is empty but the homogeneous part is still wanted.
        LinearSolution hom = solve_linear(std::move(a), std::vector<Scalar>(dim), true);
        lin.nullspace = std::move(hom.nullspace);
    }

    SylvesterSolution out;
    out.consistent = lin.consistent;
    if (lin.consistent) out.particular = unvectorize(lin.particular, m, n, tag);
    out.basis.reserve(lin.nullspace.size());
    for (const auto& v : lin.nullspace) out.basis.push_back(unvectorize(v, m, n, tag));
    return out;
}

namespace {

bool lower_pattern(const Mat& y, bool alternate, int cell) {
    const int m = y.rows() / cell, n = y.cols() / cell;
    if (y.rows() % cell != 0 || y.cols() % cell != 0) return false;
    const int shift = std::max(0, m - n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const Mat b = y.block(i * cell, j * cell, cell, cell);
            if (i - j < shift) {
                if (!b.is_zero()) return false;
            } else if (i + 1 < m && j + 1 < n) {
                const Mat next = y.block((i + 1) * cell, (j + 1) * cell, cell, cell);
                if (next != (alternate ? -b : b)) return false;
            }
        }
    return true;
}

bool symmetric_traceless_blocks(const Mat& y) {
    if (y.rows() % 2 != 0 || y.cols() % 2 != 0) return false;
    for (int i = 0; i + 1 < y.rows(); i += 2)
        for (int j = 0; j + 1 < y.cols(); j += 2) {
            if (y.at(i + 1, j) != y.at(i, j + 1)) return false;
            if (y.at(i + 1, j + 1) != -y.at(i, j)) return false;
        }
    return true;
}

}  // namespace

bool toeplitz_structure_check(const Mat& y, ToeplitzKind kind) {
    switch (kind) {
        case ToeplitzKind::LowerAlternating: return lower_pattern(y, true, 1);
        case ToeplitzKind::Lower: return lower_pattern(y, false, 1);
        case ToeplitzKind::BlockLowerAlternating: return lower_pattern(y, true, 2);
        case ToeplitzKind::BlockSymmetricTraceless: return symmetric_traceless_blocks(y);
    }
    throw internal_error("unknown pattern kind");
}

}  // namespace curvefactor
