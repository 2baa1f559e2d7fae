#include "curvefactor/solve.hpp"

#include <utility>

namespace curvefactor {

LinearSolution solve_linear(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b,
                            bool want_nullspace) {
    const int rows = int(a.size());
    const int cols = rows ? int(a[0].size()) : 0;
    if (int(b.size()) != rows) throw internal_error("right-hand side length mismatch");
    for (const auto& row : a)
        if (int(row.size()) != cols) throw internal_error("ragged system matrix");

    LinearSolution out;
    std::vector<int> pivot_col;
    Scalar prev(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (!a[i][col].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[rank], a[p]);
        std::swap(b[rank], b[p]);
        const Scalar& piv = a[rank][col];
        for (int i = rank + 1; i < rows; ++i) {
            Scalar factor = a[i][col];
            for (int j = col + 1; j < cols; ++j)
                a[i][j] = (piv * a[i][j] - factor * a[rank][j]) / prev;
            b[i] = (piv * b[i] - factor * b[rank]) / prev;
            a[i][col] = Scalar();
        }
        prev = piv;
        pivot_col.push_back(col);
        ++rank;
    }
    out.rank = rank;

    for (int i = rank; i < rows; ++i)
        if (!b[i].is_zero()) return out;  // inconsistent
    out.consistent = true;

    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;

    auto back_substitute = [&](const std::vector<Scalar>& rhs, std::vector<Scalar> x) {
        for (int k = rank - 1; k >= 0; --k) {
            int pc = pivot_col[k];
            Scalar acc = rhs[k];
            for (int j = pc + 1; j < cols; ++j)
                if (!x[j].is_zero()) acc -= a[k][j] * x[j];
            x[pc] = acc / a[k][pc];
        }
        return x;
    };

    out.particular = back_substitute(b, std::vector<Scalar>(cols));
    if (want_nullspace) {
        std::vector<Scalar> zero_rhs(rows);
        for (int f = 0; f < cols; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Scalar> x(cols);
            x[f] = Scalar(1);
            out.nullspace.push_back(back_substitute(zero_rhs, std::move(x)));
        }
    }
    return out;
}

namespace {

// Row echelon by left-multiplication row operations; returns pivot count.
// When inv is non-null the same operations are applied to an identity block
// and full reduction is performed, producing the two-sided inverse.
int left_eliminate(Mat m, Mat* inv) {
    const int n = m.rows();
    const int cols = m.cols();
    Mat id = inv ? Mat::identity(n, m.tag()) : Mat();
    int rank = 0;
    for (int col = 0; col < cols && rank < n; ++col) {
        int p = -1;
        for (int i = rank; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(p, j));
        if (inv)
            for (int j = 0; j < n; ++j) std::swap(id.at(rank, j), id.at(p, j));
        FieldElem piv_inv = m.at(rank, col).inv();
        for (int j = 0; j < cols; ++j) m.at(rank, j) = piv_inv * m.at(rank, j);
        if (inv)
            for (int j = 0; j < n; ++j) id.at(rank, j) = piv_inv * id.at(rank, j);
        int lo = inv ? 0 : rank + 1;
        for (int i = lo; i < n; ++i) {
            if (i == rank) continue;
            FieldElem f = m.at(i, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
            if (inv)
                for (int j = 0; j < n; ++j) id.at(i, j) -= f * id.at(rank, j);
        }
        ++rank;
    }
    if (inv) *inv = std::move(id);
    return rank;
}

}  // namespace

Mat mat_inverse(const Mat& m) {
    if (!m.is_square()) throw internal_error("inverse of non-square matrix");
    Mat inv;
    if (left_eliminate(m, &inv) < m.rows()) throw internal_error("singular matrix");
    return inv;
}

bool mat_invertible(const Mat& m) {
    return m.is_square() && left_eliminate(m, nullptr) == m.rows();
}

int mat_rank(const Mat& m) { return left_eliminate(m, nullptr); }

}  // namespace curvefactor
