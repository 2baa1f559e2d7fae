#include "curvefactor/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace curvefactor {

namespace {

using Cx = std::complex<double>;
using Col = std::vector<Cx>;

}  // namespace

NumMat NumMat::identity(int n) {
    NumMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cx(1.0);
    return m;
}

NumMat NumMat::adjoint() const {
    NumMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

NumMat operator*(const NumMat& a, const NumMat& b) {
    if (a.cols != b.rows) throw internal_error("numeric matrix shape mismatch");
    NumMat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            Cx x = a.at(i, k);
            if (x == Cx(0.0)) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += x * b.at(k, j);
        }
    return r;
}

NumMat operator-(NumMat a, const NumMat& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw internal_error("numeric matrix shape mismatch");
    for (std::size_t k = 0; k < a.e.size(); ++k) a.e[k] -= b.e[k];
    return a;
}

double NumMat::max_abs() const {
    double m = 0.0;
    for (const Cx& x : e) m = std::max(m, std::abs(x));
    return m;
}

double NumMat::max_imag() const {
    double m = 0.0;
    for (const Cx& x : e) m = std::max(m, std::abs(x.imag()));
    return m;
}

NumMat to_numeric(const Mat& m) {
    if (m.tag() == FieldTag::Quaternion)
        throw constraint_error("numeric backend covers real and complex entries only");
    NumMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const FieldElem& x = m.at(i, j);
            double im = m.tag() == FieldTag::Complex ? x[1].to_double() : 0.0;
            r.at(i, j) = Cx(x[0].to_double(), im);
        }
    return r;
}

namespace {

Cx cdot(const Col& x, const Col& y) {
    Cx s(0.0);
    for (std::size_t k = 0; k < x.size(); ++k) s += std::conj(x[k]) * y[k];
    return s;
}

double cnorm(const Col& x) { return std::sqrt(std::abs(cdot(x, x))); }

void remove_components(Col& c, const std::vector<Col>& basis) {
    for (const Col& b : basis) {
        Cx t = cdot(b, c);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] -= t * b[k];
    }
}

Col matvec(const NumMat& m, const Col& x) {
    Col r(std::size_t(m.rows), Cx(0.0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[std::size_t(i)] += m.at(i, j) * x[std::size_t(j)];
    return r;
}

// Cyclic Jacobi sweeps with complex rotations.  m is overwritten with the
// nearly diagonal result; v accumulates the eigenvector columns.
void jacobi_hermitian(NumMat& m, NumMat& v) {
    int n = m.rows;
    v = NumMat::identity(n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0, scale = 0.0;
        for (int p = 0; p < n; ++p) {
            scale = std::max(scale, std::abs(m.at(p, p)));
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(m.at(p, q)));
        }
        if (off <= 1e-14 * (1.0 + scale)) return;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                Cx b = m.at(p, q);
                double ab = std::abs(b);
                if (ab <= 1e-18 * (1.0 + scale)) {
                    m.at(p, q) = Cx(0.0);
                    m.at(q, p) = Cx(0.0);
                    continue;
                }
                double app = m.at(p, p).real(), aqq = m.at(q, q).real();
                Cx phase = b / ab;
                double tau = (aqq - app) / (2.0 * ab);
                double t = -(tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                Cx sp = s * phase;
                for (int i = 0; i < n; ++i) {
                    Cx xp = m.at(i, p), xq = m.at(i, q);
                    m.at(i, p) = c * xp + std::conj(sp) * xq;
                    m.at(i, q) = -sp * xp + c * xq;
                }
                for (int i = 0; i < n; ++i) {
                    Cx xp = m.at(p, i), xq = m.at(q, i);
                    m.at(p, i) = c * xp + sp * xq;
                    m.at(q, i) = -std::conj(sp) * xp + c * xq;
                }
                m.at(p, q) = Cx(0.0);
                m.at(q, p) = Cx(0.0);
                m.at(p, p) = Cx(m.at(p, p).real());
                m.at(q, q) = Cx(m.at(q, q).real());
                for (int i = 0; i < n; ++i) {
                    Cx xp = v.at(i, p), xq = v.at(i, q);
                    v.at(i, p) = c * xp + std::conj(sp) * xq;
                    v.at(i, q) = -sp * xp + c * xq;
                }
            }
    }
    throw internal_error("eigenvalue iteration failed to settle");
}

struct Spectrum {
    std::vector<double> values;
    NumMat vectors;
};

Spectrum hermitian_eigen(NumMat m) {
    Spectrum s;
    jacobi_hermitian(m, s.vectors);
    s.values.resize(std::size_t(m.rows));
    for (int k = 0; k < m.rows; ++k) s.values[std::size_t(k)] = m.at(k, k).real();
    return s;
}

struct Cluster {
    double mean = 0.0;
    std::vector<int> cols;
};

// Groups values that sit within kClusterGap of their neighbours; clusters are
// returned with strictly decreasing means.
std::vector<Cluster> cluster_descending(const std::vector<double>& values) {
    std::vector<int> order(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) order[k] = int(k);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[std::size_t(a)] > values[std::size_t(b)]; });
    std::vector<Cluster> out;
    for (int idx : order) {
        double v = values[std::size_t(idx)];
        if (out.empty() || values[std::size_t(out.back().cols.back())] - v > kClusterGap) {
            out.push_back({});
        }
        out.back().cols.push_back(idx);
    }
    for (Cluster& c : out) {
        double sum = 0.0;
        for (int idx : c.cols) sum += values[std::size_t(idx)];
        c.mean = sum / double(c.cols.size());
    }
    return out;
}

NumMat cluster_projector(const NumMat& vectors, const std::vector<int>& cols) {
    int n = vectors.rows;
    NumMat p(n, n);
    for (int idx : cols)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                p.at(i, j) += vectors.at(i, idx) * std::conj(vectors.at(j, idx));
    return p;
}

NumMat real_part(const NumMat& m) {
    NumMat r(m.rows, m.cols);
    for (std::size_t k = 0; k < m.e.size(); ++k) r.e[k] = Cx(m.e[k].real());
    return r;
}

Col projector_column(const NumMat& p, int j) {
    Col c(std::size_t(p.rows));
    for (int i = 0; i < p.rows; ++i) c[std::size_t(i)] = p.at(i, j);
    return c;
}

// Deterministic orthonormal basis of the range of a rank-`want` projector:
// coordinate seeds in index order first, largest leftover mass as a fallback.
std::vector<Col> seeded_span(const NumMat& p, int want) {
    std::vector<Col> out;
    for (int j = 0; j < p.cols && int(out.size()) < want; ++j) {
        Col c = projector_column(p, j);
        remove_components(c, out);
        double nm = cnorm(c);
        if (nm < 1e-6) continue;
        for (Cx& x : c) x /= nm;
        out.push_back(std::move(c));
    }
    while (int(out.size()) < want) {
        int best = -1;
        double best_norm = 0.0;
        Col best_col;
        for (int j = 0; j < p.cols; ++j) {
            Col c = projector_column(p, j);
            remove_components(c, out);
            double nm = cnorm(c);
            if (nm > best_norm) {
                best_norm = nm;
                best = j;
                best_col = std::move(c);
            }
        }
        if (best < 0 || best_norm < 1e-9)
            throw internal_error("eigenspace basis extraction ran out of directions");
        for (Cx& x : best_col) x /= best_norm;
        out.push_back(std::move(best_col));
    }
    return out;
}

// Half-split basis of one paired rate of a real skew matrix: columns
// u_1..u_m v_1..v_m with  a u_k = -rate v_k  and  a v_k = rate u_k.
std::vector<Col> plane_split(const NumMat& a, const NumMat& proj, double rate, int m) {
    std::vector<Col> us, vs, taken;
    auto push_pair = [&](Col u) {
        Col v = matvec(a, u);
        for (Cx& x : v) x /= -rate;
        remove_components(v, taken);
        Cx t = cdot(u, v);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= t * u[k];
        double nm = cnorm(v);
        if (nm < 0.5) throw internal_error("invariant plane extraction degenerated");
        for (Cx& x : v) x /= nm;
        us.push_back(u);
        vs.push_back(v);
        taken.push_back(std::move(u));
        taken.push_back(vs.back());
    };
    for (int j = 0; j < proj.cols && int(us.size()) < m; ++j) {
        Col c = projector_column(proj, j);
        remove_components(c, taken);
        double nm = cnorm(c);
        if (nm < 1e-6) continue;
        for (Cx& x : c) x /= nm;
        push_pair(std::move(c));
    }
    while (int(us.size()) < m) {
        double best_norm = 0.0;
        Col best_col;
        for (int j = 0; j < proj.cols; ++j) {
            Col c = projector_column(proj, j);
            remove_components(c, taken);
            double nm = cnorm(c);
            if (nm > best_norm) {
                best_norm = nm;
                best_col = std::move(c);
            }
        }
        if (best_norm < 1e-9)
            throw internal_error("invariant plane extraction ran out of directions");
        for (Cx& x : best_col) x /= best_norm;
        push_pair(std::move(best_col));
    }
    std::vector<Col> cols = std::move(us);
    cols.insert(cols.end(), vs.begin(), vs.end());
    return cols;
}

void append_columns(NumMat& q, int& next, const std::vector<Col>& cols) {
    for (const Col& c : cols) {
        for (int i = 0; i < q.rows; ++i) q.at(i, next) = c[std::size_t(i)];
        ++next;
    }
}

double check_skew(const NumMat& a, Involution sigma) {
    double dev = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            Cx other = a.at(j, i);
            if (sigma == Involution::ConjTranspose) other = std::conj(other);
            dev = std::max(dev, std::abs(a.at(i, j) + other));
        }
    return dev;
}

// The +rate and -rate clusters of one line, paired by magnitude.
struct RatePair {
    double rate = 0.0;
    const Cluster* plus = nullptr;
    const Cluster* minus = nullptr;
};

}  // namespace

NumMat SkewNormalForm::middle() const {
    int n = transform.rows;
    NumMat m(n, n);
    int off = 0;
    for (const SkewLine& line : lines) {
        if (real_form) {
            int w = line.plus;
            for (int k = 0; k < w; ++k) {
                m.at(off + k, off + w + k) = Cx(line.lambda);
                m.at(off + w + k, off + k) = Cx(-line.lambda);
            }
            off += 2 * w;
        } else {
            for (int k = 0; k < line.plus; ++k) m.at(off + k, off + k) = Cx(0.0, line.lambda);
            off += line.plus;
            for (int k = 0; k < line.minus; ++k) m.at(off + k, off + k) = Cx(0.0, -line.lambda);
            off += line.minus;
        }
    }
    return m;
}

SkewNormalForm skew_normal_form_numeric(const Mat& a, double tol) {
    if (!a.is_square()) throw constraint_error("normal form needs a square matrix");
    if (a.tag() == FieldTag::Quaternion)
        throw constraint_error("numeric backend covers real and complex entries only");
    bool real = a.tag() == FieldTag::Real;
    Involution sigma = real ? Involution::Transpose : Involution::ConjTranspose;
    NumMat an = to_numeric(a);
    int n = an.rows;
    if (check_skew(an, sigma) > tol * (1.0 + an.max_abs()))
        throw constraint_error("matrix is not skew within tolerance");

    // i * a is Hermitian for both involutions handled here.
    NumMat h(n, n);
    for (std::size_t k = 0; k < h.e.size(); ++k) h.e[k] = Cx(0.0, 1.0) * an.e[k];
    Spectrum sp = hermitian_eigen(h);
    std::vector<Cluster> clusters = cluster_descending(sp.values);

    SkewNormalForm nf;
    nf.real_form = real;
    nf.transform = NumMat(n, n);
    int next = 0;

    const Cluster* kernel = nullptr;
    std::vector<const Cluster*> nonzero;
    for (const Cluster& c : clusters) {
        if (std::abs(c.mean) <= kClusterGap)
            kernel = &c;
        else
            nonzero.push_back(&c);
    }

    if (real) {
        // Pair each positive cluster with its mirror image.
        std::vector<RatePair> pairs;
        for (const Cluster* c : nonzero) {
            if (c->mean < 0.0) continue;
            RatePair rp;
            rp.plus = c;
            for (const Cluster* d : nonzero)
                if (std::abs(c->mean + d->mean) <= 2.0 * kClusterGap) rp.minus = d;
            if (!rp.minus || rp.minus->cols.size() != c->cols.size())
                throw membership_error("real skew spectrum failed to pair symmetrically");
            rp.rate = (c->mean - rp.minus->mean) / 2.0;
            pairs.push_back(rp);
        }
        for (const RatePair& rp : pairs) {
            int m = int(rp.plus->cols.size());
            std::vector<int> both = rp.plus->cols;
            both.insert(both.end(), rp.minus->cols.begin(), rp.minus->cols.end());
            NumMat proj = real_part(cluster_projector(sp.vectors, both));
            append_columns(nf.transform, next, plane_split(an, proj, rp.rate, m));
            nf.lines.push_back({rp.rate, m, m});
        }
    } else {
        // One line per rate magnitude; either sense may be absent.  The plus
        // sense of the normal form corresponds to the -rate eigenvalues of
        // i * a.
        std::vector<double> rates;
        for (const Cluster* c : nonzero) rates.push_back(std::abs(c->mean));
        std::sort(rates.begin(), rates.end(), std::greater<double>());
        for (std::size_t k = 0; k < rates.size(); ++k) {
            if (k > 0 && rates[k - 1] - rates[k] <= 2.0 * kClusterGap) continue;
            const Cluster* plus = nullptr;
            const Cluster* minus = nullptr;
            for (const Cluster* c : nonzero) {
                if (std::abs(c->mean + rates[k]) <= 2.0 * kClusterGap) plus = c;
                if (std::abs(c->mean - rates[k]) <= 2.0 * kClusterGap) minus = c;
            }
            SkewLine line{rates[k], 0, 0};
            if (plus) {
                line.lambda = -plus->mean;
                line.plus = int(plus->cols.size());
                NumMat proj = cluster_projector(sp.vectors, plus->cols);
                append_columns(nf.transform, next, seeded_span(proj, line.plus));
            }
            if (minus) {
                if (!plus) line.lambda = minus->mean;
                line.minus = int(minus->cols.size());
                NumMat proj = cluster_projector(sp.vectors, minus->cols);
                append_columns(nf.transform, next, seeded_span(proj, line.minus));
            }
            nf.lines.push_back(line);
        }
    }

    if (kernel) {
        nf.zero = int(kernel->cols.size());
        NumMat proj = cluster_projector(sp.vectors, kernel->cols);
        if (real) proj = real_part(proj);
        append_columns(nf.transform, next, seeded_span(proj, nf.zero));
    }
    if (next != n) throw internal_error("normal form basis is incomplete");
    return nf;
}

NumMat canonical_a1(const ClassificationRecord& rec) {
    NumMat m(rec.n, rec.n);
    int off = 0;
    if (rec.field == FieldTag::Real) {
        int w = rec.rot_pairs;
        for (int k = 0; k < w; ++k) {
            m.at(k, w + k) = Cx(2.0);
            m.at(w + k, k) = Cx(-2.0);
        }
        off = 2 * w;
        for (const OrthogonalClassBlock& blk : rec.orthogonal) {
            int bw = 2 * blk.mult;
            for (int k = 0; k < bw; ++k) {
                m.at(off + k, off + bw + k) = Cx(blk.lambda);
                m.at(off + bw + k, off + k) = Cx(-blk.lambda);
            }
            off += 2 * bw;
        }
    } else {
        for (const UnitaryClassBlock& blk : rec.unitary) {
            for (int k = 0; k < blk.mult; ++k) {
                m.at(off + k, off + k) = Cx(0.0, blk.a);
                m.at(off + blk.mult + k, off + blk.mult + k) = Cx(0.0, -blk.a);
            }
            off += 2 * blk.mult;
        }
    }
    return m;
}

NumMat canonical_a0(const ClassificationRecord& rec) {
    NumMat m = NumMat::identity(rec.n);
    int off = 0;
    if (rec.field == FieldTag::Real) {
        for (int k = 0; k < 2 * rec.rot_pairs; ++k) m.at(k, k) = Cx(-1.0);
        off = 2 * rec.rot_pairs;
        for (const OrthogonalClassBlock& blk : rec.orthogonal) {
            int bw = 2 * blk.mult;
            double lam = blk.lambda;
            double mu = lam * std::sqrt(std::max(0.0, 1.0 - lam * lam / 4.0));
            double diag = 1.0 - lam * lam / 2.0;
            for (int k = 0; k < 2 * bw; ++k) m.at(off + k, off + k) = Cx(diag);
            for (int k = 0; k < blk.mult; ++k) {
                double h = mu * blk.circle[std::size_t(k)].h;
                double g = mu * blk.circle[std::size_t(k)].g;
                int u = off + 2 * k, v = off + bw + 2 * k;
                m.at(u, u + 1) = Cx(h);
                m.at(u + 1, u) = Cx(-h);
                m.at(u, v + 1) = Cx(g);
                m.at(u + 1, v) = Cx(-g);
                m.at(v, u + 1) = Cx(g);
                m.at(v + 1, u) = Cx(-g);
                m.at(v, v + 1) = Cx(-h);
                m.at(v + 1, v) = Cx(h);
            }
            off += 2 * bw;
        }
    } else {
        for (const UnitaryClassBlock& blk : rec.unitary) {
            double diag = 1.0 - blk.a * blk.a / 2.0;
            double b = blk.a * std::sqrt(std::max(0.0, 1.0 - blk.a * blk.a / 4.0));
            for (int k = 0; k < blk.mult; ++k) {
                m.at(off + k, off + k) = Cx(diag);
                m.at(off + blk.mult + k, off + blk.mult + k) = Cx(diag);
                m.at(off + k, off + blk.mult + k) = Cx(b);
                m.at(off + blk.mult + k, off + k) = Cx(-b);
            }
            off += 2 * blk.mult;
        }
    }
    return m;
}

namespace {

double reconstruction_residual(const ClassificationRecord& rec, const NumMat& a1,
                               const NumMat& a0) {
    NumMat adj = rec.conjugator.adjoint();
    double r1 = (rec.conjugator * canonical_a1(rec) * adj - a1).max_abs();
    double r0 = (rec.conjugator * canonical_a0(rec) * adj - a0).max_abs();
    return std::max(r1, r0);
}

ClassificationRecord classify_orthogonal(const NumMat& a0, const NumMat& a1) {
    int n = a1.rows;
    NumMat h(n, n);
    for (std::size_t k = 0; k < h.e.size(); ++k) h.e[k] = Cx(0.0, 1.0) * a1.e[k];
    Spectrum sp = hermitian_eigen(h);
    std::vector<Cluster> clusters = cluster_descending(sp.values);

    ClassificationRecord rec;
    rec.field = FieldTag::Real;
    rec.n = n;
    rec.conjugator = NumMat(n, n);
    int next = 0;

    for (const Cluster& c : clusters) {
        if (c.mean <= kClusterGap) continue;  // mirror and kernel handled elsewhere
        const Cluster* minus = nullptr;
        for (const Cluster& d : clusters)
            if (std::abs(c.mean + d.mean) <= 2.0 * kClusterGap) minus = &d;
        if (!minus || minus->cols.size() != c.cols.size())
            throw membership_error("slope spectrum failed to pair symmetrically");
        double rate = (c.mean - minus->mean) / 2.0;
        if (rate - 2.0 > kClusterGap)
            throw membership_error("slope turns faster than the admissible rate two");

        int m = int(c.cols.size());
        std::vector<int> both = c.cols;
        both.insert(both.end(), minus->cols.begin(), minus->cols.end());
        NumMat proj = real_part(cluster_projector(sp.vectors, both));
        std::vector<Col> cols = plane_split(a1, proj, rate, m);

        if (std::abs(rate - 2.0) <= kClusterGap) {
            rec.rot_pairs = m;
            append_columns(rec.conjugator, next, cols);
            continue;
        }
        if (m % 2 != 0)
            throw membership_error("partial-rate block has an odd number of planes");
        int pairs = m / 2;
        double mu = rate * std::sqrt(std::max(0.0, 1.0 - rate * rate / 4.0));

        // A0 on this block: diag + mu [[H, G], [G, -H]] with H, G commuting
        // skew matrices read off the half-split basis.
        NumMat v(n, 2 * m);
        for (int j = 0; j < 2 * m; ++j)
            for (int i = 0; i < n; ++i) v.at(i, j) = cols[std::size_t(j)][std::size_t(i)];
        NumMat blockm = v.adjoint() * a0 * v;
        NumMat hh(m, m), gg(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                hh.at(i, j) = (blockm.at(i, j) - blockm.at(j, i)) / 2.0;
                gg.at(i, j) = (blockm.at(i, m + j) + blockm.at(m + i, j)) / 2.0;
            }

        // Joint planes of H and G: refine each H eigenspace by G.
        NumMat ih(m, m), ig(m, m);
        for (std::size_t k = 0; k < ih.e.size(); ++k) {
            ih.e[k] = Cx(0.0, 1.0) * hh.e[k];
            ig.e[k] = Cx(0.0, 1.0) * gg.e[k];
        }
        Spectrum sph = hermitian_eigen(ih);
        struct Plane {
            double h, g;
            Col w;
        };
        std::vector<Plane> planes;
        for (const Cluster& ch : cluster_descending(sph.values)) {
            double hrate = -ch.mean;
            NumMat projh = cluster_projector(sph.vectors, ch.cols);
            std::vector<Col> basis = seeded_span(projh, int(ch.cols.size()));
            int d = int(basis.size());
            NumMat t(d, d);
            for (int i = 0; i < d; ++i) {
                Col gcol = matvec(ig, basis[std::size_t(i)]);
                for (int j = 0; j < d; ++j) t.at(j, i) = cdot(basis[std::size_t(j)], gcol);
            }
            Spectrum spt = hermitian_eigen(t);
            for (int k = 0; k < d; ++k) {
                double grate = -spt.values[std::size_t(k)];
                bool keep = hrate > kClusterGap ||
                            (std::abs(hrate) <= kClusterGap && grate > 0.0);
                if (!keep) continue;
                Col w(std::size_t(m), Cx(0.0));
                for (int i = 0; i < d; ++i)
                    for (int r = 0; r < m; ++r)
                        w[std::size_t(r)] += basis[std::size_t(i)][std::size_t(r)] *
                                             spt.vectors.at(i, k);
                planes.push_back({hrate, grate, std::move(w)});
            }
        }
        if (int(planes.size()) != pairs)
            throw membership_error("circle couplings are too degenerate to split into planes");
        std::sort(planes.begin(), planes.end(), [](const Plane& x, const Plane& y) {
            return x.h != y.h ? x.h > y.h : x.g > y.g;
        });

        // Rotate both halves by the common plane basis.
        NumMat rp(m, m);
        std::vector<Col> rcols;
        for (const Plane& pl : planes) {
            Col re(std::size_t(m), Cx(0.0)), im(std::size_t(m), Cx(0.0));
            for (int r = 0; r < m; ++r) {
                re[std::size_t(r)] = Cx(std::sqrt(2.0) * pl.w[std::size_t(r)].real());
                im[std::size_t(r)] = Cx(std::sqrt(2.0) * pl.w[std::size_t(r)].imag());
            }
            remove_components(re, rcols);
            double nr = cnorm(re);
            if (nr < 0.5) throw internal_error("plane basis collapsed");
            for (Cx& x : re) x /= nr;
            rcols.push_back(std::move(re));
            remove_components(im, rcols);
            double ni = cnorm(im);
            if (ni < 0.5) throw internal_error("plane basis collapsed");
            for (Cx& x : im) x /= ni;
            rcols.push_back(std::move(im));
        }
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i) rp.at(i, j) = rcols[std::size_t(j)][std::size_t(i)];

        OrthogonalClassBlock blk;
        blk.lambda = rate;
        blk.mult = pairs;
        for (const Plane& pl : planes) blk.circle.push_back({pl.h / mu, pl.g / mu});
        rec.orthogonal.push_back(std::move(blk));

        NumMat uh(n, m), vh(n, m);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i) {
                uh.at(i, j) = v.at(i, j);
                vh.at(i, j) = v.at(i, m + j);
            }
        NumMat uru = uh * rp, vrv = vh * rp;
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < n; ++i) rec.conjugator.at(i, next) = uru.at(i, j);
            ++next;
        }
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < n; ++i) rec.conjugator.at(i, next) = vrv.at(i, j);
            ++next;
        }
    }

    for (const Cluster& c : clusters) {
        if (std::abs(c.mean) > kClusterGap) continue;
        NumMat proj = real_part(cluster_projector(sp.vectors, c.cols));
        append_columns(rec.conjugator, next, seeded_span(proj, int(c.cols.size())));
    }
    if (next != n) throw internal_error("classification basis is incomplete");
    return rec;
}

ClassificationRecord classify_unitary(const NumMat& a0, const NumMat& a1) {
    int n = a1.rows;
    NumMat h(n, n);
    for (std::size_t k = 0; k < h.e.size(); ++k) h.e[k] = Cx(0.0, 1.0) * a1.e[k];
    Spectrum sp = hermitian_eigen(h);
    std::vector<Cluster> clusters = cluster_descending(sp.values);

    ClassificationRecord rec;
    rec.field = FieldTag::Complex;
    rec.n = n;
    rec.conjugator = NumMat(n, n);
    int next = 0;

    // Rates come out of i * A1 negated, so the +a spaces are the clusters with
    // negative mean; walk them from the most negative mean upward to emit the
    // rates in decreasing order.
    for (auto it = clusters.rbegin(); it != clusters.rend(); ++it) {
        const Cluster& c = *it;
        if (c.mean >= -kClusterGap) continue;
        double rate = -c.mean;
        const Cluster* minus = nullptr;
        for (const Cluster& d : clusters)
            if (std::abs(d.mean - rate) <= 2.0 * kClusterGap) minus = &d;
        if (!minus || minus->cols.size() != c.cols.size())
            throw membership_error("rates do not pair with balanced multiplicities");
        if (rate - 2.0 > kClusterGap)
            throw membership_error("slope turns faster than the admissible rate two");
        int m = int(c.cols.size());
        double b = rate * std::sqrt(std::max(0.0, 1.0 - rate * rate / 4.0));

        std::vector<Col> plus_cols =
            seeded_span(cluster_projector(sp.vectors, c.cols), m);
        std::vector<Col> minus_cols =
            seeded_span(cluster_projector(sp.vectors, minus->cols), m);

        if (b > kClusterGap) {
            // The cross block of A0 is b Q with Q unitary; absorb Q into the
            // +rate basis so the canonical cross block becomes b I.
            NumMat z(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    Col acol = matvec(a0, minus_cols[std::size_t(j)]);
                    z.at(i, j) = cdot(plus_cols[std::size_t(i)], acol) / b;
                }
            std::vector<Col> absorbed;
            for (int j = 0; j < m; ++j) {
                Col w(std::size_t(n), Cx(0.0));
                for (int i = 0; i < m; ++i)
                    for (int r = 0; r < n; ++r)
                        w[std::size_t(r)] += plus_cols[std::size_t(i)][std::size_t(r)] *
                                             z.at(i, j);
                absorbed.push_back(std::move(w));
            }
            plus_cols = std::move(absorbed);
        }
        append_columns(rec.conjugator, next, plus_cols);
        append_columns(rec.conjugator, next, minus_cols);
        rec.unitary.push_back({rate, m});
    }

    for (const Cluster& c : clusters) {
        if (std::abs(c.mean) > kClusterGap) continue;
        NumMat proj = cluster_projector(sp.vectors, c.cols);
        append_columns(rec.conjugator, next, seeded_span(proj, int(c.cols.size())));
    }
    if (next != n)
        throw membership_error("rates do not pair with balanced multiplicities");
    return rec;
}

}  // namespace

ClassificationRecord classify_quadratic_numeric(const RationalCurve& curve, double tol) {
    QuadraticData qd = extract_quadratic(curve);
    if (qd.center != Scalar(0) || qd.radius != Scalar(1))
        throw constraint_error("classification expects the pole pair +-i");
    const GroupDescriptor& g = qd.group;
    bool plain_orthogonal = g.field() == FieldTag::Real &&
                            g.sigma() == Involution::Transpose &&
                            g.B() == Mat::identity(g.n(), FieldTag::Real);
    bool plain_unitary = g.field() == FieldTag::Complex &&
                         g.sigma() == Involution::ConjTranspose &&
                         g.B() == Mat::identity(g.n(), FieldTag::Complex);
    if (!plain_orthogonal && !plain_unitary)
        throw constraint_error("classification covers curves on O(n) and U(n) only");

    NumMat a0 = to_numeric(qd.a0), a1 = to_numeric(qd.a1);
    ClassificationRecord rec =
        plain_orthogonal ? classify_orthogonal(a0, a1) : classify_unitary(a0, a1);
    rec.residual = reconstruction_residual(rec, a1, a0);
    if (!(rec.residual < tol))
        throw membership_error("classification residual exceeds the tolerance");
    return rec;
}

}  // namespace curvefactor
