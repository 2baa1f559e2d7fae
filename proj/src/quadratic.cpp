#include "curvefactor/quadratic.hpp"

#include <set>
#include <utility>

#include "curvefactor/solve.hpp"

namespace curvefactor {

namespace {

Scalar half() { return Scalar(1, 2); }
Scalar rt2h() { return Scalar(mpq_class(0), mpq_class(1, 2), 2); }  // sqrt(2)/2

QuadFactor unit_pole() { return QuadFactor{Scalar(0), Scalar(1), 1}; }

ScalarPoly unit_pole_poly() { return ScalarPoly({Scalar(1), Scalar(0), Scalar(1)}); }

// Numerator over t^2 + 1, degree <= 2, assembled entry by entry.  Starts as
// (t^2 + 1) I, so untouched coordinates are fixed pointwise.
struct PoleNumerator {
    std::vector<Mat> c;

    explicit PoleNumerator(int size)
        : c{Mat::identity(size, FieldTag::Real), Mat::zero(size, size, FieldTag::Real),
            Mat::identity(size, FieldTag::Real)} {}

    void put(int i, int j, const Scalar& v) { c[0].set(i, j, v); }
    void put_t(int i, int j, const Scalar& v) { c[1].set(i, j, v); }
    // Overwrites the square block with top-left corner (at, at).
    void put_block(int at, const MatPoly& block) {
        for (int k = 0; k < 3; ++k) c[k].insert_block(at, at, block.coeff(k));
    }
    MatPoly take() { return MatPoly::from_coeffs(std::move(c)); }
};

// The change of basis turning the shear entries into honest O(p,q) matrices.
// Each is orthogonal with sqrt(2)/2 entries.
Mat chain_basis_3() {
    Mat q(3, 3, FieldTag::Real);
    Scalar h = rt2h();
    q.set(0, 1, h);
    q.set(0, 2, -h);
    q.set(1, 0, Scalar(1));
    q.set(2, 1, -h);
    q.set(2, 2, -h);
    return q;
}

Mat chain_basis_4() {
    Mat q(4, 4, FieldTag::Real);
    Scalar h = rt2h();
    q.set(0, 2, Scalar(1));
    q.set(1, 0, -h);
    q.set(1, 3, -h);
    q.set(2, 1, Scalar(1));
    q.set(3, 0, h);
    q.set(3, 3, -h);
    return q;
}

Mat chain_basis_6() {
    Mat q(6, 6, FieldTag::Real);
    Scalar h = rt2h();
    q.set(0, 3, -h);
    q.set(0, 4, -h);
    q.set(1, 0, Scalar(1));
    q.set(2, 3, h);
    q.set(2, 4, -h);
    q.set(3, 2, -h);
    q.set(3, 5, -h);
    q.set(4, 1, Scalar(1));
    q.set(5, 2, h);
    q.set(5, 5, -h);
    return q;
}

Mat shear_basis_4() {
    Mat q(4, 4, FieldTag::Real);
    Scalar h = rt2h();
    q.set(0, 1, -h);
    q.set(0, 2, -h);
    q.set(1, 0, h);
    q.set(1, 3, h);
    q.set(2, 1, -h);
    q.set(2, 2, h);
    q.set(3, 0, h);
    q.set(3, 3, -h);
    return q;
}

// Transposition aligning diag(I_m, -1, I_{n-m}, -1) with diag(I_n, -I_2):
// swaps coordinates m and n, identity elsewhere.
Mat split_permutation(int m, int n) {
    Mat p(n + 2, n + 2, FieldTag::Real);
    for (int i = 0; i < m; ++i) p.set(i, i, Scalar(1));
    p.set(m, n, Scalar(1));
    p.set(n, m, Scalar(1));
    for (int i = m + 1; i < n; ++i) p.set(i, i, Scalar(1));
    p.set(n + 1, n + 1, Scalar(1));
    return p;
}

// I_lead ⊕ q; lead may be zero.
Mat padded(int lead, const Mat& q) {
    if (lead == 0) return q;
    return direct_sum(Mat::identity(lead, FieldTag::Real), q);
}

// Numerator of a block curve over the common denominator t^2 + 1.  Accepts
// constants and curves whose only pole pair is +-i.
MatPoly block_numerator(const RationalCurve& c, const GroupDescriptor& expect) {
    if (!c.group().same_group(expect))
        throw constraint_error("block curve lives on the wrong group");
    if (c.is_constant()) return MatPoly::constant(c.at_infinity()).scaled(unit_pole_poly());
    const auto& d = c.denominator();
    if (d.size() != 1 || d[0] != unit_pole())
        throw constraint_error("block curve must be constant or have the single pole pair +-i");
    return c.full_numerator();
}

Scalar dot(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    Scalar s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

void require(bool ok, const char* what) {
    if (!ok) throw constraint_error(what);
}

}  // namespace

QuadraticRelations check_quadratic_relations(const Mat& a0, const Mat& a1,
                                             const GroupDescriptor& group) {
    int n = group.n();
    require(a0.rows() == n && a0.cols() == n && a1.rows() == n && a1.cols() == n &&
                a0.tag() == group.field() && a1.tag() == group.field(),
            "relation check needs square matrices matching the group");
    const Mat& b = group.B();
    Involution s = group.sigma();
    Mat id = Mat::identity(n, group.field());

    QuadraticRelations r;
    r.skew = (b * a1.star(s) + a1 * b).is_zero();
    r.shift = (b * a0.star(s) + a0 * b - (Scalar(2) * id + a1 * a1) * b).is_zero();
    r.twist = (a1 * b * a0.star(s) - a0 * (a1 * b)).is_zero();
    r.involution = (a0 * b * a0.star(s) - b).is_zero();
    return r;
}

RationalCurve quadratic_curve(const QuadraticData& data) {
    const GroupDescriptor& g = data.group;
    int n = g.n();
    require(data.a0.rows() == n && data.a0.cols() == n && data.a0.tag() == g.field() &&
                data.a1.rows() == n && data.a1.cols() == n && data.a1.tag() == g.field(),
            "quadratic data must match the group dimension and field");
    require(data.radius.sign() > 0, "pole radius must be positive");

    const Scalar& a = data.center;
    const Scalar& b = data.radius;
    Mat id = Mat::identity(n, g.field());
    Mat c1 = (Scalar(-2) * a) * id + b * data.a1;
    Mat c0 = (a * a) * id + (-(a * b)) * data.a1 + (b * b) * data.a0;
    MatPoly num = MatPoly::from_coeffs({std::move(c0), std::move(c1), std::move(id)});
    QuadFactor pole{Scalar(-2) * a, a * a + b * b, 1};
    return RationalCurve::normalize(std::move(num), {pole}, g);
}

QuadraticData extract_quadratic(const RationalCurve& curve) {
    const auto& d = curve.denominator();
    if (d.size() != 1 || d[0].s != 1 || curve.degree() != 2)
        throw constraint_error("curve is not degree two with a single simple pole pair");
    int n = curve.group().n();
    if (curve.at_infinity() != Mat::identity(n, curve.group().field()))
        throw constraint_error("curve must be the identity at infinity");

    auto [a, b] = d[0].pole_pair();
    Mat id = Mat::identity(n, curve.group().field());
    Scalar binv = b.inv();
    Mat a1 = binv * (curve.monic_numerator().coeff(1) + (Scalar(2) * a) * id);
    Mat a0 = (binv * binv) * (curve.monic_numerator().coeff(0) - (a * a) * id + (a * b) * a1);
    return QuadraticData{curve.group(), std::move(a0), std::move(a1), a, b};
}

RationalCurve make_unitary_quadratic(int n, const std::vector<UnitaryBlock>& blocks) {
    require(n >= 2 && !blocks.empty(), "unitary family needs n >= 2 and at least one block");
    int used = 0;
    std::set<std::pair<Scalar, Scalar>> seen;
    for (const auto& blk : blocks) {
        require(blk.mult >= 1, "block multiplicity must be positive");
        require(blk.a.sign() > 0 && (blk.a - Scalar(2)).sign() <= 0,
                "block parameter a must lie in (0, 2]");
        require(Scalar(4) * blk.b * blk.b == blk.a * blk.a * (Scalar(4) - blk.a * blk.a),
                "block parameters must satisfy 4b^2 = a^2(4 - a^2)");
        require(seen.insert({blk.a, Scalar(0)}).second, "block a-values must be distinct");
        used += 2 * blk.mult;
    }
    require(used <= n, "blocks exceed the dimension");

    Mat a1 = Mat::zero(n, n, FieldTag::Complex);
    Mat a0 = Mat::identity(n, FieldTag::Complex);
    int off = 0;
    for (const auto& blk : blocks) {
        int m = blk.mult;
        Scalar diag = Scalar(1) - blk.a * blk.a * half();
        for (int k = 0; k < m; ++k) {
            a1.set(off + k, off + k, Scalar(0), blk.a);
            a1.set(off + m + k, off + m + k, Scalar(0), -blk.a);
            a0.set(off + k, off + k, diag);
            a0.set(off + m + k, off + m + k, diag);
            a0.set(off + k, off + m + k, blk.b);
            a0.set(off + m + k, off + k, -blk.b);
        }
        off += 2 * m;
    }
    return quadratic_curve({unitary_group(n), std::move(a0), std::move(a1), Scalar(0), Scalar(1)});
}

RationalCurve make_orthogonal_quadratic(int n, int rot_pairs,
                                        const std::vector<OrthogonalBlock>& blocks) {
    require(n >= 2 && rot_pairs >= 0, "orthogonal family needs n >= 2");
    int used = 2 * rot_pairs;
    std::set<std::pair<Scalar, Scalar>> seen;
    for (const auto& blk : blocks) {
        require(blk.mult >= 1, "block multiplicity must be positive");
        require(blk.lambda.sign() > 0 && (blk.lambda - Scalar(2)).sign() < 0,
                "block parameter lambda must lie in (0, 2)");
        require(Scalar(4) * blk.mu * blk.mu ==
                    blk.lambda * blk.lambda * (Scalar(4) - blk.lambda * blk.lambda),
                "block parameters must satisfy 4mu^2 = lambda^2(4 - lambda^2)");
        require(seen.insert({blk.lambda, Scalar(0)}).second, "block lambda values must be distinct");
        require(int(blk.circle.size()) == blk.mult, "one circle point per block copy");
        for (const auto& pt : blk.circle)
            require(pt.h * pt.h + pt.g * pt.g == Scalar(1), "circle points must satisfy h^2 + g^2 = 1");
        used += 4 * blk.mult;
    }
    require(used <= n, "blocks exceed the dimension");
    require(rot_pairs > 0 || !blocks.empty(), "orthogonal family needs at least one block");

    Mat a1 = Mat::zero(n, n, FieldTag::Real);
    Mat a0 = Mat::identity(n, FieldTag::Real);
    int off = 0;
    for (int k = 0; k < rot_pairs; ++k) {
        a1.set(off + k, off + rot_pairs + k, Scalar(2));
        a1.set(off + rot_pairs + k, off + k, Scalar(-2));
    }
    for (int k = 0; k < 2 * rot_pairs; ++k) a0.set(off + k, off + k, Scalar(-1));
    off += 2 * rot_pairs;

    for (const auto& blk : blocks) {
        int w = 2 * blk.mult;
        Scalar diag = Scalar(1) - blk.lambda * blk.lambda * half();
        for (int k = 0; k < w; ++k) {
            a1.set(off + k, off + w + k, blk.lambda);
            a1.set(off + w + k, off + k, -blk.lambda);
        }
        for (int k = 0; k < 2 * w; ++k) a0.set(off + k, off + k, diag);
        for (int k = 0; k < blk.mult; ++k) {
            // Planar couplings mu*H within each half and mu*G across halves,
            // H = [[0,h],[-h,0]], G = [[0,g],[-g,0]].
            const Scalar& h = blk.circle[k].h;
            const Scalar& g = blk.circle[k].g;
            int u = off + 2 * k, v = off + w + 2 * k;
            a0.set(u, u + 1, blk.mu * h);
            a0.set(u + 1, u, -(blk.mu * h));
            a0.set(u, v + 1, blk.mu * g);
            a0.set(u + 1, v, -(blk.mu * g));
            a0.set(v, u + 1, blk.mu * g);
            a0.set(v + 1, u, -(blk.mu * g));
            a0.set(v, v + 1, -(blk.mu * h));
            a0.set(v + 1, v, blk.mu * h);
        }
        off += 2 * w;
    }
    return quadratic_curve({orthogonal_group(n), std::move(a0), std::move(a1), Scalar(0), Scalar(1)});
}

RationalCurve make_lorentz_rotation(int n, int r, const RationalCurve& rotating) {
    require(r >= 1 && 2 * r <= n, "rotating block must fit the spatial part");
    MatPoly num = block_numerator(rotating, orthogonal_group(2 * r));
    // Degenerate blocks are excluded: A1 must be invertible.
    QuadraticData qd = extract_quadratic(rotating);
    require(mat_rank(qd.a1) == 2 * r, "rotating block needs an invertible A1");

    PoleNumerator p(n + 1);
    p.put_block(0, num);
    return RationalCurve::normalize(p.take(), {unit_pole()}, indefinite_orthogonal_group(n, 1));
}

RationalCurve make_lorentz_null_rotation(int n, const RationalCurve* rotating,
                                         const std::vector<Scalar>& y) {
    int r = 0;
    if (rotating) {
        int m = rotating->group().n();
        require(m >= 2 && m % 2 == 0, "rotating block must have even dimension");
        r = m / 2;
    }
    int k = n - 2 * r - 2;
    require(2 * r <= n - 3, "null rotation needs 2r <= n - 3");
    require(int(y.size()) == k, "direction vector must have length n - 2r - 2");
    require(dot(y, y) == Scalar(1), "direction vector must be a unit vector");

    PoleNumerator p(n + 1);
    if (rotating) p.put_block(0, block_numerator(*rotating, orthogonal_group(2 * r)));
    int o = 2 * r;
    for (int i = 0; i < k; ++i) {
        p.put(o + i, o + k, y[i]);
        p.put(o + k + 2, o + i, y[i]);
    }
    p.put_t(o + k + 1, o + k, Scalar(1));
    p.put(o + k + 2, o + k, half());
    p.put_t(o + k + 2, o + k + 1, Scalar(1));

    Mat c = padded(n - 2, chain_basis_3());
    MatPoly num = c.transpose() * p.take() * c;
    return RationalCurve::normalize(std::move(num), {unit_pole()},
                                    indefinite_orthogonal_group(n, 1));
}

RationalCurve make_split_pair(int n, int m, const RationalCurve& first,
                              const RationalCurve& second) {
    require(n >= 1 && m >= 0 && m <= n, "split position out of range");
    MatPoly num1 = block_numerator(first, indefinite_orthogonal_group(m, 1));
    MatPoly num2 = block_numerator(second, indefinite_orthogonal_group(n - m, 1));

    PoleNumerator p(n + 2);
    p.put_block(0, num1);
    p.put_block(m + 1, num2);
    Mat perm = split_permutation(m, n);
    MatPoly num = perm * p.take() * perm.transpose();
    return RationalCurve::normalize(std::move(num), {unit_pole()},
                                    indefinite_orthogonal_group(n, 2));
}

RationalCurve make_compact_pair(int n, const RationalCurve& spatial,
                                const RationalCurve& plane) {
    require(n >= 1, "spatial part must be nonempty");
    PoleNumerator p(n + 2);
    p.put_block(0, block_numerator(spatial, orthogonal_group(n)));
    p.put_block(n, block_numerator(plane, orthogonal_group(2)));
    return RationalCurve::normalize(p.take(), {unit_pole()}, indefinite_orthogonal_group(n, 2));
}

RationalCurve make_coupled_rotation(int n, const RationalCurve* spatial,
                                    const Scalar& l, const Scalar& a, const Scalar& b,
                                    int d) {
    require(n >= 2, "coupled rotation needs n >= 2");
    require(d == 1 || d == -1, "orientation must be +-1");
    require(a * a + b * b == l * l, "parameters must satisfy a^2 + b^2 = l^2");

    PoleNumerator p(n + 2);
    if (spatial) p.put_block(0, block_numerator(*spatial, orthogonal_group(n - 2)));
    int o = n - 2;
    Scalar s(d);
    p.put(o, o + 1, l);
    p.put(o, o + 2, a);
    p.put(o, o + 3, b);
    p.put(o + 1, o, -l);
    p.put(o + 1, o + 2, s * b);
    p.put(o + 1, o + 3, -(s * a));
    p.put(o + 2, o, a);
    p.put(o + 2, o + 1, s * b);
    p.put(o + 2, o + 3, s * l);
    p.put(o + 3, o, b);
    p.put(o + 3, o + 1, -(s * a));
    p.put(o + 3, o + 2, -(s * l));
    return RationalCurve::normalize(p.take(), {unit_pole()}, indefinite_orthogonal_group(n, 2));
}

RationalCurve make_null_chain(int n, const RationalCurve* rotating,
                              const std::vector<Scalar>& w) {
    int r = 0;
    if (rotating) {
        int sz = rotating->group().n();
        require(sz >= 2 && sz % 2 == 0, "rotating block must have even dimension");
        r = sz / 2;
    }
    int m = int(w.size());
    require(m >= 1, "chain needs at least one coupling coordinate");
    require(n == 2 * r + m + 2, "dimension must satisfy n = 2r + m + 2");
    require(dot(w, w) == Scalar(1), "coupling vector must be a unit vector");

    PoleNumerator p(n + 2);
    if (rotating) p.put_block(0, block_numerator(*rotating, orthogonal_group(2 * r)));
    int a = 2 * r + m;
    p.put_t(a + 2, a + 1, Scalar(1));
    p.put_t(a + 3, a + 2, Scalar(1));
    for (int i = 0; i < m; ++i) {
        p.put(2 * r + i, a + 1, w[i]);
        p.put(a + 3, 2 * r + i, w[i]);
    }
    p.put(a + 3, a + 1, half());

    Mat c = padded(n - 2, chain_basis_4());
    MatPoly num = c.transpose() * p.take() * c;
    return RationalCurve::normalize(std::move(num), {unit_pole()},
                                    indefinite_orthogonal_group(n, 2));
}

RationalCurve make_double_null_chain(int n, const RationalCurve* rotating,
                                     const std::vector<Scalar>& x,
                                     const std::vector<Scalar>& y,
                                     const Scalar& z1, const Scalar& z2) {
    int r = 0;
    if (rotating) {
        int sz = rotating->group().n();
        require(sz >= 2 && sz % 2 == 0, "rotating block must have even dimension");
        r = sz / 2;
    }
    int m = int(x.size());
    require(int(y.size()) == m, "coupling vectors need equal length");
    require(n == 2 * r + m + 4, "dimension must satisfy n = 2r + m + 4");
    require(dot(x, y) == Scalar(0), "coupling vectors must be orthogonal");
    Scalar norm = Scalar(1) - z2 * z2;
    require(dot(x, x) == norm && dot(y, y) == norm,
            "coupling vectors must satisfy x.x = y.y = 1 - z2^2");

    PoleNumerator p(n + 2);
    if (rotating) p.put_block(0, block_numerator(*rotating, orthogonal_group(2 * r)));
    int a = 2 * r + m;
    int b = a + 3;
    p.put_t(a + 1, a, Scalar(1));
    p.put_t(a + 2, a + 1, Scalar(1));
    p.put_t(b + 1, b, Scalar(1));
    p.put_t(b + 2, b + 1, Scalar(1));
    for (int i = 0; i < m; ++i) {
        p.put(2 * r + i, a, x[i]);
        p.put(a + 2, 2 * r + i, x[i]);
        p.put(2 * r + i, b, y[i]);
        p.put(b + 2, 2 * r + i, y[i]);
    }
    p.put(a + 2, a, half());
    p.put(b + 2, b, half());
    p.put(a + 1, b, z2);
    p.put(a + 2, b, z1);
    p.put(a + 2, b + 1, -z2);
    p.put(b + 1, a, -z2);
    p.put(b + 2, a, -z1);
    p.put(b + 2, a + 1, z2);

    Mat c = padded(n - 4, chain_basis_6());
    MatPoly num = c.transpose() * p.take() * c;
    return RationalCurve::normalize(std::move(num), {unit_pole()},
                                    indefinite_orthogonal_group(n, 2));
}

RationalCurve make_hyperbolic_rotation(int n, const RationalCurve* spatial,
                                       const Scalar& b, const Scalar& x, const Scalar& y) {
    require(n >= 2, "hyperbolic rotation needs n >= 2");
    require((b - Scalar(2)).sign() > 0, "parameter b must exceed 2");
    require(x * x + y * y == b * b * (b * b * Scalar(1, 4) - Scalar(1)),
            "parameters must satisfy x^2 + y^2 = b^2(b^2/4 - 1)");

    PoleNumerator p(n + 2);
    if (spatial) p.put_block(0, block_numerator(*spatial, orthogonal_group(n - 2)));
    int o = n - 2;
    Scalar diag = (Scalar(2) - b * b) * half();  // entry t^2 + (2 - b^2)/2
    for (int i = 0; i < 4; ++i) p.put(o + i, o + i, diag);
    p.put_t(o, o + 1, b);
    p.put_t(o + 1, o, -b);
    p.put_t(o + 2, o + 3, b);
    p.put_t(o + 3, o + 2, -b);
    p.put(o, o + 2, x);
    p.put(o, o + 3, y);
    p.put(o + 1, o + 2, y);
    p.put(o + 1, o + 3, -x);
    p.put(o + 2, o, x);
    p.put(o + 2, o + 1, y);
    p.put(o + 3, o, y);
    p.put(o + 3, o + 1, -x);
    return RationalCurve::normalize(p.take(), {unit_pole()}, indefinite_orthogonal_group(n, 2));
}

RationalCurve make_parabolic_shear(int n, const RationalCurve* spatial, const Scalar& a) {
    require(n >= 2, "parabolic shear needs n >= 2");
    PoleNumerator p(n + 2);
    if (spatial) p.put_block(0, block_numerator(*spatial, orthogonal_group(n - 2)));
    int o = n - 2;
    p.put(o + 1, o, a);
    p.put_t(o + 1, o, Scalar(1));
    p.put(o + 2, o + 3, -a);
    p.put_t(o + 2, o + 3, Scalar(-1));

    Mat c = padded(n - 2, shear_basis_4());
    MatPoly num = c.transpose() * p.take() * c;
    return RationalCurve::normalize(std::move(num), {unit_pole()},
                                    indefinite_orthogonal_group(n, 2));
}

}  // namespace curvefactor
