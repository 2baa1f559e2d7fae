#include "curvefactor/poly.hpp"

#include <algorithm>
#include <ostream>

namespace curvefactor {

void ScalarPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ScalarPoly ScalarPoly::constant(Scalar v) {
    ScalarPoly p;
    p.c_.push_back(std::move(v));
    p.trim();
    return p;
}

ScalarPoly ScalarPoly::t() { return ScalarPoly({Scalar(0), Scalar(1)}); }

bool ScalarPoly::is_monic() const { return !c_.empty() && c_.back() == Scalar(1); }

Scalar ScalarPoly::coeff(int k) const {
    if (k < 0 || k >= int(c_.size())) return Scalar();
    return c_[k];
}

const Scalar& ScalarPoly::leading() const {
    if (c_.empty()) throw internal_error("leading coefficient of zero polynomial");
    return c_.back();
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(int(k)) + b.coeff(int(k));
    r.trim();
    return r;
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) { return a + (-b); }

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

ScalarPoly ScalarPoly::scaled(const Scalar& s) const {
    ScalarPoly r = *this;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

Scalar ScalarPoly::eval(const Scalar& t) const {
    Scalar v;
    for (int k = degree(); k >= 0; --k) v = v * t + c_[k];
    return v;
}

ScalarPoly ScalarPoly::pow(int e) const {
    if (e < 0) throw internal_error("negative polynomial power");
    ScalarPoly r = constant(Scalar(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

ScalarPoly ScalarPoly::compose_linear(const Scalar& x, const Scalar& y) const {
    ScalarPoly lin({x, y});
    ScalarPoly r;
    for (int k = degree(); k >= 0; --k) r = r * lin + constant(c_[k]);
    return r;
}

std::pair<ScalarPoly, ScalarPoly> ScalarPoly::divrem(const ScalarPoly& a, const ScalarPoly& b) {
    if (b.is_zero()) throw internal_error("polynomial division by zero");
    ScalarPoly q, r = a;
    Scalar lead_inv = b.leading().inv();
    int db = b.degree();
    q.c_.assign(std::max(a.degree() - db + 1, 0), Scalar());
    while (r.degree() >= db) {
        int k = r.degree() - db;
        Scalar f = r.c_.back() * lead_inv;
        q.c_[k] = f;
        for (int j = 0; j <= db; ++j) r.c_[k + j] -= f * b.c_[j];
        r.trim();
    }
    q.trim();
    return {q, r};
}

ScalarPoly ScalarPoly::gcd(ScalarPoly a, ScalarPoly b) {
    while (!b.is_zero()) {
        ScalarPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.leading().inv());
    return a;
}

std::array<ScalarPoly, 3> ScalarPoly::ext_gcd(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r0 = a, r1 = b;
    ScalarPoly u0 = constant(Scalar(1)), u1;
    ScalarPoly v0, v1 = constant(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        ScalarPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        Scalar inv = r0.leading().inv();
        r0 = r0.scaled(inv);
        u0 = u0.scaled(inv);
        v0 = v0.scaled(inv);
    }
    return {r0, u0, v0};
}

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        if (p.coeff(k).is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << p.coeff(k) << ")";
        if (k > 0) os << "t^" << k;
        first = false;
    }
    return os;
}

void QuadFactor::validate() const {
    if (s < 1) throw factor_error("factor multiplicity must be positive");
    Scalar disc = p * p - Scalar(4) * r;
    if (disc.sign() >= 0) throw factor_error("denominator factor has real roots (discriminant >= 0)");
}

ScalarPoly QuadFactor::poly() const { return ScalarPoly({r, p, Scalar(1)}); }

ScalarPoly QuadFactor::poly_pow() const { return poly().pow(s); }

std::pair<Scalar, Scalar> QuadFactor::pole_pair() const {
    Scalar a = -p / Scalar(2);
    Scalar b2 = r - p * p / Scalar(4);
    long hint = r.ext() >= 2 ? r.ext() : p.ext();
    auto b = scalar_sqrt(b2, hint);
    if (!b) throw constraint_error("pole imaginary part does not lie in the scalar field");
    return {a, *b};
}

bool quadfactor_less(const QuadFactor& a, const QuadFactor& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.r < b.r;
}

std::vector<QuadFactor> merge_factors(std::vector<QuadFactor> fs) {
    for (const auto& f : fs) f.validate();
    std::sort(fs.begin(), fs.end(), quadfactor_less);
    std::vector<QuadFactor> out;
    for (auto& f : fs) {
        if (!out.empty() && out.back().same_roots(f))
            out.back().s += f.s;
        else
            out.push_back(f);
    }
    return out;
}

ScalarPoly expand_denominator(const std::vector<QuadFactor>& fs) {
    ScalarPoly q = ScalarPoly::constant(Scalar(1));
    for (const auto& f : fs) q = q * f.poly_pow();
    return q;
}

int denominator_degree(const std::vector<QuadFactor>& fs) {
    int d = 0;
    for (const auto& f : fs) d += 2 * f.s;
    return d;
}

std::vector<ScalarPoly> partial_fractions(const ScalarPoly& num, const std::vector<QuadFactor>& denom) {
    if (denom.empty()) throw internal_error("partial fractions need at least one factor");
    if (num.degree() >= denominator_degree(denom))
        throw internal_error("partial fractions need numerator degree below denominator degree");
    if (denom.size() == 1) return {num};
    std::vector<ScalarPoly> out;
    for (std::size_t j = 0; j < denom.size(); ++j) {
        ScalarPoly fj = denom[j].poly_pow();
        ScalarPoly gj = ScalarPoly::constant(Scalar(1));
        for (std::size_t i = 0; i < denom.size(); ++i)
            if (i != j) gj = gj * denom[i].poly_pow();
        auto [g, u, v] = ScalarPoly::ext_gcd(gj, fj);
        (void)v;
        if (g.degree() != 0) throw internal_error("denominator factors are not coprime");
        // u*gj == 1 mod fj, so the residue of num at this factor is num*u mod fj
        out.push_back(ScalarPoly::divrem(num * u, fj).second);
    }
    return out;
}

void MatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

MatPoly MatPoly::constant(Mat m) {
    if (!m.is_square()) throw internal_error("matrix polynomial coefficients must be square");
    MatPoly p(m.rows(), m.tag());
    p.c_.push_back(std::move(m));
    p.trim();
    return p;
}

MatPoly MatPoly::from_coeffs(std::vector<Mat> coeffs) {
    if (coeffs.empty()) throw internal_error("from_coeffs needs at least one coefficient");
    MatPoly p(coeffs[0].rows(), coeffs[0].tag());
    for (const auto& m : coeffs)
        if (!m.is_square() || m.rows() != p.n_ || m.tag() != p.tag_)
            throw internal_error("inconsistent matrix polynomial coefficients");
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Mat MatPoly::coeff(int k) const {
    if (k < 0 || k >= int(c_.size())) return Mat::zero(n_, n_, tag_);
    return c_[k];
}

const Mat& MatPoly::leading() const {
    if (c_.empty()) throw internal_error("leading coefficient of zero matrix polynomial");
    return c_.back();
}

void MatPoly::set_coeff(int k, Mat m) {
    if (m.rows() != n_ || m.cols() != n_ || m.tag() != tag_)
        throw internal_error("coefficient shape mismatch");
    if (k >= int(c_.size())) c_.resize(k + 1, Mat::zero(n_, n_, tag_));
    c_[k] = std::move(m);
    trim();
}

bool MatPoly::operator==(const MatPoly& o) const {
    return n_ == o.n_ && tag_ == o.tag_ && c_ == o.c_;
}

void MatPoly::check_compat(const MatPoly& o) const {
    if (n_ != o.n_ || tag_ != o.tag_) throw internal_error("matrix polynomial shape mismatch");
}

MatPoly MatPoly::operator-() const {
    MatPoly r = *this;
    for (auto& m : r.c_) m = -m;
    return r;
}

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
    a.check_compat(b);
    MatPoly r(a.n_, a.tag_);
    int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k) r.c_.push_back(a.coeff(k) + b.coeff(k));
    r.trim();
    return r;
}

MatPoly operator-(const MatPoly& a, const MatPoly& b) { return a + (-b); }

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
    a.check_compat(b);
    MatPoly r(a.n_, a.tag_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Mat::zero(a.n_, a.n_, a.tag_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

MatPoly operator*(const Mat& a, const MatPoly& b) {
    MatPoly r(b.n_, b.tag_);
    for (const auto& m : b.c_) r.c_.push_back(a * m);
    r.trim();
    return r;
}

MatPoly operator*(const MatPoly& a, const Mat& b) {
    MatPoly r(a.n_, a.tag_);
    for (const auto& m : a.c_) r.c_.push_back(m * b);
    r.trim();
    return r;
}

MatPoly MatPoly::scaled(const Scalar& s) const {
    MatPoly r = *this;
    for (auto& m : r.c_) m.scale(s);
    r.trim();
    return r;
}

MatPoly MatPoly::scaled(const ScalarPoly& s) const {
    MatPoly r(n_, tag_);
    if (s.is_zero() || is_zero()) return r;
    r.c_.assign(c_.size() + s.degree(), Mat::zero(n_, n_, tag_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (int j = 0; j <= s.degree(); ++j) {
            Mat term = c_[i];
            term.scale(s.coeff(j));
            r.c_[i + j] += term;
        }
    r.trim();
    return r;
}

Mat MatPoly::eval(const Scalar& t) const {
    Mat v = Mat::zero(n_, n_, tag_);
    for (int k = degree(); k >= 0; --k) {
        v.scale(t);
        v += c_[k];
    }
    return v;
}

MatPoly MatPoly::star(Involution inv) const {
    MatPoly r(n_, tag_);
    for (const auto& m : c_) r.c_.push_back(m.star(inv));
    r.trim();
    return r;
}

MatPoly MatPoly::compose_linear(const Scalar& x, const Scalar& y) const {
    ScalarPoly lin({x, y});
    MatPoly r(n_, tag_);
    for (int k = degree(); k >= 0; --k) r = r.scaled(lin) + constant(c_[k]);
    return r;
}

std::pair<MatPoly, MatPoly> MatPoly::divrem(const MatPoly& a, const ScalarPoly& f) {
    if (f.is_zero()) throw internal_error("matrix polynomial division by zero");
    Scalar lead_inv = f.leading().inv();
    int df = f.degree();
    MatPoly q(a.n_, a.tag_), r = a;
    while (r.degree() >= df) {
        int k = r.degree() - df;
        Mat top = r.c_.back();
        top.scale(lead_inv);
        q.set_coeff(k, top);
        for (int j = 0; j <= df; ++j) {
            Mat sub = top;
            sub.scale(f.coeff(j));
            r.c_[k + j] -= sub;
        }
        r.trim();
    }
    return {q, r};
}

bool MatPoly::divisible_by(const ScalarPoly& f) const {
    return divrem(*this, f).second.is_zero();
}

std::ostream& operator<<(std::ostream& os, const MatPoly& p) {
    if (p.is_zero()) return os << "0";
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) os << " + ";
        os << "t^" << k << "*" << p.coeff(k);
    }
    return os;
}

}  // namespace curvefactor
