#include "curvefactor/field.hpp"

#include <ostream>

namespace curvefactor {

const char* field_name(FieldTag t) {
    switch (t) {
        case FieldTag::Real: return "R";
        case FieldTag::Complex: return "C";
        case FieldTag::Quaternion: return "H";
    }
    return "?";
}

FieldElem::FieldElem(FieldTag tag, Scalar re) : tag_(tag) { c_[0] = std::move(re); }

FieldElem::FieldElem(FieldTag tag, Scalar re, Scalar im) : tag_(tag) {
    if (components(tag) < 2) throw constraint_error("imaginary component in a real field element");
    c_[0] = std::move(re);
    c_[1] = std::move(im);
}

FieldElem::FieldElem(FieldTag tag, Scalar c0, Scalar c1, Scalar c2, Scalar c3) : tag_(tag) {
    if (components(tag) < 4 && !(c2.is_zero() && c3.is_zero()))
        throw constraint_error("quaternion components in a non-quaternion field element");
    if (components(tag) < 2 && !c1.is_zero())
        throw constraint_error("imaginary component in a real field element");
    c_ = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
}

FieldElem FieldElem::unit(FieldTag tag, int k) {
    if (k < 0 || k >= components(tag)) throw constraint_error("basis index out of range for field");
    FieldElem x(tag);
    x.c_[k] = Scalar(1);
    return x;
}

bool FieldElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool FieldElem::is_real() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

void FieldElem::check_tag(const FieldElem& o) const {
    if (tag_ != o.tag_) throw internal_error("mixed field tags in arithmetic");
}

FieldElem FieldElem::conj() const {
    FieldElem r = *this;
    for (int k = 1; k < 4; ++k) r.c_[k] = -r.c_[k];
    return r;
}

Scalar FieldElem::norm2() const {
    Scalar n;
    for (const auto& c : c_) n += c * c;
    return n;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw error("division by zero field element");
    FieldElem r = conj();
    Scalar n = norm2().inv();
    return r.scale(n);
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    check_tag(o);
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    check_tag(o);
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
    x.check_tag(y);
    FieldElem r(x.tag_);
    switch (x.tag_) {
        case FieldTag::Real:
            r.c_[0] = x.c_[0] * y.c_[0];
            break;
        case FieldTag::Complex:
            r.c_[0] = x.c_[0] * y.c_[0] - x.c_[1] * y.c_[1];
            r.c_[1] = x.c_[0] * y.c_[1] + x.c_[1] * y.c_[0];
            break;
        case FieldTag::Quaternion: {
            const auto &a = x.c_, &b = y.c_;
            r.c_[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
            r.c_[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
            r.c_[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
            r.c_[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
            break;
        }
    }
    return r;
}

FieldElem& FieldElem::scale(const Scalar& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
    static const char* basis[4] = {"", "i", "j", "k"};
    bool any = false;
    for (int k = 0; k < components(x.tag()); ++k) {
        if (x[k].is_zero()) continue;
        if (any) os << " + ";
        os << "(" << x[k] << ")" << basis[k];
        any = true;
    }
    if (!any) os << "0";
    return os;
}

}  // namespace curvefactor
