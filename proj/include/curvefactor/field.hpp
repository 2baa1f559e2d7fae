#pragma once

#include "curvefactor/scalar.hpp"

#include <array>
#include <iosfwd>

namespace curvefactor {

enum class FieldTag { Real, Complex, Quaternion };

constexpr int components(FieldTag t) {
    switch (t) {
        case FieldTag::Real: return 1;
        case FieldTag::Complex: return 2;
        case FieldTag::Quaternion: return 4;
    }
    return 1;
}

const char* field_name(FieldTag t);

// Number in R, C or H with exact Scalar components on the basis 1, i, j, k.
// Components beyond the tag's rank stay zero.  Quaternion product follows the
// Hamilton convention ij = k.
class FieldElem {
  public:
    explicit FieldElem(FieldTag tag = FieldTag::Real) : tag_(tag) {}
    FieldElem(FieldTag tag, Scalar re);
    FieldElem(FieldTag tag, Scalar re, Scalar im);
    FieldElem(FieldTag tag, Scalar c0, Scalar c1, Scalar c2, Scalar c3);

    static FieldElem zero(FieldTag tag) { return FieldElem(tag); }
    static FieldElem one(FieldTag tag) { return FieldElem(tag, Scalar(1)); }
    static FieldElem unit(FieldTag tag, int k);  // basis element 1, i, j or k

    FieldTag tag() const { return tag_; }
    const Scalar& operator[](int k) const { return c_[k]; }
    Scalar& operator[](int k) { return c_[k]; }
    const Scalar& real() const { return c_[0]; }

    bool is_zero() const;
    bool is_real() const;

    FieldElem conj() const;
    Scalar norm2() const;  // x * conj(x), always a nonnegative Scalar
    FieldElem inv() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
    friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    // central scalar action
    FieldElem& scale(const Scalar& s);
    friend FieldElem operator*(const Scalar& s, FieldElem x) { return x.scale(s); }

    bool operator==(const FieldElem& o) const { return tag_ == o.tag_ && c_ == o.c_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const FieldElem& x);

  private:
    FieldTag tag_;
    std::array<Scalar, 4> c_;

    void check_tag(const FieldElem& o) const;
};

}  // namespace curvefactor
