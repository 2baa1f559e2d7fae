#include "curvefactor/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace curvefactor {

void validate_extension(long d) {
    if (d < 2) throw schema_error("quadratic extension base must be >= 2, got " + std::to_string(d));
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0)
            throw schema_error("quadratic extension base must be squarefree, got " + std::to_string(d));
    }
}

Scalar::Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ != 0) validate_extension(d_);
    normalize();
}

void Scalar::normalize() {
    if (b_ == 0) d_ = 1;
}

long Scalar::join(long d1, long d2) {
    if (d1 == d2 || d2 == 1) return d1;
    if (d1 == 1) return d2;
    throw constraint_error("mixing distinct quadratic extensions sqrt(" + std::to_string(d1) +
                           ") and sqrt(" + std::to_string(d2) + ")");
}

int Scalar::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with d b^2; equality is impossible for
    // squarefree d >= 2 and b != 0, but fall through to 0 defensively
    mpq_class lhs = a_ * a_, rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return (c > 0) ? sa : sb;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = join(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = join(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    long d = join(d_, o.d_);
    mpq_class a = a_ * o.a_;
    if (b_ != 0 && o.b_ != 0) a += b_ * o.b_ * d;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    normalize();
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw error("division by zero scalar");
    if (b_ == 0) return Scalar(mpq_class(1 / a_));
    mpq_class n = a_ * a_ - b_ * b_ * d_;  // nonzero: sqrt(d) is irrational
    return Scalar(a_ / n, -b_ / n, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

double Scalar::to_double() const {
    double v = a_.get_d();
    if (b_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

std::string Scalar::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    if (s.irr() == 0) return os << s.rat();
    if (s.rat() != 0) {
        os << s.rat();
        os << (sgn(s.irr()) < 0 ? "-" : "+");
        os << mpq_class(abs(s.irr())) << "*s";
    } else {
        os << s.irr() << "*s";
    }
    return os;
}

namespace {

// parses a signed rational "n" or "n/m"; advances pos past it
mpq_class parse_rat(const std::string& text, size_t& pos) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++digits;
    if (digits == 0) throw schema_error("bad scalar literal: '" + text + "'");
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t den_digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++den_digits;
        if (den_digits == 0) throw schema_error("bad scalar literal: '" + text + "'");
    }
    mpq_class q;
    std::string body = text.substr(start, pos - start);
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    if (q.set_str(body, 10) != 0) throw schema_error("bad scalar literal: '" + text + "'");
    if (q.get_den() == 0) throw schema_error("zero denominator in scalar literal: '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& raw, long base_ext) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw schema_error("empty scalar literal");

    size_t pos = 0;
    mpq_class a = 0, b = 0;

    auto at_root = [&](size_t p) { return p < text.size() && text[p] == 's'; };

    // leading bare root: "s", "-s", "+s"
    size_t after_sign = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (at_root(after_sign) && after_sign + 1 == text.size()) {
        b = (text[0] == '-') ? -1 : 1;
        return Scalar(a, b, base_ext);
    }

    mpq_class first = parse_rat(text, pos);
    if (pos < text.size() && text[pos] == '*') {
        if (!at_root(pos + 1) || pos + 2 != text.size())
            throw schema_error("bad scalar literal: '" + raw + "'");
        return Scalar(a, first, base_ext);
    }
    a = first;
    if (pos == text.size()) return Scalar(a);

    // remainder must be "+q*s" / "-q*s" / "+s" / "-s"
    if (text[pos] != '+' && text[pos] != '-') throw schema_error("bad scalar literal: '" + raw + "'");
    if (at_root(pos + 1) && pos + 2 == text.size()) {
        b = (text[pos] == '-') ? -1 : 1;
        return Scalar(a, b, base_ext);
    }
    b = parse_rat(text, pos);
    if (!(pos + 2 == text.size() && text[pos] == '*' && at_root(pos + 1)))
        throw schema_error("bad scalar literal: '" + raw + "'");
    return Scalar(a, b, base_ext);
}

namespace {

// sqrt of a nonnegative rational when it is rational: sqrt(n/m) = sqrt(nm)/m.
std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class nm = q.get_num() * q.get_den();
    if (!mpz_perfect_square_p(nm.get_mpz_t())) return std::nullopt;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), nm.get_mpz_t());
    mpq_class res(root, q.get_den());
    res.canonicalize();
    return res;
}

}  // namespace

std::optional<Scalar> scalar_sqrt(const Scalar& x, long ext_hint) {
    if (!x.is_rational()) return std::nullopt;
    if (x.sign() < 0) return std::nullopt;
    if (auto r = rational_sqrt(x.rat())) return Scalar(*r);
    long d = ext_hint >= 2 ? ext_hint : x.ext();
    if (d >= 2) {
        // x = (b sqrt d)^2  <=>  x/d is a rational square
        if (auto b = rational_sqrt(x.rat() / d)) return Scalar(mpq_class(0), *b, d);
    }
    return std::nullopt;
}

}  // namespace curvefactor
