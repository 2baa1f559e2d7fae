#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace curvefactor {

// Error taxonomy used across the library.  The CLI maps these to exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct schema_error : error {        // malformed input documents / arguments
    using error::error;
};
struct factor_error : error {        // denominator factor with nonnegative discriminant etc.
    using error::error;
};
struct membership_error : error {    // algebraic identity fails (not a member, not a curve)
    using error::error;
};
struct constraint_error : error {    // constructor parameter outside its admissible set
    using error::error;
};
struct internal_error : error {      // invariant the library itself guarantees was violated
    using error::error;
};

// Exact element a + b*sqrt(d) of a real quadratic extension of Q.
// d is a squarefree integer >= 2; plain rationals carry d == 1 and b == 0, and
// combine with any extension.  Mixing two distinct extensions throws.
class Scalar {
  public:
    Scalar() : d_(1) {}
    Scalar(long n) : a_(n), d_(1) {}
    Scalar(long num, unsigned long den) : a_(num, den), d_(1) { a_.canonicalize(); }
    explicit Scalar(const mpq_class& a) : a_(a), d_(1) {}
    Scalar(mpq_class a, mpq_class b, long d);

    // sqrt(d) itself
    static Scalar root(long d) { return Scalar(0, 1, d); }
    // parses "n", "n/m", "n/m+n/m*s", "n/m-n/m*s", "s", "-s", "n/m*s";
    // "s" denotes sqrt(base_ext)
    static Scalar parse(const std::string& text, long base_ext = 2);

    const mpq_class& rat() const { return a_; }
    const mpq_class& irr() const { return b_; }
    long ext() const { return d_; }
    bool is_rational() const { return d_ == 1; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // exact sign of the real number a + b*sqrt(d)
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    Scalar inv() const;

    bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // total order on the reals they represent
    bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }

    double to_double() const;
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

  private:
    mpq_class a_;  // rational part
    mpq_class b_;  // coefficient of sqrt(d); zero iff d_ == 1
    long d_;

    // unifies extensions for a binary op; throws on genuine mismatch
    static long join(long d1, long d2);
    void normalize();
};

// throws schema_error unless d is squarefree and >= 2
void validate_extension(long d);

// Exact square root within Q(sqrt d) when one exists: rational result, or a
// pure multiple of sqrt(ext_hint).  Inputs with an irrational part are not
// attempted.
std::optional<Scalar> scalar_sqrt(const Scalar& x, long ext_hint = 0);

}  // namespace curvefactor
