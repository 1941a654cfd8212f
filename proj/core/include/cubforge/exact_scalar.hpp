#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cubforge/rational.hpp"

namespace cubforge {

// Raised when two scalars over distinct quadratic extensions meet in one
// arithmetic expression. A single rule never mixes two surds, so this is
// a hard error rather than an extension-tower case.
class MixedDiscriminantError : public std::domain_error {
public:
    MixedDiscriminantError(const Integer& d1, const Integer& d2)
        : std::domain_error("cannot combine sqrt(" + d1.get_str() +
                            ") with sqrt(" + d2.get_str() + ")") {}
};

// Element of Q or Q(sqrt(D)) for a squarefree D > 1, stored as a + b*sqrt(D).
// Canonical form: b == 0 implies D == 0; square factors of D are folded into
// b at construction, and a perfect-square D collapses to a plain rational.
// Values are immutable in spirit: every operation returns a new scalar.
class ExactScalar {
public:
    ExactScalar() : a_(0), b_(0), d_(0) {}
    ExactScalar(const Rational& q) : a_(q), b_(0), d_(0) {}  // NOLINT: implicit by design
    ExactScalar(long n) : a_(n), b_(0), d_(0) {}             // NOLINT

    // a + b*sqrt(D); requires D >= 0. sqrt of a perfect square is folded
    // into the rational part.
    static ExactScalar make(const Rational& a, const Rational& b, const Integer& D);

    static ExactScalar sqrt_of(const Integer& D) { return make(0, 1, D); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    const Integer& discriminant() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // The rational value; throws if a surd part is present.
    const Rational& as_rational() const;

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
    friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
    friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }

    bool operator==(const ExactScalar& o) const {
        return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
    }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    // Exact sign in {-1, 0, +1}; decided by comparing a^2 against b^2 D when
    // the two halves disagree in sign. Never touches floating point.
    int sign() const;

    bool operator<(const ExactScalar& o) const { return (*this - o).sign() < 0; }
    bool operator>(const ExactScalar& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const ExactScalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const ExactScalar& o) const { return (*this - o).sign() >= 0; }

    ExactScalar pow(unsigned long e) const;

    // Multiplicative inverse; throws std::domain_error on zero.
    ExactScalar inverse() const;

    // "p/q" or "p/q + r/s*sqrt(D)" / "p/q - r/s*sqrt(D)". Round-trips
    // exactly through parse().
    std::string str() const;
    static ExactScalar parse(const std::string& text);

    // Decimal approximation for display only; never used in rule math.
    double approx() const;

private:
    ExactScalar(Rational a, Rational b, Integer d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    // Discriminant the result of combining with `o` lives in.
    const Integer& joint_discriminant(const ExactScalar& o) const;

    Rational a_, b_;
    Integer d_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

inline int sign(const ExactScalar& x) { return x.sign(); }

}  // namespace cubforge
