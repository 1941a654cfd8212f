#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cubforge {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (lowest terms, positive denominator), which is exactly the
// representation contract the rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p" for integers, "p/q" otherwise. Round-trips exactly through
// parse_rational.
std::string to_string(const Rational& q);

// Accepts "p" and "p/q" with optional sign. Throws std::invalid_argument
// on malformed input.
Rational parse_rational(const std::string& text);

inline int sign(const Rational& q) { return sgn(q); }

Integer factorial(unsigned long n);
Integer binomial(const Integer& n, unsigned long k);
Integer binomial(long n, long k);

// Rising factorial (x)_n = x(x+1)...(x+n-1).
Rational pochhammer(const Rational& x, unsigned long n);

// n!! with (-1)!! = 0!! = 1.
Integer double_factorial(long n);

// Largest s with s^2 | n, so n = s^2 * squarefree. n must be positive.
// Returns {s, squarefree part}.
struct SquarefreeSplit {
    Integer root;
    Integer squarefree;
};
SquarefreeSplit squarefree_split(const Integer& n);

// True iff n is a perfect square; if so *root is set.
bool perfect_square(const Integer& n, Integer* root = nullptr);

}  // namespace cubforge
