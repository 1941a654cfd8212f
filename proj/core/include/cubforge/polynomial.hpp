#pragma once

#include <optional>
#include <vector>

#include "cubforge/exact_scalar.hpp"

namespace cubforge {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// Just enough arithmetic for eliminating the free parameter out of the
// weight solutions; not a general-purpose polynomial type.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator*(const Rational& v) const;

    ExactScalar eval(const ExactScalar& x) const;

    // Divides out x^k for the largest k with zero low coefficients; returns k.
    int strip_zero_roots();

    // Exact division by (x - root); remainder must vanish.
    RationalPoly deflate(const Rational& root) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Roots of a polynomial inside Q(sqrt(D)): exact rational roots plus
// quadratic-surd roots of the quadratic factor when the polynomial has
// degree <= 2 after stripping rational roots. Returns nullopt if irreducible
// content of degree > 2 remains (the root is not representable here).
std::optional<std::vector<ExactScalar>> quadratic_field_roots(const RationalPoly& p);

}  // namespace cubforge
