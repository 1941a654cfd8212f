#pragma once

#include <map>
#include <shared_mutex>
#include <vector>

#include "cubforge/partition.hpp"
#include "cubforge/rational.hpp"

namespace cubforge {

// Exponent gamma of the weight xi^gamma on the homogeneous simplex.
// Anything rational > -1 is accepted; the built-in surveys only exercise
// 0 and -1/2.
class WeightExponent {
public:
    WeightExponent() : value_(0) {}
    explicit WeightExponent(Rational g);

    const Rational& value() const { return value_; }
    bool operator==(const WeightExponent& o) const { return value_ == o.value_; }
    bool operator<(const WeightExponent& o) const { return value_ < o.value_; }

    static WeightExponent unit() { return WeightExponent(Rational(0)); }
    static WeightExponent chebyshev() { return WeightExponent(make_rational(-1, 2)); }

private:
    Rational value_;
};

// Normalized moment of xi^alpha against w_gamma xi^gamma on the homogeneous
// simplex T^{d+1}:
//   m_alpha = prod_i (gamma+1)_{alpha_i} / ((gamma+1)(d+1))_{|alpha|}.
// alpha must have d+1 entries >= 0.
Rational monomial_moment(const std::vector<int>& alpha, int d, const WeightExponent& gamma);

// Same moment keyed by the multiset of nonzero exponents: every monomial of
// S_l has moment monomial_moment_of_partition(l).
Rational monomial_moment_of_partition(const Partition& l, int d, const WeightExponent& gamma);

// Number of distinct monomials of S_l in d+1 variables:
// (d+1)! / ((d+1-r)! * prod(run lengths)!), zero when r > d+1.
Integer monomial_count(const Partition& l, int d);

// m_l = w_gamma * integral of S_l(xi) xi^gamma over T^{d+1}
//     = monomial_count(l) * monomial_moment. Zero (a value, not an error)
// when l has more parts than coordinates.
Rational partition_integral(const Partition& l, int d, const WeightExponent& gamma);

// Moment of x^alpha against the normalized measure sigma_d on the sphere S^d
// (ambient dimension d+1): zero for odd alpha, else the Chebyshev-weight
// simplex moment of alpha/2.
Rational sphere_monomial_moment(const std::vector<int>& alpha, int d);

// Per-(d, gamma) concurrent cache of partition integrals. Fills are
// idempotent, so readers never see a wrong value.
class MomentTable {
public:
    MomentTable(int d, WeightExponent gamma) : d_(d), gamma_(std::move(gamma)) {}

    int dimension() const { return d_; }
    const WeightExponent& gamma() const { return gamma_; }

    Rational of_partition(const Partition& l) const;
    Rational of_monomial(const std::vector<int>& alpha) const;

private:
    int d_;
    WeightExponent gamma_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::vector<int>, Rational> cache_;
};

}  // namespace cubforge
