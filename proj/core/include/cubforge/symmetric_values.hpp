#pragma once

#include <vector>

#include "cubforge/exact_scalar.hpp"
#include "cubforge/partition.hpp"

namespace cubforge {

// S_l(v_k) for v_k = (1,...,1,0,...,0) with k ones:
//   binom(k, r) * r! / prod(run lengths)!
// Zero when k < r.
Integer s_value_at_vk(const Partition& l, long k);

// S_l(u_{a,p}) for u_{a,p} = (a, 1,...,1, 0,...,0) with p ones. Exact for
// any a, including quadratic surds.
ExactScalar s_value_at_u(const Partition& l, const ExactScalar& a, int p);

// Coefficients of S_l(u_{a,p}) as a polynomial in a (index = power of a).
std::vector<Rational> s_value_at_u_poly(const Partition& l, int p);

// A point described by its multiset of coordinate values.
struct ValueClass {
    ExactScalar value;
    int count;
};

// Independent evaluation route: S_l at the point whose coordinates form the
// given multiset, by distributing the parts of l over the value classes.
// Agrees with s_value_at_vk / s_value_at_u on their special points.
ExactScalar msp_eval(const Partition& l, const std::vector<ValueClass>& classes);

// Sum of x^alpha over all distinct arrangements of the value multiset
// (the permutation orbit of the point). alpha.size() must equal the total
// coordinate count.
ExactScalar perm_monomial_sum(const std::vector<int>& alpha,
                              const std::vector<ValueClass>& classes);

// Number of distinct arrangements of the multiset.
Integer arrangement_count(const std::vector<ValueClass>& classes);

}  // namespace cubforge
