#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubforge/rule.hpp"

namespace cubforge {

// Exact accumulator for sums of terms q * sqrt(D) with mixed squarefree D
// (D = 1 for the rational part). Distinct surds are linearly independent
// over Q, so the sum is zero iff every coefficient is zero. Used by the
// verifier for explicit sphere nodes, whose odd monomials evaluate to
// rational multiples of square roots.
class SurdSum {
public:
    void add_rational(const Rational& q);
    void add_sqrt(const Rational& coefficient, const Rational& radicand);
    void add(const ExactScalar& x);

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()
    std::string str() const;

private:
    std::vector<std::pair<Integer, Rational>> terms_;  // squarefree D -> coefficient
};

enum class VerifyMethod {
    Auto,        // invariant path for fully symmetric rules, else monomials
    Partitions,  // Sobolev route: S_l moments over partitions
    Monomials,   // full monomial basis, orbit sums
};

struct VerifyReport {
    bool pass = false;
    Exactness checked;
    std::string method;                    // "partitions" or "monomials"
    Integer cases_checked = 0;
    std::string witness;                   // first failing monomial/partition
    std::string witness_detail;            // expected vs computed

    std::string summary() const;
};

// Exactness of an index-form rule on all homogeneous polynomials of degree
// t: via invariant polynomials (Sobolev) for fully symmetric rules, or the
// full monomial basis otherwise. Failure is a report, never an exception.
VerifyReport verify_index_exactness(const CubatureRule& rule, int t,
                                    VerifyMethod method = VerifyMethod::Auto,
                                    int threads = 0);

// Degree-form verification: every total degree m <= n (simplex: the
// homogeneous lift of each degree; sphere: all monomials, odd degrees must
// vanish).
VerifyReport verify_degree_exactness(const CubatureRule& rule, int n,
                                     VerifyMethod method = VerifyMethod::Auto,
                                     int threads = 0);

// Verify the rule at its stated exactness.
VerifyReport verify_rule(const CubatureRule& rule, VerifyMethod method = VerifyMethod::Auto,
                         int threads = 0);

// Checks the stated exactness passes and value+1 fails.
struct SharpnessReport {
    VerifyReport at_stated;
    VerifyReport above;
    bool sharp() const { return at_stated.pass && !above.pass; }
};
SharpnessReport verify_sharpness(const CubatureRule& rule, int threads = 0);

// Number of monomial evaluations a full monomial check at the given
// exactness would need; the reduction budget in victoir_sphere.
Integer monomial_check_cost(int ambient, const Exactness& exactness);

}  // namespace cubforge
