#pragma once

#include <string>
#include <vector>

#include "cubforge/exact_scalar.hpp"
#include "cubforge/symmetric_values.hpp"

namespace cubforge {

enum class OrbitGroup {
    Permutation,             // A_d orbit of the representative (simplex)
    SignedPermutation,       // B_{d+1}: permutations x sign flips (sphere)
    SignedPermutationPodal,  // one node per antipodal pair of a B-orbit
    SignOrbit,               // Z_2^{d+1} orbit only (sphere)
    SignOrbitPodal,          // one node per antipodal pair of a sign orbit
    Explicit,                // a single simplex point
    ExplicitSigned,          // a single sphere point: squared coords + signs
};

const char* to_string(OrbitGroup g);
OrbitGroup orbit_group_from_string(const std::string& s);

bool is_signed_group(OrbitGroup g);
bool is_podal_group(OrbitGroup g);

// A node orbit. For sphere domains the representative holds the *squared*
// coordinates; no irrational coordinate is ever materialized. Sign patterns
// are kept only for explicit sphere nodes (entries +-1; +1 at zero
// coordinates).
class OrbitPoint {
public:
    OrbitPoint() = default;
    OrbitPoint(OrbitGroup group, std::vector<ExactScalar> representative,
               std::vector<int> signs = {});

    OrbitGroup group() const { return group_; }
    const std::vector<ExactScalar>& representative() const { return rep_; }
    const std::vector<int>& signs() const { return signs_; }

    int ambient() const { return static_cast<int>(rep_.size()); }
    int tau() const { return tau_; }  // nonzero coordinate count

    // Orbit size: arrangements of the value multiset for permutation groups,
    // times 2^tau (2^{tau-1} podal) for signed groups; 1 for explicit nodes.
    Integer cardinality() const;

    // Coordinate values grouped by equality, in decreasing value order.
    const std::vector<ValueClass>& value_classes() const { return classes_; }

    // Sum of coordinates (squared coordinates on the sphere): must be 1 on
    // either domain.
    ExactScalar coordinate_sum() const;

    // Key for merging equal orbits: group tag + sorted representative
    // (+ signs for explicit nodes).
    bool same_orbit(const OrbitPoint& o) const;

    std::string str() const;

private:
    OrbitGroup group_ = OrbitGroup::Explicit;
    std::vector<ExactScalar> rep_;
    std::vector<int> signs_;
    std::vector<ValueClass> classes_;
    int tau_ = 0;
};

// Sum of x^alpha over the orbit, computed combinatorially (never by
// enumerating 2^{d+1} points). When `coords_are_squared` the representative
// entries are squared coordinates and only even exponents contribute;
// sign-ful orbits return exact zero for monomials that are odd in any
// nonzero coordinate. Odd total degree on a podal orbit is not determined
// by the squared representation and throws.
ExactScalar orbit_monomial_sum(const std::vector<int>& alpha, const OrbitPoint& point,
                               bool coords_are_squared);

}  // namespace cubforge
