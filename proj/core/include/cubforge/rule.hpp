#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubforge/moments.hpp"
#include "cubforge/orbit.hpp"

namespace cubforge {

enum class Domain { SimplexT, Sphere };
const char* to_string(Domain d);
Domain domain_from_string(const std::string& s);

struct Exactness {
    enum class Kind { Index, Degree };
    Kind kind = Kind::Index;
    int value = 0;

    static Exactness index(int t) { return {Kind::Index, t}; }
    static Exactness degree(int n) { return {Kind::Degree, n}; }
    bool operator==(const Exactness&) const = default;
    std::string str() const;
};

class RuleConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A positive symmetric cubature rule. Node weights are per-orbit totals:
// applying the rule to f sums weight * (orbit average of f), so the weights
// of a normalized rule sum to 1.
class CubatureRule {
public:
    struct Node {
        OrbitPoint point;
        ExactScalar weight;
    };

    CubatureRule(Domain domain, int d, WeightExponent gamma, Exactness exactness,
                 std::vector<Node> nodes, std::string provenance = "");

    Domain domain() const { return domain_; }
    int dimension() const { return d_; }          // the d of T^d / S^d
    int ambient() const { return d_ + 1; }        // coordinate count
    const WeightExponent& gamma() const { return gamma_; }
    const Exactness& exactness() const { return exactness_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }

    Integer node_count() const;

    ExactScalar weight_sum() const;

    bool all_weights_positive() const;

    // True when every orbit is symbolic under the full symmetric (or signed
    // symmetric) group, enabling the invariant-polynomial verification path.
    bool is_fully_symmetric() const;

    // Rule applied to the monomial x^alpha (exact). On the sphere, alpha acts
    // on the actual coordinates; odd monomials are exact zeros for sign-
    // invariant rules. Throws for explicit signed nodes with odd exponents
    // (the verifier handles those via radical-sum accumulation).
    ExactScalar apply_monomial(const std::vector<int>& alpha) const;

    // Rule applied to the invariant polynomial S_l (S_l of the squared
    // coordinates on the sphere). Requires is_fully_symmetric().
    ExactScalar apply_symmetric(const Partition& l) const;

private:
    Domain domain_;
    int d_;
    WeightExponent gamma_;
    Exactness exactness_;
    std::vector<Node> nodes_;
    std::string provenance_;
};

// --- transforms (Section-2 machinery) ---

// Relabel an index-t simplex rule as a degree-t rule on T^d and back.
// Nodes stay in homogeneous coordinates; the inhomogeneous form drops the
// last coordinate on output only. Sphere rules are rejected.
CubatureRule index_to_degree(const CubatureRule& rule);
CubatureRule degree_to_index(const CubatureRule& rule);

// Index-n simplex rule -> degree-(2n+1) sphere rule for the weight
// prod |x_i|^{2 gamma + 1}; representatives keep their (now squared)
// coordinates exactly. Requires nonnegative simplex coordinates.
CubatureRule simplex_to_sphere(const CubatureRule& rule);

// Inverse of simplex_to_sphere: degree-(2n+1) sign-invariant sphere rule ->
// index-n simplex rule.
CubatureRule sphere_to_simplex(const CubatureRule& rule);

// Centrally symmetric degree-(2t+1) sphere rule -> index-2t rule keeping one
// node per antipodal pair; each pair's weight concentrates on its
// representative. Rejects rules that are not centrally symmetric.
CubatureRule antipodal_reduce(const CubatureRule& rule);

}  // namespace cubforge
