#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubforge/rule.hpp"

namespace cubforge {

// Index-4 construction problem: q = 4 vertex-orbit classes v_{k_j} plus the
// off-family point u_{a,p} = (a,1,...,1,0,...,0) with p ones. The parameter a
// is exogenous; the linear system determines A_1..A_5.
struct Degree4Problem {
    int d = 3;
    WeightExponent gamma;
    std::array<int, 4> ks{};  // distinct, 1 <= k <= d+1
    int p = 1;                // 1 <= p <= d
    ExactScalar a;            // a > 0, a != 1
};

// Index-5 problem: five vertex classes; a is determined by the moments.
struct Degree5Problem {
    int d = 3;
    WeightExponent gamma;
    std::array<int, 5> ks{};
    int p = 2;
};

struct SolveResult {
    ExactScalar a;
    std::vector<ExactScalar> coefficients;  // A_j then A_{q+1}
    std::vector<ExactScalar> lambdas;       // lambda_j = A_j k_j^t, last = u slot
    bool positive = false;                  // all lambdas >= 0 (exact zeros allowed)
    std::vector<int> negative_slots;        // 1-based slots with negative weight
    std::optional<CubatureRule> rule;       // assembled iff positive
};

// A_5 = (m_{3,1} - 2 m_{2,2}) / (a (a-1)^2 p); rejects a in {0,1}.
ExactScalar a5_weight(int d, const WeightExponent& gamma, int p, const ExactScalar& a);

// Derived degree-5 parameters:
//   a  = (p-1)/2 * (m_{4,1}-m_{3,2}) / (m_{3,1,1}-m_{2,2,1}) - 1
//   A6 = (m_{4,1}-m_{3,2}) / (p a (a-1)^2 (a+1))
// Throws when a degenerates to {0, +-1}.
std::pair<ExactScalar, ExactScalar> degree5_parameters(int d, const WeightExponent& gamma,
                                                       int p);

// Solve the index-4 (resp. index-5) moment system exactly. Duplicate k
// classes (m = d+1 colliding with the centroid) are merged before solving;
// the merged coefficient is reported under the smaller slot and the later
// slot reads 0. The assembled rule drops exact-zero orbits.
SolveResult solve_degree4(const Degree4Problem& problem);
SolveResult solve_degree5(const Degree5Problem& problem);

// Build the rescaled index-t rule from solved orbit coefficients: nodes
// v_{k_j}/k_j and u_{a,p}/(a+p) with weights A_j k_j^t and A_u (a+p)^t.
// Zero-weight orbits are dropped, duplicate orbits merged; a negative weight
// raises RuleConstructionError naming the orbit.
CubatureRule assemble_rule(int d, const WeightExponent& gamma, int t,
                           const std::vector<int>& ks, int p, const ExactScalar& a,
                           const std::vector<ExactScalar>& A);

// --- index-6 obstruction ---

struct ObstructionReport {
    WeightExponent gamma;
    ExactScalar forced_a;           // from the {4,1,1}/{3,2,1}/{2,2,2} relations
    std::array<Integer, 3> quadratic;  // q2 a^2 + q1 a + q0 = 0, primitive, q2 > 0
    enum class Verdict { Consistent, Inconsistent, NoRealRoot } verdict;

    std::string quadratic_str() const;
    std::string summary() const;
};

// Eliminates the free coefficient out of the six-moment equations for the
// two- and three-part partitions of 6. Any cubature rule of this nodal form
// with index 6 would force `a` to be both the listed value and a root of the
// quadratic; verdicts Inconsistent / NoRealRoot certify nonexistence.
ObstructionReport index6_obstruction(const WeightExponent& gamma);

// --- degree-4 positivity obstruction certificate ---

struct P4Certificate {
    int d;
    WeightExponent gamma;
    Rational coeff_31;   // coefficient on S_{3,1}
    Rational coeff_22;   // coefficient on S_{2,2}
    Rational integral;   // of P4 against xi^gamma; exactly 0
    std::vector<Rational> orbit_values;  // P4(v_k), k = 1..d+1; all > 0

    bool valid() const;
};

// P4 = S_{4} + a S_{3,1} + b S_{2,2} with a = -4(g+4)/(d(g+1)),
// b = 6(g+3)(g+4)/(d(g+1)(g+2)): an orthogonal polynomial whose strict
// positivity on every vertex orbit certifies that rules using only those
// orbits cannot be positive at degree >= 4.
P4Certificate p4_certificate(int d, const WeightExponent& gamma);

// --- parameter families for the positive-rule search ---

// Closed-form candidates for the free parameter a, one id per survey family;
// see family_ids() for the list. Unknown ids throw std::invalid_argument.
ExactScalar candidate_a(const std::string& family, int d, int m, int p);
std::vector<std::string> family_ids();

// Values of a that zero the weight of slot `zero_slot` (1-based among the
// four k classes) in the degree-4 system, when those roots live in a real
// quadratic field. nullopt when the eliminant has no representable root
// (higher-degree algebraic numbers).
std::optional<std::vector<ExactScalar>> zero_weight_roots(int d,
                                                          const WeightExponent& gamma,
                                                          const std::array<int, 4>& ks,
                                                          int p, int zero_slot);

// --- search driver ---

struct SearchHit {
    int d = 0;
    std::string family;
    int m = 0;
    int p = 0;
    ExactScalar a;
    SolveResult solution;
};

struct SearchOptions {
    int degree = 4;  // 4 or 5
    WeightExponent gamma;
    int d_low = 3, d_high = 17;
    std::vector<std::string> families;     // degree-4 family ids; empty = all for gamma
    std::vector<ExactScalar> extra_a_grid; // additional a values, tried on every family
    int threads = 0;                       // 0 = hardware default
};

// Deterministic enumeration over the family grid; returns positive rules
// sorted by (d, family, m, p, a). Degree 5 enumerates the full
// (p, m) grid per dimension (families/extra grid do not apply: a is forced).
std::vector<SearchHit> search_positive(const SearchOptions& options);

// Built-in degree-5 parameter cases known to give positive rules, one per
// dimension, matching the reference survey.
struct Degree5Case {
    int d, p, m;
};
std::vector<Degree5Case> reference_degree5_cases(const WeightExponent& gamma);

}  // namespace cubforge
