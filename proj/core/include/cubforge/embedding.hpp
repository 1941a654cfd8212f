#pragma once

#include <string>
#include <vector>

#include "cubforge/rule.hpp"

namespace cubforge {

// Isometric embedding l_2^n -> l_{2t}^N extracted from a positive index-2t
// cubature rule on the sphere S^{n-1}: r_i = (lambda_i / c_t)^{1/2t} x_i.
// The 2t-th root is never materialized; each form is kept as the pair
// (scale = per-node weight / c_t, node), so that <x, r_i>^{2t} expands to
// scale * <x, x_i>^{2t} exactly.
struct EmbeddingSpec {
    int source_dimension = 0;  // n
    int power = 0;             // 2t
    Rational constant;         // c_t
    struct FormOrbit {
        ExactScalar scale;  // lambda_orbit / (podal count * c_t)
        OrbitPoint point;
    };
    std::vector<FormOrbit> forms;
    Integer form_count;  // N

    std::string str() const;
};

// c_t = (2t-1)!! (n-2)!! / (n+2t-2)!!, the normalized sphere moment of
// y_1^{2t} in n ambient coordinates.
Rational embedding_constant(int ambient, int t);

// Requires a positive index-2t sphere rule; rejects nonpositive weights
// (even 2t-th roots would not exist).
EmbeddingSpec extract_embedding(const CubatureRule& rule);

// Exact certification of sum_i <x, r_i>^{2t} = <x,x>^t by full polynomial
// expansion. Returns an empty string on success, else the witness monomial.
std::string certify_embedding(const EmbeddingSpec& spec);

}  // namespace cubforge
