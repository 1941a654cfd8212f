#pragma once

#include <map>
#include <optional>

#include "cubforge/design.hpp"
#include "cubforge/rule.hpp"

namespace cubforge {

// Count-only reduction descriptors: enough structure for the size
// arithmetic and the type checks, no incidence data.
struct DesignSpec {
    int v = 0, k = 0, t = 0;
    long lambda = 0;
};

struct OASpec {
    long rows = 0;
    int columns = 0, strength = 0;
    bool antipodal = false;
};

struct ReductionSpec {
    std::optional<DesignSpec> design;  // replaces the permutation factor
    std::optional<OASpec> oa;          // replaces the sign factor
};

// Replace assigned two-valued permutation orbits of an index-t simplex rule
// by the columns of (block -> alpha, complement -> beta) over the design's
// blocks, weight lambda_i / b_i each. The result is re-verified for index-t
// exactness before it is returned. Keys are node indices into rule.nodes().
CubatureRule victoir_simplex(const CubatureRule& rule,
                             const std::map<std::size_t, CombinatorialDesign>& assignments);

// Replace the sign factor of assigned orbits of a sign-invariant
// degree-(2t+1) sphere rule by the rows of an orthogonal array with
// tau(x_i) columns and strength 2t+1 (or 2t with the antipodal property).
// Exactness is re-verified when the monomial basis is small enough;
// otherwise the result carries "reduced-unverified" provenance.
CubatureRule victoir_sphere(const CubatureRule& rule,
                            const std::map<std::size_t, OrthogonalArray>& assignments);

// Node count of the reduced rule, computed arithmetically from the
// block-count identity and the OA row counts, without constructing nodes.
Integer reduced_node_count(const CubatureRule& rule,
                           const std::map<std::size_t, ReductionSpec>& assignments);

}  // namespace cubforge
