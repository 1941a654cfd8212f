#include "cubforge/victoir.hpp"

#include <algorithm>

#include "cubforge/verification.hpp"

namespace cubforge {

namespace {

constexpr long kVerifyBudget = 1000000;  // monomial evaluations

// The two-valued structure of a v_k^{(alpha,beta)} orbit: which value sits
// on the block positions. The block class is the one whose multiplicity
// matches the design's block size; ties resolve to the larger value.
struct TwoValued {
    ExactScalar block_value, rest_value;
    int block_size = 0;
};

TwoValued split_two_valued(const OrbitPoint& point, int wanted_block_size) {
    const auto& classes = point.value_classes();
    if (classes.size() > 2)
        throw InvalidDesignError("orbit " + point.str() +
                                 " is not of two-valued type");
    if (classes.size() == 1) {
        if (classes[0].count != wanted_block_size)
            throw InvalidDesignError("orbit " + point.str() + " has block size " +
                                     std::to_string(classes[0].count) +
                                     ", design wants " +
                                     std::to_string(wanted_block_size));
        return {classes[0].value, classes[0].value, classes[0].count};
    }
    // classes are sorted by decreasing value
    if (classes[0].count == wanted_block_size)
        return {classes[0].value, classes[1].value, classes[0].count};
    if (classes[1].count == wanted_block_size)
        return {classes[1].value, classes[0].value, classes[1].count};
    throw InvalidDesignError("orbit " + point.str() + " has no value class of size " +
                             std::to_string(wanted_block_size));
}

int required_index(const CubatureRule& rule) {
    if (rule.exactness().kind != Exactness::Kind::Index)
        throw InvalidDesignError("reduction needs an index-form rule");
    return rule.exactness().value;
}

// distinct permutations of the representative, as coordinate vectors
std::vector<std::vector<ExactScalar>> distinct_arrangements(const OrbitPoint& point) {
    // permute class indices, then map back to values
    std::vector<int> pattern;
    const auto& classes = point.value_classes();
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int i = 0; i < classes[c].count; ++i) pattern.push_back(static_cast<int>(c));
    std::sort(pattern.begin(), pattern.end());
    std::vector<std::vector<ExactScalar>> out;
    do {
        std::vector<ExactScalar> coords;
        coords.reserve(pattern.size());
        for (int c : pattern) coords.push_back(classes[static_cast<std::size_t>(c)].value);
        out.push_back(std::move(coords));
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    return out;
}

}  // namespace

CubatureRule victoir_simplex(const CubatureRule& rule,
                             const std::map<std::size_t, CombinatorialDesign>& assignments) {
    if (rule.domain() != Domain::SimplexT)
        throw InvalidDesignError("victoir_simplex needs a simplex rule");
    const int t = required_index(rule);

    std::vector<CubatureRule::Node> nodes;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        const auto& node = rule.nodes()[i];
        auto it = assignments.find(i);
        if (it == assignments.end()) {
            nodes.push_back(node);
            continue;
        }
        const CombinatorialDesign& design = it->second;
        if (node.point.group() != OrbitGroup::Permutation)
            throw InvalidDesignError("design assigned to non-symmetric orbit " +
                                     node.point.str());
        if (design.t() < t)
            throw InvalidDesignError("design strength " + std::to_string(design.t()) +
                                     " is below the rule index " + std::to_string(t));
        if (design.v() != rule.ambient())
            throw InvalidDesignError("design has " + std::to_string(design.v()) +
                                     " points, rule lives on " +
                                     std::to_string(rule.ambient()) + " coordinates");
        TwoValued tv = split_two_valued(node.point, design.k());
        ExactScalar per_block =
            node.weight / ExactScalar(Rational(Integer(design.block_count())));
        for (const auto& block : design.blocks()) {
            std::vector<ExactScalar> coords(static_cast<std::size_t>(rule.ambient()),
                                            tv.rest_value);
            for (int point : block)
                coords[static_cast<std::size_t>(point)] = tv.block_value;
            nodes.push_back({OrbitPoint(OrbitGroup::Explicit, std::move(coords)),
                             per_block});
        }
    }

    CubatureRule reduced(rule.domain(), rule.dimension(), rule.gamma(), rule.exactness(),
                         std::move(nodes),
                         rule.provenance().empty() ? "design-reduced"
                                                   : rule.provenance() + "; design-reduced");
    VerifyReport check = verify_rule(reduced);
    if (!check.pass)
        throw InvalidDesignError("reduced rule fails exactness: " + check.summary());
    return reduced;
}

CubatureRule victoir_sphere(const CubatureRule& rule,
                            const std::map<std::size_t, OrthogonalArray>& assignments) {
    if (rule.domain() != Domain::Sphere)
        throw InvalidDesignError("victoir_sphere needs a sphere rule");
    if (rule.exactness().kind != Exactness::Kind::Degree ||
        rule.exactness().value % 2 == 0)
        throw InvalidDesignError("victoir_sphere needs a degree-(2t+1) rule");
    const int degree = rule.exactness().value;

    std::vector<CubatureRule::Node> nodes;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        const auto& node = rule.nodes()[i];
        auto it = assignments.find(i);
        if (it == assignments.end()) {
            nodes.push_back(node);
            continue;
        }
        const OrthogonalArray& oa = it->second;
        if (oa.columns() != node.point.tau())
            throw InvalidDesignError(
                "array has " + std::to_string(oa.columns()) + " columns, orbit " +
                node.point.str() + " has tau = " + std::to_string(node.point.tau()));
        // a monomial of degree <= 2t+1 is odd in at most min(2t+1, tau) of the
        // orbit's active coordinates; with antipodal rows the odd total
        // degrees cancel on their own and strength 2t suffices
        const int needed = std::min(degree, node.point.tau());
        if (oa.strength() < needed &&
            !(oa.strength() >= std::min(degree - 1, node.point.tau()) && oa.antipodal()))
            throw InvalidDesignError(
                "array strength " + std::to_string(oa.strength()) +
                " is insufficient for degree " + std::to_string(degree) +
                (oa.antipodal() ? "" : " (and the array is not antipodal)"));

        std::vector<std::vector<ExactScalar>> arrangements;
        switch (node.point.group()) {
            case OrbitGroup::SignedPermutation:
                arrangements = distinct_arrangements(node.point);
                break;
            case OrbitGroup::SignOrbit:
                arrangements.push_back(node.point.representative());
                break;
            default:
                throw InvalidDesignError("array assigned to orbit " + node.point.str() +
                                         " which carries no full sign factor");
        }
        ExactScalar per_node =
            node.weight / ExactScalar(Rational(static_cast<long>(arrangements.size()) *
                                               oa.rows()));
        for (const auto& coords : arrangements) {
            for (const auto& oa_row : oa.row_data()) {
                std::vector<int> signs(coords.size(), 1);
                std::size_t col = 0;
                for (std::size_t j = 0; j < coords.size(); ++j)
                    if (!coords[j].is_zero()) signs[j] = oa_row[col++];
                nodes.push_back(
                    {OrbitPoint(OrbitGroup::ExplicitSigned, coords, std::move(signs)),
                     per_node});
            }
        }
    }

    std::string provenance = rule.provenance().empty() ? "" : rule.provenance() + "; ";
    CubatureRule reduced(rule.domain(), rule.dimension(), rule.gamma(), rule.exactness(),
                         std::move(nodes), provenance + "array-reduced");
    if (monomial_check_cost(rule.ambient(), rule.exactness()) <= kVerifyBudget) {
        VerifyReport check = verify_rule(reduced);
        if (!check.pass)
            throw InvalidDesignError("reduced rule fails exactness: " + check.summary());
    } else {
        reduced.set_provenance(reduced.provenance() + " (reduced-unverified)");
    }
    return reduced;
}

Integer reduced_node_count(const CubatureRule& rule,
                           const std::map<std::size_t, ReductionSpec>& assignments) {
    const bool sphere = rule.domain() == Domain::Sphere;
    int t = rule.exactness().value;
    if (sphere) {
        if (rule.exactness().kind != Exactness::Kind::Degree || t % 2 == 0)
            throw InvalidDesignError("sphere reduction counts need degree-(2t+1) form");
    } else {
        t = required_index(rule);
    }

    Integer total = 0;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        const auto& node = rule.nodes()[i];
        auto it = assignments.find(i);
        if (it == assignments.end()) {
            total += node.point.cardinality();
            continue;
        }
        const ReductionSpec& spec = it->second;
        Integer perm_factor = arrangement_count(node.point.value_classes());
        Integer sign_factor = 1;
        if (is_signed_group(node.point.group())) sign_factor <<= node.point.tau();
        if (node.point.group() == OrbitGroup::SignOrbit ||
            node.point.group() == OrbitGroup::SignOrbitPodal)
            perm_factor = 1;

        if (spec.design) {
            const DesignSpec& ds = *spec.design;
            const int needed_t = sphere ? (t - 1) / 2 : t;
            if (ds.t < needed_t)
                throw InvalidDesignError("design strength too low for this rule");
            if (ds.v != rule.ambient())
                throw InvalidDesignError("design point count mismatch");
            split_two_valued(node.point, ds.k);  // validates the orbit shape
            perm_factor = design_block_count(ds.v, ds.k, ds.t, ds.lambda);
        }
        if (spec.oa) {
            const OASpec& oa = *spec.oa;
            if (!sphere) throw InvalidDesignError("arrays apply to sphere rules");
            if (oa.columns != node.point.tau())
                throw InvalidDesignError("array column count mismatch");
            const int needed = std::min(t, node.point.tau());
            if (oa.strength < needed &&
                !(oa.strength >= std::min(t - 1, node.point.tau()) && oa.antipodal))
                throw InvalidDesignError("array strength too low for this rule");
            if (!is_signed_group(node.point.group()))
                throw InvalidDesignError("array assigned to an unsigned orbit");
            sign_factor = Integer(oa.rows);
        }
        total += perm_factor * sign_factor;
    }
    return total;
}

}  // namespace cubforge
