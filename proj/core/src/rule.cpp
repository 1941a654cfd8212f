#include "cubforge/rule.hpp"

#include <algorithm>
#include <map>

namespace cubforge {

const char* to_string(Domain d) { return d == Domain::SimplexT ? "simplex" : "sphere"; }

Domain domain_from_string(const std::string& s) {
    if (s == "simplex") return Domain::SimplexT;
    if (s == "sphere") return Domain::Sphere;
    throw std::invalid_argument("unknown domain '" + s + "'");
}

std::string Exactness::str() const {
    return std::string(kind == Kind::Index ? "index " : "degree ") + std::to_string(value);
}

CubatureRule::CubatureRule(Domain domain, int d, WeightExponent gamma, Exactness exactness,
                           std::vector<Node> nodes, std::string provenance)
    : domain_(domain),
      d_(d),
      gamma_(std::move(gamma)),
      exactness_(exactness),
      nodes_(std::move(nodes)),
      provenance_(std::move(provenance)) {
    if (d_ < 1) throw RuleConstructionError("dimension must be >= 1");
    for (const auto& node : nodes_) {
        if (node.point.ambient() != ambient())
            throw RuleConstructionError("node dimension mismatch");
        if (domain_ == Domain::SimplexT && is_signed_group(node.point.group()))
            throw RuleConstructionError("sign orbits are not simplex orbits");
        // On either domain the stored coordinates (squared coordinates on the
        // sphere) must be nonnegative and sum to 1.
        for (const auto& v : node.point.representative())
            if (v.sign() < 0)
                throw RuleConstructionError("negative coordinate in " + node.point.str());
        if (node.point.coordinate_sum() != ExactScalar(Rational(1)))
            throw RuleConstructionError("coordinates of " + node.point.str() +
                                        " do not sum to 1");
    }
}

Integer CubatureRule::node_count() const {
    Integer n = 0;
    for (const auto& node : nodes_) n += node.point.cardinality();
    return n;
}

ExactScalar CubatureRule::weight_sum() const {
    ExactScalar s(Rational(0));
    for (const auto& node : nodes_) s += node.weight;
    return s;
}

bool CubatureRule::all_weights_positive() const {
    return std::all_of(nodes_.begin(), nodes_.end(),
                       [](const Node& n) { return n.weight.sign() > 0; });
}

bool CubatureRule::is_fully_symmetric() const {
    for (const auto& node : nodes_) {
        OrbitGroup g = node.point.group();
        if (domain_ == Domain::SimplexT) {
            if (g != OrbitGroup::Permutation) return false;
        } else {
            if (g != OrbitGroup::SignedPermutation &&
                g != OrbitGroup::SignedPermutationPodal)
                return false;
        }
    }
    return true;
}

ExactScalar CubatureRule::apply_monomial(const std::vector<int>& alpha) const {
    const bool squared = domain_ == Domain::Sphere;
    ExactScalar total(Rational(0));
    for (const auto& node : nodes_) {
        ExactScalar orbit_sum = orbit_monomial_sum(alpha, node.point, squared);
        if (!orbit_sum.is_zero())
            total += node.weight * orbit_sum / ExactScalar(Rational(node.point.cardinality()));
    }
    return total;
}

ExactScalar CubatureRule::apply_symmetric(const Partition& l) const {
    if (!is_fully_symmetric())
        throw std::domain_error("invariant evaluation needs a fully symmetric rule");
    ExactScalar total(Rational(0));
    for (const auto& node : nodes_)
        total += node.weight * msp_eval(l, node.point.value_classes());
    return total;
}

CubatureRule index_to_degree(const CubatureRule& rule) {
    if (rule.domain() == Domain::Sphere)
        throw std::domain_error("index<->degree relabeling applies to simplex rules only");
    if (rule.exactness().kind != Exactness::Kind::Index)
        throw std::domain_error("rule is not in index form");
    return CubatureRule(rule.domain(), rule.dimension(), rule.gamma(),
                        Exactness::degree(rule.exactness().value), rule.nodes(),
                        rule.provenance());
}

CubatureRule degree_to_index(const CubatureRule& rule) {
    if (rule.domain() == Domain::Sphere)
        throw std::domain_error("index<->degree relabeling applies to simplex rules only");
    if (rule.exactness().kind != Exactness::Kind::Degree)
        throw std::domain_error("rule is not in degree form");
    return CubatureRule(rule.domain(), rule.dimension(), rule.gamma(),
                        Exactness::index(rule.exactness().value), rule.nodes(),
                        rule.provenance());
}

CubatureRule simplex_to_sphere(const CubatureRule& rule) {
    if (rule.domain() != Domain::SimplexT)
        throw std::domain_error("simplex_to_sphere needs a simplex rule");
    if (rule.exactness().kind != Exactness::Kind::Index)
        throw std::domain_error("simplex_to_sphere needs an index-form rule");
    std::vector<CubatureRule::Node> nodes;
    nodes.reserve(rule.nodes().size());
    for (const auto& node : rule.nodes()) {
        for (const auto& v : node.point.representative())
            if (v.sign() < 0)
                throw std::domain_error("negative simplex coordinate under sqrt");
        OrbitGroup g;
        switch (node.point.group()) {
            case OrbitGroup::Permutation: g = OrbitGroup::SignedPermutation; break;
            case OrbitGroup::Explicit: g = OrbitGroup::SignOrbit; break;
            default:
                throw std::domain_error("unexpected orbit group on a simplex rule");
        }
        nodes.push_back({OrbitPoint(g, node.point.representative()), node.weight});
    }
    return CubatureRule(Domain::Sphere, rule.dimension(), rule.gamma(),
                        Exactness::degree(2 * rule.exactness().value + 1),
                        std::move(nodes), rule.provenance());
}

CubatureRule sphere_to_simplex(const CubatureRule& rule) {
    if (rule.domain() != Domain::Sphere)
        throw std::domain_error("sphere_to_simplex needs a sphere rule");
    if (rule.exactness().kind != Exactness::Kind::Degree ||
        rule.exactness().value % 2 == 0)
        throw std::domain_error("sphere_to_simplex needs a degree-(2n+1) rule");
    std::vector<CubatureRule::Node> nodes;
    nodes.reserve(rule.nodes().size());
    for (const auto& node : rule.nodes()) {
        OrbitGroup g;
        switch (node.point.group()) {
            case OrbitGroup::SignedPermutation: g = OrbitGroup::Permutation; break;
            case OrbitGroup::SignOrbit:
            case OrbitGroup::ExplicitSigned: g = OrbitGroup::Explicit; break;
            default:
                throw std::domain_error(
                    "sphere_to_simplex needs a fully sign-invariant rule");
        }
        nodes.push_back({OrbitPoint(g, node.point.representative()), node.weight});
    }
    return CubatureRule(Domain::SimplexT, rule.dimension(), rule.gamma(),
                        Exactness::index((rule.exactness().value - 1) / 2),
                        std::move(nodes), rule.provenance());
}

namespace {

// Canonical antipodal representative of an explicit signed node: sign +1 at
// the first nonzero coordinate.
std::vector<int> podal_signs(const OrbitPoint& p, bool& flipped) {
    std::vector<int> s = p.signs();
    flipped = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (p.representative()[i].is_zero()) continue;
        if (s[i] < 0) {
            flipped = true;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (!p.representative()[j].is_zero()) s[j] = -s[j];
        }
        break;
    }
    return s;
}

}  // namespace

CubatureRule antipodal_reduce(const CubatureRule& rule) {
    if (rule.domain() != Domain::Sphere)
        throw std::domain_error("antipodal_reduce needs a sphere rule");
    if (rule.exactness().kind != Exactness::Kind::Degree ||
        rule.exactness().value % 2 == 0)
        throw std::domain_error("antipodal_reduce needs a degree-(2t+1) rule");

    std::vector<CubatureRule::Node> nodes;
    // explicit signed nodes must pair up exactly; map key -> (node index, state)
    std::map<std::string, std::pair<std::size_t, int>> pending;
    for (const auto& node : rule.nodes()) {
        switch (node.point.group()) {
            case OrbitGroup::SignedPermutation:
                nodes.push_back({OrbitPoint(OrbitGroup::SignedPermutationPodal,
                                            node.point.representative()),
                                 node.weight});
                break;
            case OrbitGroup::SignOrbit:
                nodes.push_back({OrbitPoint(OrbitGroup::SignOrbitPodal,
                                            node.point.representative()),
                                 node.weight});
                break;
            case OrbitGroup::ExplicitSigned: {
                bool flipped;
                auto canon = podal_signs(node.point, flipped);
                OrbitPoint rep(OrbitGroup::ExplicitSigned, node.point.representative(),
                               canon);
                std::string key = rep.str();
                auto it = pending.find(key);
                if (it == pending.end()) {
                    nodes.push_back({rep, node.weight});
                    pending.emplace(key, std::make_pair(nodes.size() - 1,
                                                        flipped ? -1 : 1));
                } else {
                    if (it->second.second == (flipped ? -1 : 1))
                        throw std::domain_error("duplicate node " + key +
                                                " in antipodal reduction");
                    if (!(nodes[it->second.first].weight == node.weight))
                        throw std::domain_error("antipodal pair of " + key +
                                                " has unequal weights");
                    nodes[it->second.first].weight += node.weight;
                    it->second.second = 0;
                }
                break;
            }
            default:
                throw std::domain_error("rule is not centrally symmetric: orbit " +
                                        node.point.str());
        }
    }
    for (const auto& [key, entry] : pending)
        if (entry.second != 0)
            throw std::domain_error("node " + key + " has no antipodal partner");

    return CubatureRule(Domain::Sphere, rule.dimension(), rule.gamma(),
                        Exactness::index(rule.exactness().value - 1), std::move(nodes),
                        rule.provenance());
}

}  // namespace cubforge
