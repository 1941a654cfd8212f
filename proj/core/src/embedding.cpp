#include "cubforge/embedding.hpp"

#include <algorithm>
#include <sstream>

#include "poly_map.hpp"

namespace cubforge {

Rational embedding_constant(int ambient, int t) {
    if (ambient < 2) throw std::invalid_argument("embedding_constant: need ambient >= 2");
    if (t < 0) throw std::invalid_argument("embedding_constant: need t >= 0");
    if (t == 0) return 1;
    return Rational(double_factorial(2 * t - 1) * double_factorial(ambient - 2)) /
           Rational(double_factorial(ambient + 2 * t - 2));
}

EmbeddingSpec extract_embedding(const CubatureRule& rule) {
    if (rule.domain() != Domain::Sphere ||
        rule.exactness().kind != Exactness::Kind::Index)
        throw std::domain_error("extract_embedding needs an index-form sphere rule");
    const int two_t = rule.exactness().value;
    if (two_t % 2 != 0 || two_t <= 0)
        throw std::domain_error("extract_embedding needs a positive even index");
    if (!rule.all_weights_positive())
        throw std::domain_error(
            "extract_embedding needs positive weights (even roots of negative "
            "numbers do not exist)");

    EmbeddingSpec spec;
    spec.source_dimension = rule.ambient();
    spec.power = two_t;
    spec.constant = embedding_constant(rule.ambient(), two_t / 2);
    spec.form_count = 0;
    for (const auto& node : rule.nodes()) {
        Integer podal_count;
        switch (node.point.group()) {
            case OrbitGroup::SignedPermutationPodal:
            case OrbitGroup::SignOrbitPodal:
                podal_count = node.point.cardinality();
                break;
            case OrbitGroup::SignedPermutation:
            case OrbitGroup::SignOrbit:
                podal_count = node.point.cardinality() / 2;
                break;
            default:
                throw std::domain_error(
                    "extract_embedding needs sign-orbit structure (explicit signed "
                    "nodes carry undetermined odd expansions)");
        }
        ExactScalar scale = node.weight / ExactScalar(Rational(podal_count) *
                                                      spec.constant);
        spec.forms.push_back({scale, node.point});
        spec.form_count += podal_count;
    }
    return spec;
}

std::string EmbeddingSpec::str() const {
    std::ostringstream os;
    os << "l_2^" << source_dimension << " -> l_" << power << "^"
       << form_count.get_str() << ", c = " << to_string(constant) << ", "
       << forms.size() << " form orbits";
    return os.str();
}

namespace {

using detail::PolyMap;

// expands scale * sum over the podal orbit of <x, node>^{power}; node
// entries are squared coordinates.
void expand_orbit(PolyMap<ExactScalar>& poly, const EmbeddingSpec::FormOrbit& orbit,
                  int power) {
    const auto& point = orbit.point;
    // arrangements of the value multiset
    std::vector<int> pattern;
    const auto& classes = point.value_classes();
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int i = 0; i < classes[c].count; ++i) pattern.push_back(static_cast<int>(c));
    std::sort(pattern.begin(), pattern.end());

    const bool perm_orbit = point.group() == OrbitGroup::SignedPermutation ||
                            point.group() == OrbitGroup::SignedPermutationPodal;

    auto expand_one = [&](const std::vector<ExactScalar>& squared) {
        // |coords| = sqrt(squared): expansion only needs even powers, handled
        // by add_podal_sign_expansion over formal entries g_j with g_j^2 =
        // squared_j: pass g_j symbolically via squared values.
        // add_podal_sign_expansion computes g_j^{b}; we give it the squared
        // value and halve exponents by substituting power/2 structure:
        // instead, expand directly here.
        const int n = static_cast<int>(squared.size());
        int tau = 0;
        for (const auto& v : squared)
            if (!v.is_zero()) ++tau;
        Integer half = 1;
        half <<= (tau - 1);
        ExactScalar factor = orbit.scale * ExactScalar(Rational(half));
        std::vector<int> beta(static_cast<std::size_t>(n), 0);
        std::function<void(int, int, Integer, ExactScalar)> rec =
            [&](int pos, int remaining, Integer multinomial, ExactScalar value) {
                if (pos == n) {
                    if (remaining == 0)
                        detail::add_term(poly, beta,
                                         factor * value * ExactScalar(Rational(multinomial)));
                    return;
                }
                const bool zero = squared[static_cast<std::size_t>(pos)].is_zero();
                for (int b = 0; b <= remaining; b += 2) {
                    if (b > 0 && zero) break;
                    beta[static_cast<std::size_t>(pos)] = b;
                    ExactScalar v = value;
                    if (b > 0)
                        v = v * squared[static_cast<std::size_t>(pos)].pow(
                                    static_cast<unsigned long>(b / 2));
                    rec(pos + 1, remaining - b,
                        multinomial / factorial(static_cast<unsigned long>(b)), v);
                    beta[static_cast<std::size_t>(pos)] = 0;
                }
            };
        rec(0, power, factorial(static_cast<unsigned long>(power)), ExactScalar(Rational(1)));
    };

    if (!perm_orbit) {
        expand_one(point.representative());
        return;
    }
    do {
        std::vector<ExactScalar> squared;
        squared.reserve(pattern.size());
        for (int c : pattern) squared.push_back(classes[static_cast<std::size_t>(c)].value);
        expand_one(squared);
    } while (std::next_permutation(pattern.begin(), pattern.end()));
}

}  // namespace

std::string certify_embedding(const EmbeddingSpec& spec) {
    PolyMap<ExactScalar> rhs;
    for (const auto& orbit : spec.forms) expand_orbit(rhs, orbit, spec.power);
    PolyMap<ExactScalar> lhs = detail::sum_of_squares_power(
        spec.source_dimension, spec.power / 2, ExactScalar(Rational(1)));
    std::vector<std::vector<int>> keys;
    for (const auto& [k, v] : lhs) keys.push_back(k);
    for (const auto& [k, v] : rhs)
        if (!lhs.count(k)) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) {
        ExactScalar l = lhs.count(k) ? lhs.at(k) : ExactScalar(Rational(0));
        ExactScalar r = rhs.count(k) ? rhs.at(k) : ExactScalar(Rational(0));
        if (l != r) {
            std::ostringstream os;
            os << "x^(";
            for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
            os << "): expected " << l.str() << ", embedding gives " << r.str();
            return os.str();
        }
    }
    return "";
}

}  // namespace cubforge
