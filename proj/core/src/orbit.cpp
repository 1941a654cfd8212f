#include "cubforge/orbit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cubforge {

const char* to_string(OrbitGroup g) {
    switch (g) {
        case OrbitGroup::Permutation: return "perm";
        case OrbitGroup::SignedPermutation: return "signed_perm";
        case OrbitGroup::SignedPermutationPodal: return "signed_perm_podal";
        case OrbitGroup::SignOrbit: return "sign";
        case OrbitGroup::SignOrbitPodal: return "sign_podal";
        case OrbitGroup::Explicit: return "explicit";
        case OrbitGroup::ExplicitSigned: return "explicit_signed";
    }
    return "?";
}

OrbitGroup orbit_group_from_string(const std::string& s) {
    for (OrbitGroup g : {OrbitGroup::Permutation, OrbitGroup::SignedPermutation,
                         OrbitGroup::SignedPermutationPodal, OrbitGroup::SignOrbit,
                         OrbitGroup::SignOrbitPodal, OrbitGroup::Explicit,
                         OrbitGroup::ExplicitSigned}) {
        if (s == to_string(g)) return g;
    }
    throw std::invalid_argument("unknown orbit group '" + s + "'");
}

bool is_signed_group(OrbitGroup g) {
    return g != OrbitGroup::Permutation && g != OrbitGroup::Explicit;
}

bool is_podal_group(OrbitGroup g) {
    return g == OrbitGroup::SignedPermutationPodal || g == OrbitGroup::SignOrbitPodal;
}

OrbitPoint::OrbitPoint(OrbitGroup group, std::vector<ExactScalar> representative,
                       std::vector<int> signs)
    : group_(group), rep_(std::move(representative)), signs_(std::move(signs)) {
    if (rep_.empty()) throw std::invalid_argument("orbit: empty representative");
    for (const auto& v : rep_)
        if (!v.is_zero()) ++tau_;
    if (group_ == OrbitGroup::ExplicitSigned) {
        if (signs_.empty()) signs_.assign(rep_.size(), 1);
        if (signs_.size() != rep_.size())
            throw std::invalid_argument("orbit: sign vector size mismatch");
        for (std::size_t i = 0; i < signs_.size(); ++i) {
            if (signs_[i] != 1 && signs_[i] != -1)
                throw std::invalid_argument("orbit: signs must be +-1");
            if (rep_[i].is_zero()) signs_[i] = 1;  // normalize
        }
    } else if (!signs_.empty()) {
        throw std::invalid_argument("orbit: signs only apply to explicit sphere nodes");
    }
    // group equal values, decreasing
    std::vector<ExactScalar> sorted = rep_;
    std::sort(sorted.begin(), sorted.end(),
              [](const ExactScalar& x, const ExactScalar& y) { return y < x; });
    for (const auto& v : sorted) {
        if (!classes_.empty() && classes_.back().value == v)
            ++classes_.back().count;
        else
            classes_.push_back({v, 1});
    }
}

Integer OrbitPoint::cardinality() const {
    switch (group_) {
        case OrbitGroup::Explicit:
        case OrbitGroup::ExplicitSigned:
            return 1;
        case OrbitGroup::Permutation:
            return arrangement_count(classes_);
        case OrbitGroup::SignedPermutation: {
            Integer two_tau = 1;
            two_tau <<= tau_;
            return arrangement_count(classes_) * two_tau;
        }
        case OrbitGroup::SignedPermutationPodal: {
            if (tau_ == 0) throw std::domain_error("podal orbit with tau = 0");
            Integer half = 1;
            half <<= (tau_ - 1);
            return arrangement_count(classes_) * half;
        }
        case OrbitGroup::SignOrbit: {
            Integer two_tau = 1;
            two_tau <<= tau_;
            return two_tau;
        }
        case OrbitGroup::SignOrbitPodal: {
            if (tau_ == 0) throw std::domain_error("podal orbit with tau = 0");
            Integer half = 1;
            half <<= (tau_ - 1);
            return half;
        }
    }
    throw std::logic_error("unreachable");
}

ExactScalar OrbitPoint::coordinate_sum() const {
    ExactScalar s(Rational(0));
    for (const auto& v : rep_) s += v;
    return s;
}

bool OrbitPoint::same_orbit(const OrbitPoint& o) const {
    if (group_ != o.group_) return false;
    if (group_ == OrbitGroup::Explicit || group_ == OrbitGroup::ExplicitSigned)
        return rep_ == o.rep_ && signs_ == o.signs_;
    if (classes_.size() != o.classes_.size()) return false;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].count != o.classes_[i].count ||
            classes_[i].value != o.classes_[i].value)
            return false;
    }
    return true;
}

std::string OrbitPoint::str() const {
    std::string s = std::string(to_string(group_)) + "(";
    for (std::size_t i = 0; i < rep_.size(); ++i) {
        if (i) s += ", ";
        if (group_ == OrbitGroup::ExplicitSigned && signs_[i] < 0) s += "-";
        s += rep_[i].str();
    }
    return s + ")";
}

namespace {

// Exponents applied to the stored values: on the sphere the stored values
// are squares, so the effective exponent is alpha/2.
std::vector<int> effective_exponents(const std::vector<int>& alpha, bool squared,
                                     bool& has_odd) {
    has_odd = false;
    std::vector<int> e(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw std::invalid_argument("negative exponent");
        if (squared) {
            if (alpha[i] % 2 != 0) has_odd = true;
            e[i] = alpha[i] / 2;
        } else {
            e[i] = alpha[i];
        }
    }
    return e;
}

ExactScalar point_power(const std::vector<ExactScalar>& rep, const std::vector<int>& e) {
    ExactScalar v(Rational(1));
    for (std::size_t i = 0; i < rep.size(); ++i) {
        if (e[i] == 0) continue;
        if (rep[i].is_zero()) return ExactScalar(Rational(0));
        v *= rep[i].pow(static_cast<unsigned long>(e[i]));
    }
    return v;
}

}  // namespace

ExactScalar orbit_monomial_sum(const std::vector<int>& alpha, const OrbitPoint& point,
                               bool coords_are_squared) {
    if (alpha.size() != point.representative().size())
        throw std::invalid_argument("orbit_monomial_sum: exponent size mismatch");

    const OrbitGroup g = point.group();
    long total = 0;
    bool any_odd = false;
    for (int a : alpha) {
        total += a;
        if (a % 2 != 0) any_odd = true;
    }

    if (g == OrbitGroup::Explicit) {
        bool dummy;
        return point_power(point.representative(),
                           effective_exponents(alpha, coords_are_squared, dummy));
    }
    if (g == OrbitGroup::ExplicitSigned)
        throw std::invalid_argument(
            "orbit_monomial_sum: explicit signed nodes are evaluated by the verifier");

    if (g == OrbitGroup::Permutation) {
        bool has_odd;
        auto e = effective_exponents(alpha, coords_are_squared, has_odd);
        if (has_odd)
            throw std::invalid_argument(
                "odd exponent on a squared-coordinate permutation orbit");
        return perm_monomial_sum(e, point.value_classes());
    }

    // sign-ful symbolic orbits
    const bool podal = is_podal_group(g);
    if (any_odd) {
        // A sign flip at any nonzero coordinate with odd exponent cancels the
        // pair; odd exponents at zero coordinates vanish on their own.
        if (!podal || total % 2 == 0) return ExactScalar(Rational(0));
        throw std::domain_error(
            "odd-degree evaluation on an antipodally reduced orbit requires explicit signs");
    }

    std::vector<int> e(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        e[i] = coords_are_squared ? alpha[i] / 2 : alpha[i];

    Integer sign_factor = 1;
    sign_factor <<= (podal ? point.tau() - 1 : point.tau());

    ExactScalar base;
    if (g == OrbitGroup::SignOrbit || g == OrbitGroup::SignOrbitPodal)
        base = point_power(point.representative(), e);
    else
        base = perm_monomial_sum(e, point.value_classes());
    return base * ExactScalar(Rational(sign_factor));
}

}  // namespace cubforge
