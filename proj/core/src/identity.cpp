#include "cubforge/identity.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "poly_map.hpp"

namespace cubforge {

namespace {

using detail::PolyMap;

Integer pattern_form_count(const std::vector<int>& pattern, int variables) {
    std::vector<ValueClass> classes;
    int tau = 0;
    std::vector<int> sorted = pattern;
    sorted.resize(static_cast<std::size_t>(variables), 0);
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int v : sorted) {
        if (v != 0) ++tau;
        if (!classes.empty() && classes.back().value == ExactScalar(Rational(v)))
            ++classes.back().count;
        else
            classes.push_back({ExactScalar(Rational(v)), 1});
    }
    Integer half = 1;
    if (tau > 0) half <<= (tau - 1);
    return arrangement_count(classes) * half;
}

void check_term(const SymmetricIdentity::Term& term, int variables) {
    if (term.pattern.empty() || static_cast<int>(term.pattern.size()) > variables)
        throw std::invalid_argument("identity term pattern size out of range");
    for (std::size_t i = 0; i < term.pattern.size(); ++i) {
        if (term.pattern[i] < 0)
            throw std::invalid_argument("identity term pattern must be nonnegative");
        if (i > 0 && term.pattern[i] > term.pattern[i - 1])
            throw std::invalid_argument("identity term pattern must be weakly decreasing");
    }
    if (term.coefficient <= 0)
        throw std::invalid_argument("identity term coefficients must be positive");
}

// sum over the term's orbit of <g,x>^{power}, added into poly
void expand_term(PolyMap<ExactScalar>& poly, const SymmetricIdentity::Term& term,
                 int variables, int power, const ExactScalar& scale) {
    std::vector<int> pattern = term.pattern;
    pattern.resize(static_cast<std::size_t>(variables), 0);
    std::sort(pattern.begin(), pattern.end());
    do {
        std::vector<ExactScalar> g;
        g.reserve(pattern.size());
        for (int v : pattern) g.emplace_back(Rational(v));
        detail::add_podal_sign_expansion(poly, g, power, scale);
    } while (std::next_permutation(pattern.begin(), pattern.end()));
}

}  // namespace

Integer SymmetricIdentity::form_count() const {
    Integer n = 0;
    for (const auto& term : terms) n += pattern_form_count(term.pattern, variables);
    return n;
}

std::string SymmetricIdentity::str() const {
    std::ostringstream os;
    os << multiplier.get_str() << " * (sum of " << variables << " squares)^"
       << power / 2 << " =";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        os << (i ? " + " : " ") << terms[i].coefficient.get_str() << " * sym_orbit(";
        for (std::size_t j = 0; j < terms[i].pattern.size(); ++j)
            os << (j ? "," : "") << terms[i].pattern[j];
        os << ")^" << power;
    }
    return os.str();
}

std::string IdentityCheckResult::summary() const {
    return pass ? "pass" : "FAIL at " + witness;
}

IdentityCheckResult identity_check(const SymmetricIdentity& identity) {
    if (identity.power % 2 != 0 || identity.power <= 0)
        throw std::invalid_argument("identity power must be a positive even integer");
    if (identity.variables < 1)
        throw std::invalid_argument("identity needs at least one variable");
    const int t = identity.power / 2;
    for (const auto& term : identity.terms) check_term(term, identity.variables);

    PolyMap<ExactScalar> rhs;
    for (const auto& term : identity.terms)
        expand_term(rhs, term, identity.variables, identity.power,
                    ExactScalar(Rational(term.coefficient)));
    PolyMap<ExactScalar> lhs = detail::sum_of_squares_power(
        identity.variables, t, ExactScalar(Rational(identity.multiplier)));

    IdentityCheckResult result;
    result.pass = true;
    std::vector<std::vector<int>> keys;
    for (const auto& [k, v] : lhs) keys.push_back(k);
    for (const auto& [k, v] : rhs)
        if (!lhs.count(k)) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) {
        ExactScalar l = lhs.count(k) ? lhs.at(k) : ExactScalar(Rational(0));
        ExactScalar r = rhs.count(k) ? rhs.at(k) : ExactScalar(Rational(0));
        if (l != r) {
            result.pass = false;
            std::ostringstream os;
            os << "x^(";
            for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
            os << "): lhs " << l.str() << ", rhs " << r.str();
            result.witness = os.str();
            break;
        }
    }
    return result;
}

SymmetricIdentity rule_to_identity(const CubatureRule& rule) {
    if (rule.domain() != Domain::Sphere ||
        rule.exactness().kind != Exactness::Kind::Index ||
        rule.exactness().value % 2 != 0 || rule.exactness().value == 0)
        throw std::domain_error("rule_to_identity needs an index-2t sphere rule");
    if (!rule.all_weights_positive())
        throw std::domain_error("rule_to_identity needs a positive rule");
    const int two_t = rule.exactness().value;
    const int t = two_t / 2;
    const Rational c_t = monomial_moment_of_partition(
        Partition(std::vector<int>{t}), rule.dimension(), rule.gamma());

    SymmetricIdentity identity;
    identity.variables = rule.ambient();
    identity.power = two_t;

    struct RawTerm {
        Rational coefficient;  // before clearing M
        std::vector<int> pattern;
    };
    std::vector<RawTerm> raw;

    if (!rule.is_fully_symmetric())
        throw std::domain_error(
            "rule_to_identity needs full permutation-sign orbit structure");

    for (const auto& node : rule.nodes()) {
        const OrbitPoint& point = node.point;
        // integer form: node = g / sqrt(A) with A X_j = g_j^2
        Integer lcm_den = 1;
        for (const auto& X : point.representative()) {
            if (!X.is_rational())
                throw std::domain_error("node " + point.str() +
                                        " has irrational data; not representable "
                                        "as an integer identity");
            if (!X.is_zero()) lcm_den = lcm(lcm_den, X.as_rational().get_den());
        }
        Integer u = 1;
        for (const auto& X : point.representative()) {
            if (X.is_zero()) continue;
            Integer m = X.as_rational().get_num() * (lcm_den / X.as_rational().get_den());
            Integer core = squarefree_split(m).squarefree;
            if (u == 1)
                u = core;
            else if (core != 1 && core != u)
                throw std::domain_error("node " + point.str() +
                                        " is not proportional to an integer vector");
        }
        Integer A = lcm_den * u;
        std::vector<int> pattern;
        Integer g_gcd = 0;
        for (const auto& X : point.representative()) {
            Integer g2 = 0;
            if (!X.is_zero()) {
                Rational v = X.as_rational() * Rational(A);
                Integer root;
                if (v.get_den() != 1 || !perfect_square(v.get_num(), &root))
                    throw std::domain_error("node " + point.str() +
                                            " is not proportional to an integer vector");
                g2 = root;
            }
            pattern.push_back(static_cast<int>(g2.get_si()));
            g_gcd = gcd(g_gcd, g2);
        }
        if (g_gcd > 1) {
            for (int& v : pattern) v = static_cast<int>(v / g_gcd.get_si());
            A /= g_gcd * g_gcd;
        }
        std::sort(pattern.begin(), pattern.end(), std::greater<int>());
        while (!pattern.empty() && pattern.back() == 0) pattern.pop_back();

        // per-form weight: full orbits contribute their podal half with the
        // pair weight concentrated on the representative
        Integer podal_count = is_podal_group(point.group()) ? point.cardinality()
                                                            : point.cardinality() / 2;
        Rational per_form = node.weight.as_rational() / Rational(podal_count);
        Integer A_pow_t;
        mpz_pow_ui(A_pow_t.get_mpz_t(), A.get_mpz_t(), static_cast<unsigned long>(t));
        Rational coeff = per_form / (c_t * Rational(A_pow_t));
        raw.push_back({coeff, std::move(pattern)});
    }

    // minimal positive M clearing every coefficient to an integer
    Integer M = 1;
    for (const auto& termo : raw) M = lcm(M, termo.coefficient.get_den());
    identity.multiplier = M;
    for (auto& termo : raw) {
        Rational c = termo.coefficient * Rational(M);
        identity.terms.push_back({c.get_num(), std::move(termo.pattern)});
    }
    // deterministic order: by pattern descending; merge equal patterns
    std::sort(identity.terms.begin(), identity.terms.end(),
              [](const auto& x, const auto& y) { return x.pattern > y.pattern; });
    for (std::size_t i = 1; i < identity.terms.size();) {
        if (identity.terms[i].pattern == identity.terms[i - 1].pattern) {
            identity.terms[i - 1].coefficient += identity.terms[i].coefficient;
            identity.terms.erase(identity.terms.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    IdentityCheckResult check = identity_check(identity);
    if (!check.pass)
        throw std::logic_error("derived identity failed self-certification: " +
                               check.witness);
    return identity;
}

// --- text format -----------------------------------------------------------

SymmetricIdentity identity_from_text(const std::string& text) {
    std::istringstream in(text);
    SymmetricIdentity identity;
    std::string m_str;
    if (!(in >> m_str >> identity.variables >> identity.power))
        throw std::invalid_argument("identity file: malformed header");
    identity.multiplier = Integer(m_str);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("identity file: term line needs 'coeff : pattern'");
        SymmetricIdentity::Term term;
        term.coefficient = Integer(line.substr(0, colon));
        std::istringstream ps(line.substr(colon + 1));
        int v;
        while (ps >> v) term.pattern.push_back(v);
        identity.terms.push_back(std::move(term));
    }
    return identity;
}

std::string identity_to_text(const SymmetricIdentity& identity) {
    std::ostringstream out;
    out << identity.multiplier.get_str() << ' ' << identity.variables << ' '
        << identity.power << '\n';
    for (const auto& term : identity.terms) {
        out << term.coefficient.get_str() << " :";
        for (int v : term.pattern) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

SymmetricIdentity load_identity(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return identity_from_text(ss.str());
}

void save_identity(const SymmetricIdentity& identity, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << identity_to_text(identity);
}

// --- built-ins ---------------------------------------------------------------

std::vector<std::string> builtin_identity_names() {
    return {"hurwitz", "schur", "schur-doubled", "sos315", "sos161280", "sos161280-alt"};
}

SymmetricIdentity builtin_identity(const std::string& name) {
    SymmetricIdentity id;
    if (name == "hurwitz") {
        id.multiplier = 5040;
        id.variables = 4;
        id.power = 8;
        id.terms = {{6, {2}}, {60, {1, 1}}, {1, {2, 1, 1}}, {6, {1, 1, 1, 1}}};
        return id;
    }
    if (name == "schur" || name == "schur-doubled") {
        id.multiplier = 22680;
        id.variables = 4;
        id.power = 10;
        id.terms = {{9, {2}}, {180, {1, 1}}, {1, {2, 1, 1}}, {9, {1, 1, 1, 1}}};
        if (name == "schur-doubled")
            id.terms.insert(id.terms.begin() + 3, {1, {2, 1, 1}});
        return id;
    }
    if (name == "sos315") {
        id.multiplier = Integer(315) * 256;
        id.variables = 4;
        id.power = 8;
        id.terms = {{60, {1, 1, 1, 1}}, {60, {2}}, {6, {2, 2}}, {1, {2, 2, 2}},
                    {1, {3, 1, 1, 1}}};
        return id;
    }
    if (name == "sos161280" || name == "sos161280-alt") {
        id.multiplier = 161280;
        id.variables = 5;
        id.power = 8;
        if (name == "sos161280")
            id.terms = {{59, {1, 1, 1, 1, 1}},
                        {26624, {1}},
                        {2048, {1, 1}},
                        {512, {1, 1, 1}},
                        {1, {3, 1, 1, 1, 1}}};
        else
            id.terms = {{59, {1, 1, 1, 1, 1}},
                        {52, {2}},
                        {16, {2, 2}},
                        {4, {2, 2, 2}},
                        {28561, {3, 1, 1, 1, 1}}};
        return id;
    }
    throw std::invalid_argument("unknown identity '" + name + "'");
}

}  // namespace cubforge
