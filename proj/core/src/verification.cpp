#include "cubforge/verification.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>

#include "cubforge/threading.hpp"

namespace cubforge {

// --- SurdSum ---------------------------------------------------------------

void SurdSum::add_rational(const Rational& q) {
    if (q == 0) return;
    add_sqrt(q, Rational(1));
}

void SurdSum::add_sqrt(const Rational& coefficient, const Rational& radicand) {
    if (coefficient == 0 || radicand == 0) return;
    if (radicand < 0) throw std::domain_error("SurdSum: negative radicand");
    // sqrt(n/d) = sqrt(n d) / d
    Integer nd = radicand.get_num() * radicand.get_den();
    auto split = squarefree_split(nd);
    Rational coeff = coefficient * Rational(split.root) / Rational(radicand.get_den());
    const Integer& D = split.squarefree;
    for (auto& [existing, c] : terms_) {
        if (existing == D) {
            c += coeff;
            return;
        }
    }
    terms_.emplace_back(D, coeff);
}

void SurdSum::add(const ExactScalar& x) {
    add_rational(x.rational_part());
    if (!x.is_rational()) add_sqrt(x.surd_part(), Rational(x.discriminant()));
}

bool SurdSum::is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second == 0; });
}

bool SurdSum::is_rational() const {
    for (const auto& [d, c] : terms_)
        if (d != 1 && c != 0) return false;
    return true;
}

Rational SurdSum::rational_value() const {
    Rational v = 0;
    for (const auto& [d, c] : terms_) {
        if (c == 0) continue;
        if (d != 1) throw std::domain_error("SurdSum: value is irrational: " + str());
        v += c;
    }
    return v;
}

std::string SurdSum::str() const {
    std::string s;
    for (const auto& [d, c] : terms_) {
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        s += to_string(c);
        if (d != 1) s += "*sqrt(" + d.get_str() + ")";
    }
    return s.empty() ? "0" : s;
}

// --- helpers ---------------------------------------------------------------

namespace {

std::string monomial_str(const std::vector<int>& alpha) {
    std::string s = "x^(";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha[i]);
    }
    return s + ")";
}

// All alpha with |alpha| = total over `vars` coordinates, lexicographically
// decreasing in the leading coordinate. Materialized for parallel chunking.
std::vector<std::vector<int>> compositions(int total, int vars) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == vars - 1) {
            acc[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(acc);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            acc[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
    };
    if (vars == 0) return out;
    rec(0, total);
    return out;
}

// Rule value on x^alpha as a SurdSum; handles explicit signed nodes with odd
// exponents, which evaluate to rational multiples of square roots.
SurdSum evaluate_monomial(const CubatureRule& rule, const std::vector<int>& alpha) {
    SurdSum total;
    const bool squared = rule.domain() == Domain::Sphere;
    for (const auto& node : rule.nodes()) {
        if (node.point.group() == OrbitGroup::ExplicitSigned) {
            int sign_product = 1;
            Rational rational_factor = 1;
            Rational radicand = 1;
            bool zero = false;
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                int a = alpha[i];
                if (a == 0) continue;
                const ExactScalar& X = node.point.representative()[i];
                if (X.is_zero()) {
                    zero = true;
                    break;
                }
                const Rational& x2 = X.as_rational();
                if (node.point.signs()[i] < 0 && a % 2 == 1) sign_product = -sign_product;
                Rational p = 1;
                for (int e = 0; e < a / 2; ++e) p *= x2;
                rational_factor *= p;
                if (a % 2 == 1) radicand *= x2;
            }
            if (zero) continue;
            total.add_sqrt(node.weight.as_rational() * sign_product * rational_factor,
                           radicand);
        } else {
            ExactScalar orbit_sum = orbit_monomial_sum(alpha, node.point, squared);
            if (!orbit_sum.is_zero())
                total.add(node.weight * orbit_sum /
                          ExactScalar(Rational(node.point.cardinality())));
        }
    }
    return total;
}

Rational expected_monomial(const CubatureRule& rule, const std::vector<int>& alpha) {
    if (rule.domain() == Domain::Sphere) {
        // moment of x^alpha against prod |x_i|^{2 gamma + 1} dsigma, normalized:
        // zero for odd alpha, else the simplex gamma-moment of alpha/2.
        std::vector<int> half(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] % 2 != 0) return 0;
            half[i] = alpha[i] / 2;
        }
        return monomial_moment(half, rule.dimension(), rule.gamma());
    }
    return monomial_moment(alpha, rule.dimension(), rule.gamma());
}

struct MonomialOutcome {
    bool pass = true;
    std::string witness, detail;
};

MonomialOutcome check_monomial(const CubatureRule& rule, const std::vector<int>& alpha) {
    SurdSum value = evaluate_monomial(rule, alpha);
    Rational expect = expected_monomial(rule, alpha);
    SurdSum diff = value;
    diff.add_rational(-expect);
    if (diff.is_zero()) return {};
    return {false, monomial_str(alpha),
            "expected " + to_string(expect) + ", rule gives " + value.str()};
}

VerifyReport monomial_pass(const CubatureRule& rule, int degree, int threads) {
    VerifyReport report;
    report.method = "monomials";
    auto alphas = compositions(degree, rule.ambient());
    report.cases_checked = Integer(alphas.size());
    std::vector<MonomialOutcome> outcomes(alphas.size());
    std::atomic<bool> any_fail{false};
    parallel_for(
        alphas.size(),
        [&](std::size_t i) {
            if (any_fail.load(std::memory_order_relaxed)) return;  // early exit path
            outcomes[i] = check_monomial(rule, alphas[i]);
            if (!outcomes[i].pass) any_fail.store(true, std::memory_order_relaxed);
        },
        threads);
    report.pass = true;
    if (any_fail.load()) {
        // deterministic: the lexicographically first witness; recheck skipped
        // slots in order
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            MonomialOutcome o =
                outcomes[i].pass ? check_monomial(rule, alphas[i]) : outcomes[i];
            if (!o.pass) {
                report.pass = false;
                report.witness = o.witness;
                report.witness_detail = o.detail;
                break;
            }
        }
    }
    return report;
}

VerifyReport partition_pass(const CubatureRule& rule, int t, int threads) {
    VerifyReport report;
    report.method = "partitions";
    if (rule.domain() == Domain::Sphere && t % 2 != 0) {
        // Invariant polynomials under the signed permutation group are even;
        // odd homogeneous degrees integrate to zero and every full sign
        // orbit annihilates them.
        for (const auto& node : rule.nodes())
            if (is_podal_group(node.point.group()))
                throw std::domain_error(
                    "odd-index verification on an antipodally reduced rule needs "
                    "explicit signs");
        report.pass = true;
        return report;
    }
    const int weight = rule.domain() == Domain::Sphere ? t / 2 : t;
    if (weight == 0) {
        report.cases_checked = 1;
        report.pass = rule.weight_sum() == ExactScalar(Rational(1));
        if (!report.pass) {
            report.witness = "1";
            report.witness_detail = "weights do not sum to 1";
        }
        return report;
    }
    auto parts = partitions_of(weight);
    const WeightExponent& moment_gamma = rule.gamma();
    report.cases_checked = Integer(parts.size());
    std::vector<MonomialOutcome> outcomes(parts.size());
    parallel_for(
        parts.size(),
        [&](std::size_t i) {
            const Partition& l = parts[i];
            if (l.length() > rule.ambient()) return;  // S_l vanishes identically
            ExactScalar value = rule.apply_symmetric(l);
            Rational expect = partition_integral(l, rule.dimension(), moment_gamma);
            if (value != ExactScalar(expect))
                outcomes[i] = {false, "S_" + l.str(),
                               "expected " + to_string(expect) + ", rule gives " +
                                   value.str()};
        },
        threads);
    report.pass = true;
    for (const auto& o : outcomes) {
        if (!o.pass) {
            report.pass = false;
            report.witness = o.witness;
            report.witness_detail = o.detail;
            break;
        }
    }
    return report;
}

}  // namespace

std::string VerifyReport::summary() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL") << " [" << checked.str() << ", " << method << ", "
       << cases_checked.get_str() << " cases]";
    if (!pass) os << " witness: " << witness << " (" << witness_detail << ")";
    return os.str();
}

VerifyReport verify_index_exactness(const CubatureRule& rule, int t, VerifyMethod method,
                                    int threads) {
    if (t < 0) throw std::invalid_argument("verify: negative index");
    bool symmetric = rule.is_fully_symmetric();
    if (method == VerifyMethod::Partitions && !symmetric)
        throw std::domain_error("partition verification needs a fully symmetric rule");
    bool use_partitions =
        method == VerifyMethod::Partitions || (method == VerifyMethod::Auto && symmetric);
    VerifyReport report = use_partitions ? partition_pass(rule, t, threads)
                                         : monomial_pass(rule, t, threads);
    report.checked = Exactness::index(t);
    return report;
}

VerifyReport verify_degree_exactness(const CubatureRule& rule, int n, VerifyMethod method,
                                     int threads) {
    if (n < 0) throw std::invalid_argument("verify: negative degree");
    VerifyReport last;
    Integer total_cases = 0;
    for (int m = 0; m <= n; ++m) {
        // On the simplex the degree-m slice lifts to the index-m equations by
        // homogenization with |x|_1 = 1 at the nodes; on the sphere every
        // monomial of each degree is checked (odd degrees must vanish).
        VerifyReport r;
        if (m == 0) {
            SurdSum value = evaluate_monomial(rule, std::vector<int>(
                                                        static_cast<std::size_t>(
                                                            rule.ambient()),
                                                        0));
            value.add_rational(Rational(-1));
            r.pass = value.is_zero();
            r.method = "monomials";
            r.cases_checked = 1;
            if (!r.pass) {
                r.witness = "1";
                r.witness_detail = "weights do not sum to 1";
            }
        } else if (rule.domain() == Domain::Sphere && m % 2 == 1 &&
                   rule.is_fully_symmetric()) {
            r.pass = true;  // sign orbits annihilate odd degrees
            r.method = "partitions";
        } else {
            r = verify_index_exactness(rule, m, method, threads);
        }
        total_cases += r.cases_checked;
        if (!r.pass) {
            r.checked = Exactness::degree(n);
            r.cases_checked = total_cases;
            return r;
        }
        last = r;
    }
    last.checked = Exactness::degree(n);
    last.cases_checked = total_cases;
    return last;
}

VerifyReport verify_rule(const CubatureRule& rule, VerifyMethod method, int threads) {
    if (rule.exactness().kind == Exactness::Kind::Index)
        return verify_index_exactness(rule, rule.exactness().value, method, threads);
    return verify_degree_exactness(rule, rule.exactness().value, method, threads);
}

SharpnessReport verify_sharpness(const CubatureRule& rule, int threads) {
    SharpnessReport report;
    report.at_stated = verify_rule(rule, VerifyMethod::Auto, threads);
    if (rule.exactness().kind == Exactness::Kind::Index)
        report.above =
            verify_index_exactness(rule, rule.exactness().value + 1, VerifyMethod::Auto,
                                   threads);
    else
        report.above =
            verify_degree_exactness(rule, rule.exactness().value + 1, VerifyMethod::Auto,
                                    threads);
    return report;
}

Integer monomial_check_cost(int ambient, const Exactness& exactness) {
    auto slice = [&](int m) {
        return binomial(static_cast<long>(m + ambient - 1), static_cast<long>(ambient - 1));
    };
    if (exactness.kind == Exactness::Kind::Index) return slice(exactness.value);
    Integer total = 0;
    for (int m = 0; m <= exactness.value; ++m) total += slice(m);
    return total;
}

}  // namespace cubforge
