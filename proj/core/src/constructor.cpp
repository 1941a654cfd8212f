#include "cubforge/constructor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cubforge/linear_solver.hpp"
#include "cubforge/polynomial.hpp"
#include "cubforge/symmetric_values.hpp"
#include "cubforge/threading.hpp"

namespace cubforge {

namespace {

Rational m_l(const Partition& l, int d, const WeightExponent& gamma) {
    return partition_integral(l, d, gamma);
}

void check_problem_ks(const std::vector<int>& ks, int d, int p) {
    for (int k : ks)
        if (k < 1 || k > d + 1)
            throw std::invalid_argument("k classes must lie in 1..d+1");
    if (p < 1 || p > d) throw std::invalid_argument("p must lie in 1..d");
}

// Column merge for duplicate k values: first occurrence keeps the column.
struct MergePlan {
    std::vector<int> unique_ks;
    std::vector<std::size_t> slot_to_column;
};

MergePlan merge_columns(const std::vector<int>& ks) {
    MergePlan plan;
    for (int k : ks) {
        auto it = std::find(plan.unique_ks.begin(), plan.unique_ks.end(), k);
        if (it == plan.unique_ks.end()) {
            plan.unique_ks.push_back(k);
            plan.slot_to_column.push_back(plan.unique_ks.size() - 1);
        } else {
            plan.slot_to_column.push_back(
                static_cast<std::size_t>(it - plan.unique_ks.begin()));
        }
    }
    return plan;
}

SolveResult solve_system(int d, const WeightExponent& gamma, int t,
                         const std::vector<int>& ks, int p, const ExactScalar& a,
                         const ExactScalar& a_last,
                         const std::vector<Partition>& equations) {
    MergePlan plan = merge_columns(ks);
    const std::size_t q = ks.size();

    std::vector<std::vector<ExactScalar>> M;
    std::vector<ExactScalar> rhs;
    for (const auto& l : equations) {
        std::vector<ExactScalar> row;
        row.reserve(plan.unique_ks.size());
        for (int k : plan.unique_ks) row.emplace_back(Rational(s_value_at_vk(l, k)));
        M.push_back(std::move(row));
        rhs.push_back(ExactScalar(m_l(l, d, gamma)) - a_last * s_value_at_u(l, a, p));
    }
    std::vector<ExactScalar> solved = solve_linear_system(std::move(M), std::move(rhs));

    SolveResult result;
    result.a = a;
    std::vector<bool> column_taken(plan.unique_ks.size(), false);
    for (std::size_t j = 0; j < q; ++j) {
        std::size_t c = plan.slot_to_column[j];
        if (column_taken[c]) {
            result.coefficients.emplace_back(Rational(0));
        } else {
            column_taken[c] = true;
            result.coefficients.push_back(solved[c]);
        }
        result.lambdas.push_back(result.coefficients.back() *
                                 ExactScalar(Rational(ks[j])).pow(t));
    }
    result.coefficients.push_back(a_last);
    result.lambdas.push_back(a_last * (a + ExactScalar(Rational(p))).pow(t));

    result.positive = true;
    for (std::size_t j = 0; j < result.lambdas.size(); ++j) {
        if (result.lambdas[j].sign() < 0) {
            result.positive = false;
            result.negative_slots.push_back(static_cast<int>(j + 1));
        }
    }
    if (result.positive)
        result.rule = assemble_rule(d, gamma, t, ks, p, a, result.coefficients);
    return result;
}

}  // namespace

ExactScalar a5_weight(int d, const WeightExponent& gamma, int p, const ExactScalar& a) {
    if (p < 1) throw std::invalid_argument("a5_weight: p must be >= 1");
    if (a.is_zero() || a == ExactScalar(Rational(1)))
        throw std::domain_error("a5_weight: a in {0,1} is singular");
    Rational c0 = m_l(Partition({3, 1}), d, gamma) - 2 * m_l(Partition({2, 2}), d, gamma);
    ExactScalar denom = a * (a - ExactScalar(Rational(1))).pow(2) * ExactScalar(Rational(p));
    return ExactScalar(c0) / denom;
}

std::pair<ExactScalar, ExactScalar> degree5_parameters(int d, const WeightExponent& gamma,
                                                       int p) {
    if (p < 1 || p > d) throw std::invalid_argument("degree5_parameters: p must be in 1..d");
    Rational num = m_l(Partition({4, 1}), d, gamma) - m_l(Partition({3, 2}), d, gamma);
    Rational den =
        m_l(Partition({3, 1, 1}), d, gamma) - m_l(Partition({2, 2, 1}), d, gamma);
    if (den == 0) throw std::domain_error("degree5_parameters: degenerate moment ratio");
    ExactScalar a{make_rational(p - 1, 2) * num / den - 1};
    if (a.is_zero() || a == ExactScalar(Rational(1)) || a == ExactScalar(Rational(-1)))
        throw std::domain_error("degree5_parameters: derived a = " + a.str() +
                                " is degenerate");
    ExactScalar denom = ExactScalar(Rational(p)) * a *
                        (a - ExactScalar(Rational(1))).pow(2) *
                        (a + ExactScalar(Rational(1)));
    return {a, ExactScalar(num) / denom};
}

SolveResult solve_degree4(const Degree4Problem& problem) {
    std::vector<int> ks(problem.ks.begin(), problem.ks.end());
    check_problem_ks(ks, problem.d, problem.p);
    ExactScalar A5 = a5_weight(problem.d, problem.gamma, problem.p, problem.a);
    static const std::vector<Partition> equations = {
        Partition({4}), Partition({2, 2}), Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
    return solve_system(problem.d, problem.gamma, 4, ks, problem.p, problem.a, A5,
                        equations);
}

SolveResult solve_degree5(const Degree5Problem& problem) {
    std::vector<int> ks(problem.ks.begin(), problem.ks.end());
    check_problem_ks(ks, problem.d, problem.p);
    auto [a, A6] = degree5_parameters(problem.d, problem.gamma, problem.p);
    static const std::vector<Partition> equations = {
        Partition({5}), Partition({4, 1}), Partition({3, 1, 1}), Partition({2, 1, 1, 1}),
        Partition({1, 1, 1, 1, 1})};
    return solve_system(problem.d, problem.gamma, 5, ks, problem.p, a, A6, equations);
}

CubatureRule assemble_rule(int d, const WeightExponent& gamma, int t,
                           const std::vector<int>& ks, int p, const ExactScalar& a,
                           const std::vector<ExactScalar>& A) {
    if (A.size() != ks.size() + 1)
        throw std::invalid_argument("assemble_rule: need one coefficient per orbit");
    if (a.sign() <= 0 || a == ExactScalar(Rational(1)))
        throw std::invalid_argument("assemble_rule: a must be positive and != 1");

    const int ambient = d + 1;
    std::vector<CubatureRule::Node> nodes;
    auto add_orbit = [&](std::vector<ExactScalar> rep, const ExactScalar& weight) {
        if (weight.sign() == 0) return;
        if (weight.sign() < 0) {
            OrbitPoint point(OrbitGroup::Permutation, rep);
            throw RuleConstructionError("negative weight " + weight.str() + " on orbit " +
                                        point.str());
        }
        OrbitPoint point(OrbitGroup::Permutation, std::move(rep));
        for (auto& node : nodes) {
            if (node.point.same_orbit(point)) {
                node.weight += weight;
                return;
            }
        }
        nodes.push_back({std::move(point), weight});
    };

    bool any_nonzero = false;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        ExactScalar lambda = A[j] * ExactScalar(Rational(ks[j])).pow(t);
        if (!lambda.is_zero()) any_nonzero = true;
        std::vector<ExactScalar> rep(static_cast<std::size_t>(ambient),
                                     ExactScalar(Rational(0)));
        for (int i = 0; i < ks[j]; ++i) rep[static_cast<std::size_t>(i)] =
            ExactScalar(make_rational(1, ks[j]));
        add_orbit(std::move(rep), lambda);
    }
    {
        ExactScalar scale = (a + ExactScalar(Rational(p))).inverse();
        ExactScalar lambda = A.back() * (a + ExactScalar(Rational(p))).pow(t);
        if (!lambda.is_zero()) any_nonzero = true;
        std::vector<ExactScalar> rep(static_cast<std::size_t>(ambient),
                                     ExactScalar(Rational(0)));
        rep[0] = a * scale;
        for (int i = 1; i <= p; ++i) rep[static_cast<std::size_t>(i)] = scale;
        add_orbit(std::move(rep), lambda);
    }
    if (!any_nonzero) throw RuleConstructionError("all orbit weights are zero");

    std::string provenance = "index-" + std::to_string(t) + " solver: d=" +
                             std::to_string(d) + " gamma=" + to_string(gamma.value()) +
                             " k=";
    for (std::size_t j = 0; j < ks.size(); ++j)
        provenance += (j ? "," : "") + std::to_string(ks[j]);
    provenance += " p=" + std::to_string(p) + " a=" + a.str();
    return CubatureRule(Domain::SimplexT, d, gamma, Exactness::index(t), std::move(nodes),
                        std::move(provenance));
}

// --- index-6 obstruction -------------------------------------------------

std::string ObstructionReport::quadratic_str() const {
    auto term = [](const Integer& c, const std::string& var, bool first) {
        std::string s;
        if (c == 0) return s;
        if (!first) s += (c > 0) ? " + " : " - ";
        else if (c < 0) s += "-";
        Integer ac = abs(c);
        if (ac != 1 || var.empty()) s += ac.get_str();
        if (!var.empty()) {
            if (ac != 1) s += "*";
            s += var;
        }
        return s;
    };
    std::string s = term(quadratic[2], "a^2", true);
    std::string t1 = term(quadratic[1], "a", s.empty());
    std::string t0 = term(quadratic[0], "", s.empty() && t1.empty());
    return s + t1 + t0 + " = 0";
}

std::string ObstructionReport::summary() const {
    std::string s = "forced a = " + forced_a.str() + "; " + quadratic_str() + ": ";
    switch (verdict) {
        case Verdict::NoRealRoot:
            return s + "no real root -- no index-6 rule of this form";
        case Verdict::Inconsistent:
            return s + "forced a is not a root -- no index-6 rule of this form";
        case Verdict::Consistent:
            return s + "consistent; obstruction inconclusive";
    }
    return s;
}

ObstructionReport index6_obstruction(const WeightExponent& gamma) {
    // Moment ratios of the degree-6 partitions are dimension-free once the
    // shared orbit-count factors cancel; evaluate at a reference dimension
    // large enough for three-part partitions.
    const int d = 6;
    Rational m51 = m_l(Partition({5, 1}), d, gamma);
    Rational m42 = m_l(Partition({4, 2}), d, gamma);
    Rational m33 = m_l(Partition({3, 3}), d, gamma);
    Rational m411 = m_l(Partition({4, 1, 1}), d, gamma);
    Rational m321 = m_l(Partition({3, 2, 1}), d, gamma);
    Rational m222 = m_l(Partition({2, 2, 2}), d, gamma);

    ObstructionReport report{gamma, ExactScalar(Rational(0)), {},
                             ObstructionReport::Verdict::Consistent};

    // Three-part eliminations:
    //   -2 A a(a-1)^2 (a+1) C(p,2) = m_{3,2,1} - 2 m_{4,1,1}
    //    2 A a(a-1)^2       C(p,2) = m_{3,2,1} - 6 m_{2,2,2}
    // force a = -1 - (m_{3,2,1} - 2 m_{4,1,1}) / (m_{3,2,1} - 6 m_{2,2,2}).
    Rational den3 = m321 - 6 * m222;
    if (den3 == 0) throw std::domain_error("obstruction: degenerate three-part moments");
    report.forced_a = ExactScalar(Rational(-1) - (m321 - 2 * m411) / den3);

    // Two-part eliminations:
    //   p A a(a-1)^2 (a+1)^2 = m_{5,1} - 2 m_{3,3}
    //   p A a^2 (a-1)^2      = m_{4,2} - 2 m_{3,3}
    // hence (m42 - 2 m33) (a+1)^2 = (m51 - 2 m33) a.
    Rational c2 = m42 - 2 * m33;
    Rational c1 = 2 * (m42 - 2 * m33) - (m51 - 2 * m33);
    Rational c0 = m42 - 2 * m33;

    // normalize to a primitive integer quadratic with positive leading term
    Integer l = lcm(lcm(c2.get_den(), c1.get_den()), c0.get_den());
    Integer n2 = c2.get_num() * (l / c2.get_den());
    Integer n1 = c1.get_num() * (l / c1.get_den());
    Integer n0 = c0.get_num() * (l / c0.get_den());
    Integer g = gcd(gcd(n2, n1), n0);
    if (g != 0) {
        n2 /= g;
        n1 /= g;
        n0 /= g;
    }
    if (n2 < 0 || (n2 == 0 && n1 < 0)) {
        n2 = -n2;
        n1 = -n1;
        n0 = -n0;
    }
    report.quadratic = {n0, n1, n2};

    Rational disc = Rational(n1) * Rational(n1) - 4 * Rational(n2) * Rational(n0);
    if (n2 != 0 && disc < 0) {
        report.verdict = ObstructionReport::Verdict::NoRealRoot;
        return report;
    }
    ExactScalar residual = ExactScalar(Rational(n2)) * report.forced_a * report.forced_a +
                           ExactScalar(Rational(n1)) * report.forced_a +
                           ExactScalar(Rational(n0));
    report.verdict = residual.is_zero() ? ObstructionReport::Verdict::Consistent
                                        : ObstructionReport::Verdict::Inconsistent;
    return report;
}

// --- P4 certificate -------------------------------------------------------

bool P4Certificate::valid() const {
    if (integral != 0) return false;
    return std::all_of(orbit_values.begin(), orbit_values.end(),
                       [](const Rational& v) { return v > 0; });
}

P4Certificate p4_certificate(int d, const WeightExponent& gamma) {
    if (d < 1) throw std::invalid_argument("p4_certificate: d must be >= 1");
    const Rational& g = gamma.value();
    P4Certificate cert;
    cert.d = d;
    cert.gamma = gamma;
    cert.coeff_31 = -4 * (g + 4) / (d * (g + 1));
    cert.coeff_22 = 6 * (g + 3) * (g + 4) / (d * (g + 1) * (g + 2));
    cert.integral = m_l(Partition({4}), d, gamma) +
                    cert.coeff_31 * m_l(Partition({3, 1}), d, gamma) +
                    cert.coeff_22 * m_l(Partition({2, 2}), d, gamma);
    for (int k = 1; k <= d + 1; ++k) {
        Rational choose2{binomial(static_cast<long>(k), 2)};
        cert.orbit_values.push_back(k + 2 * choose2 * cert.coeff_31 +
                                    choose2 * cert.coeff_22);
    }
    return cert;
}

// --- candidate parameter families ----------------------------------------

namespace {

ExactScalar sqrt_rational(const Rational& q) {
    if (q < 0) throw std::domain_error("negative discriminant in candidate formula");
    return ExactScalar::make(0, Rational(1, q.get_den()), q.get_num() * q.get_den());
}

}  // namespace

std::vector<std::string> family_ids() {
    return {"u-z2-m3", "u-z2", "u-z3", "u3-z2", "u3-z3",
            "c-z2",    "c-z3-a9", "c-z3-b", "c-z3-c", "c-a9", "c-z2-pm1", "c-a4"};
}

ExactScalar candidate_a(const std::string& family, int d, int m, int p) {
    const Rational D = d, M = m;
    if (family == "u-z2-m3") {
        Rational delta = 1252 - 372 * D + 93 * D * D - 14 * D * D * D + D * D * D * D;
        return (ExactScalar(38 - 7 * D + D * D) + sqrt_rational(delta)) /
               ExactScalar(Rational(8));
    }
    if (family == "u-z2") {
        Rational inner = 16 + D - D * D + 2 * (D - 9) * M;
        Rational delta = -16 * (D - 2) * (D - M) * (M - 1) + inner * inner;
        return (ExactScalar(-16 - D + D * D + 18 * M - 2 * D * M) + sqrt_rational(delta)) /
               ExactScalar(4 * (M - 1));
    }
    if (family == "u-z3") {
        Rational den = D + 2 - 2 * M;
        if (den == 0) throw std::domain_error("candidate_a: m = (d+2)/2 is degenerate");
        return ExactScalar(2 * (D - M) / den);
    }
    if (family == "c-z2") {
        Rational inner = 43 - D * D - 45 * M + 3 * D * M;
        Rational delta =
            -4 * (3 * M - 3) * (-6 * D + 3 * D * D + 6 * M - 3 * D * M) + inner * inner;
        return (ExactScalar(-43 + D * D + 45 * M - 3 * D * M) + sqrt_rational(delta)) /
               ExactScalar(6 * (M - 1));
    }
    if (family == "c-z3-a9") return ExactScalar(Rational(9));
    if (family == "c-z3-b") {
        if (m == 3) throw std::domain_error("candidate_a: m = 3 is degenerate here");
        return ExactScalar(3 * (3 * M - 7) / (M - 3));
    }
    if (family == "c-z3-c") {
        if (m == 4) throw std::domain_error("candidate_a: m = 4 is degenerate here");
        return ExactScalar(3 * (3 * M - 8) / (M - 4));
    }
    if (family == "c-a9") return ExactScalar(Rational(9));
    if (family == "c-z2-pm1") {
        Rational inner = -49 + D * D + 51 * M - 3 * D * (2 + M);
        Rational delta = 36 * D * (2 + D - M) * (M - 3) + inner * inner;
        return (ExactScalar(-49 - 6 * D + D * D + 51 * M - 3 * D * M) +
                sqrt_rational(delta)) /
               ExactScalar(6 * D);
    }
    if (family == "c-a4") return ExactScalar(Rational(4));
    if (family == "u3-z2" || family == "u3-z3") {
        int slot = family == "u3-z2" ? 2 : 3;
        auto roots = zero_weight_roots(d, WeightExponent::unit(),
                                       {d + 1, 1, 3, m}, p, slot);
        if (!roots || roots->empty())
            throw std::domain_error("candidate_a: no quadratic-field root for " + family);
        // deterministic pick: the largest admissible root (the surveys use the
        // + branch of the quadratic)
        ExactScalar best = roots->front();
        for (const auto& r : *roots)
            if (r > best) best = r;
        return best;
    }
    throw std::invalid_argument("unknown family id '" + family + "'");
}

std::optional<std::vector<ExactScalar>> zero_weight_roots(int d,
                                                          const WeightExponent& gamma,
                                                          const std::array<int, 4>& ks,
                                                          int p, int zero_slot) {
    if (zero_slot < 1 || zero_slot > 4)
        throw std::invalid_argument("zero_weight_roots: slot must be 1..4");
    static const std::vector<Partition> equations = {
        Partition({4}), Partition({2, 2}), Partition({2, 1, 1}), Partition({1, 1, 1, 1})};

    // Cramer numerator of A_slot over Q[a]: columns S_l(v_k), the target
    // column replaced by p a (a-1)^2 * rhs(a) = m_l p a(a-1)^2 - c0 S_l(u_a).
    const Rational c0 =
        m_l(Partition({3, 1}), d, gamma) - 2 * m_l(Partition({2, 2}), d, gamma);

    // 4x4 rational determinant by Laplace expansion along the target column.
    // The explicit return type forces gmp expression templates to evaluate
    // before the locals go out of scope.
    auto minor_det = [&](int skip_row, int skip_col) -> Rational {
        std::vector<std::vector<Rational>> m3;
        for (int r = 0; r < 4; ++r) {
            if (r == skip_row) continue;
            std::vector<Rational> row;
            for (int c = 0; c < 4; ++c) {
                if (c == skip_col) continue;
                row.emplace_back(
                    Rational(s_value_at_vk(equations[static_cast<std::size_t>(r)],
                                           ks[static_cast<std::size_t>(c)])));
            }
            m3.push_back(std::move(row));
        }
        // 3x3 determinant
        auto& a = m3;
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };

    RationalPoly weight_factor(
        {Rational(0), Rational(p), Rational(-2 * p), Rational(p)});  // p a (a-1)^2
    RationalPoly numerator;
    const int col = zero_slot - 1;
    for (int r = 0; r < 4; ++r) {
        Rational cof = minor_det(r, col);
        if ((r + col) % 2 == 1) cof = -cof;
        if (cof == 0) continue;
        const Partition& l = equations[static_cast<std::size_t>(r)];
        RationalPoly u_poly(s_value_at_u_poly(l, p));
        RationalPoly entry =
            weight_factor * m_l(l, d, gamma) - u_poly * c0;
        numerator = numerator + entry * cof;
    }
    if (numerator.is_zero()) return std::nullopt;
    auto roots = quadratic_field_roots(numerator);
    if (!roots) return std::nullopt;
    std::vector<ExactScalar> admissible;
    for (const auto& r : *roots)
        if (r.sign() > 0 && r != ExactScalar(Rational(1))) admissible.push_back(r);
    return admissible;
}

// --- search driver ---------------------------------------------------------

std::vector<Degree5Case> reference_degree5_cases(const WeightExponent& gamma) {
    if (gamma == WeightExponent::unit())
        return {{3, 3, 4}, {4, 4, 4}, {5, 4, 4},  {6, 5, 4},  {7, 6, 5},
                {8, 6, 5}, {9, 7, 5}, {10, 8, 5}, {11, 11, 6}};
    if (gamma == WeightExponent::chebyshev())
        return {{3, 2, 4},   {4, 3, 4},  {5, 3, 4},   {6, 4, 4},  {7, 4, 4},
                {8, 5, 5},   {9, 5, 5},  {10, 6, 5},  {11, 6, 5}, {12, 7, 5},
                {13, 7, 5},  {14, 8, 6}, {15, 8, 5},  {16, 9, 6}, {17, 9, 5},
                {18, 10, 6}, {19, 10, 5}, {20, 11, 6}, {21, 11, 5}, {22, 12, 6},
                {23, 12, 4}};
    return {};
}

namespace {

struct Candidate {
    int d = 0;
    std::string family;
    int m = 0;
    int p = 0;
    ExactScalar a;
};

void push_candidate(std::vector<Candidate>& out, int d, const std::string& family, int m,
                    int p, const ExactScalar& a) {
    if (a.sign() <= 0 || a == ExactScalar(Rational(1))) return;
    if (p < 1 || p > d) return;
    out.push_back({d, family, m, p, a});
}

std::vector<Candidate> degree4_candidates(const SearchOptions& options) {
    std::vector<std::string> families = options.families;
    if (families.empty()) {
        if (options.gamma == WeightExponent::unit())
            families = {"u-z2-m3", "u-z2", "u-z3", "u3-z2", "u3-z3"};
        else
            families = {"c-z2", "c-z3", "c-a9", "c-z2-pm1", "c-a4"};
    }
    std::vector<Candidate> out;
    for (int d = options.d_low; d <= options.d_high; ++d) {
        for (const auto& family : families) {
            const bool third_is_3 = family.rfind("u3-", 0) == 0;
            int m_lo = third_is_3 || options.gamma == WeightExponent::unit() ? 4 : 3;
            if (family == "u-z2-m3") {
                try {
                    push_candidate(out, d, family, 3, d, candidate_a(family, d, 3, d));
                } catch (const std::domain_error&) {
                }
                for (const auto& a : options.extra_a_grid)
                    push_candidate(out, d, family + "+grid", 3, d, a);
                continue;
            }
            for (int m = m_lo; m <= d; ++m) {
                if (third_is_3 && m == 3) continue;
                if (family == "c-z3") {
                    // generic zero-weight family: both quadratic roots
                    auto roots = zero_weight_roots(d, options.gamma, {d + 1, 1, 2, m}, d, 3);
                    if (roots)
                        for (const auto& r : *roots) push_candidate(out, d, family, m, d, r);
                    continue;
                }
                if (third_is_3) {
                    int slot = family == "u3-z2" ? 2 : 3;
                    auto roots =
                        zero_weight_roots(d, options.gamma, {d + 1, 1, 3, m}, d, slot);
                    if (roots)
                        for (const auto& r : *roots) push_candidate(out, d, family, m, d, r);
                    for (const auto& a : options.extra_a_grid)
                        push_candidate(out, d, family + "+grid", m, d, a);
                    continue;
                }
                std::vector<int> ps;
                if (family == "c-z2-pm1")
                    ps = {m - 1};
                else if (family == "c-a4") {
                    for (int p = std::max(2, m - 1); p <= std::min(d, m + 1); ++p)
                        ps.push_back(p);
                } else
                    ps = {d};
                for (int p : ps) {
                    try {
                        push_candidate(out, d, family, m, p, candidate_a(family, d, m, p));
                    } catch (const std::domain_error&) {
                    }
                    for (const auto& a : options.extra_a_grid)
                        push_candidate(out, d, family + "+grid", m, p, a);
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<SearchHit> search_positive(const SearchOptions& options) {
    std::vector<SearchHit> hits;
    std::mutex hits_mutex;

    if (options.degree == 4) {
        std::vector<Candidate> candidates = degree4_candidates(options);
        parallel_for(
            candidates.size(),
            [&](std::size_t i) {
                const Candidate& c = candidates[i];
                Degree4Problem problem{c.d, options.gamma, {c.d + 1, 1, 0, 0}, c.p, c.a};
                problem.ks[2] = c.family.rfind("u3-", 0) == 0 ? 3 : 2;
                problem.ks[3] = c.m;
                if (c.family == "u-z2-m3" || c.family == "u-z2-m3+grid")
                    problem.ks = {c.d + 1, 1, 2, 3};
                try {
                    SolveResult result = solve_degree4(problem);
                    if (result.positive) {
                        std::lock_guard<std::mutex> lock(hits_mutex);
                        hits.push_back({c.d, c.family, c.m, c.p, c.a, std::move(result)});
                    }
                } catch (const std::exception&) {
                    // singular or degenerate candidates are simply not hits
                }
            },
            options.threads);
    } else if (options.degree == 5) {
        struct Cell {
            int d, p, m;
        };
        std::vector<Cell> cells;
        for (int d = options.d_low; d <= options.d_high; ++d)
            for (int p = 2; p <= d; ++p)
                for (int m = 4; m <= d + 1; ++m) cells.push_back({d, p, m});
        parallel_for(
            cells.size(),
            [&](std::size_t i) {
                const Cell& c = cells[i];
                Degree5Problem problem{c.d, options.gamma, {c.d + 1, 1, 2, 3, c.m}, c.p};
                try {
                    SolveResult result = solve_degree5(problem);
                    if (result.positive) {
                        std::lock_guard<std::mutex> lock(hits_mutex);
                        hits.push_back({c.d, "k123m", c.m, c.p, result.a,
                                        std::move(result)});
                    }
                } catch (const std::exception&) {
                }
            },
            options.threads);
    } else {
        throw std::invalid_argument("search_positive: degree must be 4 or 5");
    }

    std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
        if (x.d != y.d) return x.d < y.d;
        if (x.family != y.family) return x.family < y.family;
        if (x.m != y.m) return x.m < y.m;
        if (x.p != y.p) return x.p < y.p;
        return x.a < y.a;
    });
    return hits;
}

}  // namespace cubforge
