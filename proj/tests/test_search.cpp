#include <doctest.h>

#include <set>

#include "cubforge/constructor.hpp"
#include "cubforge/rule.hpp"
#include "cubforge/verification.hpp"

using namespace cubforge;

namespace {
const WeightExponent kUnit = WeightExponent::unit();
const WeightExponent kCheb = WeightExponent::chebyshev();
}  // namespace

TEST_CASE("degree-4 unit-weight survey covers every dimension 3..17") {
    SearchOptions options;
    options.degree = 4;
    options.gamma = kUnit;
    options.d_low = 3;
    options.d_high = 17;
    auto hits = search_positive(options);
    std::set<int> covered;
    for (const auto& hit : hits) {
        covered.insert(hit.d);
        REQUIRE(hit.solution.rule.has_value());
        CHECK(hit.solution.rule->weight_sum() == ExactScalar(Rational(1)));
    }
    for (int d = 3; d <= 17; ++d) {
        CAPTURE(d);
        CHECK(covered.count(d) == 1);
    }
    // every returned rule passes the independent exactness check
    for (std::size_t i = 0; i < hits.size(); i += 7) {
        CAPTURE(hits[i].d);
        CHECK(verify_index_exactness(*hits[i].solution.rule, 4).pass);
    }
    // determinism: a second run returns the same parameter list
    auto again = search_positive(options);
    REQUIRE(again.size() == hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i) {
        CHECK(again[i].d == hits[i].d);
        CHECK(again[i].family == hits[i].family);
        CHECK(again[i].m == hits[i].m);
        CHECK(again[i].a == hits[i].a);
    }
    // single-threaded run agrees with the parallel one
    SearchOptions serial = options;
    serial.threads = 1;
    auto once = search_positive(serial);
    REQUIRE(once.size() == hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i) CHECK(once[i].a == hits[i].a);
}

TEST_CASE("degree-4 survey hits include the printed parameter cases") {
    SearchOptions options;
    options.degree = 4;
    options.gamma = kUnit;
    options.d_low = 12;
    options.d_high = 13;
    auto hits = search_positive(options);
    bool found_12 = false, found_13 = false;
    for (const auto& hit : hits) {
        if (hit.d == 12 && hit.family == "u-z2" && hit.m == 6 &&
            hit.a == ExactScalar(Rational(6)))
            found_12 = true;
        if (hit.d == 13 && hit.family == "u3-z2" && hit.m == 7 &&
            hit.a == ExactScalar::make(make_rational(13, 4), make_rational(1, 4), 89))
            found_13 = true;
    }
    CHECK(found_12);
    CHECK(found_13);
}

TEST_CASE("extra a-grid joins the enumeration") {
    SearchOptions options;
    options.degree = 4;
    options.gamma = kUnit;
    options.d_low = 5;
    options.d_high = 5;
    options.families = {"u-z2-m3"};
    options.extra_a_grid = {ExactScalar(Rational(4))};
    auto hits = search_positive(options);
    // the closed-form candidate is not positive at d=5, the grid value is
    bool found_grid = false;
    for (const auto& hit : hits)
        if (hit.a == ExactScalar(Rational(4))) {
            found_grid = true;
            CHECK(hit.solution.rule->node_count() == 32);
        }
    CHECK(found_grid);
}

TEST_CASE("degree-5 unit-weight survey: positive dimensions are exactly 3..11") {
    SearchOptions options;
    options.degree = 5;
    options.gamma = kUnit;
    options.d_low = 3;
    options.d_high = 13;
    auto hits = search_positive(options);
    std::set<int> covered;
    std::set<std::tuple<int, int, int>> triples;
    for (const auto& hit : hits) {
        covered.insert(hit.d);
        triples.insert({hit.d, hit.p, hit.m});
    }
    CHECK(covered == std::set<int>{3, 4, 5, 6, 7, 8, 9, 10, 11});
    // the reference cases are all found with their derived parameter
    for (const auto& c : reference_degree5_cases(kUnit)) {
        CAPTURE(c.d);
        CHECK(triples.count({c.d, c.p, c.m}) == 1);
    }
    // known further positives beyond the per-dimension representative list
    CHECK(triples.count({8, 6, 4}) == 1);
    CHECK(triples.count({5, 4, 5}) == 1);
}

TEST_CASE("degree-9 sphere survey: the zero-vertex-weight family") {
    SearchOptions options;
    options.degree = 4;
    options.gamma = kCheb;
    options.d_low = 3;
    options.d_high = 17;
    options.families = {"c-z2"};
    auto hits = search_positive(options);
    std::set<std::pair<int, int>> pairs;
    for (const auto& hit : hits)
        if (hit.m <= 6) pairs.insert({hit.d, hit.m});
    const std::set<std::pair<int, int>> expected = {
        {3, 3},  {4, 3},  {5, 3},  {5, 4},  {6, 4},  {7, 4},
        {8, 4},  {9, 4},  {9, 5},  {10, 5}, {11, 5}, {12, 5},
        {13, 5}, {13, 6}, {14, 6}, {15, 6}, {16, 6}, {17, 6}};
    CHECK(pairs == expected);
    // the (14, 5) cell is non-positive: its third weight is exactly
    // (128 - 32 sqrt(22))/2907 < 0
    SolveResult r = solve_degree4({14, kCheb, {15, 1, 2, 5}, 14,
                                   candidate_a("c-z2", 14, 5, 14)});
    CHECK(!r.positive);
    CHECK(r.lambdas[2] ==
          ExactScalar::make(make_rational(128, 2907), make_rational(-32, 2907), 22));
}

TEST_CASE("sphere node counts of the low-dimensional survey rules") {
    // d=3, m=3: 136 nodes on the sphere, halving to 68
    SolveResult r3 = solve_degree4({3, kCheb, {4, 1, 2, 3}, 3,
                                    candidate_a("c-z2", 3, 3, 3)});
    REQUIRE(r3.rule.has_value());
    CubatureRule s3 = simplex_to_sphere(*r3.rule);
    CHECK(s3.node_count() == 136);
    CHECK(antipodal_reduce(s3).node_count() == 68);
    // d=4, m=3: 312 nodes, halving to 156
    SolveResult r4 = solve_degree4({4, kCheb, {5, 1, 2, 3}, 4,
                                    candidate_a("c-z2", 4, 3, 4)});
    REQUIRE(r4.rule.has_value());
    CubatureRule s4 = simplex_to_sphere(*r4.rule);
    CHECK(s4.node_count() == 312);
    CHECK(antipodal_reduce(s4).node_count() == 156);
    CHECK(verify_index_exactness(antipodal_reduce(s4), 8).pass);
}

TEST_CASE("reference degree-5 chebyshev cases solve positive") {
    for (const auto& c : reference_degree5_cases(kCheb)) {
        if (c.d > 12) continue;  // keep the unit-test budget small
        CAPTURE(c.d);
        Degree5Problem problem{c.d, kCheb, {c.d + 1, 1, 2, 3, c.m}, c.p};
        SolveResult r = solve_degree5(problem);
        CHECK(r.positive);
    }
}
