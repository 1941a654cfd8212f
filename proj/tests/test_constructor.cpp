#include <doctest.h>

#include "cubforge/constructor.hpp"

using namespace cubforge;

namespace {
ExactScalar q(long n, long d = 1) { return ExactScalar(make_rational(n, d)); }
const WeightExponent kUnit = WeightExponent::unit();
const WeightExponent kCheb = WeightExponent::chebyshev();

void check_lambdas(const SolveResult& r, const std::vector<ExactScalar>& expect) {
    REQUIRE(r.lambdas.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(r.lambdas[i] == expect[i]);
}
}  // namespace

TEST_CASE("a5 weight formula") {
    // d=4, gamma=0, p=4, a=6: A5 = 1/25200, lambda5 = 10^4 A5 = 25/63
    ExactScalar a5 = a5_weight(4, kUnit, 4, q(6));
    CHECK(a5 == q(1, 25200));
    CHECK(a5 * q(10).pow(4) == q(25, 63));
    CHECK_THROWS_AS(a5_weight(4, kUnit, 4, q(1)), std::domain_error);
    CHECK_THROWS_AS(a5_weight(4, kUnit, 4, q(0)), std::domain_error);
    // gamma=0: m_{3,1} - 2 m_{2,2} = 2d(d+1)/(d+1)_4 > 0, so A5 > 0 for a > 1
    for (int d = 3; d <= 10; ++d) {
        Rational expect = Rational(2 * d * (d + 1)) / pochhammer(Rational(d + 1), 4);
        CHECK(a5_weight(d, kUnit, d, q(2)) ==
              ExactScalar(expect) / (q(2) * q(1).pow(2) * q(d)));
        CHECK(a5_weight(d, kUnit, d, q(7, 2)).sign() == 1);
    }
}

TEST_CASE("degree-4 reference solutions") {
    SUBCASE("d=5 unit weight, 32 nodes") {
        SolveResult r = solve_degree4({5, kUnit, {6, 1, 2, 3}, 5, q(4)});
        check_lambdas(r, {q(0), q(1, 112), q(0), q(15, 56), q(81, 112)});
        REQUIRE(r.rule.has_value());
        CHECK(r.rule->node_count() == 32);
        CHECK(r.positive);
    }
    SUBCASE("d=4 m=4 unit weight, 20 nodes") {
        SolveResult r = solve_degree4({4, kUnit, {5, 1, 2, 4}, 4, q(6)});
        check_lambdas(r, {q(0), q(0), q(2, 21), q(32, 63), q(25, 63)});
        REQUIRE(r.rule.has_value());
        CHECK(r.rule->node_count() == 20);
    }
    SUBCASE("d=12 m=6 unit weight") {
        SolveResult r = solve_degree4({12, kUnit, {13, 1, 2, 6}, 12, q(6)});
        check_lambdas(r, {q(2197, 12250), q(0), q(0), q(99, 245), q(729, 1750)});
        REQUIRE(r.rule.has_value());
        CHECK(r.rule->node_count() == 1730);
    }
    SUBCASE("d=3 chebyshev weight (degree-9 sphere source)") {
        SolveResult r = solve_degree4({3, kCheb, {4, 1, 2, 3}, 2, q(4)});
        check_lambdas(r, {q(2, 15), q(1, 15), q(1, 8), q(0), q(27, 40)});
    }
    SUBCASE("d=10 m=5 unit weight (node-reduction source)") {
        SolveResult r = solve_degree4({10, kUnit, {11, 1, 2, 5}, 10, q(5)});
        check_lambdas(r, {q(1331, 17472), q(1, 1092), q(0), q(125, 364), q(3375, 5824)});
        CHECK(r.rule->node_count() == 485);
    }
    SUBCASE("d=4 chebyshev a=9 (rational sphere rule)") {
        SolveResult r = solve_degree4({4, kCheb, {5, 1, 2, 3}, 4, q(9)});
        check_lambdas(r, {q(7375, 66528), q(52, 2079), q(256, 2079), q(24, 77),
                          q(28561, 66528)});
    }
    SUBCASE("d=4 surd parameter") {
        ExactScalar a = ExactScalar::make(make_rational(13, 4), make_rational(3, 4), 17);
        SolveResult r = solve_degree4({4, kUnit, {5, 1, 2, 3}, 4, a});
        CHECK(r.positive);
        CHECK(r.lambdas[1] == q(0));
        // lambda3 = 13/21 - sqrt(17)/7
        CHECK(r.lambdas[2] ==
              ExactScalar::make(make_rational(13, 21), make_rational(-1, 7), 17));
        CHECK(r.rule->node_count() == 5 + 10 + 10 + 5 - 5 + 1);  // 1+10+10+5 = 26
    }
}

TEST_CASE("degree-5 derived parameters") {
    for (int d = 2; d <= 30; ++d) {
        for (int p = 2; p <= d; ++p) {
            // gamma = 0: a = 6(p-1)/(d-1) - 1; gamma = -1/2: a = 10(p-1)/(d-1) - 1
            Rational expect_unit = Rational(6 * (p - 1)) / (d - 1) - 1;
            Rational expect_cheb = Rational(10 * (p - 1)) / (d - 1) - 1;
            if (expect_unit != 0 && expect_unit != 1 && expect_unit != -1) {
                auto [a, A6] = degree5_parameters(d, kUnit, p);
                CHECK(a == ExactScalar(expect_unit));
            }
            if (expect_cheb != 0 && expect_cheb != 1 && expect_cheb != -1) {
                auto [a, A6] = degree5_parameters(d, kCheb, p);
                CHECK(a == ExactScalar(expect_cheb));
            }
        }
    }
    CHECK(degree5_parameters(3, kUnit, 3).first == q(5));
    CHECK(degree5_parameters(11, kUnit, 11).first == q(5));
    CHECK(degree5_parameters(3, kCheb, 2).first == q(4));
    // p = 1 forces a = -1: degenerate
    CHECK_THROWS_AS(degree5_parameters(5, kUnit, 1), std::exception);
}

TEST_CASE("degree-5 reference solutions") {
    SUBCASE("(3,3,4) unit: 19 nodes, centroid column merged") {
        SolveResult r = solve_degree5({3, kUnit, {4, 1, 2, 3, 4}, 3});
        CHECK(r.a == q(5));
        check_lambdas(r, {q(16, 105), q(1, 70), q(4, 35), q(81, 350), q(0), q(256, 525)});
        REQUIRE(r.rule.has_value());
        CHECK(r.rule->node_count() == 19);
    }
    SUBCASE("(11,11,6) unit: 1014 nodes") {
        SolveResult r = solve_degree5({11, kUnit, {12, 1, 2, 3, 6}, 11});
        CHECK(r.a == q(5));
        check_lambdas(r, {q(0), q(1, 6825), q(11, 1365), q(0), q(891, 2275),
                          q(4096, 6825)});
        CHECK(r.rule->node_count() == 1014);
    }
    SUBCASE("(3,2,4) chebyshev") {
        SolveResult r = solve_degree5({3, kCheb, {4, 1, 2, 3, 4}, 2});
        CHECK(r.a == q(4));
        check_lambdas(r, {q(2, 15), q(1, 15), q(1, 8), q(0), q(0), q(27, 40)});
    }
    SUBCASE("(7,4,4) chebyshev") {
        SolveResult r = solve_degree5({7, kCheb, {8, 1, 2, 3, 4}, 4});
        CHECK(r.a == q(4));
        check_lambdas(r, {q(32, 315), q(1, 105), q(2, 45), q(0), q(2, 15), q(32, 45)});
    }
    SUBCASE("(21,11,5) chebyshev") {
        SolveResult r = solve_degree5({21, kCheb, {22, 1, 2, 3, 5}, 11});
        CHECK(r.a == q(4));
        check_lambdas(r, {q(14641, 705432), q(61, 192192), q(0), q(405, 31616),
                          q(625, 14144), q(16875, 18304)});
        CHECK(r.rule->weight_sum() == q(1));
    }
    SUBCASE("(23,12,4) chebyshev") {
        SolveResult r = solve_degree5({23, kCheb, {24, 1, 2, 3, 4}, 12});
        CHECK(r.a == q(4));
        check_lambdas(r, {q(0), q(1, 4095), q(0), q(0), q(506, 12285), q(11776, 12285)});
    }
}

TEST_CASE("weights of positive solutions sum to one") {
    for (const auto& r :
         {solve_degree4({5, kUnit, {6, 1, 2, 3}, 5, q(4)}),
          solve_degree4({3, kCheb, {4, 1, 2, 3}, 2, q(4)}),
          solve_degree5({3, kUnit, {4, 1, 2, 3, 4}, 3})}) {
        ExactScalar total(Rational(0));
        for (const auto& l : r.lambdas) total += l;
        CHECK(total == q(1));
    }
}

TEST_CASE("assemble rejects bad input") {
    CHECK_THROWS_AS(assemble_rule(3, kUnit, 4, {4, 1, 2, 3}, 3, q(1),
                                  {q(1), q(0), q(0), q(0), q(0)}),
                    std::invalid_argument);
    // all-zero weights rejected
    CHECK_THROWS_AS(assemble_rule(3, kUnit, 4, {4, 1, 2, 3}, 3, q(2),
                                  {q(0), q(0), q(0), q(0), q(0)}),
                    RuleConstructionError);
    // negative weight carries the orbit in the message
    try {
        assemble_rule(3, kUnit, 4, {4, 1, 2, 3}, 3, q(2),
                      {q(-1), q(0), q(0), q(0), q(1)});
        FAIL("expected RuleConstructionError");
    } catch (const RuleConstructionError& e) {
        CHECK(std::string(e.what()).find("perm(") != std::string::npos);
    }
}

TEST_CASE("non-positive solutions are flagged, not assembled") {
    // 4.1.1 closed form at d = 6 is not positive
    ExactScalar a = candidate_a("u-z2-m3", 6, 3, 6);
    SolveResult r = solve_degree4({6, kUnit, {7, 1, 2, 3}, 6, a});
    CHECK(!r.positive);
    CHECK(!r.rule.has_value());
    CHECK(!r.negative_slots.empty());
}
