#include <doctest.h>

#include <cstdio>

#include "cubforge/constructor.hpp"
#include "cubforge/rule_io.hpp"

using namespace cubforge;

namespace {
ExactScalar q(long n, long d = 1) { return ExactScalar(make_rational(n, d)); }
}  // namespace

TEST_CASE("rule json round trip is bit-exact") {
    // a rule with a quadratic surd parameter stresses the scalar format
    ExactScalar a = ExactScalar::make(make_rational(13, 4), make_rational(3, 4), 17);
    SolveResult solved = solve_degree4({4, WeightExponent::unit(), {5, 1, 2, 3}, 4, a});
    REQUIRE(solved.rule.has_value());
    const CubatureRule& rule = *solved.rule;

    std::string text = rule_to_json(rule);
    CubatureRule back = rule_from_json(text);
    CHECK(back.domain() == rule.domain());
    CHECK(back.dimension() == rule.dimension());
    CHECK(back.gamma() == rule.gamma());
    CHECK(back.exactness() == rule.exactness());
    REQUIRE(back.nodes().size() == rule.nodes().size());
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        CHECK(back.nodes()[i].weight == rule.nodes()[i].weight);
        CHECK(back.nodes()[i].point.representative() ==
              rule.nodes()[i].point.representative());
        CHECK(back.nodes()[i].point.group() == rule.nodes()[i].point.group());
    }
    // serialization is a fixed point
    CHECK(rule_to_json(back) == text);
}

TEST_CASE("sphere rules with explicit signed nodes round trip") {
    std::vector<ExactScalar> quarter(4, q(1, 4));
    std::vector<CubatureRule::Node> nodes;
    nodes.push_back({OrbitPoint(OrbitGroup::ExplicitSigned, quarter, {1, -1, 1, -1}),
                     q(1, 2)});
    nodes.push_back({OrbitPoint(OrbitGroup::SignOrbitPodal, quarter), q(1, 2)});
    CubatureRule rule(Domain::Sphere, 3, WeightExponent::chebyshev(),
                      Exactness::index(2), std::move(nodes), "handmade");
    CubatureRule back = rule_from_json(rule_to_json(rule));
    CHECK(back.nodes()[0].point.signs() == std::vector<int>{1, -1, 1, -1});
    CHECK(back.provenance() == "handmade");
    CHECK(rule_to_json(back) == rule_to_json(rule));
}

TEST_CASE("malformed rule files fail with parse errors") {
    CHECK_THROWS_AS(rule_from_json("{"), ParseError);
    CHECK_THROWS_AS(rule_from_json("{}"), ParseError);
    CHECK_THROWS_AS(rule_from_json(R"({"format_version": 99})"), ParseError);
    // well-formed json with inconsistent payload -> construction error
    std::string bad = R"({
      "format_version": 1, "domain": "simplex", "d": 3,
      "gamma": "0", "exactness": {"kind": "index", "value": 4},
      "orbits": [{"group": "perm", "representative": ["1/2","1/2","1/2","1/2"],
                  "weight": "1"}]})";
    CHECK_THROWS_AS(rule_from_json(bad), RuleConstructionError);
}

TEST_CASE("approximate output is additive only") {
    SolveResult solved =
        solve_degree4({5, WeightExponent::unit(), {6, 1, 2, 3}, 5, q(4)});
    std::string approx = rule_to_json(*solved.rule, true);
    CHECK(approx.find("weight_approx") != std::string::npos);
    CubatureRule back = rule_from_json(approx);
    CHECK(rule_to_json(back) == rule_to_json(*solved.rule));
}
