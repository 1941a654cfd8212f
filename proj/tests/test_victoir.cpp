#include <doctest.h>

#include <cstdlib>

#include "cubforge/constructor.hpp"
#include "cubforge/design.hpp"
#include "cubforge/verification.hpp"
#include "cubforge/victoir.hpp"

using namespace cubforge;

namespace {
ExactScalar q(long n, long d = 1) { return ExactScalar(make_rational(n, d)); }
const WeightExponent kUnit = WeightExponent::unit();
const WeightExponent kCheb = WeightExponent::chebyshev();

std::string data_path(const std::string& name) {
    const char* dir = std::getenv("CUBFORGE_TEST_DATA");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

CubatureRule base_485_rule() {
    SolveResult r = solve_degree4({10, kUnit, {11, 1, 2, 5}, 10, q(5)});
    REQUIRE(r.rule.has_value());
    return *r.rule;
}
}  // namespace

TEST_CASE("design reduction reproduces the 89-node rule") {
    CubatureRule rule = base_485_rule();
    REQUIRE(rule.node_count() == 485);
    CombinatorialDesign design = load_design(data_path("4-11-5-1.design"));

    // the k=5 orbit is the one with 462 members
    std::size_t target = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < rule.nodes().size(); ++i)
        if (rule.nodes()[i].point.cardinality() == 462) target = i;
    REQUIRE(target != static_cast<std::size_t>(-1));

    CubatureRule reduced = victoir_simplex(rule, {{target, design}});
    CHECK(reduced.node_count() == 89);

    // per-point weights of the printed reduced rule
    // centroid 1331/17472; vertex orbit per point 1/12012; design nodes
    // 125/24024 each; off-family orbit per point 3375/64064
    bool saw_design_node = false;
    for (const auto& node : reduced.nodes()) {
        if (node.point.group() == OrbitGroup::Explicit) {
            CHECK(node.weight == q(125, 24024));
            saw_design_node = true;
        }
    }
    CHECK(saw_design_node);
    CHECK(reduced.nodes()[0].weight == q(1331, 17472));        // centroid orbit total
    CHECK(reduced.nodes()[1].weight / q(11) == q(1, 12012));   // vertex orbit per point
    CHECK(reduced.nodes().back().weight / q(11) == q(3375, 64064));
    CHECK(reduced.weight_sum() == q(1));

    // full-monomial exactness of the mixed rule at index 4 (1001 monomials)
    VerifyReport check = verify_index_exactness(reduced, 4, VerifyMethod::Monomials);
    CHECK(check.pass);
    CHECK(check.cases_checked == 1001);
}

TEST_CASE("design reduction rejects mismatched designs") {
    CubatureRule rule = base_485_rule();
    std::size_t target = 0;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i)
        if (rule.nodes()[i].point.cardinality() == 462) target = i;
    // wrong strength
    CombinatorialDesign weak = CombinatorialDesign::complete(11, 5, 3);
    CHECK_THROWS_AS(victoir_simplex(rule, {{target, weak}}), InvalidDesignError);
    // wrong point count
    CombinatorialDesign wrong_v = CombinatorialDesign::complete(10, 5, 4);
    CHECK_THROWS_AS(victoir_simplex(rule, {{target, wrong_v}}), InvalidDesignError);
    // block size matching neither value class of the orbit
    CombinatorialDesign wrong_k = CombinatorialDesign::complete(11, 7, 4);
    CHECK_THROWS_AS(victoir_simplex(rule, {{target, wrong_k}}), InvalidDesignError);
    // a design whose block size matches the zero class is the complement
    // construction and must still verify
    CombinatorialDesign complement = CombinatorialDesign::complete(11, 6, 4);
    CHECK(victoir_simplex(rule, {{target, complement}}).node_count() == 485 - 462 + 462);
}

TEST_CASE("complete design keeps the node count") {
    CubatureRule rule = base_485_rule();
    // the complete 4-(11,5,7) design has C(11,5) = 462 blocks: reduction is
    // the identity on the node count
    std::size_t target = 0;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i)
        if (rule.nodes()[i].point.cardinality() == 462) target = i;
    CombinatorialDesign complete = CombinatorialDesign::complete(11, 5, 4);
    CHECK(complete.block_count() == 462);
    CubatureRule reduced = victoir_simplex(rule, {{target, complete}});
    CHECK(reduced.node_count() == rule.node_count());
}

TEST_CASE("sphere reduction with the toy strength-3 array") {
    // degree-3 sphere rule: centroid sign orbit with weight 1 is exact for
    // degree <= 3 (odd monomials vanish, x_i^2 averages to 1/4)
    std::vector<ExactScalar> quarter(4, q(1, 4));
    CubatureRule rule(Domain::Sphere, 3, kCheb, Exactness::degree(3),
                      {{OrbitPoint(OrbitGroup::SignOrbit, quarter), q(1)}});
    CHECK(verify_rule(rule).pass);

    OrthogonalArray oa = load_oa(data_path("oa-8-4-2-3.oa"));
    CubatureRule reduced = victoir_sphere(rule, {{0, oa}});
    CHECK(reduced.node_count() == 8);
    CHECK(verify_rule(reduced).pass);
    CHECK(reduced.provenance().find("unverified") == std::string::npos);

    // insufficient strength: the same array cannot support degree 5
    CubatureRule degree5(Domain::Sphere, 3, kCheb, Exactness::degree(5),
                         {{OrbitPoint(OrbitGroup::SignOrbit, quarter), q(1)}});
    CHECK_THROWS_AS(victoir_sphere(degree5, {{0, oa}}), InvalidDesignError);
}

TEST_CASE("full factorial array keeps the rule unchanged up to node identity") {
    SolveResult r = solve_degree4({3, kCheb, {4, 1, 2, 3}, 2, q(4)});
    CubatureRule sphere = simplex_to_sphere(*r.rule);  // 144 nodes
    OrthogonalArray ff = OrthogonalArray::full_factorial(3);
    // assign to the off-family orbit (tau = 3, 96 points)
    std::size_t target = 0;
    for (std::size_t i = 0; i < sphere.nodes().size(); ++i)
        if (sphere.nodes()[i].point.cardinality() == 96) target = i;
    CubatureRule reduced = victoir_sphere(sphere, {{target, ff}});
    CHECK(reduced.node_count() == 144);
    CHECK(verify_rule(reduced).pass);
    // the replaced orbit became 12 * 8 explicit signed nodes
    Integer explicit_count = 0;
    for (const auto& node : reduced.nodes())
        if (node.point.group() == OrbitGroup::ExplicitSigned) ++explicit_count;
    CHECK(explicit_count == 96);
}

TEST_CASE("reduced node counts reproduce the survey tables") {
    struct Row {
        int d, m;
        const char* family;
        int third_k;
        long N, reduced;
        DesignSpec design;
        bool both_zeros = false;
    };
    // index-4 reductions; designs named by their parameters
    const Row rows[] = {
        {11, 6, "u-z2", 2, 1003, 211, {12, 6, 4, 4}},
        {12, 6, "u-z2", 2, 1730, 586, {13, 6, 4, 12}, true},  // both small weights vanish
        {14, 7, "u-z2", 2, 6556, 901, {15, 7, 4, 20}},
        {10, 5, "u-z3", 2, 485, 89, {11, 5, 4, 1}},
        {15, 6, "u-z3", 2, 8041, 761, {16, 6, 4, 6}},
        {11, 5, "u3-z2", 3, 1025, 629, {12, 5, 4, 4}},
        {13, 7, "u3-z2", 3, 3811, 951, {14, 7, 4, 20}},
        {14, 8, "u3-z2", 3, 6906, 1251, {15, 8, 4, 40}},
        {16, 8, "u3-z2", 3, 25008, 1208, {17, 8, 4, 15}},
        {15, 8, "u3-z3", 3, 12903, 1593, {16, 8, 4, 60}},
    };
    for (const Row& row : rows) {
        CAPTURE(row.d);
        CAPTURE(row.m);
        // build the orbit structure directly from the family shape; weights
        // are irrelevant for counting, so use the closed-form a when it is
        // representable and a placeholder otherwise
        std::vector<CubatureRule::Node> nodes;
        auto vk_rep = [&](int k) {
            std::vector<ExactScalar> rep(static_cast<std::size_t>(row.d + 1), q(0));
            for (int i = 0; i < k; ++i) rep[static_cast<std::size_t>(i)] = q(1, k);
            return rep;
        };
        // which orbits are present follows the family's zero pattern
        bool zero2 = row.both_zeros ||
                     std::string(row.family).find("z2") != std::string::npos;
        bool zero3 = row.both_zeros ||
                     std::string(row.family).find("z3") != std::string::npos;
        nodes.push_back({OrbitPoint(OrbitGroup::Permutation, vk_rep(row.d + 1)), q(1, 4)});
        if (!zero2)
            nodes.push_back({OrbitPoint(OrbitGroup::Permutation, vk_rep(1)), q(1, 4)});
        if (!zero3)
            nodes.push_back(
                {OrbitPoint(OrbitGroup::Permutation, vk_rep(row.third_k)), q(1, 4)});
        nodes.push_back({OrbitPoint(OrbitGroup::Permutation, vk_rep(row.m)), q(1, 4)});
        {
            std::vector<ExactScalar> rep(static_cast<std::size_t>(row.d + 1), q(0));
            rep[0] = q(2, row.d + 2);
            for (int i = 1; i <= row.d; ++i)
                rep[static_cast<std::size_t>(i)] = q(1, row.d + 2);
            nodes.push_back({OrbitPoint(OrbitGroup::Permutation, rep), q(1, 4)});
        }
        CubatureRule rule(Domain::SimplexT, row.d, kUnit, Exactness::index(4),
                          std::move(nodes));
        CHECK(rule.node_count() == row.N);
        // assign the design to the m-orbit
        std::size_t target = 0;
        for (std::size_t i = 0; i < rule.nodes().size(); ++i)
            if (rule.nodes()[i].point.cardinality() ==
                binomial(static_cast<long>(row.d + 1), static_cast<long>(row.m)))
                target = i;
        std::map<std::size_t, ReductionSpec> specs;
        specs[target] = ReductionSpec{row.design, std::nullopt};
        CHECK(reduced_node_count(rule, specs) == row.reduced);
    }
}

TEST_CASE("reduced node count for the table-2 two-zero case") {
    // d=17 m=8 family with both the centroid and third-class weights zero:
    // orbits 1, 8, and the off-family point; 43794 -> 954 via 4-(18,8,21)
    std::vector<CubatureRule::Node> nodes;
    auto vk_rep = [&](int k) {
        std::vector<ExactScalar> rep(18, q(0));
        for (int i = 0; i < k; ++i) rep[static_cast<std::size_t>(i)] = q(1, k);
        return rep;
    };
    nodes.push_back({OrbitPoint(OrbitGroup::Permutation, vk_rep(1)), q(1, 3)});
    nodes.push_back({OrbitPoint(OrbitGroup::Permutation, vk_rep(8)), q(1, 3)});
    {
        std::vector<ExactScalar> rep(18, q(0));
        rep[0] = q(2, 19);
        for (int i = 1; i <= 17; ++i) rep[static_cast<std::size_t>(i)] = q(1, 19);
        nodes.push_back({OrbitPoint(OrbitGroup::Permutation, rep), q(1, 3)});
    }
    CubatureRule rule(Domain::SimplexT, 17, kUnit, Exactness::index(4), std::move(nodes));
    CHECK(rule.node_count() == 43794);
    std::map<std::size_t, ReductionSpec> specs;
    specs[1] = ReductionSpec{DesignSpec{18, 8, 4, 21}, std::nullopt};
    CHECK(reduced_node_count(rule, specs) == 954);
}

TEST_CASE("degree-5 table row: 1014 -> 222 via the 5-design") {
    SolveResult r = solve_degree5({11, kUnit, {12, 1, 2, 3, 6}, 11});
    REQUIRE(r.rule.has_value());
    CHECK(r.rule->node_count() == 1014);
    std::size_t target = 0;
    for (std::size_t i = 0; i < r.rule->nodes().size(); ++i)
        if (r.rule->nodes()[i].point.cardinality() == 924) target = i;
    std::map<std::size_t, ReductionSpec> specs;
    specs[target] = ReductionSpec{DesignSpec{12, 6, 5, 1}, std::nullopt};
    CHECK(reduced_node_count(*r.rule, specs) == 222);
}

TEST_CASE("chained sphere reduction count: the high-dimensional survey row") {
    // d = 14 degree-9 sphere rule (third-class weight zero), 620414 nodes:
    // a 4-(15,5,2) design on the m=5 orbit and an antipodal strength-8 array
    // with 2^13 rows on both tau=15 orbits give 148574 nodes.
    SolveResult r = solve_degree4({14, kCheb, {15, 1, 2, 5}, 14, q(9)});
    REQUIRE(r.rule.has_value());
    CHECK(r.lambdas[2].is_zero());
    CubatureRule sphere = simplex_to_sphere(*r.rule);
    CHECK(sphere.node_count() == 620414);

    std::map<std::size_t, ReductionSpec> specs;
    OASpec big_oa{8192, 15, 8, true};
    for (std::size_t i = 0; i < sphere.nodes().size(); ++i) {
        const auto& point = sphere.nodes()[i].point;
        if (point.tau() == 15)
            specs[i] = ReductionSpec{std::nullopt, big_oa};
        else if (point.cardinality() == Integer(3003) * 32)
            specs[i] = ReductionSpec{DesignSpec{15, 5, 4, 2}, std::nullopt};
    }
    CHECK(reduced_node_count(sphere, specs) == 148574);
    // and the reduced index-8 podal count
    CHECK(reduced_node_count(sphere, specs) / 2 == 74287);
}
