#include <doctest.h>

#include <cstdlib>

#include "cubforge/constructor.hpp"
#include "cubforge/embedding.hpp"
#include "cubforge/identity.hpp"
#include "cubforge/moments.hpp"

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

CubatureRule index8_rule_72() {
    SolveResult solved = solve_degree4({3, kCheb, {4, 1, 2, 3}, 2, q(4)});
    return antipodal_reduce(simplex_to_sphere(*solved.rule));
}
}  // namespace

TEST_CASE("embedding constant") {
    CHECK(embedding_constant(4, 4) == make_rational(7, 128));
    CHECK(embedding_constant(2, 1) == make_rational(1, 2));
    CHECK(embedding_constant(4, 5) == make_rational(21, 512));
    CHECK(embedding_constant(5, 4) == make_rational(1, 33));
    CHECK(embedding_constant(7, 0) == 1);
    // oracle: the sphere moment of y_1^{2t} in d+1 coordinates
    for (int ambient : {2, 3, 4, 5, 8}) {
        for (int t : {1, 2, 3, 4, 5}) {
            std::vector<int> alpha(static_cast<std::size_t>(ambient), 0);
            alpha[0] = t;
            CHECK(embedding_constant(ambient, t) ==
                  monomial_moment(alpha, ambient - 1, kCheb));
        }
    }
}

TEST_CASE("embedding extraction from the 72-node index-8 rule") {
    CubatureRule rule = index8_rule_72();
    REQUIRE(rule.exactness() == Exactness::index(8));
    EmbeddingSpec spec = extract_embedding(rule);
    CHECK(spec.form_count == 72);
    CHECK(spec.source_dimension == 4);
    CHECK(spec.power == 8);
    CHECK(spec.constant == make_rational(7, 128));
    CHECK(certify_embedding(spec).empty());
}

TEST_CASE("embedding extraction from the 161-node rule") {
    SolveResult solved = solve_degree4({4, kCheb, {5, 1, 2, 3}, 4, q(9)});
    CubatureRule rule = antipodal_reduce(simplex_to_sphere(*solved.rule));
    CHECK(rule.node_count() == 161);
    EmbeddingSpec spec = extract_embedding(rule);
    CHECK(spec.form_count == 161);
    CHECK(certify_embedding(spec).empty());
}

TEST_CASE("embedding rejects non-positive and odd data") {
    CubatureRule rule = index8_rule_72();
    std::vector<CubatureRule::Node> nodes(rule.nodes().begin(), rule.nodes().end());
    nodes[0].weight = -nodes[0].weight;
    CubatureRule negative(rule.domain(), rule.dimension(), rule.gamma(), rule.exactness(),
                          std::move(nodes));
    CHECK_THROWS_AS(extract_embedding(negative), std::domain_error);
}

TEST_CASE("identity check: classical identities") {
    IdentityCheckResult hurwitz = identity_check(builtin_identity("hurwitz"));
    CHECK(hurwitz.pass);
    IdentityCheckResult schur = identity_check(builtin_identity("schur"));
    CHECK(schur.pass);
    // the variant with the mixed orbit listed twice cannot balance
    IdentityCheckResult doubled = identity_check(builtin_identity("schur-doubled"));
    CHECK(!doubled.pass);
    CHECK(!doubled.witness.empty());
    IdentityCheckResult sos315 = identity_check(builtin_identity("sos315"));
    CHECK(sos315.pass);
    IdentityCheckResult sos161280 = identity_check(builtin_identity("sos161280"));
    CHECK(sos161280.pass);
    IdentityCheckResult alt = identity_check(builtin_identity("sos161280-alt"));
    CHECK(!alt.pass);
    CHECK(!alt.witness.empty());
}

TEST_CASE("identity form counts") {
    SymmetricIdentity hurwitz = builtin_identity("hurwitz");
    CHECK(hurwitz.form_count() == 4 + 12 + 48 + 8);
    SymmetricIdentity sos = builtin_identity("sos161280");
    CHECK(sos.form_count() == 16 + 5 + 20 + 40 + 80);
}

TEST_CASE("rule_to_identity reproduces the classical representations") {
    SUBCASE("index-8, 4 variables") {
        SymmetricIdentity id = rule_to_identity(index8_rule_72());
        CHECK(id.multiplier == 5040);
        CHECK(id.power == 8);
        CHECK(identity_check(id).pass);
        // same expansion as the classical identity: both sides against the
        // same left-hand side means the coefficient lists agree up to form
        // grouping; with primitive patterns they are:
        REQUIRE(id.terms.size() == 4);
        CHECK(id.terms[0].pattern == std::vector<int>{2, 1, 1});
        CHECK(id.terms[0].coefficient == 1);
        CHECK(id.terms[1].pattern == std::vector<int>{1, 1, 1, 1});
        CHECK(id.terms[1].coefficient == 6);
        CHECK(id.terms[2].pattern == std::vector<int>{1, 1});
        CHECK(id.terms[2].coefficient == 60);
        CHECK(id.terms[3].pattern == std::vector<int>{1});
        CHECK(id.terms[3].coefficient == 1536);  // = 6 * 2^8
    }
    SUBCASE("index-10, 4 variables") {
        SolveResult solved = solve_degree5({3, kCheb, {4, 1, 2, 3, 4}, 2});
        CubatureRule rule = antipodal_reduce(simplex_to_sphere(*solved.rule));
        SymmetricIdentity id = rule_to_identity(rule);
        CHECK(id.multiplier == 22680);
        CHECK(id.power == 10);
        CHECK(identity_check(id).pass);
    }
    SUBCASE("index-8, 5 variables") {
        SolveResult solved = solve_degree4({4, kCheb, {5, 1, 2, 3}, 4, q(9)});
        CubatureRule rule = antipodal_reduce(simplex_to_sphere(*solved.rule));
        SymmetricIdentity id = rule_to_identity(rule);
        CHECK(id.multiplier == 161280);
        CHECK(identity_check(id).pass);
        // matches the bundled corrected identity
        SymmetricIdentity golden = builtin_identity("sos161280");
        REQUIRE(id.terms.size() == golden.terms.size());
        for (const auto& term : golden.terms) {
            bool found = false;
            for (const auto& mine : id.terms)
                if (mine.pattern == term.pattern &&
                    mine.coefficient == term.coefficient)
                    found = true;
            CAPTURE(term.coefficient.get_str());
            CHECK(found);
        }
    }
    SUBCASE("index-8, 4 variables, all-rational affine family") {
        // the d=3, a=9 construction gives the 315*2^8 representation
        SolveResult solved = solve_degree4({3, kCheb, {4, 1, 2, 3}, 3, q(9)});
        CubatureRule rule = antipodal_reduce(simplex_to_sphere(*solved.rule));
        SymmetricIdentity id = rule_to_identity(rule);
        CHECK(id.multiplier == Integer(315) * 256);
        CHECK(identity_check(id).pass);
    }
}

TEST_CASE("rule_to_identity rejects irrational data") {
    // a = 3 + 2 sqrt(2) gives surd coordinates on the sphere
    ExactScalar a = candidate_a("u-z2", 5, 4, 5);
    SolveResult solved = solve_degree4({5, kCheb, {6, 1, 2, 4}, 5, a});
    // solved may or may not be positive; build an index-2t sphere rule from
    // whatever weights by taking absolute... simplest: only run when positive
    if (solved.rule) {
        CubatureRule rule = antipodal_reduce(simplex_to_sphere(*solved.rule));
        CHECK_THROWS_AS(rule_to_identity(rule), std::domain_error);
    } else {
        // fall back: a centroid + surd-coordinate orbit rule is enough
        std::vector<ExactScalar> rep(4, q(0));
        ExactScalar r2 = ExactScalar::make(0, make_rational(1, 4), 2);
        rep[0] = ExactScalar(make_rational(1, 2)) + r2;
        rep[1] = ExactScalar(make_rational(1, 2)) - r2;
        CubatureRule rule(Domain::Sphere, 3, kCheb, Exactness::index(2),
                          {{OrbitPoint(OrbitGroup::SignedPermutationPodal, rep), q(1)}});
        CHECK_THROWS_AS(rule_to_identity(rule), std::domain_error);
    }
}

TEST_CASE("identity file round trip") {
    SymmetricIdentity id = load_identity(data_path("hurwitz.identity"));
    CHECK(id.multiplier == 5040);
    CHECK(identity_check(id).pass);
    SymmetricIdentity back = identity_from_text(identity_to_text(id));
    CHECK(back.multiplier == id.multiplier);
    REQUIRE(back.terms.size() == id.terms.size());
    for (std::size_t i = 0; i < id.terms.size(); ++i) {
        CHECK(back.terms[i].coefficient == id.terms[i].coefficient);
        CHECK(back.terms[i].pattern == id.terms[i].pattern);
    }
    CHECK(identity_check(load_identity(data_path("sos161280.identity"))).pass);
    CHECK(!identity_check(load_identity(data_path("sos161280-alt.identity"))).pass);
    CHECK(identity_check(load_identity(data_path("sos315.identity"))).pass);
    CHECK(!identity_check(load_identity(data_path("schur-doubled.identity"))).pass);
}
