#include <doctest.h>

#include <random>

#include "cubforge/exact_scalar.hpp"

using namespace cubforge;

TEST_CASE("rational string round trip") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational("0")) == "0");
    CHECK(to_string(make_rational(25, 63)) == "25/63");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("construction canonicalizes") {
    // identity embedding of Q
    CHECK(ExactScalar::make(make_rational(1, 2), 0, 0) == ExactScalar(make_rational(1, 2)));
    // sqrt(4) collapses to a rational
    CHECK(ExactScalar::make(0, 1, 4) == ExactScalar(Rational(2)));
    // square factors fold into the coefficient
    CHECK(ExactScalar::make(0, 1, 612) == ExactScalar::make(0, 6, 17));
    CHECK(ExactScalar::make(3, 1, 2).discriminant() == 2);
    CHECK_THROWS_AS(ExactScalar::make(0, 1, -1), std::domain_error);
}

TEST_CASE("exact sign determination") {
    CHECK(ExactScalar(Rational(0)).sign() == 0);
    CHECK(ExactScalar::make(3, 1, 2).sign() == 1);   // 4.41 < 3+sqrt2 < 4.42
    CHECK(ExactScalar::make(3, -1, 2).sign() == 1);  // 9 > 2
    CHECK(ExactScalar::make(1, -1, 2).sign() == -1); // 1 < 2
    CHECK(ExactScalar::make(-3, 1, 2).sign() == -1);
    // bracketing oracle: 3 + sqrt(2) lies strictly between 441/100 and 442/100
    ExactScalar x = ExactScalar::make(3, 1, 2);
    CHECK((x - ExactScalar(make_rational(441, 100))).sign() == 1);
    CHECK((ExactScalar(make_rational(442, 100)) - x).sign() == 1);
}

TEST_CASE("mixed discriminants are rejected") {
    ExactScalar r2 = ExactScalar::sqrt_of(2);
    ExactScalar r3 = ExactScalar::sqrt_of(3);
    CHECK_THROWS_AS(r2 + r3, MixedDiscriminantError);
    CHECK_THROWS_AS(r2 * r3, MixedDiscriminantError);
    CHECK_NOTHROW(r2 * ExactScalar(Rational(5)));
}

TEST_CASE("scalar string round trip") {
    ExactScalar x = ExactScalar::make(make_rational(13, 4), make_rational(3, 4), 17);
    CHECK(x.str() == "13/4 + 3/4*sqrt(17)");
    CHECK(ExactScalar::parse(x.str()) == x);
    ExactScalar y = ExactScalar::make(make_rational(-1, 3), make_rational(-2, 7), 5);
    CHECK(ExactScalar::parse(y.str()) == y);
    CHECK(ExactScalar::parse("-7/2") == ExactScalar(make_rational(-7, 2)));
    CHECK(ExactScalar::parse("1/2*sqrt(8)") == ExactScalar::make(0, 1, 2));
    CHECK_THROWS_AS(ExactScalar::parse("sqrt"), std::invalid_argument);
}

namespace {

ExactScalar random_scalar(std::mt19937& rng, const Integer& D) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 23);
    std::uniform_int_distribution<int> surd(0, 2);
    Rational a = make_rational(num(rng), den(rng));
    Rational b = surd(rng) == 0 ? Rational(0) : make_rational(num(rng), den(rng));
    return ExactScalar::make(a, b, D);
}

}  // namespace

TEST_CASE("field axioms and sign multiplicativity, randomized") {
    std::mt19937 rng(20240817);
    const Integer discs[] = {Integer(2), Integer(17), Integer(89), Integer(3585)};
    int checked = 0;
    for (int iter = 0; iter < 12000; ++iter) {
        const Integer& D = discs[iter % 4];
        ExactScalar x = random_scalar(rng, D);
        ExactScalar y = random_scalar(rng, D);
        CHECK((x + y) - y == x);
        CHECK(x + y == y + x);
        CHECK((x * y).sign() == x.sign() * y.sign());
        if (!y.is_zero()) {
            CHECK((x * y) / y == x);
            ++checked;
        }
        // canonical form uniqueness: equal values have equal representations
        ExactScalar z = (x + y) - x;
        CHECK(z.rational_part() == y.rational_part());
        CHECK(z.surd_part() == y.surd_part());
        CHECK(z.discriminant() == y.discriminant());
    }
    CHECK(checked > 10000);
}

TEST_CASE("distributivity and powers, randomized") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        ExactScalar x = random_scalar(rng, 5);
        ExactScalar y = random_scalar(rng, 5);
        ExactScalar z = random_scalar(rng, 5);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x.pow(3) == x * x * x);
    }
}

TEST_CASE("order comparisons are exact") {
    // 13/2 vs (13+3*sqrt(17))/4: sqrt(17) > 13/3 iff 153 > 169, false
    ExactScalar lhs = ExactScalar(make_rational(13, 2));
    ExactScalar rhs = ExactScalar::make(make_rational(13, 4), make_rational(3, 4), 17);
    CHECK(lhs > rhs);
    CHECK(rhs < lhs);
    CHECK(rhs <= rhs);
}
