#include "doctest.h"

#include <numeric>

#include "levelghost/errors.hpp"
#include "levelghost/residue.hpp"

using namespace levelghost;

TEST_CASE("levels reject out-of-range moduli") {
    CHECK_THROWS_AS(Level(1), DomainError);
    CHECK_THROWS_AS(Level(0), DomainError);
    CHECK_THROWS_AS(Level(-5), DomainError);
    CHECK_THROWS_AS(Level(Level::kMaxModulus + 1), DomainError);
    CHECK(Level(2).modulus() == 2);
    CHECK(Level(Level::kMaxModulus).modulus() == Level::kMaxModulus);
}

TEST_CASE("canonical representatives land in [0, l)") {
    const Level l(12);
    CHECK(canon(0, l) == 0);
    CHECK(canon(25, l) == 1);
    CHECK(canon(-1, l) == 11);
    CHECK(canon(-12, l) == 0);
    CHECK(canon(-25, l) == 11);
    CHECK(canon(11, l) == 11);
}

TEST_CASE("gcd with the level treats zero as the full modulus") {
    const Level l(12);
    CHECK(gcd_with_level(0, l) == 12);
    CHECK(gcd_with_level(12, l) == 12);
    CHECK(gcd_with_level(-12, l) == 12);
    CHECK(gcd_with_level(8, l) == 4);
    CHECK(gcd_with_level(5, l) == 1);
    CHECK(gcd_with_level(-3, l) == 3);
}

TEST_CASE("compatibility asks gcd(m, l) to divide a") {
    const Level l(12);
    CHECK(is_compatible_at_edge(4, 2, l));   // gcd(2,12)=2 divides 4
    CHECK(!is_compatible_at_edge(3, 2, l));  // 2 does not divide 3
    CHECK(is_compatible_at_edge(0, 7, l));   // 0 is divisible by anything
    CHECK(is_compatible_at_edge(16, 2, l));  // representatives are canonicalized first
}

TEST_CASE("compatibility at a zero multiplicity requires a zero twist") {
    const Level l(12);
    CHECK(is_compatible_at_edge(0, 0, l));
    CHECK(!is_compatible_at_edge(6, 0, l));
    CHECK(!is_compatible_at_edge(1, 0, l));
}

TEST_CASE("the action a (.) m divides out the gcd before scaling") {
    const Level twelve(12);
    CHECK(odot(4, 2, twelve) == 4);   // (4/2)*2 = 4
    CHECK(odot(8, 10, twelve) == 4);  // gcd(10,12)=2, (8/2)*10 = 40 = 4 mod 12
    CHECK(odot(9, 3, twelve) == 9);   // gcd(3,12)=3, (9/3)*3 = 9
    CHECK(odot(6, 9, twelve) == 6);   // gcd(9,12)=3, (6/3)*9 = 18 = 6 mod 12
}

TEST_CASE("incompatible pairs are rejected rather than silently computed") {
    const Level twelve(12);
    CHECK_THROWS_AS(odot(3, 2, twelve), CompatibilityError);
    CHECK_THROWS_AS(odot(1, 6, twelve), CompatibilityError);
    CHECK_THROWS_AS(odot(5, 0, twelve), CompatibilityError);
}

TEST_CASE("worked action values at level 9") {
    const Level nine(9);
    CHECK(odot(1, 1, nine) == 1);
    CHECK(odot(1, 2, nine) == 2);
    CHECK(odot(4, 2, nine) == 8);
    CHECK(odot(3, 6, nine) == 6);
    CHECK(odot(6, 3, nine) == 6);
    CHECK(odot(0, 4, nine) == 0);
}

TEST_CASE("action respects negated multiplicities") {
    // a (.) (-m) = -(a (.) m), and negating both a and m returns the original.
    for (std::int64_t mod : {5, 6, 8, 9, 12, 15}) {
        const Level l(mod);
        for (Residue a = 0; a < mod; ++a) {
            for (Residue m = 0; m < mod; ++m) {
                if (!is_compatible_at_edge(a, m, l)) {
                    continue;
                }
                const Residue forward = odot(a, m, l);
                CHECK(odot(a, -m, l) == canon(-forward, l));
                CHECK(odot(canon(-a, l), -m, l) == forward);
            }
        }
    }
}

TEST_CASE("a nonzero twist never acts to zero") {
    for (std::int64_t mod : {4, 6, 9, 12}) {
        const Level l(mod);
        for (Residue a = 1; a < mod; ++a) {
            for (Residue m = 1; m < mod; ++m) {
                if (is_compatible_at_edge(a, m, l)) {
                    CHECK(odot(a, m, l) != 0);
                }
            }
        }
    }
}

TEST_CASE("the action preserves the gcd class of the twist") {
    for (std::int64_t mod : {6, 8, 12, 15}) {
        const Level l(mod);
        for (Residue a = 1; a < mod; ++a) {
            for (Residue m = 0; m < mod; ++m) {
                if (is_compatible_at_edge(a, m, l)) {
                    CHECK(gcd_with_level(odot(a, m, l), l) == gcd_with_level(a, l));
                }
            }
        }
    }
}

TEST_CASE("age sums canonicalize before adding and never reduce") {
    const Level five(5);
    const Residue parts[] = {1, 2, 1};
    CHECK(age_sum(parts, five) == AgeValue{4, 5});

    const Residue wrapped[] = {-1, 7, 1}; // canon: 4, 2, 1
    const AgeValue age = age_sum(wrapped, five);
    CHECK(age.numerator == 7);
    CHECK(age.denominator == 5);
    CHECK(!is_junior(age)); // 7/5 >= 1

    const Level ten(10);
    const Residue doubled[] = {2, 4, 2};
    CHECK(age_sum(doubled, ten) == AgeValue{8, 10}); // stays 8/10, not 4/5
}

TEST_CASE("junior means strictly between zero and one") {
    CHECK(is_junior(AgeValue{1, 5}));
    CHECK(is_junior(AgeValue{4, 5}));
    CHECK(!is_junior(AgeValue{0, 5}));
    CHECK(!is_junior(AgeValue{5, 5}));
    CHECK(!is_junior(AgeValue{6, 5}));
}

TEST_CASE("age equality cross-multiplies instead of reducing") {
    CHECK(age_equal(AgeValue{4, 5}, AgeValue{8, 10}));
    CHECK(age_equal(AgeValue{6, 8}, AgeValue{3, 4}));
    CHECK(!age_equal(AgeValue{6, 8}, AgeValue{6, 9}));
    CHECK_THROWS_AS(age_equal(AgeValue{1, 0}, AgeValue{1, 1}), DomainError);
    CHECK_THROWS_AS(age_equal(AgeValue{1, 2}, AgeValue{1, -2}), DomainError);
}
