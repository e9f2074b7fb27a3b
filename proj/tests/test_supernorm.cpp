#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "opal/enumerate.hpp"
#include "opal/supernorm.hpp"
#include "opal/textio.hpp"
#include "oracles.hpp"

using namespace opal;

namespace {
Overpartition op(const char* text) { return parse_overpartition(text); }
}  // namespace

TEST_CASE("prime-exponent image of plain partitions") {
    CHECK(supernorm(Partition()) == 1);
    CHECK(supernorm(Partition::from_parts({1, 1})) == 4);
    CHECK(supernorm(Partition::from_parts({3, 3})) == 25);
    // (7,5,5,2,2,2,1) -> 2^1 3^3 11^2 17^1
    CHECK(supernorm(Partition::from_parts({7, 5, 5, 2, 2, 2, 1})) == 111078);
    CHECK(supernorm(Partition::single(1, 60)) == BigNat("1152921504606846976"));
}

TEST_CASE("prime-exponent image of overpartitions lands in lowest terms") {
    CHECK(supernorm(op("<>")) == 1);
    CHECK(format_rational(supernorm(op("<1^2 2^-3 3^1>"))) == "20/27");
    CHECK(format_rational(supernorm(op("<1^-1>"))) == "1/2");
    CHECK(format_rational(supernorm(op("<2^1>"))) == "3");
}

TEST_CASE("factoring inverts the integer map") {
    CHECK(factor_to_partition(1).empty());
    CHECK(factor_to_partition(360) == Partition::from_multiplicities({{1, 3}, {2, 2}, {3, 1}}));
    CHECK(factor_to_partition(541) == Partition::single(100, 1));  // prime cofactor path
    CHECK_THROWS_AS(factor_to_partition(0), std::domain_error);
    CHECK_THROWS_AS(factor_to_partition(-6), std::domain_error);

    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        Partition p = to_rational_form(random_overpartition(rng)).numerator;
        CHECK(factor_to_partition(supernorm(p)) == p);
    }
}

TEST_CASE("factoring inverts the rational map") {
    CHECK(factor_to_overpartition(parse_rational("20/27")) == op("<1^2 2^-3 3^1>"));
    CHECK(factor_to_overpartition(parse_rational("1")).empty());
    CHECK_THROWS_AS(factor_to_overpartition(BigRat(0)), std::domain_error);
    CHECK_THROWS_AS(factor_to_overpartition(BigRat(-3, 7)), std::domain_error);

    // Non-canonical input still factors by its reduced value.
    BigRat q(20, 27);
    q *= BigRat(3, 3);
    CHECK(factor_to_overpartition(q) == op("<1^2 2^-3 3^1>"));

    std::mt19937_64 rng(22);
    for (int i = 0; i < 300; ++i) {
        Overpartition a = random_overpartition(rng);
        CHECK(factor_to_overpartition(supernorm(a)) == a);
    }
}

TEST_CASE("the map is a homomorphism into the positive rationals") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        Overpartition a = random_overpartition(rng);
        Overpartition b = random_overpartition(rng);
        CHECK(supernorm(multiply(a, b)) == supernorm(a) * supernorm(b));
        BigRat inv = 1 / supernorm(a);
        CHECK(supernorm(inverse(a)) == inv);
    }
}

TEST_CASE("images of distinct values stay distinct") {
    // Injectivity scan over a window of small rationals.
    std::mt19937_64 rng(24);
    std::vector<Overpartition> values;
    std::vector<BigRat> images;
    for (int i = 0; i < 200; ++i) {
        Overpartition a = random_overpartition(rng);
        BigRat image = supernorm(a);
        for (std::size_t j = 0; j < values.size(); ++j)
            CHECK((values[j] == a) == (images[j] == image));
        values.push_back(a);
        images.push_back(image);
    }
}

TEST_CASE("large part values walk the sieve out as far as needed") {
    auto primes = oracle::primes_up_to(150000);
    Partition p = Partition::single(10000, 1);
    CHECK(supernorm(p) == primes[9999]);
    CHECK(factor_to_partition(BigNat(primes[9999])) == p);
}
