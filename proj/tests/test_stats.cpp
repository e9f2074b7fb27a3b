#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "opal/enumerate.hpp"
#include "opal/stats.hpp"
#include "opal/textio.hpp"

using namespace opal;

namespace {
Overpartition op(const char* text) { return parse_overpartition(text); }
}  // namespace

TEST_CASE("signed statistics on fixed values") {
    Overpartition a = op("<1^2 2^3 3^-1>");
    CHECK(oversize(a) == 5);
    CHECK(overlength(a) == 4);
    CHECK(format_rational(overnorm(a)) == "8/3");

    CHECK(oversize(op("<>")) == 0);
    CHECK(overlength(op("<>")) == 0);
    CHECK(overnorm(op("<>")) == 1);

    CHECK(oversize(op("<1^2 2^-1>")) == 0);
    CHECK(overlength(op("<5^-4>")) == -4);
    CHECK(multiplicity_of(2, a) == 3);
    CHECK(multiplicity_of(3, a) == -1);
    CHECK(multiplicity_of(7, a) == 0);
}

TEST_CASE("overnorm collapses across part values, so reduction matters") {
    CHECK(overnorm(op("<2^1 4^-1>")) == BigRat(1, 2));
    CHECK(overnorm(op("<2^2 4^-1>")) == 1);
    CHECK(overnorm(op("<1^7>")) == 1);  // part 1 contributes nothing
    CHECK(format_rational(overnorm(op("<2^1 3^1 6^-1>"))) == "1");
}

TEST_CASE("residue statistic wraps negatives into range") {
    CHECK(overlength_mod(3, op("<5^-4>")) == 2);
    CHECK(overlength_mod(1, op("<5^-4>")) == 0);
    CHECK(overlength_mod(5, op("<>")) == 0);
    CHECK(overlength_mod(5, op("<2^7>")) == 2);
    CHECK_THROWS_AS(overlength_mod(0, op("<>")), std::invalid_argument);
    CHECK_THROWS_AS(overlength_mod(-2, op("<>")), std::invalid_argument);
}

TEST_CASE("each statistic respects the product") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 400; ++i) {
        Overpartition a = random_overpartition(rng);
        Overpartition b = random_overpartition(rng);
        Overpartition ab = multiply(a, b);
        CHECK(oversize(ab) == oversize(a) + oversize(b));
        CHECK(overlength(ab) == overlength(a) + overlength(b));
        CHECK(overnorm(ab) == overnorm(a) * overnorm(b));
        Part k = 1 + static_cast<Part>(rng() % 40);
        CHECK(multiplicity_of(k, ab) == multiplicity_of(k, a) + multiplicity_of(k, b));
        std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 9);
        CHECK(overlength_mod(m, ab) ==
              (overlength_mod(m, a) + overlength_mod(m, b)) % m);
    }
}

TEST_CASE("statistics factor through the rational form") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 400; ++i) {
        Overpartition a = random_overpartition(rng);
        RationalForm r = to_rational_form(a);
        CHECK(oversize(a) == r.numerator.size() - r.denominator.size());
        CHECK(overlength(a) == r.numerator.length() - r.denominator.length());
    }
}

TEST_CASE("statistics of the inverse negate or invert") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 200; ++i) {
        Overpartition a = random_overpartition(rng);
        CHECK(oversize(inverse(a)) == -oversize(a));
        CHECK(overlength(inverse(a)) == -overlength(a));
        CHECK(overnorm(inverse(a)) * overnorm(a) == 1);
    }
}
