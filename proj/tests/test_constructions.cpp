#include "doctest.h"

#include "pword/constructions.hpp"
#include "pword/powers.hpp"

using namespace pword;

TEST_CASE("square chain words")
{
    CHECK(format_word(square_chain(0)) == ".");
    CHECK(format_word(square_chain(1)) == ".a");
    CHECK(format_word(square_chain(2)) == ".aba");
    CHECK(format_word(square_chain(3)) == ".abacaba");
    CHECK(format_word(square_chain(4)) == ".abacabadabacaba");
    CHECK(square_chain(3).alphabet().size() == 3);
    CHECK(square_chain(2, Alphabet(5)).alphabet().size() == 5);
    for (unsigned k = 0; k <= 10; ++k) {
        const auto w = square_chain(k);
        CHECK(w.size() == (std::size_t{1} << k));
        CHECK(w.hole_positions() == std::vector<Position>{1});
    }
}

TEST_CASE("square chain errors")
{
    try {
        square_chain(3, Alphabet(2));
        FAIL("no error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::kAlphabetTooSmall);
    }
    CHECK_THROWS_AS(square_chain(27), Error);
}

TEST_CASE("square chain squares all start at position 1")
{
    for (unsigned k = 0; k <= 5; ++k) {
        const auto w = square_chain(k);
        std::vector<PowerOccurrence> expected;
        for (unsigned j = 1; j <= k; ++j)
            expected.push_back(PowerOccurrence{1, std::size_t{1} << j, 2});
        const auto profile = power_profile(w, 2);
        CHECK(profile.occurrences == expected);
        if (k >= 1)
            CHECK(profile.unique_start == Position{1});
        else
            CHECK_FALSE(profile.unique_start);
    }
}

TEST_CASE("two-power construction")
{
    CHECK(format_word(prop2_word(2)) == ".aba");
    CHECK(format_word(prop2_word(3)) == "..aba.");
    CHECK(format_word(prop2_word(5)) == "....aba...");
    CHECK_THROWS_AS(prop2_word(1), Error);
    for (unsigned r = 2; r <= 12; ++r) {
        const auto w = prop2_word(r);
        CHECK(w.size() == 2 * r);
        CHECK(power_occurrences(w, r) ==
              std::vector<PowerOccurrence>{{1, r, r}, {1, 2 * r, r}});
    }
}

TEST_CASE("three-power construction")
{
    CHECK(format_word(prop3_word(3)) == "..aba.baa");
    CHECK(format_word(prop3_word(9)) == "........aba.......baa......");
    CHECK(prop3_word(9).size() == 27);
    for (unsigned r : {2u, 4u, 5u, 6u, 7u, 12u}) {
        try {
            prop3_word(r);
            FAIL(("no error for r=" + std::to_string(r)));
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::kBadExponent);
        }
    }
    for (unsigned r : {3u, 9u, 15u, 21u}) {
        const auto w = prop3_word(r);
        CHECK(power_occurrences(w, r) ==
              std::vector<PowerOccurrence>{{1, r, r}, {1, 2 * r, r}, {1, 3 * r, r}});
    }
    CHECK(format_word(prop3_word_unchecked(4)) == "...aba..baa.");
    CHECK(prop3_word_unchecked(9) == prop3_word(9));
    CHECK_THROWS_AS(prop3_word_unchecked(2), Error);
}

TEST_CASE("cube examples")
{
    const auto words = cube_examples();
    REQUIRE(words.size() == 2);
    CHECK(format_word(words[0]) == "..aba.baa");
    CHECK(format_word(words[1]) == "..aba.ba.");
    for (const auto &w : words) {
        CHECK(w.size() == 9);
        CHECK(power_occurrences(w, 3) ==
              std::vector<PowerOccurrence>{{1, 3, 3}, {1, 6, 3}, {1, 9, 3}});
    }
}
