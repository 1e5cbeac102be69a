#include "doctest.h"

#include <random>

#include "pword/scanner.hpp"
#include "support/oracles.hpp"

using namespace pword;

TEST_CASE("scanner matches the reference scan after every push and pop")
{
    std::mt19937_64 rng(11);
    for (unsigned r = 2; r <= 4; ++r) {
        PowerScanner scanner(r, 4); // small capacity forces regrowth
        std::vector<Symbol> shadow;
        for (int step = 0; step < 3000; ++step) {
            // Drift upward to about 40 symbols, then wander around that size.
            const bool grow = shadow.size() < 40 ? rng() % 4 != 0 : rng() % 2 == 0;
            const bool push = shadow.empty() || grow;
            if (push) {
                const unsigned code = rng() % 4;
                shadow.push_back(Symbol{static_cast<std::uint8_t>(code)});
                scanner.push(shadow.back());
            } else {
                shadow.pop_back();
                scanner.pop();
            }
            const PartialWord w(shadow, Alphabet(3));
            const auto expected = power_profile(w, r);
            REQUIRE(scanner.size() == shadow.size());
            CHECK(scanner.profile() == expected);
            CHECK(scanner.occurrence_count() == expected.occurrences.size());
            CHECK(scanner.distinct_start_count() == expected.start_positions.size());
            CHECK(scanner.last_start() ==
                  (expected.start_positions.empty() ? 0 : expected.start_positions.back()));
        }
    }
}

TEST_CASE("scanner periods match strong_periods")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto w = oracle::random_word(rng, 1 + rng() % 3, 1 + rng() % 25, 0.25);
        PowerScanner scanner(2);
        for (Symbol s : w.symbols())
            scanner.push(s);
        std::vector<std::size_t> periods;
        for (std::size_t p = 1; p <= w.size(); ++p)
            if (scanner.has_period(p))
                periods.push_back(p);
        CHECK(periods == strong_periods(w));
    }
}

TEST_CASE("incremental occurrences on the constructions")
{
    CHECK(incremental_power_occurrences(parse_word(".abacabadabacaba"), 2) ==
          power_occurrences(parse_word(".abacabadabacaba"), 2));
    CHECK(incremental_power_occurrences(parse_word("..aba.baa"), 3).size() == 3);
    CHECK(incremental_power_occurrences(PartialWord(), 2).empty());
}

TEST_CASE("scanner clear and starts_at")
{
    PowerScanner scanner(2);
    const auto w = parse_word("aaaa");
    for (Symbol s : w.symbols())
        scanner.push(s);
    CHECK(scanner.starts_at(1) == 2);
    CHECK(scanner.starts_at(2) == 1);
    CHECK(scanner.starts_at(4) == 0);
    scanner.clear();
    CHECK(scanner.size() == 0);
    CHECK(scanner.occurrence_count() == 0);
    CHECK(scanner.distinct_start_count() == 0);
    CHECK_THROWS_AS(PowerScanner(1), Error);
}
