#include "doctest.h"

#include "pword/constructions.hpp"
#include "pword/powers.hpp"
#include "pword/search.hpp"

using namespace pword;

namespace {

SearchQuery query(unsigned r, unsigned k, std::size_t n, std::size_t t = 1)
{
    SearchQuery q;
    q.exponent = r;
    q.alphabet_size = k;
    q.max_length = n;
    q.max_start_positions = t;
    return q;
}

std::vector<std::string> formatted(const std::vector<PartialWord> &words)
{
    std::vector<std::string> out;
    for (const auto &w : words)
        out.push_back(format_word(w));
    return out;
}

} // namespace

TEST_CASE("canonicalize")
{
    CHECK(format_word(canonicalize(parse_word("cbc"))) == "aba");
    CHECK(format_word(canonicalize(parse_word(".ba"))) == ".ab");
    CHECK(format_word(canonicalize(parse_word("aba"))) == "aba");
    CHECK(format_word(canonicalize(parse_word("..."))) == "...");
    CHECK(canonicalize(parse_word("cbc")).alphabet().size() == 3);
    const auto w = parse_word("d.bd.acb");
    CHECK(canonicalize(canonicalize(w)) == canonicalize(w));
    CHECK(power_occurrences(canonicalize(w), 2) == power_occurrences(w, 2));
}

TEST_CASE("query validation")
{
    CHECK_THROWS_AS(search_max_powers(query(1, 2, 4)), Error);
    CHECK_THROWS_AS(search_max_powers(query(2, 0, 4)), Error);
    CHECK_THROWS_AS(search_max_powers(query(2, 27, 4)), Error);
    CHECK_THROWS_AS(search_max_powers(query(2, 2, 0)), Error);
    CHECK_THROWS_AS(search_max_powers(query(2, 2, 4, 0)), Error);
    auto q = query(2, 2, 4);
    q.witness_cap = 0;
    CHECK_THROWS_AS(search_max_powers(q), Error);
}

TEST_CASE("two squares at one position over two letters")
{
    const auto result = search_max_powers(query(2, 2, 4));
    CHECK(result.exhaustive);
    CHECK(result.best_count == 2);
    REQUIRE_FALSE(result.witnesses.empty());
    CHECK(format_word(result.witnesses.front()) == ".aba");
    CHECK(result.nodes_explored > 0);
    CHECK(result.pruned_by_symmetry > 0);
    CHECK(result.pruned_by_start_bound > 0);
}

TEST_CASE("three letters reach three squares at length 8")
{
    const auto result = search_max_powers(query(2, 3, 8));
    CHECK(result.best_count == 3);
    CHECK(format_word(result.witnesses.front()) == ".abacaba");
}

TEST_CASE("three cubes over two letters")
{
    const auto result = search_max_powers(query(3, 2, 9));
    CHECK(result.exhaustive);
    CHECK(result.best_count == 3);
    const auto words = formatted(result.witnesses);
    CHECK(std::find(words.begin(), words.end(), "..aba.baa") != words.end());
    CHECK(std::is_sorted(result.witnesses.begin(), result.witnesses.end(),
                         [](const PartialWord &a, const PartialWord &b) {
                             return shortlex_less(a, b);
                         }));
}

TEST_CASE("witnesses meet the query under the reference scan")
{
    for (auto [r, k, n, t] : {std::tuple{2u, 2u, 8, 1}, {2u, 3u, 8, 2}, {3u, 2u, 9, 1},
                              {4u, 2u, 8, 1}, {2u, 2u, 7, 3}}) {
        auto q = query(r, k, static_cast<std::size_t>(n), static_cast<std::size_t>(t));
        q.witness_cap = 50;
        const auto result = search_max_powers(q);
        REQUIRE(result.exhaustive);
        REQUIRE_FALSE(result.witnesses.empty());
        CHECK(result.witnesses.size() <= 50);
        for (const auto &w : result.witnesses) {
            const auto profile = power_profile(w, r);
            CHECK(w.size() <= q.max_length);
            CHECK(w.alphabet().size() == k);
            CHECK(canonicalize(w) == w);
            CHECK(profile.occurrences.size() == result.best_count);
            CHECK(profile.start_positions.size() <= q.max_start_positions);
        }
    }
}

TEST_CASE("best count is monotone in n, k and t")
{
    std::size_t previous = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto best = search_max_powers(query(2, 2, n)).best_count;
        CHECK(best >= previous);
        previous = best;
    }
    CHECK(search_max_powers(query(2, 3, 8)).best_count >=
          search_max_powers(query(2, 2, 8)).best_count);
    previous = 0;
    for (std::size_t t = 1; t <= 4; ++t) {
        const auto best = search_max_powers(query(2, 2, 7, t)).best_count;
        CHECK(best >= previous);
        previous = best;
    }
}

TEST_CASE("pruning does not change the answer")
{
    SearchOptions unpruned;
    unpruned.prune = false;
    for (auto [r, n] : {std::pair{2u, std::size_t{8}}, {3u, 7}}) {
        auto q = query(r, 2, n);
        q.witness_cap = 100;
        const auto pruned = search_max_powers(q);
        const auto full = search_max_powers(q, unpruned);
        CHECK(pruned.best_count == full.best_count);
        CHECK(pruned.witnesses == full.witnesses);
        CHECK(full.pruned_by_start_bound == 0);
        CHECK(full.nodes_explored > pruned.nodes_explored);
    }
}

TEST_CASE("results do not depend on the worker count")
{
    auto q = query(3, 2, 9);
    q.witness_cap = 20;
    const auto one = search_max_powers(q);
    for (unsigned jobs : {2u, 3u, 8u}) {
        SearchOptions options;
        options.jobs = jobs;
        CHECK(search_max_powers(q, options) == one);
    }
}

TEST_CASE("a small budget gives a non-exhaustive lower bound")
{
    SearchOptions options;
    options.budget = 50;
    const auto result = search_max_powers(query(2, 3, 12), options);
    CHECK_FALSE(result.exhaustive);
    CHECK(result.best_count <= 3);
}

TEST_CASE("progress callback fires")
{
    SearchOptions options;
    options.progress_interval = 100;
    std::size_t calls = 0;
    options.progress = [&calls](const SearchProgress &p) {
        ++calls;
        CHECK(p.nodes > 0);
    };
    search_max_powers(query(3, 2, 9), options);
    CHECK(calls > 0);
}

TEST_CASE("known bounds")
{
    const auto sq = known_bound(2, 4);
    REQUIRE(sq);
    CHECK(sq->value == 4);
    CHECK(sq->exact);
    CHECK(known_bound(9, 2)->value == 3);
    CHECK_FALSE(known_bound(9, 2)->exact);
    CHECK(known_bound(4, 3)->value == 2);
    CHECK_FALSE(known_bound(3, 1));
    CHECK(std::string(bound_status_name(BoundStatus::kExceedsProvenValue)) ==
          "exceeds-proven-value");
}

TEST_CASE("lower bound table cells")
{
    const auto squares = lower_bound_table(2, 2, 2, 2, 12);
    REQUIRE(squares.size() == 1);
    CHECK(squares[0].result.best_count == 2);
    CHECK(squares[0].status == BoundStatus::kConsistent);

    const auto cubes = lower_bound_table(3, 3, 2, 2, 9);
    CHECK(cubes[0].result.best_count == 3);
    CHECK(cubes[0].status == BoundStatus::kConsistent);

    const auto fourth = lower_bound_table(4, 4, 2, 2, 8);
    CHECK(fourth[0].result.best_count == 2);
    // The table reports the least witness; the construction is one of the ties.
    CHECK(format_word(fourth[0].result.witnesses.front()) == "...ab..a");
    auto all = query(4, 2, 8);
    all.witness_cap = 100;
    const auto ties = search_max_powers(all).witnesses;
    CHECK(std::find(ties.begin(), ties.end(), prop2_word(4)) != ties.end());

    const auto grid = lower_bound_table(2, 3, 1, 2, 6);
    CHECK(grid.size() == 4);
    CHECK(grid[0].exponent == 2);
    CHECK(grid[0].alphabet_size == 1);
    CHECK(grid[3].exponent == 3);
    CHECK(grid[3].alphabet_size == 2);
}
