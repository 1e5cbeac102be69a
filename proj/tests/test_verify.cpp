#include "doctest.h"

#include "pword/powers.hpp"
#include "pword/verify.hpp"

using namespace pword;

namespace {

/// Reports with the wall-clock field cleared, for equality checks.
struct Comparable
{
    std::string claim;
    Fields parameters;
    std::uint64_t instances;
    Outcome outcome;
    std::optional<std::string> counterexample;
    Fields context;
    Fields observations;

    explicit Comparable(const VerificationReport &r)
      : claim(r.claim), parameters(r.parameters), instances(r.instances_checked),
        outcome(r.outcome), observations(r.observations)
    {
        if (r.counterexample) {
            counterexample = format_word(r.counterexample->word);
            context = r.counterexample->context;
        }
    }
    bool operator==(const Comparable &) const = default;
};

VerifyOptions with_jobs(unsigned jobs)
{
    VerifyOptions options;
    options.jobs = jobs;
    return options;
}

} // namespace

TEST_CASE("Fine-Wilf holds on small full words")
{
    for (auto [k, n] : {std::pair{2u, std::size_t{12}}, {1u, 5}, {3u, 8}}) {
        const auto report = verify_fine_wilf(k, n);
        CHECK(report.passed());
        CHECK(report.claim == "fine-wilf");
        CHECK(report.instances_checked > 0);
        CHECK_FALSE(report.counterexample);
    }
    // Over one letter there is exactly one word per length.
    CHECK(verify_fine_wilf(1, 5).instances_checked == 5);
}

TEST_CASE("corollary for full words")
{
    CHECK(verify_corollary_full(2, 2, 14).passed());
    CHECK(verify_corollary_full(3, 2, 12).passed());
    const auto unary = verify_corollary_full(2, 1, 6);
    CHECK(unary.passed());
    // a^4, a^5, a^6 start two squares at position 1.
    CHECK(int_field(unary.observations, "hypothesisInstances") == 3);
    CHECK_THROWS_AS(verify_corollary_full(1, 2, 4), Error);
}

TEST_CASE("lemma on hole positions")
{
    const auto report = verify_lemma_h1(2, 10);
    CHECK(report.passed());
    CHECK(int_field(report.observations, "hypothesisInstances") > 0);

    // ".aba" meets the hypothesis with H = {1}; "a.a" does not meet it.
    const auto aba = power_profile(parse_word(".aba"), 2);
    CHECK(aba.occurrences.size() == 2);
    CHECK(aba.unique_start == Position{1});
    CHECK(power_profile(parse_word("a.a"), 2).start_positions == std::vector<Position>{1, 2});
}

TEST_CASE("lemmas on u v")
{
    CHECK(verify_lemma_2k(2, 6).passed());
    CHECK(verify_lemma_2k(3, 5).passed());
    CHECK(verify_lemma_short(2, 6).passed());
    CHECK(verify_lemma_short(3, 5).passed());

    // |u| = 1: no square length strictly between 1 and 2.
    const auto tiny = verify_lemma_2k(2, 1);
    CHECK(tiny.passed());
    CHECK(int_field(tiny.observations, "hypothesisInstances") == 0);
    CHECK(tiny.instances_checked == 1);

    // |u| = 2: u = ".x", v = "yx"; the square (1,2) applies when x = y,
    // and then v = "xx" is a square.
    const auto two = verify_lemma_short(2, 2);
    CHECK(two.passed());
    CHECK(int_field(two.observations, "hypothesisInstances") == 1);

    CHECK_THROWS_AS(verify_lemma_2k(1, 4), Error);
    CHECK_THROWS_AS(verify_lemma_short(1, 4), Error);
}

TEST_CASE("square bound theorem")
{
    const auto k2 = verify_theorem_sq_bound(2, 12);
    CHECK(k2.passed());
    CHECK(int_field(k2.observations, "maxSquares") == 2);
    CHECK(std::get<std::string>(field(k2.observations, "maxSquaresWitness")) == ".aba");

    const auto k1 = verify_theorem_sq_bound(1, 8);
    CHECK(k1.passed());
    CHECK(int_field(k1.observations, "maxSquares") == 1);

    const auto k3 = verify_theorem_sq_bound(3, 8);
    CHECK(k3.passed());
    CHECK(int_field(k3.observations, "maxSquares") == 3);
    CHECK(std::get<std::string>(field(k3.observations, "maxSquaresWitness")) == ".abacaba");

    // Below length 8 three letters cannot reach three squares.
    CHECK(int_field(verify_theorem_sq_bound(3, 7).observations, "maxSquares") == 2);
}

TEST_CASE("a false bound produces a replayable counterexample")
{
    const auto report = verify_square_count_bound(2, 8, 1);
    REQUIRE_FALSE(report.passed());
    REQUIRE(report.counterexample);
    CHECK(report.counterexample->word.size() == 4);
    CHECK(int_field(report.counterexample->context, "squares") == 2);
    CHECK(replay_counterexample(report));

    // Same counterexample with several workers.
    const auto parallel = verify_square_count_bound(2, 8, 1, with_jobs(4));
    CHECK(Comparable(parallel) == Comparable(report));

    // A doctored report does not replay.
    auto doctored = report;
    doctored.counterexample->word = parse_word("abab", Alphabet(2));
    CHECK_FALSE(replay_counterexample(doctored));
    CHECK_FALSE(replay_counterexample(verify_theorem_sq_bound(2, 6)));
}

TEST_CASE("replay of hand-made failures for every claim")
{
    auto fake = [](std::string claim, Fields params, const char *word, Fields ctx) {
        VerificationReport r;
        r.claim = std::move(claim);
        r.parameters = std::move(params);
        r.outcome = Outcome::kFail;
        r.counterexample = Counterexample{parse_word(word, Alphabet(3)), std::move(ctx)};
        return r;
    };
    // None of these words violates its claim, so none replays.
    CHECK_FALSE(replay_counterexample(fake("fine-wilf", {}, "abab", {{"p", 2}, {"q", 4}})));
    CHECK_FALSE(replay_counterexample(fake("corollary-full", {{"r", 2}}, "aaaa", {{"position", 1}})));
    CHECK_FALSE(replay_counterexample(fake("lemma-h1", {}, ".aba", {})));
    CHECK_FALSE(replay_counterexample(
        fake("lemma-2k", {}, ".abaaab", {{"uLength", 3}, {"squareLength", 4}})));
    CHECK_FALSE(replay_counterexample(
        fake("lemma-short", {}, ".aaa", {{"uLength", 2}, {"squareLength", 2}})));
    CHECK_THROWS_AS(replay_counterexample(fake("unknown", {}, "a", {})), Error);
}

TEST_CASE("constructions verify")
{
    const auto chain = verify_construction(ConstructionName::kSquareChain, 4);
    CHECK(chain.passed());
    CHECK(chain.claim == "construction:square-chain");
    CHECK(verify_construction(ConstructionName::kProp2, 5).passed());
    CHECK(verify_construction(ConstructionName::kProp3, 3).passed());
    const auto cubes = verify_construction(ConstructionName::kCubeExamples, 0);
    CHECK(cubes.passed());
    CHECK(cubes.instances_checked == 2);
    CHECK_THROWS_AS(verify_construction(ConstructionName::kProp3, 6), Error);
    CHECK(parse_construction_name("prop2") == ConstructionName::kProp2);
    CHECK_THROWS_AS(parse_construction_name("prop4"), Error);
}

TEST_CASE("reports are deterministic across worker counts and runs")
{
    const auto a = verify_lemma_h1(2, 9, with_jobs(1));
    const auto b = verify_lemma_h1(2, 9, with_jobs(6));
    const auto c = verify_lemma_h1(2, 9, with_jobs(1));
    CHECK(Comparable(a) == Comparable(b));
    CHECK(Comparable(a) == Comparable(c));
    CHECK(Comparable(verify_lemma_2k(2, 6, with_jobs(3))) == Comparable(verify_lemma_2k(2, 6)));
    CHECK(Comparable(verify_theorem_sq_bound(2, 10, with_jobs(8))) ==
          Comparable(verify_theorem_sq_bound(2, 10)));
    CHECK(Comparable(verify_fine_wilf(2, 11, with_jobs(5))) == Comparable(verify_fine_wilf(2, 11)));
}

TEST_CASE("symmetry reduction changes counts, not outcomes")
{
    VerifyOptions all;
    all.symmetry_reduction = false;
    const auto reduced = verify_theorem_sq_bound(2, 8);
    const auto full = verify_theorem_sq_bound(2, 8, all);
    CHECK(reduced.passed());
    CHECK(full.passed());
    CHECK(full.instances_checked > reduced.instances_checked);
    // Every nonempty word over {., a, b} of length <= 8.
    CHECK(full.instances_checked == 9840);
    CHECK(int_field(full.observations, "maxSquares") == 2);
    CHECK(verify_lemma_short(2, 5, all).passed());
}

TEST_CASE("budget exhaustion is an error, not a truncated pass")
{
    VerifyOptions tiny;
    tiny.budget = 100;
    try {
        verify_lemma_h1(2, 10, tiny);
        FAIL("no error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::kResourceLimit);
    }
    tiny.jobs = 4;
    CHECK_THROWS_AS(verify_fine_wilf(2, 12, tiny), Error);
}
