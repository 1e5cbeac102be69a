#include "pword/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "pword/constructions.hpp"
#include "pword/enumerate.hpp"
#include "pword/powers.hpp"
#include "pword/scanner.hpp"

namespace pword {

const FieldValue &field(const Fields &fields, const std::string &name)
{
    for (const auto &[key, value] : fields)
        if (key == name)
            return value;
    throw Error(ErrorCode::kInvalidArgument, "missing field '" + name + "'");
}

std::int64_t int_field(const Fields &fields, const std::string &name)
{
    const auto *value = std::get_if<std::int64_t>(&field(fields, name));
    if (value == nullptr)
        throw Error(ErrorCode::kInvalidArgument, "field '" + name + "' is not an integer");
    return *value;
}

namespace {

using Clock = std::chrono::steady_clock;
using Word = std::vector<Symbol>;

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

/// What a claim says about one instance.
struct CheckResult
{
    bool hypothesis = false;
    std::optional<Fields> violation;
    std::optional<std::int64_t> score;
};

/// Budget shared by every worker of one verifier run.
struct Budget
{
    std::uint64_t limit;
    std::atomic<std::uint64_t> spent{0};
};

/// Per-worker aggregate. Merging is order independent, which keeps reports
/// identical for any number of workers.
class Tally
{
public:
    explicit Tally(Budget &budget) : _budget(&budget) {}

    void record(std::span<const Symbol> w, CheckResult result)
    {
        if (_budget->spent.fetch_add(1, std::memory_order_relaxed) + 1 > _budget->limit)
            throw Error(ErrorCode::kResourceLimit,
                        "instance budget of " + std::to_string(_budget->limit) +
                            " exhausted");
        ++instances;
        if (result.hypothesis)
            ++hypotheses;
        if (result.violation && (!violation_word || shortlex_less(w, *violation_word))) {
            violation_word.emplace(w.begin(), w.end());
            violation_context = std::move(*result.violation);
        }
        if (result.score)
            offer_score(*result.score, w);
    }

    void merge(const Tally &other)
    {
        instances += other.instances;
        hypotheses += other.hypotheses;
        if (other.violation_word &&
            (!violation_word || shortlex_less(*other.violation_word, *violation_word))) {
            violation_word = other.violation_word;
            violation_context = other.violation_context;
        }
        if (other.best_score)
            offer_score(*other.best_score, other.best_word);
    }

    std::uint64_t instances = 0;
    std::uint64_t hypotheses = 0;
    std::optional<Word> violation_word;
    Fields violation_context;
    std::optional<std::int64_t> best_score;
    Word best_word;

private:
    void offer_score(std::int64_t score, std::span<const Symbol> w)
    {
        if (!best_score || score > *best_score ||
            (score == *best_score && shortlex_less(w, best_word))) {
            best_score = score;
            best_word.assign(w.begin(), w.end());
        }
    }

    Budget *_budget;
};

/// Enumerates the subtree below `root` (which is itself an instance when
/// nonempty) and hands every node to `check(scanner, tally)`.
template <class Check>
Tally run_walk(const WalkSpec &spec, unsigned exponent, const Word &root,
               const VerifyOptions &options, Check check)
{
    Budget budget{options.budget};
    const std::size_t capacity = std::max<std::size_t>(2 * spec.max_length, 2);

    auto visitor = [&check](PowerScanner &scanner, Tally &tally) {
        return [&check, &scanner, &tally](const PowerScanner &) {
            check(scanner, tally);
            return Step::kDescend;
        };
    };

    PowerScanner scanner(exponent, capacity);
    Tally tally(budget);
    for (Symbol s : root)
        scanner.push(s);
    if (!root.empty())
        check(scanner, tally);
    const unsigned used = letters_used(root);

    WalkCounters counters;
    if (options.jobs <= 1) {
        auto visit = visitor(scanner, tally);
        walk_children(spec, scanner, used, visit, counters);
        return tally;
    }

    // Split at a depth that leaves enough subtrees for the workers.
    const std::size_t branching = spec.alphabet_size + (spec.holes ? 1 : 0);
    std::size_t depth = root.size() + 1;
    for (std::size_t width = branching; width < 16u * options.jobs && depth < spec.max_length;
         width *= branching)
        ++depth;

    auto visit = visitor(scanner, tally);
    WalkSpec shallow = spec;
    shallow.max_length = std::min(depth, spec.max_length);
    std::vector<Frontier> frontier;
    auto collect = [&](const PowerScanner &st) {
        visit(st);
        if (st.size() == shallow.max_length && st.size() < spec.max_length)
            frontier.push_back(Frontier{{st.symbols().begin(), st.symbols().end()},
                                        letters_used(st.symbols())});
        return Step::kDescend;
    };
    walk_children(shallow, scanner, used, collect, counters);

    std::vector<Tally> partial(frontier.size(), Tally(budget));
    parallel_for(frontier.size(), options.jobs, [&](std::size_t i) {
        PowerScanner local(exponent, capacity);
        for (Symbol s : frontier[i].prefix)
            local.push(s);
        WalkCounters local_counters;
        auto local_visit = visitor(local, partial[i]);
        walk_children(spec, local, frontier[i].used, local_visit, local_counters);
    });
    for (const auto &t : partial)
        tally.merge(t);
    return tally;
}

VerificationReport make_report(std::string claim, Fields parameters, unsigned k,
                               const Tally &tally, Clock::time_point started)
{
    VerificationReport report;
    report.claim = std::move(claim);
    report.parameters = std::move(parameters);
    report.instances_checked = tally.instances;
    report.observations.emplace_back("hypothesisInstances",
                                     static_cast<std::int64_t>(tally.hypotheses));
    if (tally.violation_word) {
        report.outcome = Outcome::kFail;
        report.counterexample =
            Counterexample{PartialWord(*tally.violation_word, Alphabet(k)),
                           tally.violation_context};
    }
    report.elapsed = Clock::now() - started;
    return report;
}

void require_alphabet(unsigned k, unsigned minimum)
{
    if (k < minimum || k > kMaxAlphabetSize)
        throw Error(ErrorCode::kInvalidArgument,
                    "alphabet size must be between " + std::to_string(minimum) +
                        " and 26, got " + std::to_string(k));
}

void require_length(std::size_t n)
{
    if (n < 1)
        throw Error(ErrorCode::kInvalidArgument, "maximum length must be at least 1");
}

/// First position (1-based) holding at least two occurrence starts, or 0.
Position crowded_start(const PowerScanner &st)
{
    for (Position i = 1; i <= st.size(); ++i)
        if (st.starts_at(i) >= 2)
            return i;
    return 0;
}

/// Square prefixes of w, as half lengths m with w[1..2m] a square.
std::vector<std::size_t> square_prefix_halves(std::span<const PowerOccurrence> occurrences)
{
    std::vector<std::size_t> out;
    for (const auto &o : occurrences)
        if (o.start == 1)
            out.push_back(o.root_length());
    std::sort(out.begin(), out.end());
    return out;
}

/// Shared instance shape of the two lemmas about w = u v: u is the current
/// walk node (a hole followed by letters), v replaces that hole by a letter.
template <class Claim>
void for_each_extension(PowerScanner &st, unsigned k, bool symmetry, Tally &tally,
                        Claim claim)
{
    const Word u(st.symbols().begin(), st.symbols().end());
    const unsigned used = letters_used(u);
    const unsigned limit = symmetry ? std::min(used + 1, k) : k;
    for (unsigned c = 0; c < limit; ++c) {
        st.push(Symbol::letter(c));
        for (std::size_t i = 1; i < u.size(); ++i)
            st.push(u[i]);
        tally.record(st.symbols(), claim(st, u.size()));
        for (std::size_t i = 0; i < u.size(); ++i)
            st.pop();
    }
}

WalkSpec full_word_spec(unsigned k, std::size_t max_len, const VerifyOptions &options)
{
    return WalkSpec{k, false, max_len, options.symmetry_reduction};
}

std::string describe(const std::vector<PowerOccurrence> &occurrences)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < occurrences.size(); ++i)
        out << (i ? "," : "") << '(' << occurrences[i].start << ','
            << occurrences[i].length << ')';
    out << '}';
    return out.str();
}

std::vector<PowerOccurrence> prefix_occurrences(unsigned r, std::initializer_list<std::size_t> lengths)
{
    std::vector<PowerOccurrence> out;
    for (auto length : lengths)
        out.push_back(PowerOccurrence{1, length, r});
    return out;
}

} // namespace

VerificationReport verify_fine_wilf(unsigned k, std::size_t max_len,
                                    const VerifyOptions &options)
{
    require_alphabet(k, 1);
    require_length(max_len);
    const auto started = Clock::now();
    auto check = [](PowerScanner &st, Tally &tally) {
        const std::size_t n = st.size();
        std::vector<std::size_t> periods;
        for (std::size_t p = 1; p <= n; ++p)
            if (st.has_period(p))
                periods.push_back(p);
        CheckResult result;
        for (std::size_t a = 0; a < periods.size() && !result.violation; ++a) {
            for (std::size_t b = a + 1; b < periods.size(); ++b) {
                const std::size_t p = periods[a], q = periods[b];
                const std::size_t g = std::gcd(p, q);
                if (n + g < p + q)
                    continue;
                result.hypothesis = true;
                if (!st.has_period(g)) {
                    result.violation = Fields{{"p", as_int(p)}, {"q", as_int(q)},
                                              {"gcd", as_int(g)}};
                    break;
                }
            }
        }
        tally.record(st.symbols(), std::move(result));
    };
    const Tally tally = run_walk(full_word_spec(k, max_len, options), 2, {}, options, check);
    return make_report("fine-wilf", {{"k", as_int(k)}, {"maxLen", as_int(max_len)}}, k,
                       tally, started);
}

VerificationReport verify_corollary_full(unsigned r, unsigned k, std::size_t max_len,
                                         const VerifyOptions &options)
{
    check_exponent(r);
    require_alphabet(k, 1);
    require_length(max_len);
    const auto started = Clock::now();
    auto check = [](PowerScanner &st, Tally &tally) {
        CheckResult result;
        const Position crowded = crowded_start(st);
        result.hypothesis = crowded != 0;
        const Position last = st.last_start();
        // The first crowded position has a later start unless it is the last.
        if (crowded != 0 && crowded == last)
            result.violation = Fields{{"position", as_int(crowded)},
                                      {"powersAtPosition", as_int(st.starts_at(crowded))}};
        tally.record(st.symbols(), std::move(result));
    };
    const Tally tally = run_walk(full_word_spec(k, max_len, options), r, {}, options, check);
    return make_report("corollary-full",
                       {{"r", as_int(r)}, {"k", as_int(k)}, {"maxLen", as_int(max_len)}}, k,
                       tally, started);
}

VerificationReport verify_lemma_h1(unsigned k, std::size_t max_len,
                                   const VerifyOptions &options)
{
    require_alphabet(k, 1);
    require_length(max_len);
    const auto started = Clock::now();
    auto check = [](PowerScanner &st, Tally &tally) {
        CheckResult result;
        result.hypothesis = st.occurrence_count() > 1 && st.distinct_start_count() == 1;
        if (result.hypothesis) {
            const auto w = st.symbols();
            const bool only_first = w[0].is_hole() &&
                                    std::all_of(w.begin() + 1, w.end(),
                                                [](Symbol s) { return s.is_letter(); });
            if (!only_first)
                result.violation = Fields{{"squares", as_int(st.occurrence_count())},
                                          {"start", as_int(st.last_start())}};
        }
        tally.record(st.symbols(), std::move(result));
    };
    const WalkSpec spec{k, true, max_len, options.symmetry_reduction};
    const Tally tally = run_walk(spec, 2, {}, options, check);
    return make_report("lemma-h1", {{"k", as_int(k)}, {"maxLen", as_int(max_len)}}, k, tally,
                       started);
}

VerificationReport verify_lemma_2k(unsigned k, std::size_t max_u_len,
                                   const VerifyOptions &options)
{
    require_alphabet(k, 2);
    require_length(max_u_len);
    const auto started = Clock::now();
    const bool symmetry = options.symmetry_reduction;
    auto claim = [](const PowerScanner &st, std::size_t u_len) {
        CheckResult result;
        const std::size_t n = st.size();
        for (std::size_t m : square_prefix_halves(st.occurrences())) {
            if (!(u_len < 2 * m && 2 * m < n))
                continue;
            result.hypothesis = true;
            bool later = false;
            for (Position i = 2; i < n && !later; ++i)
                later = st.starts_at(i) > 0;
            if (!later) {
                result.violation = Fields{{"uLength", as_int(u_len)},
                                          {"squareLength", as_int(2 * m)}};
                break;
            }
        }
        return result;
    };
    auto check = [&](PowerScanner &st, Tally &tally) {
        for_each_extension(st, k, symmetry, tally, claim);
    };
    const WalkSpec spec = full_word_spec(k, max_u_len, options);
    const Tally tally = run_walk(spec, 2, {Symbol::hole()}, options, check);
    return make_report("lemma-2k", {{"k", as_int(k)}, {"maxULen", as_int(max_u_len)}}, k,
                       tally, started);
}

VerificationReport verify_lemma_short(unsigned k, std::size_t max_u_len,
                                      const VerifyOptions &options)
{
    require_alphabet(k, 2);
    require_length(max_u_len);
    const auto started = Clock::now();
    const bool symmetry = options.symmetry_reduction;
    auto claim = [](const PowerScanner &st, std::size_t u_len) {
        CheckResult result;
        const auto w = st.symbols();
        const Symbol v1 = w[u_len];
        for (std::size_t m : square_prefix_halves(st.occurrences())) {
            if (2 * m > u_len || w[m] != v1)
                continue;
            result.hypothesis = true;
            bool inside_v = false;
            for (Position i = u_len + 1; i <= st.size() && !inside_v; ++i)
                inside_v = st.starts_at(i) > 0;
            if (!inside_v) {
                result.violation = Fields{{"uLength", as_int(u_len)},
                                          {"squareLength", as_int(2 * m)}};
                break;
            }
        }
        return result;
    };
    auto check = [&](PowerScanner &st, Tally &tally) {
        for_each_extension(st, k, symmetry, tally, claim);
    };
    const WalkSpec spec = full_word_spec(k, max_u_len, options);
    const Tally tally = run_walk(spec, 2, {Symbol::hole()}, options, check);
    return make_report("lemma-short", {{"k", as_int(k)}, {"maxULen", as_int(max_u_len)}}, k,
                       tally, started);
}

VerificationReport verify_square_count_bound(unsigned k, std::size_t max_len,
                                             std::size_t bound,
                                             const VerifyOptions &options)
{
    require_alphabet(k, 1);
    require_length(max_len);
    const auto started = Clock::now();
    auto check = [bound](PowerScanner &st, Tally &tally) {
        CheckResult result;
        result.hypothesis = st.distinct_start_count() == 1;
        if (result.hypothesis) {
            const std::size_t count = st.occurrence_count();
            result.score = as_int(count);
            if (count > bound)
                result.violation = Fields{{"squares", as_int(count)},
                                          {"start", as_int(st.last_start())}};
        }
        tally.record(st.symbols(), std::move(result));
    };
    const WalkSpec spec{k, true, max_len, options.symmetry_reduction};
    const Tally tally = run_walk(spec, 2, {}, options, check);
    auto report = make_report(
        "theorem-sq",
        {{"k", as_int(k)}, {"maxLen", as_int(max_len)}, {"bound", as_int(bound)}}, k, tally,
        started);
    if (tally.best_score) {
        report.observations.emplace_back("maxSquares", *tally.best_score);
        report.observations.emplace_back(
            "maxSquaresWitness", format_word(std::span<const Symbol>(tally.best_word)));
    }
    return report;
}

VerificationReport verify_theorem_sq_bound(unsigned k, std::size_t max_len,
                                           const VerifyOptions &options)
{
    return verify_square_count_bound(k, max_len, k, options);
}

ConstructionName parse_construction_name(const std::string &name)
{
    if (name == "square-chain")
        return ConstructionName::kSquareChain;
    if (name == "prop2")
        return ConstructionName::kProp2;
    if (name == "prop3")
        return ConstructionName::kProp3;
    if (name == "cube-examples")
        return ConstructionName::kCubeExamples;
    throw Error(ErrorCode::kInvalidArgument, "unknown construction '" + name + "'");
}

const char *construction_name(ConstructionName name) noexcept
{
    switch (name) {
    case ConstructionName::kSquareChain: return "square-chain";
    case ConstructionName::kProp2: return "prop2";
    case ConstructionName::kProp3: return "prop3";
    case ConstructionName::kCubeExamples: return "cube-examples";
    }
    return "?";
}

namespace {

struct ClaimedWord
{
    PartialWord word;
    unsigned exponent;
    std::vector<PowerOccurrence> expected;
};

std::vector<ClaimedWord> claimed_words(ConstructionName name, unsigned param)
{
    switch (name) {
    case ConstructionName::kSquareChain: {
        std::vector<PowerOccurrence> expected;
        for (unsigned j = 1; j <= param; ++j)
            expected.push_back(PowerOccurrence{1, std::size_t{1} << j, 2});
        return {{square_chain(param), 2, expected}};
    }
    case ConstructionName::kProp2:
        return {{prop2_word(param), param, prefix_occurrences(param, {param, 2 * param})}};
    case ConstructionName::kProp3:
        return {{prop3_word(param), param,
                 prefix_occurrences(param, {param, 2 * param, 3 * param})}};
    case ConstructionName::kCubeExamples: {
        std::vector<ClaimedWord> out;
        for (auto &w : cube_examples())
            out.push_back({std::move(w), 3, prefix_occurrences(3, {3, 6, 9})});
        return out;
    }
    }
    return {};
}

} // namespace

VerificationReport verify_construction(ConstructionName name, unsigned param)
{
    const auto started = Clock::now();
    VerificationReport report;
    report.claim = std::string("construction:") + construction_name(name);
    if (name == ConstructionName::kSquareChain)
        report.parameters.emplace_back("k", as_int(param));
    else if (name != ConstructionName::kCubeExamples)
        report.parameters.emplace_back("r", as_int(param));

    for (const auto &claimed : claimed_words(name, param)) {
        ++report.instances_checked;
        const auto actual = power_occurrences(claimed.word, claimed.exponent);
        if (actual != claimed.expected && !report.counterexample) {
            report.outcome = Outcome::kFail;
            report.counterexample =
                Counterexample{claimed.word,
                               {{"r", as_int(claimed.exponent)},
                                {"expected", describe(claimed.expected)},
                                {"actual", describe(actual)}}};
        }
    }
    report.elapsed = Clock::now() - started;
    return report;
}

namespace {

bool replay_construction(const VerificationReport &report)
{
    const std::string name = report.claim.substr(std::string("construction:").size());
    const auto parsed = parse_construction_name(name);
    unsigned param = 0;
    if (parsed == ConstructionName::kSquareChain)
        param = static_cast<unsigned>(int_field(report.parameters, "k"));
    else if (parsed != ConstructionName::kCubeExamples)
        param = static_cast<unsigned>(int_field(report.parameters, "r"));
    for (const auto &claimed : claimed_words(parsed, param))
        if (claimed.word == report.counterexample->word)
            return power_occurrences(claimed.word, claimed.exponent) != claimed.expected;
    return false;
}

std::vector<std::size_t> prefix_square_halves(const PartialWord &w)
{
    std::vector<std::size_t> out;
    for (const auto &o : power_occurrences(w, 2))
        if (o.start == 1)
            out.push_back(o.root_length());
    return out;
}

} // namespace

bool replay_counterexample(const VerificationReport &report)
{
    if (report.passed() || !report.counterexample)
        return false;
    const PartialWord &w = report.counterexample->word;
    const Fields &ctx = report.counterexample->context;
    const std::string &claim = report.claim;

    if (claim.rfind("construction:", 0) == 0)
        return replay_construction(report);

    if (claim == "fine-wilf") {
        const auto p = static_cast<std::size_t>(int_field(ctx, "p"));
        const auto q = static_cast<std::size_t>(int_field(ctx, "q"));
        const std::size_t g = std::gcd(p, q);
        return w.is_full() && is_strong_periodic(w, p) && is_strong_periodic(w, q) &&
               w.size() + g >= p + q && !is_strong_periodic(w, g);
    }
    if (claim == "corollary-full") {
        const auto r = static_cast<unsigned>(int_field(report.parameters, "r"));
        const auto profile = power_profile(w, r);
        const auto i = static_cast<Position>(int_field(ctx, "position"));
        const auto at_i = std::count_if(profile.occurrences.begin(), profile.occurrences.end(),
                                        [i](const PowerOccurrence &o) { return o.start == i; });
        return w.is_full() && at_i >= 2 && profile.start_positions.back() == i;
    }
    if (claim == "lemma-h1") {
        const auto profile = power_profile(w, 2);
        return profile.occurrences.size() > 1 && profile.unique_start &&
               w.hole_positions() != std::vector<Position>{1};
    }
    if (claim == "theorem-sq") {
        const auto bound = static_cast<std::size_t>(int_field(report.parameters, "bound"));
        const auto profile = power_profile(w, 2);
        return profile.unique_start && profile.occurrences.size() > bound;
    }
    if (claim == "lemma-2k" || claim == "lemma-short") {
        const auto u_len = static_cast<std::size_t>(int_field(ctx, "uLength"));
        const auto two_m = static_cast<std::size_t>(int_field(ctx, "squareLength"));
        if (u_len < 1 || 2 * u_len != w.size())
            return false;
        const PartialWord u = factor(w, 1, u_len);
        const PartialWord v = factor(w, u_len + 1, w.size());
        const auto holes = u.hole_positions();
        if (holes != std::vector<Position>{1} || !v.is_full() || !is_compatible(u, v))
            return false;
        const auto halves = prefix_square_halves(w);
        if (std::find(halves.begin(), halves.end(), two_m / 2) == halves.end())
            return false;
        if (claim == "lemma-2k") {
            if (!(u_len < two_m && two_m < w.size()))
                return false;
            for (Position s : start_positions(w, 2))
                if (s > 1 && s < w.size())
                    return false;
            return true;
        }
        if (two_m > u_len || w[two_m / 2 + 1] != v[1])
            return false;
        return power_occurrences(v, 2).empty();
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown claim '" + claim + "'");
}

} // namespace pword
