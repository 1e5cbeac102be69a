#include "pword/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>

#include "pword/constructions.hpp"
#include "pword/enumerate.hpp"
#include "pword/powers.hpp"
#include "pword/scanner.hpp"

namespace pword {

PartialWord canonicalize(const PartialWord &w)
{
    std::vector<int> rename(kMaxAlphabetSize, -1);
    unsigned next = 0;
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (Symbol s : w.symbols()) {
        if (s.is_hole()) {
            out.push_back(s);
            continue;
        }
        int &target = rename[s.letter_index()];
        if (target < 0)
            target = static_cast<int>(next++);
        out.push_back(Symbol::letter(static_cast<unsigned>(target)));
    }
    return PartialWord(std::move(out), w.alphabet());
}

void SearchQuery::validate() const
{
    check_exponent(exponent);
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabetSize)
        throw Error(ErrorCode::kInvalidArgument, "alphabet size must be between 1 and 26");
    if (max_length < 1)
        throw Error(ErrorCode::kInvalidArgument, "maximum length must be at least 1");
    if (max_start_positions < 1)
        throw Error(ErrorCode::kInvalidArgument, "start position bound t must be at least 1");
    if (witness_cap < 1)
        throw Error(ErrorCode::kInvalidArgument, "witness cap must be at least 1");
}

namespace {

using Word = std::vector<Symbol>;

/// Best count and the shortlex-least words attaining it.
struct Champions
{
    std::size_t best = 0;
    std::vector<Word> words;

    void offer(std::size_t count, std::span<const Symbol> w, std::size_t cap)
    {
        if (count < best)
            return;
        if (count > best || words.empty()) {
            best = count;
            words.assign(1, Word(w.begin(), w.end()));
            return;
        }
        if (words.size() == cap && !shortlex_less(w, words.back()))
            return;
        auto at = std::lower_bound(words.begin(), words.end(), w,
                                   [](const Word &a, std::span<const Symbol> b) {
                                       return shortlex_less(a, b);
                                   });
        words.emplace(at, w.begin(), w.end());
        if (words.size() > cap)
            words.pop_back();
    }

    void merge(const Champions &other, std::size_t cap)
    {
        for (const auto &w : other.words)
            offer(other.best, w, cap);
    }
};

/// State shared by all workers of one search.
struct Shared
{
    Shared(const SearchQuery &q, const SearchOptions &o) : query(q), options(o) {}

    const SearchQuery &query;
    const SearchOptions &options;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::size_t> best{0};
    std::atomic<bool> stopped{false};
    std::mutex progress_mutex;
};

struct Worker
{
    explicit Worker(Shared *s) : shared(s) {}

    Shared *shared;
    Champions champions;
    std::uint64_t nodes = 0;
    std::uint64_t pruned_by_start_bound = 0;
    WalkCounters counters;

    Step visit(const PowerScanner &st)
    {
        const auto &options = shared->options;
        const std::uint64_t global = shared->nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (global > options.budget || shared->stopped.load(std::memory_order_relaxed)) {
            shared->stopped = true;
            return Step::kStop;
        }
        ++nodes;
        if (options.progress && options.progress_interval != 0 &&
            global % options.progress_interval == 0) {
            std::lock_guard lock(shared->progress_mutex);
            options.progress(SearchProgress{global, shared->best.load()});
        }

        if (st.distinct_start_count() > shared->query.max_start_positions) {
            if (!options.prune)
                return Step::kDescend;
            ++pruned_by_start_bound;
            return Step::kPrune;
        }
        const std::size_t count = st.occurrence_count();
        champions.offer(count, st.symbols(), shared->query.witness_cap);
        // Monotone bound for progress reports only.
        std::size_t seen = shared->best.load(std::memory_order_relaxed);
        while (count > seen && !shared->best.compare_exchange_weak(seen, count)) {
        }
        return Step::kDescend;
    }
};

} // namespace

SearchResult search_max_powers(const SearchQuery &query, const SearchOptions &options)
{
    query.validate();
    Shared shared(query, options);
    const WalkSpec spec{query.alphabet_size, true, query.max_length, true};
    const std::size_t capacity = std::max<std::size_t>(query.max_length, 2);

    PowerScanner scanner(query.exponent, capacity);
    Worker main(&shared);
    auto visit = [&main](const PowerScanner &st) { return main.visit(st); };

    std::vector<Worker> workers;
    if (options.jobs <= 1) {
        walk_children(spec, scanner, 0, visit, main.counters);
    } else {
        std::size_t depth = 1;
        for (std::size_t width = query.alphabet_size + 1;
             width < 16u * options.jobs && depth < query.max_length;
             width *= query.alphabet_size + 1)
            ++depth;
        bool stopped = false;
        const auto frontier =
            collect_frontier(spec, scanner, depth, visit, main.counters, stopped);
        workers.assign(frontier.size(), Worker(&shared));
        if (!stopped) {
            parallel_for(frontier.size(), options.jobs, [&](std::size_t i) {
                PowerScanner local(query.exponent, capacity);
                for (Symbol s : frontier[i].prefix)
                    local.push(s);
                Worker &worker = workers[i];
                auto local_visit = [&worker](const PowerScanner &st) {
                    return worker.visit(st);
                };
                walk_children(spec, local, frontier[i].used, local_visit, worker.counters);
            });
        }
    }

    Champions champions = main.champions;
    SearchResult result;
    result.nodes_explored = main.nodes;
    result.pruned_by_symmetry = main.counters.skipped_by_symmetry;
    result.pruned_by_start_bound = main.pruned_by_start_bound;
    for (const auto &w : workers) {
        champions.merge(w.champions, query.witness_cap);
        result.nodes_explored += w.nodes;
        result.pruned_by_symmetry += w.counters.skipped_by_symmetry;
        result.pruned_by_start_bound += w.pruned_by_start_bound;
    }
    result.best_count = champions.best;
    for (auto &w : champions.words)
        result.witnesses.emplace_back(std::move(w), Alphabet(query.alphabet_size));
    result.exhaustive = !shared.stopped.load();
    return result;
}

const char *bound_status_name(BoundStatus status) noexcept
{
    switch (status) {
    case BoundStatus::kConsistent: return "consistent";
    case BoundStatus::kExceedsProvenValue: return "exceeds-proven-value";
    case BoundStatus::kImprovesKnownLowerBound: return "improves-lower-bound";
    case BoundStatus::kNoKnownBound: return "no-known-bound";
    }
    return "?";
}

std::optional<KnownBound> known_bound(unsigned r, unsigned k)
{
    if (r == 2)
        return KnownBound{k, true};
    if (r > 2 && k >= 2)
        return KnownBound{prop3_accepts(r) ? std::size_t{3} : std::size_t{2}, false};
    return std::nullopt;
}

std::vector<TableRow> lower_bound_table(unsigned r_min, unsigned r_max, unsigned k_min,
                                        unsigned k_max, std::size_t max_length,
                                        std::size_t max_start_positions,
                                        std::size_t witness_cap, const SearchOptions &options)
{
    if (r_min > r_max || k_min > k_max)
        throw Error(ErrorCode::kInvalidArgument, "empty parameter range");
    std::vector<TableRow> rows;
    for (unsigned r = r_min; r <= r_max; ++r) {
        for (unsigned k = k_min; k <= k_max; ++k) {
            SearchQuery query{r, k, max_length, max_start_positions, witness_cap};
            TableRow row{r, k, max_length, max_start_positions,
                         search_max_powers(query, options), known_bound(r, k),
                         BoundStatus::kNoKnownBound};
            if (row.known) {
                const bool above = row.result.best_count > row.known->value;
                row.status = !above ? BoundStatus::kConsistent
                             : row.known->exact ? BoundStatus::kExceedsProvenValue
                                                : BoundStatus::kImprovesKnownLowerBound;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace pword
