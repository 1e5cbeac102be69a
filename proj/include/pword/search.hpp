// search.hpp -- exhaustive search for partial words with many r-th powers
// but few positions starting one
//
// searchMaxPowers walks canonical words (first occurrences of letters in
// order a, b, c, ...) by appending one symbol at a time. Appending never
// removes an occurrence, so once a prefix has more than t start positions
// every extension does too and the subtree is cut.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pword/core.hpp"

namespace pword {

/// Relabels letters so that their first occurrences read a, b, c, ...
PartialWord canonicalize(const PartialWord &w);

struct SearchQuery
{
    unsigned exponent = 2;          // r
    unsigned alphabet_size = 2;     // k
    std::size_t max_length = 1;     // n
    std::size_t max_start_positions = 1; // t
    std::size_t witness_cap = 10;

    /// Throws BadExponent / InvalidArgument.
    void validate() const;
};

struct SearchProgress
{
    std::uint64_t nodes = 0;
    std::size_t best_count = 0;
};

struct SearchOptions
{
    std::uint64_t budget = 1'000'000'000; // nodes
    unsigned jobs = 1;
    /// Cut subtrees whose prefix exceeds the start bound. Turning this off
    /// only exists to test that the cut is sound.
    bool prune = true;
    std::uint64_t progress_interval = 10'000'000;
    std::function<void(const SearchProgress &)> progress;
};

struct SearchResult
{
    std::size_t best_count = 0;
    std::vector<PartialWord> witnesses; // shortlex-least first
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned_by_symmetry = 0;
    std::uint64_t pruned_by_start_bound = 0;
    bool exhaustive = true;

    bool operator==(const SearchResult &) const = default;
};

/// Maximum number of r-th power occurrences over all words of length
/// 1..n with at most t start positions. Running out of budget yields
/// exhaustive = false and best_count is then only a lower bound. Results
/// do not depend on options.jobs unless the budget runs out.
SearchResult search_max_powers(const SearchQuery &query, const SearchOptions &options = {});

/// How a table cell relates to what is already known about M(r, k).
enum class BoundStatus {
    kConsistent,              // within the known value / bound
    kExceedsProvenValue,      // r = 2 and more than k squares: a bug
    kImprovesKnownLowerBound, // r > 2 and above the known lower bound
    kNoKnownBound,
};

const char *bound_status_name(BoundStatus status) noexcept;

struct KnownBound
{
    std::size_t value;
    bool exact; // true: M(r, k) = value; false: M(r, k) >= value
};

/// M(2, k) = k; M(r, 2) >= 2; M(r, 2) >= 3 for odd multiples of 3;
/// monotone in k.
std::optional<KnownBound> known_bound(unsigned r, unsigned k);

struct TableRow
{
    unsigned exponent;
    unsigned alphabet_size;
    std::size_t max_length;
    std::size_t max_start_positions;
    SearchResult result;
    std::optional<KnownBound> known;
    BoundStatus status;
};

/// Runs search_max_powers for every (r, k) in the given inclusive ranges.
std::vector<TableRow> lower_bound_table(unsigned r_min, unsigned r_max, unsigned k_min,
                                        unsigned k_max, std::size_t max_length,
                                        std::size_t max_start_positions = 1,
                                        std::size_t witness_cap = 1,
                                        const SearchOptions &options = {});

} // namespace pword
