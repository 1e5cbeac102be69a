// powers.hpp -- r-th powers in partial words (reference algorithms)
//
// A word w is an r-th power when w is contained in x^r for some nonempty
// full word x. Equivalently r divides |w| and w has strong period |w| / r.
// The functions here are the direct scans every optimized path is tested
// against; see scanner.hpp for the incremental detector.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pword/core.hpp"

namespace pword {

/// Location of one r-th power factor: w[start .. start + length - 1].
struct PowerOccurrence
{
    Position start = 1;
    std::size_t length = 0;
    unsigned exponent = 2;

    std::size_t root_length() const noexcept { return length / exponent; }
    Position end() const noexcept { return start + length - 1; }

    auto operator<=>(const PowerOccurrence &) const = default;
};

/// All r-th power occurrences of a word and their start positions.
struct PowerProfile
{
    unsigned exponent = 2;
    std::vector<PowerOccurrence> occurrences; // sorted by (start, length)
    std::vector<Position> start_positions;    // ascending, distinct
    std::optional<Position> unique_start;     // set iff one distinct start

    bool operator==(const PowerProfile &) const = default;
};

/// Result of enumerate_roots. `total` is k^h where h counts residue
/// classes made only of holes; it saturates at UINT64_MAX.
struct RootEnumeration
{
    std::vector<PartialWord> roots; // lexicographic, at most `cap`
    std::uint64_t total = 0;
    bool total_saturated = false;
};

/// Throws BadExponent unless r >= 2.
void check_exponent(unsigned r);

/// The empty word is never a power.
bool is_power(const PartialWord &w, unsigned r);

/// Full words x with w contained in x^r, lexicographically smallest first.
/// Throws NotAPower.
RootEnumeration enumerate_roots(const PartialWord &w, unsigned r,
                                std::size_t cap);

/// Every (start, length) whose factor is an r-th power.
std::vector<PowerOccurrence> power_occurrences(const PartialWord &w, unsigned r);

std::vector<Position> start_positions(const PartialWord &w, unsigned r);
std::optional<Position> unique_start_position(const PartialWord &w, unsigned r);

/// Builds the profile from a list of occurrences (any order).
PowerProfile make_profile(unsigned r, std::vector<PowerOccurrence> occurrences);

PowerProfile power_profile(const PartialWord &w, unsigned r);

/// Number of distinct symbol sequences among the occurrence factors.
std::size_t distinct_power_factors(const PartialWord &w, unsigned r);

} // namespace pword
