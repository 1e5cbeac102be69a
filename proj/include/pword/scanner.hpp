// scanner.hpp -- incremental r-th power detection under push/pop
//
// PowerScanner keeps a growing word together with every r-th power
// occurrence that fits in it. Appending a symbol only creates occurrences
// ending at the new position, so a push costs O(capacity) and a pop costs
// O(occurrences ending at the removed position). This is the detector used
// by the exhaustive search and verification engines.
//
// For every candidate period p and position m the scanner maintains
//   last_defined(p, m): largest j <= m, j = m (mod p), holding a letter
//   conflict(p, m):     largest j < m, j = m (mod p), holding a letter
//                       different from w[m] (letters only)
//   reach(p, m):        smallest s with w[s..m] strongly p-periodic
// and w[m - rp + 1 .. m] is an r-th power iff reach(p, m) <= m - rp + 1.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pword/core.hpp"
#include "pword/powers.hpp"

namespace pword {

class PowerScanner
{
public:
    explicit PowerScanner(unsigned exponent, std::size_t capacity = 32);

    unsigned exponent() const noexcept { return _exponent; }
    std::size_t size() const noexcept { return _symbols.size(); }
    std::span<const Symbol> symbols() const noexcept { return _symbols; }

    void push(Symbol s);
    void pop();
    void clear();

    /// Occurrences in discovery order: by end position, then root length.
    std::span<const PowerOccurrence> occurrences() const noexcept { return _occurrences; }
    std::size_t occurrence_count() const noexcept { return _occurrences.size(); }

    /// Number of occurrences starting at 1-based position i.
    std::size_t starts_at(Position i) const noexcept { return _start_count[i]; }
    std::size_t distinct_start_count() const noexcept { return _distinct_starts; }

    /// Largest start position of any occurrence, 0 when there is none.
    Position last_start() const noexcept;

    /// Whether the whole current word has strong period p (p >= 1).
    bool has_period(std::size_t p) const noexcept;

    /// Sorted profile of the current word.
    PowerProfile profile() const;

private:
    std::size_t index(std::size_t m, std::size_t p) const noexcept
    {
        return m * (_capacity + 1) + p;
    }
    void grow();

    unsigned _exponent;
    std::size_t _capacity;
    std::vector<Symbol> _symbols;
    // Tables indexed by (position m in 0..capacity, period p in 0..capacity).
    std::vector<std::uint32_t> _last_defined;
    std::vector<std::uint32_t> _conflict;
    std::vector<std::uint32_t> _reach;

    std::vector<PowerOccurrence> _occurrences;
    std::vector<std::uint32_t> _added_at; // occurrences found at each push
    std::vector<std::size_t> _start_count;
    std::size_t _distinct_starts = 0;
};

/// Occurrences computed by feeding w through a PowerScanner, sorted like
/// power_occurrences().
std::vector<PowerOccurrence> incremental_power_occurrences(const PartialWord &w,
                                                           unsigned r);

} // namespace pword
