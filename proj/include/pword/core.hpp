// core.hpp -- partial words and the basic relations between them

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pword/error.hpp"

namespace pword {

/// 1-based index into a word. Every public interface uses 1-based positions.
using Position = std::size_t;

/// Largest alphabet with canonical single-letter names a..z.
inline constexpr unsigned kMaxAlphabetSize = 26;

/// A letter of the alphabet or the hole. Holes order before every letter,
/// and letters order by index, so the defaulted comparison gives
/// hole < a < b < ...
struct Symbol
{
    std::uint8_t code = 0; // 0 is the hole, otherwise 1 + letter index

    static constexpr Symbol hole() noexcept { return Symbol{0}; }
    static constexpr Symbol letter(unsigned index) noexcept
    {
        return Symbol{static_cast<std::uint8_t>(index + 1)};
    }

    constexpr bool is_hole() const noexcept { return code == 0; }
    constexpr bool is_letter() const noexcept { return code != 0; }

    /// Only meaningful for letters.
    constexpr unsigned letter_index() const noexcept { return code - 1u; }

    /// Returns '.' for the hole and 'a' + index for letters.
    constexpr char to_char() const noexcept
    {
        return is_hole() ? '.' : static_cast<char>('a' + letter_index());
    }

    constexpr auto operator<=>(const Symbol &) const noexcept = default;
};

/// Alphabet {a, b, ...} of the given size, 1 <= size <= 26.
class Alphabet
{
public:
    constexpr explicit Alphabet(unsigned size = 1) : _size(size)
    {
        if (size < 1 || size > kMaxAlphabetSize)
            throw Error(ErrorCode::kInvalidArgument,
                        "alphabet size must be between 1 and 26");
    }

    constexpr unsigned size() const noexcept { return _size; }
    constexpr bool contains(Symbol s) const noexcept
    {
        return s.is_hole() || s.letter_index() < _size;
    }

    constexpr auto operator<=>(const Alphabet &) const noexcept = default;

private:
    unsigned _size;
};

/// Finite sequence of symbols over an alphabet. Immutable after
/// construction; full words are partial words without holes.
class PartialWord
{
public:
    PartialWord() = default;

    /// Throws LetterOutsideAlphabet if a letter index is >= alphabet.size().
    PartialWord(std::vector<Symbol> symbols, Alphabet alphabet);

    std::size_t size() const noexcept { return _symbols.size(); }
    bool empty() const noexcept { return _symbols.empty(); }
    const Alphabet &alphabet() const noexcept { return _alphabet; }
    std::span<const Symbol> symbols() const noexcept { return _symbols; }

    /// Symbol at 1-based position i; no bounds check.
    Symbol operator[](Position i) const noexcept { return _symbols[i - 1]; }

    /// Symbol at 1-based position i; throws OutOfRange.
    Symbol at(Position i) const;

    bool is_full() const noexcept;

    /// D(w): positions holding a letter, ascending.
    std::vector<Position> defined_positions() const;

    /// H(w): positions holding a hole, ascending.
    std::vector<Position> hole_positions() const;

    /// Same symbols over another alphabet; throws if a letter no longer fits.
    PartialWord with_alphabet(Alphabet alphabet) const;

    bool operator==(const PartialWord &) const = default;

private:
    std::vector<Symbol> _symbols;
    Alphabet _alphabet{1};
};

/// Length-then-lexicographic order (holes minimal). Alphabets are ignored.
bool shortlex_less(std::span<const Symbol> a, std::span<const Symbol> b) noexcept;
inline bool shortlex_less(const PartialWord &a, const PartialWord &b) noexcept
{
    return shortlex_less(a.symbols(), b.symbols());
}

/// Smallest alphabet covering every letter of `text` (at least size 1).
/// Accepts the same characters as parse_word.
Alphabet infer_alphabet(std::string_view text);

/// Parses lowercase letters and holes ('.' or U+25CA). Errors carry the
/// 1-based symbol position: InvalidCharacter, LetterOutsideAlphabet.
PartialWord parse_word(std::string_view text, Alphabet alphabet);

/// Parses with the alphabet inferred from the text.
PartialWord parse_word(std::string_view text);

/// Canonical ASCII rendering with '.' for holes.
std::string format_word(const PartialWord &w);
std::string format_word(std::span<const Symbol> symbols);

/// w[i..j], inclusive, 1-based. Requires 1 <= i <= j <= |w|.
PartialWord factor(const PartialWord &w, Position i, Position j);

/// v is contained in w: equal length, and w carries v's letter at every
/// defined position of v.
bool is_contained_in(const PartialWord &v, const PartialWord &w) noexcept;

/// Equal length and agreement on every position defined in both.
bool is_compatible(const PartialWord &u, const PartialWord &v) noexcept;

/// Least word containing both u and v. Throws Incompatible. The result
/// uses the larger of the two alphabets.
PartialWord join(const PartialWord &u, const PartialWord &v);

/// Strong period: defined positions congruent mod p carry equal letters.
/// Throws InvalidArgument for p == 0.
bool is_strong_periodic(const PartialWord &w, std::size_t p);
bool is_strong_periodic(std::span<const Symbol> w, std::size_t p);

/// Every p in 1..|w| that is a strong period. Requires |w| >= 1.
std::vector<std::size_t> strong_periods(const PartialWord &w);

} // namespace pword
