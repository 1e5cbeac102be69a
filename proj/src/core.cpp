#include "pword/core.hpp"

#include <algorithm>
#include <array>

namespace pword {

const char *error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::kInvalidCharacter: return "InvalidCharacter";
    case ErrorCode::kLetterOutsideAlphabet: return "LetterOutsideAlphabet";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kIncompatible: return "Incompatible";
    case ErrorCode::kNotAPower: return "NotAPower";
    case ErrorCode::kAlphabetTooSmall: return "AlphabetTooSmall";
    case ErrorCode::kBadExponent: return "BadExponent";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    }
    return "Unknown";
}

PartialWord::PartialWord(std::vector<Symbol> symbols, Alphabet alphabet)
  : _symbols(std::move(symbols)), _alphabet(alphabet)
{
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
        if (!_alphabet.contains(_symbols[i]))
            throw Error(ErrorCode::kLetterOutsideAlphabet,
                        std::string("letter '") + _symbols[i].to_char() +
                            "' at position " + std::to_string(i + 1) +
                            " is outside an alphabet of size " +
                            std::to_string(_alphabet.size()),
                        i + 1);
    }
}

Symbol PartialWord::at(Position i) const
{
    if (i < 1 || i > size())
        throw Error(ErrorCode::kOutOfRange,
                    "position " + std::to_string(i) + " outside 1.." +
                        std::to_string(size()));
    return _symbols[i - 1];
}

bool PartialWord::is_full() const noexcept
{
    return std::none_of(_symbols.begin(), _symbols.end(),
                        [](Symbol s) { return s.is_hole(); });
}

std::vector<Position> PartialWord::defined_positions() const
{
    std::vector<Position> out;
    for (std::size_t i = 0; i < _symbols.size(); ++i)
        if (_symbols[i].is_letter())
            out.push_back(i + 1);
    return out;
}

std::vector<Position> PartialWord::hole_positions() const
{
    std::vector<Position> out;
    for (std::size_t i = 0; i < _symbols.size(); ++i)
        if (_symbols[i].is_hole())
            out.push_back(i + 1);
    return out;
}

PartialWord PartialWord::with_alphabet(Alphabet alphabet) const
{
    return PartialWord(_symbols, alphabet);
}

bool shortlex_less(std::span<const Symbol> a, std::span<const Symbol> b) noexcept
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// U+25CA LOZENGE in UTF-8.
constexpr std::array<unsigned char, 3> kLozenge = {0xE2, 0x97, 0x8A};

/// Decodes text into symbols, leaving alphabet checks to the caller.
std::vector<Symbol> decode(std::string_view text)
{
    std::vector<Symbol> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto c = static_cast<unsigned char>(text[i]);
        const Position pos = out.size() + 1;
        if (c == '.') {
            out.push_back(Symbol::hole());
            ++i;
        } else if (c >= 'a' && c <= 'z') {
            out.push_back(Symbol::letter(c - 'a'));
            ++i;
        } else if (c == kLozenge[0] && i + 2 < text.size() &&
                   static_cast<unsigned char>(text[i + 1]) == kLozenge[1] &&
                   static_cast<unsigned char>(text[i + 2]) == kLozenge[2]) {
            out.push_back(Symbol::hole());
            i += 3;
        } else {
            constexpr const char *hex = "0123456789abcdef";
            std::string shown(1, static_cast<char>(c));
            if (c < 0x20 || c >= 0x7F)
                shown = std::string("\\x") + hex[c >> 4] + hex[c & 15];
            throw Error(ErrorCode::kInvalidCharacter,
                        "invalid character '" + shown + "' at position " +
                            std::to_string(pos),
                        pos);
        }
    }
    return out;
}

} // namespace

Alphabet infer_alphabet(std::string_view text)
{
    unsigned size = 1;
    for (Symbol s : decode(text))
        if (s.is_letter())
            size = std::max(size, s.letter_index() + 1);
    return Alphabet(size);
}

PartialWord parse_word(std::string_view text, Alphabet alphabet)
{
    return PartialWord(decode(text), alphabet);
}

PartialWord parse_word(std::string_view text)
{
    return PartialWord(decode(text), infer_alphabet(text));
}

std::string format_word(std::span<const Symbol> symbols)
{
    std::string out;
    out.reserve(symbols.size());
    for (Symbol s : symbols)
        out.push_back(s.to_char());
    return out;
}

std::string format_word(const PartialWord &w)
{
    return format_word(w.symbols());
}

PartialWord factor(const PartialWord &w, Position i, Position j)
{
    if (i < 1 || i > j || j > w.size())
        throw Error(ErrorCode::kOutOfRange,
                    "factor [" + std::to_string(i) + ".." + std::to_string(j) +
                        "] outside a word of length " + std::to_string(w.size()));
    auto s = w.symbols().subspan(i - 1, j - i + 1);
    return PartialWord(std::vector<Symbol>(s.begin(), s.end()), w.alphabet());
}

bool is_contained_in(const PartialWord &v, const PartialWord &w) noexcept
{
    if (v.size() != w.size())
        return false;
    for (Position i = 1; i <= v.size(); ++i)
        if (v[i].is_letter() && v[i] != w[i])
            return false;
    return true;
}

bool is_compatible(const PartialWord &u, const PartialWord &v) noexcept
{
    if (u.size() != v.size())
        return false;
    for (Position i = 1; i <= u.size(); ++i)
        if (u[i].is_letter() && v[i].is_letter() && u[i] != v[i])
            return false;
    return true;
}

PartialWord join(const PartialWord &u, const PartialWord &v)
{
    if (!is_compatible(u, v))
        throw Error(ErrorCode::kIncompatible,
                    "cannot join incompatible words '" + format_word(u) +
                        "' and '" + format_word(v) + "'");
    std::vector<Symbol> out(u.symbols().begin(), u.symbols().end());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].is_hole())
            out[i] = v.symbols()[i];
    return PartialWord(std::move(out), std::max(u.alphabet(), v.alphabet()));
}

bool is_strong_periodic(std::span<const Symbol> w, std::size_t p)
{
    if (p == 0)
        throw Error(ErrorCode::kInvalidArgument, "period must be positive");
    for (std::size_t residue = 0; residue < p && residue < w.size(); ++residue) {
        Symbol seen = Symbol::hole();
        for (std::size_t i = residue; i < w.size(); i += p) {
            if (w[i].is_hole())
                continue;
            if (seen.is_hole())
                seen = w[i];
            else if (seen != w[i])
                return false;
        }
    }
    return true;
}

bool is_strong_periodic(const PartialWord &w, std::size_t p)
{
    return is_strong_periodic(w.symbols(), p);
}

std::vector<std::size_t> strong_periods(const PartialWord &w)
{
    if (w.empty())
        throw Error(ErrorCode::kInvalidArgument,
                    "the empty word has no periods");
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p <= w.size(); ++p)
        if (is_strong_periodic(w, p))
            out.push_back(p);
    return out;
}

} // namespace pword
