#include "pword/constructions.hpp"

#include <algorithm>
#include <string>

#include "pword/powers.hpp"

namespace pword {

namespace {

constexpr Symbol kA = Symbol::letter(0);
constexpr Symbol kB = Symbol::letter(1);
constexpr Symbol kHole = Symbol::hole();

void append(std::vector<Symbol> &out, Symbol s, std::size_t count = 1)
{
    out.insert(out.end(), count, s);
}

std::vector<Symbol> prop3_symbols(unsigned r)
{
    std::vector<Symbol> out;
    append(out, kHole, r - 1);
    out.insert(out.end(), {kA, kB, kA});
    append(out, kHole, r - 2);
    out.insert(out.end(), {kB, kA, kA});
    append(out, kHole, r - 3);
    return out;
}

} // namespace

PartialWord square_chain(unsigned k, std::optional<Alphabet> alphabet)
{
    if (k > kMaxAlphabetSize)
        throw Error(ErrorCode::kAlphabetTooSmall,
                    "square chain of order " + std::to_string(k) +
                        " needs more than 26 letters");
    const Alphabet sigma = alphabet.value_or(Alphabet(std::max(k, 1u)));
    if (k > sigma.size())
        throw Error(ErrorCode::kAlphabetTooSmall,
                    "square chain of order " + std::to_string(k) +
                        " needs " + std::to_string(k) + " letters, alphabet has " +
                        std::to_string(sigma.size()));

    std::vector<Symbol> w{kHole};
    for (unsigned i = 0; i < k; ++i) {
        std::vector<Symbol> next = w;
        next.push_back(Symbol::letter(i));
        next.insert(next.end(), w.begin() + 1, w.end());
        w = std::move(next);
    }
    return PartialWord(std::move(w), sigma);
}

PartialWord prop2_word(unsigned r)
{
    check_exponent(r);
    std::vector<Symbol> out;
    append(out, kHole, r - 1);
    out.insert(out.end(), {kA, kB, kA});
    append(out, kHole, r - 2);
    return PartialWord(std::move(out), Alphabet(2));
}

PartialWord prop3_word(unsigned r)
{
    if (!prop3_accepts(r))
        throw Error(ErrorCode::kBadExponent,
                    "three-power construction requires an odd multiple of 3, got " +
                        std::to_string(r));
    return PartialWord(prop3_symbols(r), Alphabet(2));
}

PartialWord prop3_word_unchecked(unsigned r)
{
    if (r < 3)
        throw Error(ErrorCode::kBadExponent,
                    "three-power formula needs r >= 3, got " + std::to_string(r));
    return PartialWord(prop3_symbols(r), Alphabet(2));
}

std::vector<PartialWord> cube_examples()
{
    return {parse_word("..aba.baa", Alphabet(2)), parse_word("..aba.ba.", Alphabet(2))};
}

} // namespace pword
