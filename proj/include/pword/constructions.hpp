// constructions.hpp -- explicit words with one position starting powers

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pword/core.hpp"

namespace pword {

/// w_0 = hole, w_{i+1} = w_i a_{i+1} w_i[2..]. Returns w_k, of length 2^k,
/// whose squares are exactly the prefixes of length 2^j for 1 <= j <= k.
/// Uses an alphabet of size max(k, 1) unless one is given. Throws
/// AlphabetTooSmall when k exceeds the alphabet (or 26).
PartialWord square_chain(unsigned k, std::optional<Alphabet> alphabet = std::nullopt);

/// hole^(r-1) a b a hole^(r-2) over {a, b}; exactly two r-th powers, both
/// starting at position 1. Throws BadExponent for r < 2.
PartialWord prop2_word(unsigned r);

/// hole^(r-1) a b a hole^(r-2) b a a hole^(r-3) over {a, b}; exactly three
/// r-th powers at position 1 when r is an odd multiple of 3. Other r are
/// rejected with BadExponent.
PartialWord prop3_word(unsigned r);

/// Same formula for any r >= 3, with no claim about its powers.
PartialWord prop3_word_unchecked(unsigned r);

/// The two binary words with three cubes at position 1:
/// "..aba.baa" and "..aba.ba.".
std::vector<PartialWord> cube_examples();

/// Whether prop3_word accepts r.
constexpr bool prop3_accepts(unsigned r) noexcept
{
    return r >= 3 && r % 2 == 1 && r % 3 == 0;
}

} // namespace pword
