#include "pword/powers.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace pword {

void check_exponent(unsigned r)
{
    if (r < 2)
        throw Error(ErrorCode::kBadExponent,
                    "exponent must be at least 2, got " + std::to_string(r));
}

namespace {

bool span_is_power(std::span<const Symbol> w, unsigned r)
{
    return !w.empty() && w.size() % r == 0 && is_strong_periodic(w, w.size() / r);
}

} // namespace

bool is_power(const PartialWord &w, unsigned r)
{
    check_exponent(r);
    return span_is_power(w.symbols(), r);
}

RootEnumeration enumerate_roots(const PartialWord &w, unsigned r,
                                std::size_t cap)
{
    if (!is_power(w, r))
        throw Error(ErrorCode::kNotAPower,
                    "'" + format_word(w) + "' is not a power of exponent " +
                        std::to_string(r));

    const std::size_t p = w.size() / r;
    const unsigned k = w.alphabet().size();

    // Letters forced by each residue class; free classes stay holes.
    std::vector<Symbol> forced(p, Symbol::hole());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.symbols()[i].is_letter())
            forced[i % p] = w.symbols()[i];

    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < p; ++c)
        if (forced[c].is_hole())
            free.push_back(c);

    RootEnumeration out;
    out.total = 1;
    for (std::size_t n = 0; n < free.size(); ++n) {
        if (out.total > std::numeric_limits<std::uint64_t>::max() / k) {
            out.total = std::numeric_limits<std::uint64_t>::max();
            out.total_saturated = true;
            break;
        }
        out.total *= k;
    }

    // Odometer over the free classes; the last class turns fastest, which
    // yields lexicographic order.
    std::vector<unsigned> digits(free.size(), 0);
    while (out.roots.size() < cap) {
        std::vector<Symbol> root = forced;
        for (std::size_t n = 0; n < free.size(); ++n)
            root[free[n]] = Symbol::letter(digits[n]);
        out.roots.emplace_back(std::move(root), w.alphabet());

        std::size_t n = free.size();
        while (n > 0 && ++digits[n - 1] == k)
            digits[--n] = 0;
        if (n == 0)
            break;
    }
    return out;
}

std::vector<PowerOccurrence> power_occurrences(const PartialWord &w, unsigned r)
{
    check_exponent(r);
    std::vector<PowerOccurrence> out;
    const auto symbols = w.symbols();
    for (Position start = 1; start <= w.size(); ++start) {
        for (std::size_t length = r; start + length - 1 <= w.size(); length += r) {
            if (span_is_power(symbols.subspan(start - 1, length), r))
                out.push_back(PowerOccurrence{start, length, r});
        }
    }
    return out;
}

PowerProfile make_profile(unsigned r, std::vector<PowerOccurrence> occurrences)
{
    PowerProfile profile;
    profile.exponent = r;
    std::sort(occurrences.begin(), occurrences.end());
    profile.occurrences = std::move(occurrences);
    for (const auto &o : profile.occurrences)
        if (profile.start_positions.empty() || profile.start_positions.back() != o.start)
            profile.start_positions.push_back(o.start);
    if (profile.start_positions.size() == 1)
        profile.unique_start = profile.start_positions.front();
    return profile;
}

PowerProfile power_profile(const PartialWord &w, unsigned r)
{
    return make_profile(r, power_occurrences(w, r));
}

std::vector<Position> start_positions(const PartialWord &w, unsigned r)
{
    return power_profile(w, r).start_positions;
}

std::optional<Position> unique_start_position(const PartialWord &w, unsigned r)
{
    return power_profile(w, r).unique_start;
}

std::size_t distinct_power_factors(const PartialWord &w, unsigned r)
{
    std::set<std::vector<Symbol>> seen;
    for (const auto &o : power_occurrences(w, r)) {
        auto s = w.symbols().subspan(o.start - 1, o.length);
        seen.emplace(s.begin(), s.end());
    }
    return seen.size();
}

} // namespace pword
