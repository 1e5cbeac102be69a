#include "pword/scanner.hpp"

#include <algorithm>

namespace pword {

PowerScanner::PowerScanner(unsigned exponent, std::size_t capacity)
  : _exponent(exponent), _capacity(std::max<std::size_t>(capacity, 1))
{
    check_exponent(exponent);
    clear();
}

void PowerScanner::clear()
{
    const std::size_t cells = (_capacity + 1) * (_capacity + 1);
    _symbols.clear();
    _symbols.reserve(_capacity);
    _last_defined.assign(cells, 0);
    _conflict.assign(cells, 0);
    _reach.assign(cells, 1);
    _occurrences.clear();
    _added_at.assign(_capacity + 1, 0);
    _start_count.assign(_capacity + 2, 0);
    _distinct_starts = 0;
}

void PowerScanner::grow()
{
    const std::vector<Symbol> saved = _symbols;
    _capacity *= 2;
    clear();
    for (Symbol s : saved)
        push(s);
}

void PowerScanner::push(Symbol s)
{
    if (_symbols.size() == _capacity)
        grow();
    _symbols.push_back(s);
    const std::size_t m = _symbols.size();

    for (std::size_t p = 1; p <= _capacity; ++p) {
        const std::size_t at = index(m, p);
        const std::uint32_t reach_before = _reach[index(m - 1, p)];
        if (s.is_hole()) {
            _last_defined[at] = m > p ? _last_defined[index(m - p, p)] : 0;
            _reach[at] = reach_before;
            continue;
        }
        const std::uint32_t d = m > p ? _last_defined[index(m - p, p)] : 0;
        std::uint32_t conflict = 0;
        if (d != 0)
            conflict = _symbols[d - 1] != s ? d : _conflict[index(d, p)];
        _last_defined[at] = static_cast<std::uint32_t>(m);
        _conflict[at] = conflict;
        _reach[at] = std::max(reach_before, conflict + 1);
    }

    std::uint32_t added = 0;
    for (std::size_t p = 1; p * _exponent <= m; ++p) {
        const std::size_t start = m - p * _exponent + 1;
        if (_reach[index(m, p)] <= start) {
            _occurrences.push_back(PowerOccurrence{start, p * _exponent, _exponent});
            if (_start_count[start]++ == 0)
                ++_distinct_starts;
            ++added;
        }
    }
    _added_at[m] = added;
}

void PowerScanner::pop()
{
    const std::size_t m = _symbols.size();
    for (std::uint32_t n = 0; n < _added_at[m]; ++n) {
        const Position start = _occurrences.back().start;
        if (--_start_count[start] == 0)
            --_distinct_starts;
        _occurrences.pop_back();
    }
    _added_at[m] = 0;
    _symbols.pop_back();
}

Position PowerScanner::last_start() const noexcept
{
    for (Position i = _symbols.size(); i >= 1; --i)
        if (_start_count[i] != 0)
            return i;
    return 0;
}

bool PowerScanner::has_period(std::size_t p) const noexcept
{
    const std::size_t m = _symbols.size();
    if (p >= m)
        return true;
    return _reach[index(m, p)] == 1;
}

PowerProfile PowerScanner::profile() const
{
    return make_profile(_exponent, {_occurrences.begin(), _occurrences.end()});
}

std::vector<PowerOccurrence> incremental_power_occurrences(const PartialWord &w,
                                                           unsigned r)
{
    PowerScanner scanner(r, std::max<std::size_t>(w.size(), 1));
    for (Symbol s : w.symbols())
        scanner.push(s);
    return scanner.profile().occurrences;
}

} // namespace pword
