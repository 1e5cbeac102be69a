// enumerate.hpp -- depth-first enumeration of words, optionally restricted
// to canonical representatives, with prefix partitioning for workers.
//
// Children of a node are tried in symbol order (hole, a, b, ...), so the
// walk visits words of each length in lexicographic order. A canonical walk
// only introduces letter c once letters a..c-1 have appeared, which yields
// exactly one word per orbit under letter renaming.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "pword/core.hpp"

namespace pword {

struct WalkSpec
{
    unsigned alphabet_size = 2;
    bool holes = true;
    std::size_t max_length = 0;
    bool canonical = true;
};

/// Answer of a visitor for the node it was handed.
enum class Step { kDescend, kPrune, kStop };

struct WalkCounters
{
    /// Letter children skipped because they would not be canonical.
    std::uint64_t skipped_by_symmetry = 0;
};

/// Number of distinct letters in a canonical word (its largest letter + 1).
inline unsigned letters_used(std::span<const Symbol> w) noexcept
{
    unsigned used = 0;
    for (Symbol s : w)
        if (s.is_letter())
            used = std::max(used, s.letter_index() + 1);
    return used;
}

/// Visits every child of the current state (and recursively their
/// subtrees) without visiting the state itself. `State` needs push(Symbol),
/// pop() and size(). Returns false once a visitor asked to stop.
template <class State, class Visit>
bool walk_children(const WalkSpec &spec, State &state, unsigned used,
                   Visit &visit, WalkCounters &counters)
{
    if (state.size() >= spec.max_length)
        return true;
    const unsigned limit = spec.canonical ? std::min(used + 1, spec.alphabet_size)
                                          : spec.alphabet_size;
    counters.skipped_by_symmetry += spec.alphabet_size - limit;

    auto child = [&](Symbol s, unsigned child_used) {
        state.push(s);
        const Step step = visit(static_cast<const State &>(state));
        bool keep_going = step != Step::kStop;
        if (step == Step::kDescend)
            keep_going = walk_children(spec, state, child_used, visit, counters);
        state.pop();
        return keep_going;
    };

    if (spec.holes && !child(Symbol::hole(), used))
        return false;
    for (unsigned c = 0; c < limit; ++c)
        if (!child(Symbol::letter(c), std::max(used, c + 1)))
            return false;
    return true;
}

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any call is rethrown after all threads finish.
inline void parallel_for(std::size_t count, unsigned jobs,
                         const std::function<void(std::size_t)> &fn)
{
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> threads;
    const auto n = std::min<std::size_t>(jobs, count);
    for (std::size_t t = 0; t < n; ++t)
        threads.emplace_back(worker);
    for (auto &t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

/// A subtree root handed to a worker.
struct Frontier
{
    std::vector<Symbol> prefix;
    unsigned used = 0;
};

/// Walks the nodes of depth <= `depth` with `visit` and returns the nodes
/// at exactly that depth whose subtrees still need exploring.
template <class State, class Visit>
std::vector<Frontier> collect_frontier(const WalkSpec &spec, State &state,
                                       std::size_t depth, Visit &visit,
                                       WalkCounters &counters, bool &stopped)
{
    std::vector<Frontier> out;
    WalkSpec shallow = spec;
    shallow.max_length = std::min(depth, spec.max_length);
    auto wrapped = [&](const State &st) {
        const Step step = visit(st);
        if (step == Step::kDescend && st.size() == shallow.max_length &&
            st.size() < spec.max_length) {
            Frontier f;
            f.prefix.assign(st.symbols().begin(), st.symbols().end());
            f.used = spec.canonical ? letters_used(st.symbols()) : 0;
            out.push_back(std::move(f));
        }
        return step;
    };
    stopped = !walk_children(shallow, state, 0, wrapped, counters);
    return out;
}

/// Calls fn for every word of length 1..max_length in walk order.
template <class Fn>
void for_each_word(const WalkSpec &spec, Fn &&fn)
{
    struct Buffer
    {
        std::vector<Symbol> w;
        void push(Symbol s) { w.push_back(s); }
        void pop() { w.pop_back(); }
        std::size_t size() const { return w.size(); }
        std::span<const Symbol> symbols() const { return w; }
    } buffer;
    WalkCounters counters;
    auto visit = [&](const Buffer &b) {
        fn(b.symbols());
        return Step::kDescend;
    };
    walk_children(spec, buffer, 0, visit, counters);
}

} // namespace pword
