// properties.hpp -- exhaustive law checks shared by the unit and
// acceptance suites

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pword::props {

struct PropertyResult
{
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string &what)
    {
        ++checked;
        if (!ok && failures++ == 0)
            first_failure = what;
    }
    bool ok() const { return failures == 0 && checked > 0; }
};

/// Reflexive, antisymmetric and transitive on words of length <= 4, k <= 2.
PropertyResult containment_partial_order();

/// Symmetry, reflexivity, join exists iff compatible, join is the least
/// upper bound; length <= 3 for minimality, <= 4 otherwise, k <= 2.
PropertyResult compatibility_join_laws();

/// Full words are compatible exactly when equal (length <= 5, k = 2).
PropertyResult full_word_compatibility();

/// Strong period of a full word equals the classical period (|w| <= 10, k = 2).
PropertyResult strong_period_matches_sliding();

/// Periods of full words pass to every factor (|w| <= 8, k = 2).
PropertyResult full_factor_period_inheritance();

/// is_power agrees with trying every root; enumerate_roots counts k^h
/// (|w| <= 12, k <= 2, r in {2, 3}).
PropertyResult power_definition_equivalence();

/// Letter renaming leaves occurrences unchanged (|w| <= 7, k = 3, r in {2, 3}).
PropertyResult permutation_invariance();

/// Appending a symbol keeps every occurrence and start (|w| <= 8, k <= 2).
PropertyResult extension_monotonicity();

/// A hole at an interior position i gives squares at i - 1 and i
/// (random words).
PropertyResult hole_pairs_are_squares();

/// canonicalize is idempotent, renaming-invariant and profile-preserving
/// (|w| <= 6, k <= 3).
PropertyResult canonicalize_laws();

/// The canonical walk reaches exactly the canonical forms (n <= 6, k <= 2).
PropertyResult canonical_completeness();

/// Pruned and unpruned search agree (r = 2, k = 2, n <= 8).
PropertyResult pruning_soundness();

/// Everything above, in order.
std::vector<PropertyResult> all_properties();

} // namespace pword::props
