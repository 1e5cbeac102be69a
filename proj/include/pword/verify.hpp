// verify.hpp -- exhaustive checkers for the periodicity and power results
//
// Each verifier enumerates a bounded instance space in length-then-
// lexicographic order, counts the instances it examined, and reports the
// least counterexample it met (if any). Reports are deterministic for a
// given parameter set, apart from `elapsed`, regardless of the number of
// worker threads.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pword/core.hpp"

namespace pword {

using FieldValue = std::variant<std::int64_t, std::string>;
using Fields = std::vector<std::pair<std::string, FieldValue>>;

enum class Outcome { kPass, kFail };

struct Counterexample
{
    PartialWord word;
    Fields context;
};

struct VerificationReport
{
    std::string claim;
    Fields parameters;
    std::uint64_t instances_checked = 0;
    Outcome outcome = Outcome::kPass;
    std::optional<Counterexample> counterexample;
    /// Claim-specific statistics, e.g. how many instances met the hypothesis.
    Fields observations;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const noexcept { return outcome == Outcome::kPass; }
};

struct VerifyOptions
{
    /// Maximum number of instances (word checks) per invocation.
    std::uint64_t budget = 100'000'000;
    unsigned jobs = 1;
    /// Only check one word per letter-renaming orbit.
    bool symmetry_reduction = true;
};

/// Looks up a named field; throws InvalidArgument when absent.
const FieldValue &field(const Fields &fields, const std::string &name);
std::int64_t int_field(const Fields &fields, const std::string &name);

/// Full words w, 1 <= |w| <= max_len: for periods p, q of w with
/// |w| >= p + q - gcd(p, q), gcd(p, q) is a period too.
VerificationReport verify_fine_wilf(unsigned k, std::size_t max_len,
                                    const VerifyOptions &options = {});

/// Full words: if a position i starts two or more r-th powers, some j > i
/// starts an r-th power.
VerificationReport verify_corollary_full(unsigned r, unsigned k, std::size_t max_len,
                                         const VerifyOptions &options = {});

/// Partial words with more than one square and a single square start
/// position have holes exactly at {1}.
VerificationReport verify_lemma_h1(unsigned k, std::size_t max_len,
                                   const VerifyOptions &options = {});

/// w = u v with u = hole u', v full and compatible with u: a square prefix
/// of length 2m with |u| < 2m < |w| forces a square start 1 < i < |w|.
VerificationReport verify_lemma_2k(unsigned k, std::size_t max_u_len,
                                   const VerifyOptions &options = {});

/// Same instance shape: a square prefix of length 2m <= |u| with
/// w[m + 1] = v[1] forces a square inside v.
VerificationReport verify_lemma_short(unsigned k, std::size_t max_u_len,
                                      const VerifyOptions &options = {});

/// Partial words over k letters with one square start position contain at
/// most k square occurrences.
VerificationReport verify_theorem_sq_bound(unsigned k, std::size_t max_len,
                                           const VerifyOptions &options = {});

/// Generalization used by verify_theorem_sq_bound: at most `bound` squares
/// under a single start position. Smaller bounds produce counterexamples.
VerificationReport verify_square_count_bound(unsigned k, std::size_t max_len,
                                             std::size_t bound,
                                             const VerifyOptions &options = {});

enum class ConstructionName { kSquareChain, kProp2, kProp3, kCubeExamples };

/// Accepts "square-chain", "prop2", "prop3", "cube-examples".
ConstructionName parse_construction_name(const std::string &name);
const char *construction_name(ConstructionName name) noexcept;

/// Builds the named word and compares its power profile with the claimed
/// one. `param` is k for square-chain and r for prop2/prop3 (ignored for
/// cube-examples).
VerificationReport verify_construction(ConstructionName name, unsigned param);

/// Re-checks a failing report through the reference functions in core and
/// powers (not the incremental scanner the verifiers use). Returns true
/// when the recorded counterexample violates the claim.
bool replay_counterexample(const VerificationReport &report);

} // namespace pword
