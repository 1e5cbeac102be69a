// serialize.hpp -- JSON documents emitted by the command-line tool
//
// Field order is fixed (ordered_json), so a parsed document re-renders
// byte for byte.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pword/core.hpp"
#include "pword/powers.hpp"
#include "pword/search.hpp"
#include "pword/verify.hpp"

namespace pword {

using Json = nlohmann::ordered_json;

/// {"word", "r", "occurrences": [{"start", "length"}], "startPositions",
///  "uniqueStart"}
Json profile_to_json(const PartialWord &w, const PowerProfile &profile);

Json report_to_json(const VerificationReport &report);

/// Field-for-field copy of SearchResult.
Json search_result_to_json(const SearchResult &result);

Json table_to_json(const std::vector<TableRow> &rows);

/// Canonical rendering: two-space indentation and a trailing newline.
std::string render(const Json &doc);

} // namespace pword
