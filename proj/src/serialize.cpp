#include "pword/serialize.hpp"

namespace pword {

namespace {

Json fields_to_json(const Fields &fields)
{
    Json out = Json::object();
    for (const auto &[key, value] : fields)
        std::visit([&out, &key](const auto &v) { out[key] = v; }, value);
    return out;
}

} // namespace

Json profile_to_json(const PartialWord &w, const PowerProfile &profile)
{
    Json occurrences = Json::array();
    for (const auto &o : profile.occurrences)
        occurrences.push_back(Json{{"start", o.start}, {"length", o.length}});
    Json doc;
    doc["word"] = format_word(w);
    doc["r"] = profile.exponent;
    doc["occurrences"] = std::move(occurrences);
    doc["startPositions"] = profile.start_positions;
    doc["uniqueStart"] = profile.unique_start ? Json(*profile.unique_start) : Json(nullptr);
    return doc;
}

Json report_to_json(const VerificationReport &report)
{
    Json doc;
    doc["claim"] = report.claim;
    doc["parameters"] = fields_to_json(report.parameters);
    doc["instancesChecked"] = report.instances_checked;
    doc["outcome"] = report.passed() ? "pass" : "fail";
    if (report.counterexample) {
        doc["counterexample"] = Json{{"word", format_word(report.counterexample->word)},
                                     {"context", fields_to_json(report.counterexample->context)}};
    } else {
        doc["counterexample"] = nullptr;
    }
    doc["observations"] = fields_to_json(report.observations);
    doc["elapsedMs"] =
        std::chrono::duration<double, std::milli>(report.elapsed).count();
    return doc;
}

Json search_result_to_json(const SearchResult &result)
{
    Json witnesses = Json::array();
    for (const auto &w : result.witnesses)
        witnesses.push_back(format_word(w));
    Json doc;
    doc["bestCount"] = result.best_count;
    doc["witnesses"] = std::move(witnesses);
    doc["nodesExplored"] = result.nodes_explored;
    doc["prunedBySymmetry"] = result.pruned_by_symmetry;
    doc["prunedByStartBound"] = result.pruned_by_start_bound;
    doc["exhaustive"] = result.exhaustive;
    return doc;
}

Json table_to_json(const std::vector<TableRow> &rows)
{
    Json out = Json::array();
    for (const auto &row : rows) {
        Json cell;
        cell["r"] = row.exponent;
        cell["k"] = row.alphabet_size;
        cell["maxLen"] = row.max_length;
        cell["t"] = row.max_start_positions;
        cell["result"] = search_result_to_json(row.result);
        if (row.known)
            cell["known"] = Json{{"value", row.known->value}, {"exact", row.known->exact}};
        else
            cell["known"] = nullptr;
        cell["status"] = bound_status_name(row.status);
        out.push_back(std::move(cell));
    }
    return out;
}

std::string render(const Json &doc)
{
    return doc.dump(2) + "\n";
}

} // namespace pword
