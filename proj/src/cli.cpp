#include "pword/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pword/constructions.hpp"
#include "pword/powers.hpp"
#include "pword/search.hpp"
#include "pword/serialize.hpp"
#include "pword/verify.hpp"

namespace pword {

namespace {

struct GlobalFlags
{
    bool json = false;
    bool color = false;
    unsigned jobs = 1;
    std::optional<std::uint64_t> budget;
};

std::string paint(const GlobalFlags &g, const std::string &text, bool good)
{
    if (!g.color)
        return text;
    return (good ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
}

template <class T>
std::string set_text(const std::vector<T> &values)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << values[i];
    out << '}';
    return out.str();
}

std::string fields_text(const Fields &fields)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? ", " : "") << fields[i].first << '=';
        std::visit([&out](const auto &v) { out << v; }, fields[i].second);
    }
    return out.str();
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs
{
    std::vector<std::string> words;
    unsigned r = 2;
    std::optional<unsigned> alphabet;
    bool from_stdin = false;
};

void print_profile(std::ostream &out, const PartialWord &w, const PowerProfile &profile,
                   const GlobalFlags &g)
{
    out << "word: " << format_word(w) << '\n';
    out << "length: " << w.size() << " (alphabet size " << w.alphabet().size() << ")\n";
    out << "defined: " << set_text(w.defined_positions()) << '\n';
    out << "holes: " << set_text(w.hole_positions()) << '\n';
    out << "r = " << profile.exponent << ": " << profile.occurrences.size()
        << " occurrence" << (profile.occurrences.size() == 1 ? "" : "s") << '\n';
    for (const auto &o : profile.occurrences) {
        const auto roots =
            enumerate_roots(factor(w, o.start, o.end()), profile.exponent, 1);
        out << "  (" << o.start << ',' << o.length << ")  root length " << o.root_length()
            << "  root " << format_word(roots.roots.front());
        if (roots.total != 1)
            out << " (" << (roots.total_saturated ? "more than " : "")
                << roots.total << " roots)";
        out << '\n';
    }
    out << "start positions: " << set_text(profile.start_positions) << '\n';
    if (profile.unique_start)
        out << "unique start: " << paint(g, std::to_string(*profile.unique_start), true) << '\n';
    else
        out << "unique start: none\n";
    out << "distinct power factors: " << distinct_power_factors(w, profile.exponent) << '\n';
}

int run_analyze(const AnalyzeArgs &args, const GlobalFlags &g, std::istream &in,
                std::ostream &out)
{
    check_exponent(args.r);
    std::vector<std::string> texts = args.words;
    if (args.from_stdin) {
        std::string line;
        while (std::getline(in, line)) {
            line.erase(line.find_last_not_of(" \t\r") + 1);
            line.erase(0, line.find_first_not_of(" \t"));
            if (!line.empty())
                texts.push_back(line);
        }
    }
    if (texts.empty())
        throw Error(ErrorCode::kInvalidArgument, "no word given (pass WORD or --stdin)");

    Json docs = Json::array();
    for (std::size_t i = 0; i < texts.size(); ++i) {
        const Alphabet sigma = args.alphabet ? Alphabet(*args.alphabet) : infer_alphabet(texts[i]);
        const PartialWord w = parse_word(texts[i], sigma);
        const PowerProfile profile = power_profile(w, args.r);
        if (g.json) {
            docs.push_back(profile_to_json(w, profile));
        } else {
            if (i > 0)
                out << '\n';
            print_profile(out, w, profile, g);
        }
    }
    if (g.json)
        out << render(docs.size() == 1 && !args.from_stdin ? docs.front() : docs);
    return kExitOk;
}

// -------------------------------------------------------------- construct

struct ConstructArgs
{
    unsigned k = 0;
    unsigned r = 2;
    bool unchecked = false;
};

int emit_construction(const std::string &name, const Fields &params,
                      const std::vector<PartialWord> &words, bool checked,
                      const GlobalFlags &g, std::ostream &out, std::ostream &err)
{
    if (g.json) {
        Json doc;
        doc["construction"] = name;
        Json p = Json::object();
        for (const auto &[key, value] : params)
            p[key] = std::get<std::int64_t>(value);
        doc["parameters"] = std::move(p);
        doc["checked"] = checked;
        Json list = Json::array();
        for (const auto &w : words)
            list.push_back(format_word(w));
        doc["words"] = std::move(list);
        out << render(doc);
    } else {
        if (!checked)
            err << "note: unchecked formula; r is outside the proven family and no power "
                   "count is claimed\n";
        for (const auto &w : words)
            out << format_word(w) << '\n';
    }
    return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs
{
    unsigned k = 2;
    unsigned r = 2;
    std::size_t max_len = 1;
    std::string name;
    bool no_symmetry = false;
};

int emit_report(const VerificationReport &report, const GlobalFlags &g, std::ostream &out)
{
    if (g.json) {
        out << render(report_to_json(report));
    } else {
        out << "claim: " << report.claim << " (" << fields_text(report.parameters) << ")\n";
        out << "instances checked: " << report.instances_checked << '\n';
        if (!report.observations.empty())
            out << "observations: " << fields_text(report.observations) << '\n';
        if (report.counterexample)
            out << "counterexample: " << format_word(report.counterexample->word) << " ("
                << fields_text(report.counterexample->context) << ")\n";
        out << "outcome: " << paint(g, report.passed() ? "PASS" : "FAIL", report.passed())
            << '\n';
        out << "elapsed: " << std::fixed << std::setprecision(1)
            << std::chrono::duration<double, std::milli>(report.elapsed).count() << " ms\n";
    }
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

// ----------------------------------------------------------------- search

struct SearchArgs
{
    std::optional<unsigned> r;
    std::optional<unsigned> k;
    std::optional<std::size_t> max_len;
    std::size_t t = 1;
    std::size_t witness_cap = 10;
    bool progress = false;
    // table
    unsigned r_min = 2, r_max = 3, k_min = 1, k_max = 2;
    bool csv = false;
};

SearchOptions search_options(const GlobalFlags &g, bool progress, std::ostream &err)
{
    SearchOptions options;
    options.jobs = g.jobs;
    if (g.budget)
        options.budget = *g.budget;
    if (progress)
        options.progress = [&err](const SearchProgress &p) {
            err << "progress: " << p.nodes << " nodes, best so far " << p.best_count << '\n';
        };
    return options;
}

int run_search(const SearchArgs &args, const GlobalFlags &g, std::ostream &out,
               std::ostream &err)
{
    if (!args.r || !args.k || !args.max_len)
        throw Error(ErrorCode::kInvalidArgument, "search needs --r, --k and --max-len");
    const SearchQuery query{*args.r, *args.k, *args.max_len, args.t, args.witness_cap};
    const SearchResult result = search_max_powers(query, search_options(g, args.progress, err));
    if (g.json) {
        out << render(search_result_to_json(result));
    } else {
        out << "r=" << query.exponent << " k=" << query.alphabet_size
            << " max-len=" << query.max_length << " t=" << query.max_start_positions << '\n';
        out << "best count: " << result.best_count << '\n';
        out << "witnesses:";
        for (const auto &w : result.witnesses)
            out << ' ' << format_word(w);
        out << '\n';
        out << "nodes explored: " << result.nodes_explored
            << ", pruned by symmetry: " << result.pruned_by_symmetry
            << ", pruned by start bound: " << result.pruned_by_start_bound << '\n';
        out << "exhaustive: " << paint(g, result.exhaustive ? "yes" : "no", result.exhaustive)
            << '\n';
    }
    if (!result.exhaustive) {
        err << "error: node budget exhausted; best count is a lower bound only\n";
        return kExitUsage;
    }
    return kExitOk;
}

std::string known_text(const TableRow &row)
{
    if (!row.known)
        return "-";
    return (row.known->exact ? "=" : ">=") + std::to_string(row.known->value);
}

int run_table(const SearchArgs &args, const GlobalFlags &g, std::ostream &out,
              std::ostream &err)
{
    if (!args.max_len)
        throw Error(ErrorCode::kInvalidArgument, "search table needs --max-len");
    const auto rows = lower_bound_table(args.r_min, args.r_max, args.k_min, args.k_max,
                                        *args.max_len, args.t, 1,
                                        search_options(g, args.progress, err));
    if (g.json) {
        out << render(table_to_json(rows));
        return kExitOk;
    }
    const std::vector<std::string> header = {"r",    "k",          "max-len", "t",
                                             "best", "exhaustive", "known",   "status",
                                             "witness"};
    std::vector<std::vector<std::string>> cells;
    for (const auto &row : rows) {
        cells.push_back({std::to_string(row.exponent), std::to_string(row.alphabet_size),
                         std::to_string(row.max_length),
                         std::to_string(row.max_start_positions),
                         std::to_string(row.result.best_count),
                         row.result.exhaustive ? "yes" : "no", known_text(row),
                         bound_status_name(row.status),
                         row.result.witnesses.empty()
                             ? std::string("-")
                             : format_word(row.result.witnesses.front())});
    }
    if (args.csv) {
        auto line = [&out](const std::vector<std::string> &v) {
            for (std::size_t i = 0; i < v.size(); ++i)
                out << (i ? "," : "") << v[i];
            out << '\n';
        };
        line(header);
        for (const auto &c : cells)
            line(c);
        return kExitOk;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
        for (const auto &c : cells)
            width[i] = std::max(width[i], c[i].size());
    }
    auto line = [&](const std::vector<std::string> &v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            out << v[i];
            if (i + 1 < v.size())
                out << std::string(width[i] - v[i].size() + 2, ' ');
        }
        out << '\n';
    };
    line(header);
    for (const auto &c : cells)
        line(c);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err)
{
    CLI::App app{"Powers in partial words: analysis, constructions, exhaustive verification "
                 "and extremal search",
                 "pword"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_flag("--json", g.json, "Emit one JSON document instead of text");
    app.add_flag("--color", g.color, "Colorize text verdicts");
    app.add_option("--jobs", g.jobs, "Worker threads for verify and search")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", g.budget,
                   "Instance budget (verify, default 1e8) or node budget (search, default 1e9)");

    // analyze
    AnalyzeArgs analyze;
    auto *analyze_cmd = app.add_subcommand("analyze", "List the r-th powers of partial words");
    analyze_cmd->add_option("words", analyze.words, "Words over a-z with '.' for holes");
    analyze_cmd->add_option("--r", analyze.r, "Exponent r >= 2")->capture_default_str();
    analyze_cmd->add_option("--alphabet", analyze.alphabet,
                            "Alphabet size (default: 1 + largest letter)")
        ->check(CLI::Range(1, 26));
    analyze_cmd->add_flag("--stdin", analyze.from_stdin, "Read one word per line from stdin");

    // construct
    ConstructArgs construct;
    auto *construct_cmd = app.add_subcommand("construct", "Print an explicit extremal word");
    construct_cmd->require_subcommand(1);
    auto *chain_cmd = construct_cmd->add_subcommand("square-chain", "w_k with k squares");
    chain_cmd->add_option("--k", construct.k, "Order k (alphabet size)")->required();
    auto *prop2_cmd = construct_cmd->add_subcommand("prop2", "Two r-th powers at position 1");
    prop2_cmd->add_option("--r", construct.r, "Exponent r >= 2")->required();
    auto *prop3_cmd = construct_cmd->add_subcommand("prop3", "Three r-th powers at position 1");
    prop3_cmd->add_option("--r", construct.r, "Odd multiple of 3")->required();
    prop3_cmd->add_flag("--unchecked", construct.unchecked,
                        "Emit the formula for any r >= 3 without the hypothesis");
    auto *cubes_cmd =
        construct_cmd->add_subcommand("cube-examples", "The two binary words with three cubes");

    // verify
    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Exhaustively check a result on small words");
    verify_cmd->require_subcommand(1);
    verify_cmd->add_flag("--no-symmetry", verify.no_symmetry,
                         "Check every word, not one per letter renaming");
    auto add_k = [&verify](CLI::App *cmd) {
        cmd->add_option("--k", verify.k, "Alphabet size")->required();
    };
    auto add_len = [&verify](CLI::App *cmd, const char *flag) {
        cmd->add_option(flag, verify.max_len, "Largest length examined")->required();
    };
    auto *fw_cmd = verify_cmd->add_subcommand("fine-wilf", "Periods p, q imply gcd(p, q)");
    add_k(fw_cmd);
    add_len(fw_cmd, "--max-len");
    auto *cor_cmd = verify_cmd->add_subcommand(
        "corollary-full", "Full words: two powers at i imply a power at some j > i");
    cor_cmd->add_option("--r", verify.r, "Exponent")->required();
    add_k(cor_cmd);
    add_len(cor_cmd, "--max-len");
    auto *h1_cmd = verify_cmd->add_subcommand("lemma-h1", "Unique square start forces H = {1}");
    add_k(h1_cmd);
    add_len(h1_cmd, "--max-len");
    auto *l2k_cmd = verify_cmd->add_subcommand("lemma-2k", "Long square prefix of uv");
    add_k(l2k_cmd);
    add_len(l2k_cmd, "--max-u-len");
    auto *short_cmd = verify_cmd->add_subcommand("lemma-short", "Short square prefix of uv");
    add_k(short_cmd);
    add_len(short_cmd, "--max-u-len");
    auto *sq_cmd = verify_cmd->add_subcommand("theorem-sq", "At most k squares");
    add_k(sq_cmd);
    add_len(sq_cmd, "--max-len");
    auto *con_cmd = verify_cmd->add_subcommand("construction", "Check a construction's powers");
    con_cmd->add_option("--name", verify.name, "square-chain | prop2 | prop3 | cube-examples")
        ->required();
    auto *con_k = con_cmd->add_option("--k", verify.k, "Order for square-chain");
    auto *con_r = con_cmd->add_option("--r", verify.r, "Exponent for prop2 / prop3");

    // search
    SearchArgs search;
    auto *search_cmd =
        app.add_subcommand("search", "Most r-th powers with at most t start positions");
    search_cmd->require_subcommand(0, 1);
    search_cmd->add_option("--r", search.r, "Exponent r >= 2");
    search_cmd->add_option("--k", search.k, "Alphabet size");
    search_cmd->add_option("--max-len", search.max_len, "Largest word length");
    search_cmd->add_option("--t", search.t, "Allowed start positions")->capture_default_str();
    search_cmd->add_option("--witness-cap", search.witness_cap, "Witnesses reported")
        ->capture_default_str();
    search_cmd->add_flag("--progress", search.progress, "Report progress on stderr");
    auto *table_cmd = search_cmd->add_subcommand("table", "Search a grid of (r, k) cells");
    table_cmd->add_option("--r-min", search.r_min)->required();
    table_cmd->add_option("--r-max", search.r_max)->required();
    table_cmd->add_option("--k-min", search.k_min)->required();
    table_cmd->add_option("--k-max", search.k_max)->required();
    table_cmd->add_flag("--csv", search.csv, "Comma-separated output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze_cmd)
            return run_analyze(analyze, g, in, out);

        if (*construct_cmd) {
            if (*chain_cmd)
                return emit_construction("square-chain", {{"k", construct.k}},
                                         {square_chain(construct.k)}, true, g, out, err);
            if (*prop2_cmd)
                return emit_construction("prop2", {{"r", construct.r}},
                                         {prop2_word(construct.r)}, true, g, out, err);
            if (*prop3_cmd) {
                const bool checked = !construct.unchecked || prop3_accepts(construct.r);
                const PartialWord w = construct.unchecked
                                          ? prop3_word_unchecked(construct.r)
                                          : prop3_word(construct.r);
                return emit_construction("prop3", {{"r", construct.r}}, {w}, checked, g, out,
                                         err);
            }
            if (*cubes_cmd)
                return emit_construction("cube-examples", {}, cube_examples(), true, g,
                                         out, err);
        }

        if (*verify_cmd) {
            VerifyOptions options;
            options.jobs = g.jobs;
            options.symmetry_reduction = !verify.no_symmetry;
            if (g.budget)
                options.budget = *g.budget;
            if (*fw_cmd)
                return emit_report(verify_fine_wilf(verify.k, verify.max_len, options), g, out);
            if (*cor_cmd)
                return emit_report(
                    verify_corollary_full(verify.r, verify.k, verify.max_len, options), g, out);
            if (*h1_cmd)
                return emit_report(verify_lemma_h1(verify.k, verify.max_len, options), g, out);
            if (*l2k_cmd)
                return emit_report(verify_lemma_2k(verify.k, verify.max_len, options), g, out);
            if (*short_cmd)
                return emit_report(verify_lemma_short(verify.k, verify.max_len, options), g,
                                   out);
            if (*sq_cmd)
                return emit_report(verify_theorem_sq_bound(verify.k, verify.max_len, options),
                                   g, out);
            if (*con_cmd) {
                const auto name = parse_construction_name(verify.name);
                unsigned param = 0;
                if (name == ConstructionName::kSquareChain) {
                    if (con_k->count() == 0)
                        throw Error(ErrorCode::kInvalidArgument, "square-chain needs --k");
                    param = verify.k;
                } else if (name != ConstructionName::kCubeExamples) {
                    if (con_r->count() == 0)
                        throw Error(ErrorCode::kInvalidArgument,
                                    std::string(construction_name(name)) + " needs --r");
                    param = verify.r;
                }
                return emit_report(verify_construction(name, param), g, out);
            }
        }

        if (*search_cmd) {
            if (*table_cmd)
                return run_table(search, g, out, err);
            return run_search(search, g, out, err);
        }
    } catch (const Error &e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace pword
