// degdiam: record verification, ad-hoc BFS, random generator search, Moore
// bounds, and graph export over the three group families in the library.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 infeasible/overflow.

#include <degdiam/degdiam.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

namespace {

using nlohmann::json;

bool use_color() {
    static const bool enabled = [] {
        // NO_COLOR disables color when present and non-empty.
        if (const char* nc = std::getenv("NO_COLOR"); nc != nullptr && *nc != '\0') return false;
        return ::isatty(STDOUT_FILENO) == 1;
    }();
    return enabled;
}

const char* paint(const char* code) { return use_color() ? code : ""; }
constexpr const char* kGreen = "\033[32m";
constexpr const char* kRed = "\033[31m";
constexpr const char* kYellow = "\033[33m";
constexpr const char* kReset = "\033[0m";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw degdiam::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --group/--gens values are inline JSON or @file references.
std::string resolve_text(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') return read_file(arg.substr(1));
    return arg;
}

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw degdiam::ParseError(std::string(what) + ": " + e.what());
    }
}

degdiam::Group group_from_arg(const std::string& arg) {
    return degdiam::Group::validate(
        degdiam::group_spec_from_json(parse_json(resolve_text(arg), "--group")));
}

std::vector<degdiam::Element> gens_from_arg(const std::string& arg) {
    const json j = parse_json(resolve_text(arg), "--gens");
    if (!j.is_array() || j.empty())
        throw degdiam::ParseError("--gens: expected a non-empty JSON array of elements");
    std::vector<degdiam::Element> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(degdiam::element_from_json(item));
    return out;
}

void emit_json(const json& j) { std::cout << j.dump() << '\n'; }

// ---------------------------------------------------------------- verify --

struct VerifyOptions {
    bool all = false;
    std::string record;        // "DELTA,DIAMETER"
    std::int64_t max_order = 2'500'000;
    bool json_out = false;
    int threads = 1;
    std::string records_path;  // external dataset instead of the embedded one
};

std::pair<int, int> parse_record_selector(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw degdiam::ParseError("--record: expected DELTA,DIAMETER (e.g. 7,3)");
    int delta = 0;
    int diameter = 0;
    const char* e1 = text.data() + comma;
    const char* e2 = text.data() + text.size();
    const auto r1 = std::from_chars(text.data(), e1, delta);
    const auto r2 = std::from_chars(text.data() + comma + 1, e2, diameter);
    if (r1.ec != std::errc() || r1.ptr != e1 || r2.ec != std::errc() || r2.ptr != e2)
        throw degdiam::ParseError("--record: expected DELTA,DIAMETER (e.g. 7,3)");
    return {delta, diameter};
}

void print_verify_table(const std::vector<degdiam::RecordEntry>& records,
                        const degdiam::VerifySummary& summary) {
    std::cout << std::setw(6) << "delta" << std::setw(6) << "diam" << "  " << std::left
              << std::setw(22) << "group" << std::right << std::setw(10) << "order" << "  "
              << std::left << std::setw(8) << "status" << std::right << std::setw(9) << "time(s)"
              << '\n';
    for (std::size_t i = 0; i < summary.reports.size(); ++i) {
        const auto& rep = summary.reports[i];
        const char* color = kGreen;
        const char* label = "pass";
        if (rep.status == degdiam::VerifyStatus::mismatch) {
            color = kRed;
            label = "MISMATCH";
        } else if (rep.status == degdiam::VerifyStatus::skipped) {
            color = kYellow;
            label = "skipped";
        }
        std::cout << std::setw(6) << rep.delta << std::setw(6) << rep.diameter << "  " << std::left
                  << std::setw(22) << rep.group_name << std::right << std::setw(10)
                  << records[i].order << "  " << paint(color) << std::left << std::setw(8) << label
                  << paint(kReset) << std::right << std::setw(9) << std::fixed
                  << std::setprecision(2) << rep.elapsed_seconds << '\n';
        for (const auto& check : rep.checks) {
            if (check.passed) continue;
            std::cout << "              " << check.name << ": " << check.detail
                      << (check.known_erratum ? " (documented erratum)" : "") << '\n';
        }
        if (rep.status == degdiam::VerifyStatus::skipped && !rep.skip_reason.empty())
            std::cout << "              " << rep.skip_reason << '\n';
    }
    std::cout << "passed " << summary.passed << "  mismatched " << summary.mismatched
              << "  skipped " << summary.skipped << '\n';
}

int run_verify(const VerifyOptions& opt) {
    const std::string text =
        opt.records_path.empty() ? degdiam::embedded_records_json() : read_file(opt.records_path);
    const degdiam::RecordFile file = degdiam::load_record_file(text);

    std::vector<degdiam::RecordEntry> selected;
    if (!opt.record.empty()) {
        const auto [delta, diameter] = parse_record_selector(opt.record);
        for (const auto& rec : file.records)
            if (rec.delta == delta && rec.diameter == diameter) selected.push_back(rec);
        if (selected.empty())
            throw degdiam::ParseError("--record: no entry (" + std::to_string(delta) + "," +
                                      std::to_string(diameter) + ") in the dataset");
    } else {
        selected = file.records;  // --all is the default
    }

    const degdiam::VerifySummary summary =
        degdiam::verify_all(selected, opt.max_order, opt.threads, file.errata);
    if (opt.json_out)
        emit_json(degdiam::summary_to_json(summary));
    else
        print_verify_table(selected, summary);
    return summary.mismatched > 0 ? 1 : 0;
}

// ------------------------------------------------------------------- bfs --

int run_bfs(const std::string& group_arg, const std::string& gens_arg, bool json_out) {
    const degdiam::Group group = group_from_arg(group_arg);
    const degdiam::GeneratorSet set =
        degdiam::GeneratorSet::close_under_inverses(group, gens_from_arg(gens_arg));
    const degdiam::CayleyStats stats = degdiam::bfs_stats(set);
    if (json_out) {
        emit_json(degdiam::stats_to_json(stats));
        return 0;
    }
    std::cout << "group      " << degdiam::describe(group.spec()) << '\n'
              << "order      " << stats.order << '\n'
              << "degree     " << stats.degree << '\n';
    if (stats.connected)
        std::cout << "diameter   " << *stats.diameter << '\n';
    else
        std::cout << "diameter   - (disconnected: reached " << stats.reached << " of "
                  << stats.order << ")\n";
    std::cout << "histogram ";
    for (const auto count : stats.distance_histogram) std::cout << ' ' << count;
    std::cout << '\n';
    return 0;
}

// ----------------------------------------------------------------- search --

struct SearchOptions {
    std::string group;
    int delta = 2;
    int target_diameter = 1;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t max_hits = 16;
    bool json_out = false;
    int threads = 1;
};

int run_search(const SearchOptions& opt) {
    degdiam::Group group = group_from_arg(opt.group);
    if (group.abelian())
        std::cerr << "warning: " << degdiam::describe(group.spec())
                  << " is abelian; poor territory for low-diameter sets\n";
    const degdiam::SearchConfig config{std::move(group), opt.delta, opt.target_diameter,
                                       opt.trials,        opt.seed,  opt.max_hits};
    const degdiam::SearchResult result = degdiam::random_search(config, opt.threads);
    if (opt.json_out) {
        emit_json(degdiam::search_result_to_json(config, result));
        return 0;
    }
    std::cout << "group      " << degdiam::describe(config.group.spec()) << '\n'
              << "delta      " << config.delta << '\n'
              << "target     " << config.target_diameter << '\n'
              << "trials     " << result.summary.trials << '\n'
              << "connected  " << result.summary.connected << '\n';
    if (result.summary.best_diameter)
        std::cout << "best       " << *result.summary.best_diameter << '\n';
    else
        std::cout << "best       -\n";
    std::cout << "hits       " << result.hits.size() << '\n';
    for (const auto& hit : result.hits) {
        std::cout << "  trial " << hit.trial_index << ": diameter " << *hit.stats.diameter
                  << ", generators";
        for (const auto& g : hit.generators.elements()) std::cout << ' ' << degdiam::to_string(g);
        std::cout << '\n';
    }
    return 0;
}

// ----------------------------------------------------------------- moore --

int run_moore(int delta, int diameter, bool json_out) {
    const degdiam::MooreBound bound = degdiam::moore_bound(delta, diameter);
    if (json_out) {
        emit_json(json{{"delta", delta},
                       {"diameter", diameter},
                       {"value", bound.value},
                       {"saturated", bound.saturated}});
        return 0;
    }
    std::cout << bound.value;
    if (bound.saturated) std::cout << " (saturated)";
    std::cout << '\n';
    return 0;
}

// ---------------------------------------------------------------- export --

int run_export(const std::string& group_arg, const std::string& gens_arg,
               const std::string& format, const std::string& out_path, bool json_out) {
    const degdiam::Group group = group_from_arg(group_arg);
    const degdiam::GeneratorSet set =
        degdiam::GeneratorSet::close_under_inverses(group, gens_from_arg(gens_arg));
    const degdiam::GraphFormat fmt =
        format == "dimacs" ? degdiam::GraphFormat::dimacs : degdiam::GraphFormat::edgelist;
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw degdiam::SinkError("cannot open " + out_path + " for writing");
    const std::int64_t edges = degdiam::export_graph(set, fmt, out);
    out.flush();
    if (!out) throw degdiam::SinkError("write to " + out_path + " failed");
    if (json_out) {
        emit_json(json{{"path", out_path},
                       {"format", format},
                       {"vertices", group.order()},
                       {"edges", edges}});
        return 0;
    }
    std::cout << "wrote " << group.order() << " vertices, " << edges << " edges (" << format
              << ") to " << out_path << '\n';
    return 0;
}

// ----------------------------------------------------------- records-dump --

int run_records_dump(const std::string& out_path) {
    const std::string& text = degdiam::embedded_records_json();
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw degdiam::SinkError("cannot open " + out_path + " for writing");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    out.flush();
    if (!out) throw degdiam::SinkError("write to " + out_path + " failed");
    return 0;
}

// ------------------------------------------------------------- exit codes --

int exit_code_for(const degdiam::Error& e) {
    using namespace degdiam;
    if (dynamic_cast<const MemoryBudgetExceeded*>(&e) != nullptr) return 3;
    if (dynamic_cast<const DistanceOverflow*>(&e) != nullptr) return 3;
    if (dynamic_cast<const TooLarge*>(&e) != nullptr) return 3;
    if (dynamic_cast<const InfeasibleDegree*>(&e) != nullptr) return 3;
    if (dynamic_cast<const MooreInfeasible*>(&e) != nullptr) return 3;
    if (dynamic_cast<const RetryBudgetExhausted*>(&e) != nullptr) return 3;
    if (dynamic_cast<const SinkError*>(&e) != nullptr) return 3;
    return 2;  // malformed input of some kind
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley graph toolkit for the degree/diameter problem"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "degdiam 0.1.0");

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Check records against recomputed invariants");
    auto* opt_all = verify->add_flag("--all", vopt.all, "Verify every record (default)");
    auto* opt_rec =
        verify->add_option("--record", vopt.record, "Verify one record, selected as DELTA,DIAMETER");
    opt_all->excludes(opt_rec);
    verify->add_option("--max-order", vopt.max_order, "BFS vertex budget; larger records skip BFS")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", vopt.json_out, "Emit one JSON document");
    verify->add_option("--threads", vopt.threads, "Worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--records", vopt.records_path,
                       "Verify a record file instead of the embedded dataset");

    std::string bfs_group;
    std::string bfs_gens;
    bool bfs_json = false;
    auto* bfs = app.add_subcommand("bfs", "Distances from the identity for one generator set");
    bfs->add_option("--group", bfs_group, "Group spec as JSON or @file")->required();
    bfs->add_option("--gens", bfs_gens, "Generator list as JSON or @file")->required();
    bfs->add_flag("--json", bfs_json, "Emit one JSON document");

    SearchOptions sopt;
    auto* search = app.add_subcommand("search", "Random inverse-closed generator set search");
    search->add_option("--group", sopt.group, "Group spec as JSON or @file")->required();
    search->add_option("--delta", sopt.delta, "Target degree")->required();
    search->add_option("--target-diameter", sopt.target_diameter, "Diameter to beat")->required();
    search->add_option("--trials", sopt.trials, "Trial count")->required();
    search->add_option("--seed", sopt.seed, "RNG seed (required: runs are reproducible)")
        ->required();
    search->add_option("--max-hits", sopt.max_hits, "Stop recording hits past this many")
        ->capture_default_str();
    search->add_flag("--json", sopt.json_out, "Emit one JSON document");
    search->add_option("--threads", sopt.threads, "Worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    int moore_delta = 0;
    int moore_diameter = 0;
    bool moore_json = false;
    auto* moore = app.add_subcommand("moore", "Moore bound for (delta, diameter)");
    moore->add_option("--delta", moore_delta, "Maximum degree")->required();
    moore->add_option("--diameter", moore_diameter, "Diameter")->required();
    moore->add_flag("--json", moore_json, "Emit one JSON document");

    std::string exp_group;
    std::string exp_gens;
    std::string exp_format;
    std::string exp_out;
    bool exp_json = false;
    auto* exp = app.add_subcommand("export", "Write the Cayley graph to a file");
    exp->add_option("--group", exp_group, "Group spec as JSON or @file")->required();
    exp->add_option("--gens", exp_gens, "Generator list as JSON or @file")->required();
    exp->add_option("--format", exp_format, "edgelist or dimacs")
        ->required()
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    exp->add_option("--out", exp_out, "Output path")->required();
    exp->add_flag("--json", exp_json, "Emit one JSON summary");

    std::string dump_out;
    auto* dump = app.add_subcommand("records-dump", "Emit the embedded record dataset");
    dump->add_option("--out", dump_out, "Write to a file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(vopt);
        if (bfs->parsed()) return run_bfs(bfs_group, bfs_gens, bfs_json);
        if (search->parsed()) return run_search(sopt);
        if (moore->parsed()) return run_moore(moore_delta, moore_diameter, moore_json);
        if (exp->parsed()) return run_export(exp_group, exp_gens, exp_format, exp_out, exp_json);
        if (dump->parsed()) return run_records_dump(dump_out);
    } catch (const degdiam::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
