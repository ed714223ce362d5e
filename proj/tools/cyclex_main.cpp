#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclex/canonical.hpp"
#include "cyclex/graph6.hpp"
#include "cyclex/report.hpp"
#include "cyclex/sweep.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

int default_jobs() {
    if (const char* env = std::getenv("CYCLEX_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid CYCLEX_JOBS\n";
    }
    return 0;  // resolved to hardware concurrency by the sweep engine
}

std::vector<cyclex::Graph> load_input(const std::string& input) {
    if (!input.empty() && input[0] == '@') return cyclex::read_graph6_file(input.substr(1));
    return {cyclex::parse_graph6(input)};
}

}  // namespace

int main(int argc, char** argv) {
    using namespace cyclex;

    CLI::App app{"graph engine for local connectivity and cycle extendability"};
    app.require_subcommand(1);
    std::string format_token = "text";
    app.add_option("--format", format_token, "output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker threads (default: CYCLEX_JOBS or all cores)");

    auto* check_cmd = app.add_subcommand("check", "inspect one graph6 line or @file of lines");
    check_cmd->fallthrough();
    std::string check_input;
    check_cmd->add_option("input", check_input, "graph6 line or @file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "sweep the built-in claims over small graphs");
    verify_cmd->fallthrough();
    std::string theorem_token_arg = "all";
    int verify_n_max = 0;
    std::string verify_source;
    verify_cmd->add_option("--theorem", theorem_token_arg, "claim id or 'all'");
    verify_cmd->add_option("--n-max", verify_n_max, "max order to sweep")->required();
    verify_cmd->add_option("--source", verify_source, "@file of graph6 lines instead of the built-in enumeration");

    auto* search_cmd = app.add_subcommand("search", "hunt counterexamples");
    search_cmd->fallthrough();
    std::string conjecture = "ryjacek";
    int search_n_max = 0;
    search_cmd->add_option("--conjecture", conjecture, "conjecture name (ryjacek)");
    search_cmd->add_option("--n-max", search_n_max, "max order to sweep")->required();

    app.add_subcommand("catalog", "print the named pattern graphs")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_code = app.exit(e);
        return cli_code == 0 ? kExitClean : kExitUsage;
    }

    const OutputFormat fmt = *format_from_token(format_token);

    try {
        if (app.got_subcommand("check")) {
            std::vector<Graph> graphs;
            try {
                graphs = load_input(check_input);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            const auto start = std::chrono::steady_clock::now();
            std::vector<CheckReport> reports;
            reports.reserve(graphs.size());
            for (const Graph& g : graphs) reports.push_back(check_graph(g));
            const double wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
            std::cout << render_checks(reports, fmt, wall_ms);
            return kExitClean;
        }

        if (app.got_subcommand("verify")) {
            VerifyConfig cfg;
            cfg.jobs = jobs;
            cfg.n_max = verify_n_max;
            if (theorem_token_arg != "all") {
                const auto id = theorem_from_token(theorem_token_arg);
                if (!id) {
                    std::cerr << "error: unknown theorem id '" << theorem_token_arg << "'\n";
                    return kExitUsage;
                }
                cfg.theorems = {*id};
            }
            std::vector<Graph> file_graphs;
            bool have_file = false;
            if (!verify_source.empty()) {
                if (verify_source[0] != '@') {
                    std::cerr << "error: --source expects @file\n";
                    return kExitUsage;
                }
                try {
                    file_graphs = read_graph6_file(verify_source.substr(1));
                } catch (const std::exception& e) {
                    std::cerr << "error: " << e.what() << "\n";
                    return kExitUsage;
                }
                for (const Graph& g : file_graphs) {
                    if (g.order() > kMaxSubsetOrder) {
                        std::cerr << "error: verify requires order <= " << kMaxSubsetOrder << "\n";
                        return kExitUsage;
                    }
                }
                cfg.source = verify_source;
                if (cfg.n_max < 3 || cfg.n_max > kMaxSubsetOrder) {
                    std::cerr << "error: --n-max must be in 3.." << kMaxSubsetOrder
                              << " with --source\n";
                    return kExitUsage;
                }
                have_file = true;
            } else if (cfg.n_max < 3 || cfg.n_max > kMaxEnumerationOrder) {
                std::cerr << "error: --n-max must be in 3.." << kMaxEnumerationOrder << "\n";
                return kExitUsage;
            }
            const SweepReport report = run_verify(cfg, have_file ? &file_graphs : nullptr);
            std::cout << render_sweep(report, fmt);
            return report.clean() ? kExitClean : kExitFinding;
        }

        if (app.got_subcommand("search")) {
            if (conjecture != "ryjacek") {
                std::cerr << "error: unknown conjecture '" << conjecture << "'\n";
                return kExitUsage;
            }
            if (search_n_max < 3 || search_n_max > kMaxEnumerationOrder) {
                std::cerr << "error: --n-max must be in 3.." << kMaxEnumerationOrder << "\n";
                return kExitUsage;
            }
            const SearchReport report = run_conjecture_search(search_n_max, jobs);
            std::cout << render_search(report, fmt);
            return report.clean() ? kExitClean : kExitFinding;
        }

        if (app.got_subcommand("catalog")) {
            std::cout << render_catalog(catalog_entries(), fmt);
            return kExitClean;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    return kExitUsage;
}
