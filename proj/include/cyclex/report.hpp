#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclex/graph.hpp"
#include "cyclex/sweep.hpp"

namespace cyclex {

enum class OutputFormat { Text, Json, Csv };

std::optional<OutputFormat> format_from_token(std::string_view token);

struct PatternFlag {
    std::string name;
    bool free = true;
    std::string witness;  // host vertices of one induced copy when present
};

/// Everything `check` prints for one graph. Cycle-spectrum fields are
/// nullopt when the order exceeds the exact-cycle capacity.
struct CheckReport {
    std::string graph6;
    int order = 0;
    int size = 0;
    int min_degree = 0;
    int max_degree = 0;
    bool degree_condition = false;  // 2*min_degree >= order
    bool connected = false;
    bool locally_connected = false;
    std::string locally_connected_witness;
    bool locally_ore = false;
    std::string locally_ore_witness;
    bool locally_dirac = false;
    std::string locally_dirac_witness;
    bool condition_e1 = false;
    std::string condition_e1_witness;
    std::vector<PatternFlag> patterns;
    bool acyclic = false;
    std::optional<int> girth;
    std::optional<int> circumference;
    std::optional<bool> hamiltonian;
    std::optional<bool> weakly_pancyclic;
    std::optional<bool> fully_cycle_extendable;
    std::string fce_witness;
    bool triangle_cover = false;
    std::string triangle_cover_witness;
    std::vector<std::string> memberships;  // theorem tokens
};

CheckReport check_graph(const Graph& g);

struct CatalogEntry {
    std::string name;
    std::string graph6;
    int order = 0;
    int size = 0;
    std::vector<int> degree_sequence;
};

std::vector<CatalogEntry> catalog_entries();

std::string render_checks(const std::vector<CheckReport>& reports, OutputFormat fmt, double wall_ms);
std::string render_sweep(const SweepReport& report, OutputFormat fmt);
std::string render_search(const SearchReport& report, OutputFormat fmt);
std::string render_catalog(const std::vector<CatalogEntry>& entries, OutputFormat fmt);

}  // namespace cyclex
