#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclex/graph.hpp"
#include "cyclex/theorems.hpp"

namespace cyclex {

struct VerifyConfig {
    std::vector<TheoremId> theorems;  // empty means all
    int n_max = 8;
    std::string source = "builtin";   // or "@<path>" echo for reports
    int jobs = 1;
};

struct TheoremCounters {
    TheoremId id;
    std::uint64_t examined = 0;
    std::uint64_t applicable = 0;
    std::uint64_t verified = 0;
    std::uint64_t violations = 0;
};

struct Finding {
    std::string theorem;
    std::string graph6;
    std::string witness;
};

struct SweepReport {
    VerifyConfig config;
    std::vector<TheoremCounters> counters;
    std::vector<Finding> findings;
    std::optional<LatticeCheckReport> lattice;
    double wall_ms = 0;

    bool clean() const { return findings.empty(); }
};

/// Runs verify_theorem for every requested id over the graph stream: the
/// built-in enumeration of connected graphs of order 3..n_max, or the given
/// graphs filtered to order <= n_max. Workers split the stream; results are
/// merged in stream order, so output does not depend on the job count.
SweepReport run_verify(const VerifyConfig& cfg, const std::vector<Graph>* file_graphs = nullptr);

struct SearchReport {
    int n_max = 8;
    int jobs = 1;
    std::uint64_t examined = 0;
    std::uint64_t locally_connected_count = 0;
    std::vector<Finding> findings;
    double wall_ms = 0;

    bool clean() const { return findings.empty(); }
};

/// Hunts counterexamples: connected locally connected graphs of order
/// 3..n_max that are not weakly pancyclic. Expected empty at these orders;
/// a hit is a reportable finding.
SearchReport run_conjecture_search(int n_max, int jobs);

}  // namespace cyclex
