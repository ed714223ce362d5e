// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cyclex/canonical.hpp"
#include "cyclex/cycles.hpp"
#include "cyclex/graph6.hpp"
#include "cyclex/induced.hpp"
#include "cyclex/local.hpp"
#include "cyclex/patterns.hpp"
#include "cyclex/sweep.hpp"
#include "cyclex/theorems.hpp"
#include "test_support.hpp"

using namespace cyclex;
namespace ts = testsupport;

namespace {

struct Criterion {
    int id;
    const char* summary;
    bool (*run)(std::string& detail);
};

int hw_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n ? static_cast<int>(n) : 4;
}

// 1. Full theorem sweep over all 12,111 connected graphs of order 3..8.
bool criterion_sweeps(std::string& detail) {
    VerifyConfig cfg;
    cfg.n_max = 8;
    cfg.jobs = hw_jobs();
    const SweepReport report = run_verify(cfg);
    if (!report.clean()) {
        detail = "violations: " + std::to_string(report.findings.size());
        return false;
    }
    for (const TheoremCounters& c : report.counters) {
        const std::uint64_t expected = c.id == TheoremId::P2 ? 1 : 12111;
        if (c.examined != expected || c.applicable != c.verified || c.violations != 0) {
            detail = "bad counters for " + theorem_token(c.id);
            return false;
        }
    }
    if (report.wall_ms >= 600000.0) {
        detail = "sweep exceeded the 10-minute budget";
        return false;
    }
    detail = "12 claims x 12111 graphs, " + std::to_string(static_cast<long>(report.wall_ms)) + " ms";
    return true;
}

// 2. The extendability criterion equals brute-force extendability on every
// cyclable set of every in-hypothesis graph up to order 8.
bool criterion_oracle_equivalence(std::string& detail) {
    long sets_checked = 0;
    for (int n = 3; n <= 8; ++n) {
        for (const Graph& g : enumerate_graphs(n, true)) {
            if (!in_hypothesis(g, TheoremId::L1)) continue;
            const SubsetCycleTable table(g);
            for (const VertexSet& s : table.cyclable_sets()) {
                if (s.size() >= g.order()) continue;
                const auto crit = extendability_criterion_l1iv(g, s);
                if (!crit.has_value() || *crit != table.extendable(s)) {
                    detail = "disagreement on " + write_graph6(g);
                    return false;
                }
                ++sets_checked;
            }
        }
    }
    detail = std::to_string(sets_checked) + " cyclable sets compared";
    return true;
}

// 3. Connected class counts for n = 3..8.
bool criterion_counts(std::string& detail) {
    const std::size_t expected[] = {2, 6, 21, 112, 853, 11117};
    std::size_t total = 0;
    for (int n = 3; n <= 8; ++n) {
        const std::size_t got = enumerate_graphs(n, true).size();
        if (got != expected[n - 3]) {
            detail = "order " + std::to_string(n) + ": got " + std::to_string(got);
            return false;
        }
        total += got;
    }
    if (total != 12111) {
        detail = "total " + std::to_string(total);
        return false;
    }
    detail = "2, 6, 21, 112, 853, 11117";
    return true;
}

// 4. The two fixed-point graphs behave exactly as documented.
bool criterion_fixed_points(std::string& detail) {
    const Graph k113 = ts::k113();
    const Graph paw_family[] = {ts::paw()};
    if (!is_locally_connected(k113).holds) { detail = "K113 local connectivity"; return false; }
    if (!is_family_free(k113, paw_family)) { detail = "K113 paw-freeness"; return false; }
    if (!is_weakly_pancyclic(k113)) { detail = "K113 weak pancyclicity"; return false; }
    if (is_fully_cycle_extendable(k113).holds) { detail = "K113 must not be FCE"; return false; }
    if (2 * degree_profile(k113).min_degree >= k113.order()) { detail = "K113 degree bound"; return false; }

    const Graph x = ts::xgraph();
    if (!is_locally_connected(x).holds) { detail = "X local connectivity"; return false; }
    if (is_hamiltonian(x)) { detail = "X must not be hamiltonian"; return false; }
    if (exists_induced(x, k113)) { detail = "X must be K113-free"; return false; }
    if (!exists_induced(x, ts::claw())) { detail = "X must contain a claw"; return false; }
    if (satisfies_condition_e1(x).holds) { detail = "X must fail condition (1)"; return false; }
    // the documented witness path: pendant-apex-pendant
    const InducedP3 pendants{4, 0, 5};
    if (!(x.has_edge(0, 4) && x.has_edge(0, 5) && !x.has_edge(4, 5))) {
        detail = "witness path shape";
        return false;
    }
    if (triple_common_neighbors(x, pendants) > private_neighbors(x, pendants)) {
        detail = "witness path does not violate (1)";
        return false;
    }
    detail = "K113 and X verified on all documented flags";
    return true;
}

// 5. Implication chain and the inclusion-exclusion identity over all graphs
// (connected or not) up to order 8.
bool criterion_implications(std::string& detail) {
    long paths = 0;
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : enumerate_graphs(n, false)) {
            const bool dirac = is_locally_dirac(g).holds;
            const bool ore = is_locally_ore(g).holds;
            const bool e1 = satisfies_condition_e1(g).holds;
            if (dirac && !ore) { detail = "Dirac without Ore: " + write_graph6(g); return false; }
            if (ore && !e1) { detail = "Ore without (1): " + write_graph6(g); return false; }
            for (const InducedP3& p : induced_p3s(g)) {
                const VertexSet nu = g.neighbors(p.center);
                const int pair_sum =
                    (nu & g.neighbors(p.end1)).size() + (nu & g.neighbors(p.end2)).size();
                const int rhs = 2 + pair_sum - triple_common_neighbors(g, p) + private_neighbors(g, p);
                if (g.degree(p.center) != rhs) {
                    detail = "identity fails on " + write_graph6(g);
                    return false;
                }
                // per-path consequence: the Ore bound at one path already
                // forces two spare triple-common neighbors
                if (pair_sum >= g.degree(p.center) &&
                    triple_common_neighbors(g, p) < 2 + private_neighbors(g, p)) {
                    detail = "per-path consequence fails on " + write_graph6(g);
                    return false;
                }
                ++paths;
            }
        }
    }
    detail = std::to_string(paths) + " induced paths checked";
    return true;
}

// 6. Cycle-neighborhood machinery on every valid configuration up to order 7.
bool criterion_t6_machinery(std::string& detail) {
    long abc_checked = 0, traces = 0, inequality_checked = 0, per_path_checked = 0;
    for (int n = 3; n <= 7; ++n) {
        for (const Graph& g : enumerate_graphs(n, false)) {
            const bool e1 = satisfies_condition_e1(g).holds;
            std::string failure;
            // both cyclic orientations: the successor map flips with the
            // traversal direction, so the laws are checked on each
            for_each_cycle(g, [&](const OrderedCycle& forward) {
                if (!failure.empty()) return;
                std::vector<int> rev(forward.vertices().rbegin(), forward.vertices().rend());
                const OrderedCycle cycles_both[] = {forward, OrderedCycle::over(g, rev)};
                for (const OrderedCycle& cycle : cycles_both) {
                const VertexSet vc = cycle.vertex_set();
                for (int z = 0; z < n; ++z) {
                    if (vc.contains(z)) continue;
                    const VertexSet zc = g.neighbors(z) & vc;
                    if (zc.empty()) continue;

                    // structural laws and the bookkeeping trace at every (z, u)
                    for (int u : zc) {
                        const AbcSets sets = abc_partition(g, cycle, z, u);
                        const VertexSet ab_expected = g.neighbors(u) &
                                                      g.neighbors(cycle.successor(u)) &
                                                      g.neighbors(z) & vc;
                        if (!(sets.a & sets.b).empty() || !(sets.a & sets.c).empty() ||
                            !(sets.b & sets.c).empty() || (sets.a | sets.b) != ab_expected ||
                            !sets.a.is_subset_of(vc) || !sets.c.is_subset_of(vc)) {
                            failure = "abc laws on " + write_graph6(g);
                            return;
                        }
                        ++abc_checked;

                        const TraceResult trace = trace_t6_sequence(g, cycle, z, u);
                        if (!trace.invariants_ok || trace.bound_exceeded) {
                            failure = (trace.bound_exceeded ? "bound exceeded on " : "trace law on ") +
                                      write_graph6(g);
                            return;
                        }
                        ++traces;
                    }

                    // inequality under the stated hypotheses; the full form
                    // needs condition (1), the per-path form needs only the
                    // one-path instance of it
                    bool hyp = true;
                    for (int x : zc) {
                        if (g.has_edge(z, cycle.successor(x))) { hyp = false; break; }
                    }
                    if (hyp) {
                        for (int x : zc) {
                            for (int y : zc) {
                                if (y <= x) continue;
                                if (g.has_edge(cycle.successor(x), cycle.successor(y))) {
                                    hyp = false;
                                    break;
                                }
                            }
                            if (!hyp) break;
                        }
                    }
                    if (!hyp) continue;
                    for (int u : zc) {
                        const int u_next = cycle.successor(u);
                        const VertexSet triple =
                            g.neighbors(u) & g.neighbors(u_next) & g.neighbors(z);
                        if (!triple.is_subset_of(vc)) continue;
                        const AbcSets sets = abc_partition(g, cycle, z, u);
                        if (e1) {
                            if (sets.a.size() <= sets.c.size()) {
                                failure = "inequality fails on " + write_graph6(g);
                                return;
                            }
                            ++inequality_checked;
                        }
                        // the same conclusion from just the one-path instance
                        // of the inequality at the induced path u+ - u - z
                        const int rhs = (g.neighbors(u) - g.closed_neighborhood(u_next) -
                                         g.closed_neighborhood(z))
                                            .size();
                        if (triple.size() > rhs) {
                            if (sets.a.size() <= sets.c.size()) {
                                failure = "per-path inequality fails on " + write_graph6(g);
                                return;
                            }
                            ++per_path_checked;
                        }
                    }
                }
                }
            });
            if (!failure.empty()) {
                detail = failure;
                return false;
            }
        }
    }
    if (per_path_checked != 255) {  // cross-checked against an independent sweep
        detail = "per-path instance count " + std::to_string(per_path_checked) + ", expected 255";
        return false;
    }
    detail = std::to_string(abc_checked) + " partitions, " + std::to_string(traces) + " traces, " +
             std::to_string(inequality_checked) + " full-hypothesis instances (vacuous at these orders), " +
             std::to_string(per_path_checked) + " per-path instances";
    return true;
}

// 7. Counterexample hunt comes back empty through order 8.
bool criterion_search(std::string& detail) {
    const SearchReport report = run_conjecture_search(8, hw_jobs());
    if (!report.clean()) {
        detail = "findings: " + std::to_string(report.findings.size());
        return false;
    }
    detail = std::to_string(report.locally_connected_count) + " locally connected graphs, 0 findings";
    return true;
}

// 8. graph6 conformance and certificate stability.
bool criterion_graph6(std::string& detail) {
    if (parse_graph6("Bw") != ts::complete(3) || write_graph6(ts::complete(3)) != "Bw") {
        detail = "Bw anchor";
        return false;
    }
    if (parse_graph6("Dhc") != ts::cycle(5) || write_graph6(ts::cycle(5)) != "Dhc") {
        detail = "Dhc anchor";
        return false;
    }

    std::size_t lines = 0;
    for (const Graph& g : enumerate_graphs(8, true)) {
        const std::string line = write_graph6(g);
        if (write_graph6(parse_graph6(line)) != line) {
            detail = "round trip broke on " + line;
            return false;
        }
        ++lines;
    }
    if (lines < 10000) {
        detail = "corpus too small";
        return false;
    }

    std::mt19937 rng(123456);
    long sampled = 0;
    for (int n = 2; n <= 8; ++n) {
        const auto graphs = enumerate_graphs(n, false);
        const std::size_t stride = n <= 6 ? 1 : (n == 7 ? 23 : 211);
        for (std::size_t i = 0; i < graphs.size(); i += stride) {
            const auto cert = canonical_certificate(graphs[i]);
            for (int trial = 0; trial < 100; ++trial) {
                const auto perm = ts::random_permutation(n, rng);
                const Graph shuffled = relabel(graphs[i], perm);
                if (canonical_certificate(shuffled) != cert) {
                    detail = "certificate moved under relabeling of " + write_graph6(graphs[i]);
                    return false;
                }
                if (write_graph6(parse_graph6(write_graph6(shuffled))) != write_graph6(shuffled)) {
                    detail = "round trip broke on a relabeling";
                    return false;
                }
            }
            ++sampled;
        }
    }
    detail = std::to_string(lines) + "-line corpus, " + std::to_string(sampled) +
             " graphs x 100 relabelings";
    return true;
}

const Criterion kCriteria[] = {
    {1, "theorem sweeps clean over all connected graphs of order 3..8", criterion_sweeps},
    {2, "extendability criterion matches brute force on every cyclable set", criterion_oracle_equivalence},
    {3, "enumeration counts match 2, 6, 21, 112, 853, 11117", criterion_counts},
    {4, "fixed-point facts for K113 and X", criterion_fixed_points},
    {5, "locally Dirac => locally Ore => condition (1); degree identity", criterion_implications},
    {6, "cycle-neighborhood partitions, inequality, and trace bookkeeping", criterion_t6_machinery},
    {7, "counterexample search is empty through order 8", criterion_search},
    {8, "graph6 conformance and certificate stability", criterion_graph6},
};

}  // namespace

int main() {
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%s] criterion %d: %s (%s; %.0f ms)\n", ok ? "PASS" : "FAIL", c.id, c.summary,
                    detail.c_str(), ms);
        if (!ok) ++failures;
    }
    return failures;
}
