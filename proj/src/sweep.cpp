#include "cyclex/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "cyclex/canonical.hpp"
#include "cyclex/cycles.hpp"
#include "cyclex/graph6.hpp"
#include "cyclex/local.hpp"

namespace cyclex {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int effective_jobs(int requested, std::size_t work_items) {
    int jobs = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(work_items, 1)));
}

// Runs fn(i) for i in [0, count) across `jobs` threads, striding by thread id
// so the per-index results land in preallocated slots.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
        threads.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < count; i += static_cast<std::size_t>(jobs)) fn(i);
        });
    for (auto& th : threads) th.join();
}

std::vector<Graph> stream_graphs(const VerifyConfig& cfg, const std::vector<Graph>* file_graphs) {
    std::vector<Graph> graphs;
    if (file_graphs) {
        for (const Graph& g : *file_graphs)
            if (g.order() <= cfg.n_max) graphs.push_back(g);
    } else {
        for (int n = 3; n <= cfg.n_max; ++n) {
            auto batch = enumerate_graphs(n, /*connected_only=*/true);
            graphs.insert(graphs.end(), batch.begin(), batch.end());
        }
    }
    return graphs;
}

}  // namespace

SweepReport run_verify(const VerifyConfig& cfg, const std::vector<Graph>* file_graphs) {
    const auto start = Clock::now();
    SweepReport report;
    report.config = cfg;
    if (report.config.theorems.empty())
        report.config.theorems.assign(kAllTheorems.begin(), kAllTheorems.end());

    std::vector<TheoremId> per_graph_ids;
    for (TheoremId t : report.config.theorems)
        if (t != TheoremId::P2) per_graph_ids.push_back(t);

    const std::vector<Graph> graphs = stream_graphs(cfg, file_graphs);
    const int jobs = effective_jobs(cfg.jobs, graphs.size());
    report.config.jobs = jobs;

    std::vector<std::vector<TheoremVerdict>> verdicts(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        std::vector<TheoremVerdict> row;
        row.reserve(per_graph_ids.size());
        for (TheoremId t : per_graph_ids) row.push_back(verify_theorem(graphs[i], t));
        verdicts[i] = std::move(row);
    });

    for (TheoremId t : report.config.theorems) {
        TheoremCounters counters{t};
        if (t == TheoremId::P2) {
            report.lattice = proposition_lattice_checks();
            counters.examined = 1;
            counters.applicable = 1;
            if (report.lattice->all_pass()) {
                counters.verified = 1;
            } else {
                counters.violations = 1;
                for (const std::string& failure : report.lattice->failures)
                    report.findings.push_back({theorem_token(t), "", "failed: " + failure});
            }
            report.counters.push_back(counters);
            continue;
        }
        const std::size_t column =
            static_cast<std::size_t>(std::find(per_graph_ids.begin(), per_graph_ids.end(), t) -
                                     per_graph_ids.begin());
        counters.examined = graphs.size();
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const TheoremVerdict& v = verdicts[i][column];
            if (v.status == VerdictStatus::NotApplicable) continue;
            ++counters.applicable;
            if (v.status == VerdictStatus::Verified) {
                ++counters.verified;
            } else {
                ++counters.violations;
                report.findings.push_back({theorem_token(t), write_graph6(graphs[i]), v.witness});
            }
        }
        report.counters.push_back(counters);
    }

    report.wall_ms = ms_since(start);
    return report;
}

SearchReport run_conjecture_search(int n_max, int jobs_requested) {
    const auto start = Clock::now();
    SearchReport report;
    report.n_max = n_max;

    std::vector<Graph> graphs;
    for (int n = 3; n <= n_max; ++n) {
        auto batch = enumerate_graphs(n, /*connected_only=*/true);
        graphs.insert(graphs.end(), batch.begin(), batch.end());
    }
    const int jobs = effective_jobs(jobs_requested, graphs.size());
    report.jobs = jobs;
    report.examined = graphs.size();

    struct Row {
        bool locally_connected = false;
        bool weakly_pancyclic = true;
        int girth = 0, circumference = 0, missing = 0;
    };
    std::vector<Row> rows(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        const Graph& g = graphs[i];
        Row row;
        row.locally_connected = is_locally_connected(g).holds;
        if (row.locally_connected) {
            row.weakly_pancyclic = is_weakly_pancyclic(g);
            if (!row.weakly_pancyclic) {
                const auto gc = girth_circumference(g);
                const auto lengths = SubsetCycleTable(g).cycle_lengths();
                row.girth = gc->first;
                row.circumference = gc->second;
                for (int l = gc->first; l <= gc->second; ++l)
                    if (std::find(lengths.begin(), lengths.end(), l) == lengths.end()) {
                        row.missing = l;
                        break;
                    }
            }
        }
        rows[i] = row;
    });

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!rows[i].locally_connected) continue;
        ++report.locally_connected_count;
        if (!rows[i].weakly_pancyclic)
            report.findings.push_back(
                {"ryjacek", write_graph6(graphs[i]),
                 "locally connected but no cycle of order " + std::to_string(rows[i].missing) +
                     " (girth " + std::to_string(rows[i].girth) + ", circumference " +
                     std::to_string(rows[i].circumference) + ")"});
    }

    report.wall_ms = ms_since(start);
    return report;
}

}  // namespace cyclex
