#include "cyclex/theorems.hpp"

#include <algorithm>

#include "cyclex/canonical.hpp"
#include "cyclex/induced.hpp"
#include "cyclex/local.hpp"
#include "cyclex/patterns.hpp"

namespace cyclex {

namespace {

const Graph& pat(PatternKind k) {
    static const Graph claw = named_graph(PatternId::fixed(PatternKind::Claw));
    static const Graph paw = named_graph(PatternId::fixed(PatternKind::Paw));
    static const Graph gem = named_graph(PatternId::fixed(PatternKind::Gem));
    static const Graph k113 = named_graph(PatternId::fixed(PatternKind::K113));
    static const Graph k1p3 = named_graph(PatternId::fixed(PatternKind::K1P3));
    static const Graph k1k1up3 = named_graph(PatternId::fixed(PatternKind::K1K1uP3));
    static const Graph k14 = named_graph(PatternId::fixed(PatternKind::K14));
    static const Graph k2k1uk2 = named_graph(PatternId::fixed(PatternKind::K2K1uK2));
    static const Graph x = named_graph(PatternId::fixed(PatternKind::Xgraph));
    switch (k) {
        case PatternKind::Claw: return claw;
        case PatternKind::Paw: return paw;
        case PatternKind::Gem: return gem;
        case PatternKind::K113: return k113;
        case PatternKind::K1P3: return k1p3;
        case PatternKind::K1K1uP3: return k1k1up3;
        case PatternKind::K14: return k14;
        case PatternKind::K2K1uK2: return k2k1uk2;
        case PatternKind::Xgraph: return x;
        default: throw std::invalid_argument("not a fixed pattern");
    }
}

bool free_of(const Graph& g, PatternKind k) { return !exists_induced(g, pat(k)); }

bool isomorphic_to_k113(const Graph& g) {
    return g.order() == 5 && canonical_certificate(g) == canonical_certificate(pat(PatternKind::K113));
}

std::string set_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace

std::string theorem_token(TheoremId t) {
    switch (t) {
        case TheoremId::L1: return "L1";
        case TheoremId::T_PAW_I: return "T_PAW_I";
        case TheoremId::T_PAW_II: return "T_PAW_II";
        case TheoremId::P1: return "P1";
        case TheoremId::P2: return "P2";
        case TheoremId::T_GEM: return "T_GEM";
        case TheoremId::T_K1K1P3: return "T_K1K1P3";
        case TheoremId::T_TRIPLE: return "T_TRIPLE";
        case TheoremId::T6: return "T6";
        case TheoremId::COR1: return "COR1";
        case TheoremId::COR2: return "COR2";
        case TheoremId::T_ZHANG: return "T_ZHANG";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_token(std::string_view token) {
    for (TheoremId t : kAllTheorems)
        if (theorem_token(t) == token) return t;
    return std::nullopt;
}

std::string theorem_claim(TheoremId t) {
    switch (t) {
        case TheoremId::L1:
            return "paw-free locally connected graphs: triangle cover, diameter <= 2, independent "
                   "second neighborhoods, extendability criterion, extendability below circumference";
        case TheoremId::T_PAW_I:
            return "connected locally connected paw-free graphs of order >= 3 are weakly pancyclic";
        case TheoremId::T_PAW_II:
            return "connected locally connected paw-free graphs of order >= 3 are fully cycle "
                   "extendable iff 2*min_degree >= order";
        case TheoremId::P1:
            return "connected locally connected graphs of order >= 3 that are claw-free or "
                   "(K1+P3)-free are fully cycle extendable";
        case TheoremId::P2:
            return "containment facts for the single and pair forbidden-subgraph characterizations";
        case TheoremId::T_GEM:
            return "connected locally connected {K113, gem}-free graphs of order >= 3 are fully "
                   "cycle extendable";
        case TheoremId::T_K1K1P3:
            return "connected locally connected {K113, K1+(K1uP3)}-free graphs of order >= 3 are "
                   "fully cycle extendable";
        case TheoremId::T_TRIPLE:
            return "connected locally connected {gem, K14, K2+(K1uK2)}-free graphs of order >= 3 "
                   "other than K113 are fully cycle extendable";
        case TheoremId::T6:
            return "connected graphs of order >= 3 where every induced path v-u-w has more common "
                   "neighbors of all three than private neighbors of u are fully cycle extendable";
        case TheoremId::COR1:
            return "connected locally Ore graphs of order >= 3 are fully cycle extendable";
        case TheoremId::COR2:
            return "connected locally Dirac graphs of order >= 3 are fully cycle extendable";
        case TheoremId::T_ZHANG:
            return "connected locally connected claw-free graphs of order >= 3 are fully cycle "
                   "extendable";
    }
    return "?";
}

bool in_hypothesis(const Graph& g, TheoremId t) {
    if (t == TheoremId::P2) return false;  // global bundle, not per graph
    if (g.order() < 3 || !is_connected(g)) return false;
    switch (t) {
        case TheoremId::L1:
        case TheoremId::T_PAW_I:
        case TheoremId::T_PAW_II:
            return is_locally_connected(g).holds && free_of(g, PatternKind::Paw);
        case TheoremId::P1:
            return is_locally_connected(g).holds &&
                   (free_of(g, PatternKind::Claw) || free_of(g, PatternKind::K1P3));
        case TheoremId::T_GEM:
            return is_locally_connected(g).holds && free_of(g, PatternKind::K113) &&
                   free_of(g, PatternKind::Gem);
        case TheoremId::T_K1K1P3:
            return is_locally_connected(g).holds && free_of(g, PatternKind::K113) &&
                   free_of(g, PatternKind::K1K1uP3);
        case TheoremId::T_TRIPLE:
            return is_locally_connected(g).holds && free_of(g, PatternKind::Gem) &&
                   free_of(g, PatternKind::K14) && free_of(g, PatternKind::K2K1uK2) &&
                   !isomorphic_to_k113(g);
        case TheoremId::T6:
            return satisfies_condition_e1(g).holds;
        case TheoremId::COR1:
            return is_locally_ore(g).holds;
        case TheoremId::COR2:
            return is_locally_dirac(g).holds;
        case TheoremId::T_ZHANG:
            return is_locally_connected(g).holds && free_of(g, PatternKind::Claw);
        case TheoremId::P2:
            return false;
    }
    return false;
}

std::vector<TheoremId> hypothesis_membership(const Graph& g) {
    std::vector<TheoremId> out;
    for (TheoremId t : kAllTheorems)
        if (in_hypothesis(g, t)) out.push_back(t);
    return out;
}

std::optional<bool> extendability_criterion_l1iv(const Graph& g, VertexSet s) {
    if (g.order() < 3 || !is_connected(g) || !is_locally_connected(g).holds ||
        !free_of(g, PatternKind::Paw))
        return std::nullopt;
    if (!s.is_subset_of(g.vertices()) || s.size() >= g.order()) return std::nullopt;
    if (s.size() < 3 || !is_hamiltonian(induce(g, s))) return std::nullopt;
    const int cycle_order = s.size();
    for (int u : g.vertices() - s) {
        const VertexSet nb = g.neighbors(u);
        if ((nb & s).empty()) continue;
        if (!nb.is_subset_of(s) || 2 * g.degree(u) > cycle_order) return true;
    }
    return false;
}

bool Lemma1Audit::all_pass() const {
    return applicable && std::all_of(item.begin(), item.end(), [](bool b) { return b; });
}

Lemma1Audit lemma1_audit(const Graph& g) {
    Lemma1Audit audit;
    if (g.order() < 3 || !is_connected(g) || !is_locally_connected(g).holds ||
        !free_of(g, PatternKind::Paw))
        return audit;
    audit.applicable = true;
    audit.item.fill(true);

    const auto cover = every_vertex_on_triangle(g);
    if (!cover.holds) {
        audit.item[0] = false;
        audit.witness[0] = "vertex " + std::to_string(*cover.vertex_witness);
    }

    const auto diam = diameter(g);
    if (!diam || *diam > 2) {
        audit.item[1] = false;
        audit.witness[1] = diam ? "diameter " + std::to_string(*diam) : "disconnected";
    }

    for (int u = 0; u < g.order() && audit.item[2]; ++u) {
        const VertexSet level2 = distance_sets(g, u, 2);
        for (int x : level2) {
            if (!(g.neighbors(x) & level2).empty()) {
                audit.item[2] = false;
                audit.witness[2] = "vertex " + std::to_string(u) + " has adjacent second neighbors";
                break;
            }
        }
    }

    const SubsetCycleTable table(g);
    const auto sets = table.cyclable_sets();
    const auto gc = girth_circumference(g);
    for (const VertexSet& s : sets) {
        if (s.size() >= g.order()) continue;
        const bool oracle = table.extendable(s);
        if (audit.item[3]) {
            const auto crit = extendability_criterion_l1iv(g, s);
            if (!crit || *crit != oracle) {
                audit.item[3] = false;
                audit.witness[3] = "criterion disagrees on " + set_text(s);
            }
        }
        if (audit.item[4] && gc && s.size() < gc->second && !oracle) {
            audit.item[4] = false;
            audit.witness[4] = "non-extendable " + set_text(s) + " below circumference";
        }
        if (!audit.item[3] && !audit.item[4]) break;
    }
    return audit;
}

namespace {

TheoremVerdict fce_conclusion(const Graph& g) {
    const auto fce = is_fully_cycle_extendable(g);
    if (fce.holds) return {VerdictStatus::Verified, {}};
    return {VerdictStatus::Violation, fce.witness_text()};
}

}  // namespace

TheoremVerdict verify_theorem(const Graph& g, TheoremId t) {
    if (t == TheoremId::P2) {
        const auto lattice = proposition_lattice_checks();
        if (lattice.all_pass()) return {VerdictStatus::Verified, {}};
        return {VerdictStatus::Violation, lattice.failures.front()};
    }
    if (!in_hypothesis(g, t)) return {VerdictStatus::NotApplicable, {}};
    switch (t) {
        case TheoremId::L1: {
            const auto audit = lemma1_audit(g);
            if (audit.all_pass()) return {VerdictStatus::Verified, {}};
            static const char* roman[5] = {"i", "ii", "iii", "iv", "v"};
            for (std::size_t i = 0; i < audit.item.size(); ++i)
                if (!audit.item[i])
                    return {VerdictStatus::Violation,
                            "item (" + std::string(roman[i]) + "): " + audit.witness[i]};
            return {VerdictStatus::Violation, "audit failed"};
        }
        case TheoremId::T_PAW_I: {
            if (is_weakly_pancyclic(g)) return {VerdictStatus::Verified, {}};
            return {VerdictStatus::Violation, "not weakly pancyclic"};
        }
        case TheoremId::T_PAW_II: {
            const bool degree_ok = 2 * degree_profile(g).min_degree >= g.order();
            const auto fce = is_fully_cycle_extendable(g);
            if (fce.holds == degree_ok) return {VerdictStatus::Verified, {}};
            if (fce.holds)
                return {VerdictStatus::Violation, "fully cycle extendable but 2*min_degree < order"};
            return {VerdictStatus::Violation,
                    "2*min_degree >= order but " + fce.witness_text()};
        }
        case TheoremId::P1:
        case TheoremId::T_GEM:
        case TheoremId::T_K1K1P3:
        case TheoremId::T_TRIPLE:
        case TheoremId::T6:
        case TheoremId::COR1:
        case TheoremId::COR2:
        case TheoremId::T_ZHANG:
            return fce_conclusion(g);
        case TheoremId::P2:
            break;
    }
    return {VerdictStatus::NotApplicable, {}};
}

LatticeCheckReport proposition_lattice_checks() {
    LatticeCheckReport report;
    const Graph& k113 = pat(PatternKind::K113);
    const Graph& x = pat(PatternKind::Xgraph);
    const Graph& claw = pat(PatternKind::Claw);
    const Graph& k1p3 = pat(PatternKind::K1P3);

    auto expect = [&report](bool ok, const std::string& what) {
        ++report.checks;
        if (!ok) report.failures.push_back(what);
    };

    for (const auto& [name, graph] : {std::pair<const char*, const Graph*>{"K113", &k113},
                                      std::pair<const char*, const Graph*>{"X", &x}}) {
        expect(graph->order() >= 3, std::string(name) + " has order >= 3");
        expect(is_connected(*graph), std::string(name) + " is connected");
        expect(is_locally_connected(*graph).holds, std::string(name) + " is locally connected");
        expect(!is_hamiltonian(*graph), std::string(name) + " is not hamiltonian");
    }
    expect(!is_induced_subgraph_of(k113, x), "K113 does not occur induced in X");

    // Every common induced subgraph of K113 and X (there are only 2^5 - 1
    // candidate subsets) embeds in the claw or in K1+P3.
    for (std::uint64_t bits = 1; bits < (1u << k113.order()); ++bits) {
        const Graph f = induce(k113, VertexSet(bits));
        if (!is_induced_subgraph_of(f, x)) continue;
        expect(is_induced_subgraph_of(f, claw) || is_induced_subgraph_of(f, k1p3),
               "common induced subgraph " + set_text(VertexSet(bits)) +
                   " of K113 embeds in claw or K1+P3");
    }
    return report;
}

AbcSets abc_partition(const Graph& g, const OrderedCycle& cycle, int z, int u) {
    g.check_vertex(z);
    g.check_vertex(u);
    const VertexSet vc = cycle.vertex_set();
    if (vc.contains(z)) throw std::invalid_argument("z must lie outside the cycle");
    if (!vc.contains(u)) throw std::invalid_argument("u must lie on the cycle");
    if (!g.has_edge(z, u)) throw std::invalid_argument("z must be adjacent to u");

    const int u_next = cycle.successor(u);
    const VertexSet nu = g.neighbors(u);
    const VertexSet nu_next = g.neighbors(u_next);
    const VertexSet nz = g.neighbors(z);

    AbcSets sets;
    for (int v : nu & nu_next & nz & vc) {
        if (nu.contains(cycle.successor(v)))
            sets.b.add(v);
        else
            sets.a.add(v);
    }
    for (int v : (nu & nz & vc) - nu_next) {
        if (nu.contains(cycle.successor(v))) sets.c.add(v);
    }
    return sets;
}

TraceResult trace_t6_sequence(const Graph& g, const OrderedCycle& cycle, int z, int u1) {
    const VertexSet vc = cycle.vertex_set();
    if (vc.contains(z)) throw std::invalid_argument("z must lie outside the cycle");
    if (!vc.contains(u1) || !g.has_edge(z, u1))
        throw std::invalid_argument("u1 must be a neighbor of z on the cycle");

    const VertexSet z_neighbors_on_c = g.neighbors(z) & vc;
    std::map<int, VertexSet> a_full, c_full;
    for (int x : z_neighbors_on_c) {
        const AbcSets sets = abc_partition(g, cycle, z, x);
        a_full[x] = sets.a;
        c_full[x] = sets.c;
    }

    TraceResult result;
    for (int x : z_neighbors_on_c) {
        result.a_k[x] = VertexSet();
        result.c_k[x] = VertexSet();
    }
    result.u_seq.push_back(u1);

    const long bound = static_cast<long>(cycle.length()) * cycle.length();
    auto fail = [&result](const std::string& msg) {
        result.invariants_ok = false;
        if (result.invariant_failure.empty()) result.invariant_failure = msg;
    };

    for (long k = 1;; ++k) {
        const int uk = result.u_seq.back();

        // bookkeeping laws at step k
        long total = 0;
        for (int x : z_neighbors_on_c) {
            if (!result.a_k[x].is_subset_of(a_full[x])) fail("A_k escapes A");
            if (!result.c_k[x].is_subset_of(c_full[x])) fail("C_k escapes C");
            total += result.a_k[x].size() + result.c_k[x].size();
            const int diff = result.a_k[x].size() - result.c_k[x].size();
            const int want = (uk == u1) ? 0 : (x == u1 ? 1 : (x == uk ? -1 : 0));
            if (diff != want)
                fail("balance law fails at vertex " + std::to_string(x) + " in step " + std::to_string(k));
        }
        if (total != 2 * (k - 1)) fail("running total differs from 2(k-1) at step " + std::to_string(k));

        if (k > bound + 1) {
            result.bound_exceeded = true;
            return result;
        }
        const VertexSet choice = a_full[uk] - result.a_k[uk];
        if (choice.empty()) {
            result.stalled_at = static_cast<int>(k);
            return result;
        }
        const int u_next = choice.first();
        if (result.c_k[u_next].contains(uk)) fail("u_k already recorded in C_k(u_{k+1})");
        result.a_k[uk].add(u_next);
        result.c_k[u_next].add(uk);
        result.u_seq.push_back(u_next);
    }
}

}  // namespace cyclex
