#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclex/cycles.hpp"
#include "cyclex/graph.hpp"

namespace cyclex {

/// The verifiable claims the sweep engine knows about. Every id binds a
/// hypothesis predicate and a conclusion predicate over a single graph,
/// except P2, which names the global containment-fact bundle checked by
/// proposition_lattice_checks().
enum class TheoremId {
    L1,        // paw-free locally connected: triangle cover, diameter <= 2,
               // independent second neighborhoods, the extendability
               // criterion, and extendability below the circumference
    T_PAW_I,   // paw-free locally connected graphs are weakly pancyclic
    T_PAW_II,  // ... fully cycle extendable iff 2*min_degree >= order
    P1,        // claw-free or (K1+P3)-free locally connected graphs are FCE
    P2,        // containment facts behind the single/pair forbidden-subgraph
               // characterizations
    T_GEM,     // {K113, gem}-free locally connected graphs are FCE
    T_K1K1P3,  // {K113, K1+(K1 u P3)}-free locally connected graphs are FCE
    T_TRIPLE,  // {gem, K14, K2+(K1uK2)}-free locally connected graphs other
               // than K113 are FCE
    T6,        // the triple-neighborhood inequality forces FCE
    COR1,      // locally Ore graphs are FCE
    COR2,      // locally Dirac graphs are FCE
    T_ZHANG,   // claw-free locally connected graphs are FCE
};

inline constexpr std::array<TheoremId, 12> kAllTheorems = {
    TheoremId::L1,   TheoremId::T_PAW_I, TheoremId::T_PAW_II, TheoremId::P1,
    TheoremId::P2,   TheoremId::T_GEM,   TheoremId::T_K1K1P3, TheoremId::T_TRIPLE,
    TheoremId::T6,   TheoremId::COR1,    TheoremId::COR2,     TheoremId::T_ZHANG,
};

std::string theorem_token(TheoremId t);
std::optional<TheoremId> theorem_from_token(std::string_view token);
/// One-line statement of what the id checks.
std::string theorem_claim(TheoremId t);

enum class VerdictStatus { NotApplicable, Verified, Violation };

struct TheoremVerdict {
    VerdictStatus status = VerdictStatus::NotApplicable;
    std::string witness;  // set on Violation
};

/// Does g satisfy the hypothesis clause of t? P2 is global and never holds
/// per graph.
bool in_hypothesis(const Graph& g, TheoremId t);

/// Ids whose hypothesis holds, in kAllTheorems order.
std::vector<TheoremId> hypothesis_membership(const Graph& g);

TheoremVerdict verify_theorem(const Graph& g, TheoremId t);

/// The extendability criterion: some vertex off s with a neighbor in s whose
/// neighborhood leaves s or whose doubled degree beats |s|. Returns nullopt
/// when g is outside the criterion's hypothesis class (connected, locally
/// connected, paw-free, order >= 3) or s is not a proper cyclable set.
std::optional<bool> extendability_criterion_l1iv(const Graph& g, VertexSet s);

struct Lemma1Audit {
    bool applicable = false;
    std::array<bool, 5> item{};           // (i)..(v)
    std::array<std::string, 5> witness{}; // per failing item
    bool all_pass() const;
};

/// Items: (i) triangle cover, (ii) diameter <= 2, (iii) independent second
/// neighborhoods, (iv) criterion agrees with brute-force extendability on
/// every proper cyclable set, (v) every cyclable set below the circumference
/// is extendable.
Lemma1Audit lemma1_audit(const Graph& g);

struct LatticeCheckReport {
    int checks = 0;
    std::vector<std::string> failures;
    bool all_pass() const { return failures.empty(); }
};

/// The finite containment facts behind the forbidden-subgraph
/// characterizations: K113 and X are connected, locally connected, and
/// non-hamiltonian; K113 does not occur induced in X; every common induced
/// subgraph of K113 and X occurs induced in the claw or in K1+P3.
LatticeCheckReport proposition_lattice_checks();

/// The cycle-neighborhood partition taken at a neighbor u of an outside
/// vertex z. All three sets live on the cycle; successors are read in the
/// cycle's fixed orientation.
struct AbcSets {
    VertexSet a;  // v in N(u) ∩ N(u+) ∩ N(z) ∩ V(C) with v+ outside N(u)
    VertexSet b;  // same, with v+ inside N(u)
    VertexSet c;  // v in (N(u) ∩ N(z) ∩ V(C)) \ N(u+) with v+ inside N(u)
};

AbcSets abc_partition(const Graph& g, const OrderedCycle& cycle, int z, int u);

struct TraceResult {
    bool bound_exceeded = false;
    int stalled_at = 0;             // step k whose choice set was empty
    std::vector<int> u_seq;         // u_1..u_k
    std::map<int, VertexSet> a_k;   // final per-neighbor bookkeeping sets
    std::map<int, VertexSet> c_k;
    bool invariants_ok = true;
    std::string invariant_failure;
};

/// Iterates the bookkeeping sequence u_1, u_2, ... over z's neighbors on the
/// cycle: each step picks the least unrecorded member of A(u_k), logs it in
/// A_k(u_k), and logs u_k in C_k(u_{k+1}). The per-step balance laws and the
/// running total 2(k-1) are checked throughout.
TraceResult trace_t6_sequence(const Graph& g, const OrderedCycle& cycle, int z, int u1);

}  // namespace cyclex
