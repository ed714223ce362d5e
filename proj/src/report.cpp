#include "cyclex/report.hpp"

#include <sstream>

#include <json.hpp>

#include "cyclex/cycles.hpp"
#include "cyclex/graph6.hpp"
#include "cyclex/induced.hpp"
#include "cyclex/local.hpp"
#include "cyclex/patterns.hpp"

namespace cyclex {

using json = nlohmann::ordered_json;

std::optional<OutputFormat> format_from_token(std::string_view token) {
    if (token == "text") return OutputFormat::Text;
    if (token == "json") return OutputFormat::Json;
    if (token == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

namespace {

std::string vertices_text(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

}  // namespace

CheckReport check_graph(const Graph& g) {
    CheckReport r;
    r.graph6 = write_graph6(g);
    r.order = g.order();
    r.size = g.size();
    const auto profile = degree_profile(g);
    r.min_degree = profile.min_degree;
    r.max_degree = profile.max_degree;
    r.degree_condition = 2 * r.min_degree >= r.order;
    r.connected = is_connected(g);

    const auto lc = is_locally_connected(g);
    r.locally_connected = lc.holds;
    r.locally_connected_witness = lc.witness_text();
    const auto lo = is_locally_ore(g);
    r.locally_ore = lo.holds;
    r.locally_ore_witness = lo.witness_text();
    const auto ld = is_locally_dirac(g);
    r.locally_dirac = ld.holds;
    r.locally_dirac_witness = ld.witness_text();
    const auto e1 = satisfies_condition_e1(g);
    r.condition_e1 = e1.holds;
    r.condition_e1_witness = e1.witness_text();

    for (PatternId id : catalog_patterns()) {
        PatternFlag flag;
        flag.name = pattern_name(id);
        const Graph pattern = named_graph(id);
        if (auto witness = find_induced(g, pattern)) {
            flag.free = false;
            flag.witness = vertices_text(witness->host_vertices());
        }
        r.patterns.push_back(std::move(flag));
    }

    r.acyclic = is_acyclic(g);
    if (const auto gc = girth_circumference(g)) {
        r.girth = gc->first;
        r.circumference = gc->second;
    }
    const auto cover = every_vertex_on_triangle(g);
    r.triangle_cover = cover.holds;
    if (!cover.holds) r.triangle_cover_witness = "vertex " + std::to_string(*cover.vertex_witness);

    if (g.order() <= kMaxSubsetOrder) {
        r.hamiltonian = is_hamiltonian(g);
        r.weakly_pancyclic = is_weakly_pancyclic(g);
        const auto fce = is_fully_cycle_extendable(g);
        r.fully_cycle_extendable = fce.holds;
        r.fce_witness = fce.witness_text();
    }

    for (TheoremId t : hypothesis_membership(g)) r.memberships.push_back(theorem_token(t));
    return r;
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    for (PatternId id : catalog_patterns()) {
        const Graph g = named_graph(id);
        out.push_back({pattern_name(id), write_graph6(g), g.order(), g.size(),
                       degree_profile(g).sequence});
    }
    return out;
}

namespace {

json check_to_json(const CheckReport& r) {
    json j;
    j["graph6"] = r.graph6;
    j["order"] = r.order;
    j["size"] = r.size;
    j["min_degree"] = r.min_degree;
    j["max_degree"] = r.max_degree;
    j["degree_condition_2d_ge_n"] = r.degree_condition;
    j["connected"] = r.connected;
    auto cond = [](bool holds, const std::string& witness) {
        json c;
        c["holds"] = holds;
        if (!holds) c["witness"] = witness;
        return c;
    };
    j["locally_connected"] = cond(r.locally_connected, r.locally_connected_witness);
    j["locally_ore"] = cond(r.locally_ore, r.locally_ore_witness);
    j["locally_dirac"] = cond(r.locally_dirac, r.locally_dirac_witness);
    j["condition_e1"] = cond(r.condition_e1, r.condition_e1_witness);
    json pats = json::object();
    for (const PatternFlag& p : r.patterns) {
        json e;
        e["free"] = p.free;
        if (!p.free) e["witness"] = p.witness;
        pats[p.name] = e;
    }
    j["pattern_free"] = pats;
    j["acyclic"] = r.acyclic;
    j["girth"] = r.girth ? json(*r.girth) : json(nullptr);
    j["circumference"] = r.circumference ? json(*r.circumference) : json(nullptr);
    j["hamiltonian"] = r.hamiltonian ? json(*r.hamiltonian) : json(nullptr);
    j["weakly_pancyclic"] = r.weakly_pancyclic ? json(*r.weakly_pancyclic) : json(nullptr);
    if (r.fully_cycle_extendable) {
        json f;
        f["holds"] = *r.fully_cycle_extendable;
        if (!*r.fully_cycle_extendable) f["witness"] = r.fce_witness;
        j["fully_cycle_extendable"] = f;
    } else {
        j["fully_cycle_extendable"] = nullptr;
    }
    j["every_vertex_on_triangle"] = cond(r.triangle_cover, r.triangle_cover_witness);
    j["hypothesis_membership"] = r.memberships;
    return j;
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }
std::string opt_text(const std::optional<bool>& v, const char* skipped) {
    return v ? yn(*v) : skipped;
}

void check_to_text(std::ostringstream& out, const CheckReport& r) {
    out << "graph " << r.graph6 << "  (order " << r.order << ", size " << r.size << ")\n";
    out << "  degrees: min " << r.min_degree << ", max " << r.max_degree
        << "; 2*min_degree >= order: " << yn(r.degree_condition) << "\n";
    out << "  connected: " << yn(r.connected) << "\n";
    auto cond = [&](const char* name, bool holds, const std::string& witness) {
        out << "  " << name << ": " << yn(holds);
        if (!holds && !witness.empty()) out << "  [" << witness << "]";
        out << "\n";
    };
    cond("locally connected", r.locally_connected, r.locally_connected_witness);
    cond("locally Ore", r.locally_ore, r.locally_ore_witness);
    cond("locally Dirac", r.locally_dirac, r.locally_dirac_witness);
    cond("condition (1)", r.condition_e1, r.condition_e1_witness);
    out << "  pattern-free:";
    for (const PatternFlag& p : r.patterns) {
        out << " " << p.name << "=" << yn(p.free);
        if (!p.free) out << p.witness;
    }
    out << "\n";
    out << "  acyclic: " << yn(r.acyclic) << "; girth: " << opt_text(r.girth)
        << "; circumference: " << opt_text(r.circumference) << "\n";
    const char* skipped = "skipped(order)";
    out << "  hamiltonian: " << opt_text(r.hamiltonian, skipped)
        << "; weakly pancyclic: " << opt_text(r.weakly_pancyclic, skipped) << "\n";
    out << "  fully cycle extendable: " << opt_text(r.fully_cycle_extendable, skipped);
    if (r.fully_cycle_extendable && !*r.fully_cycle_extendable) out << "  [" << r.fce_witness << "]";
    out << "\n";
    cond("every vertex on a triangle", r.triangle_cover, r.triangle_cover_witness);
    out << "  hypothesis membership:";
    if (r.memberships.empty()) out << " (none)";
    for (const std::string& m : r.memberships) out << " " << m;
    out << "\n";
}

}  // namespace

std::string render_checks(const std::vector<CheckReport>& reports, OutputFormat fmt, double wall_ms) {
    switch (fmt) {
        case OutputFormat::Json: {
            json j;
            j["command"] = "check";
            j["graphs"] = json::array();
            for (const CheckReport& r : reports) j["graphs"].push_back(check_to_json(r));
            j["wall_time_ms"] = wall_ms;
            return j.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "graph6,field,value,witness\n";
            for (const CheckReport& r : reports) {
                auto row = [&](const std::string& field, const std::string& value,
                               const std::string& witness = "") {
                    out << csv_escape(r.graph6) << "," << field << "," << value << ","
                        << csv_escape(witness) << "\n";
                };
                row("order", std::to_string(r.order));
                row("size", std::to_string(r.size));
                row("min_degree", std::to_string(r.min_degree));
                row("max_degree", std::to_string(r.max_degree));
                row("degree_condition_2d_ge_n", yn(r.degree_condition));
                row("connected", yn(r.connected));
                row("locally_connected", yn(r.locally_connected), r.locally_connected_witness);
                row("locally_ore", yn(r.locally_ore), r.locally_ore_witness);
                row("locally_dirac", yn(r.locally_dirac), r.locally_dirac_witness);
                row("condition_e1", yn(r.condition_e1), r.condition_e1_witness);
                for (const PatternFlag& p : r.patterns) row(p.name + "_free", yn(p.free), p.witness);
                row("acyclic", yn(r.acyclic));
                row("girth", opt_text(r.girth));
                row("circumference", opt_text(r.circumference));
                row("hamiltonian", opt_text(r.hamiltonian, "skipped"));
                row("weakly_pancyclic", opt_text(r.weakly_pancyclic, "skipped"));
                row("fully_cycle_extendable", opt_text(r.fully_cycle_extendable, "skipped"),
                    r.fce_witness);
                row("every_vertex_on_triangle", yn(r.triangle_cover), r.triangle_cover_witness);
                std::string members;
                for (const std::string& m : r.memberships) {
                    if (!members.empty()) members += " ";
                    members += m;
                }
                row("hypothesis_membership", members);
            }
            out << "# wall_time_ms=" << wall_ms << "\n";
            return out.str();
        }
        case OutputFormat::Text: {
            std::ostringstream out;
            for (const CheckReport& r : reports) check_to_text(out, r);
            out << "wall time: " << wall_ms << " ms\n";
            return out.str();
        }
    }
    return {};
}

std::string render_sweep(const SweepReport& report, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: {
            json j;
            j["command"] = "verify";
            json cfg;
            json ids = json::array();
            for (TheoremId t : report.config.theorems) ids.push_back(theorem_token(t));
            cfg["theorems"] = ids;
            cfg["n_max"] = report.config.n_max;
            cfg["source"] = report.config.source;
            cfg["jobs"] = report.config.jobs;
            j["config"] = cfg;
            j["counters"] = json::array();
            for (const TheoremCounters& c : report.counters) {
                json row;
                row["theorem"] = theorem_token(c.id);
                row["examined"] = c.examined;
                row["applicable"] = c.applicable;
                row["verified"] = c.verified;
                row["violations"] = c.violations;
                j["counters"].push_back(row);
            }
            j["findings"] = json::array();
            for (const Finding& f : report.findings) {
                json row;
                row["theorem"] = f.theorem;
                row["graph6"] = f.graph6;
                row["witness"] = f.witness;
                j["findings"].push_back(row);
            }
            if (report.lattice) j["lattice_checks"] = report.lattice->checks;
            j["clean"] = report.clean();
            j["wall_time_ms"] = report.wall_ms;
            return j.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "record,theorem,examined,applicable,verified,violations,graph6,witness\n";
            for (const TheoremCounters& c : report.counters)
                out << "summary," << theorem_token(c.id) << "," << c.examined << "," << c.applicable
                    << "," << c.verified << "," << c.violations << ",,\n";
            for (const Finding& f : report.findings)
                out << "finding," << f.theorem << ",,,,," << csv_escape(f.graph6) << ","
                    << csv_escape(f.witness) << "\n";
            out << "# wall_time_ms=" << report.wall_ms << "\n";
            return out.str();
        }
        case OutputFormat::Text: {
            std::ostringstream out;
            out << "verify: n_max=" << report.config.n_max << " source=" << report.config.source
                << " jobs=" << report.config.jobs << "\n";
            for (const TheoremCounters& c : report.counters)
                out << "  " << theorem_token(c.id) << ": examined=" << c.examined
                    << " applicable=" << c.applicable << " verified=" << c.verified
                    << " violations=" << c.violations << "\n";
            for (const Finding& f : report.findings)
                out << "  FINDING " << f.theorem << " " << f.graph6 << " " << f.witness << "\n";
            out << (report.clean() ? "clean: no violations\n" : "VIOLATIONS FOUND\n");
            out << "wall time: " << report.wall_ms << " ms\n";
            return out.str();
        }
    }
    return {};
}

std::string render_search(const SearchReport& report, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: {
            json j;
            j["command"] = "search";
            j["conjecture"] = "ryjacek";
            j["n_max"] = report.n_max;
            j["jobs"] = report.jobs;
            j["examined"] = report.examined;
            j["locally_connected"] = report.locally_connected_count;
            j["findings"] = json::array();
            for (const Finding& f : report.findings) {
                json row;
                row["graph6"] = f.graph6;
                row["witness"] = f.witness;
                j["findings"].push_back(row);
            }
            j["clean"] = report.clean();
            j["wall_time_ms"] = report.wall_ms;
            return j.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "record,examined,locally_connected,findings,graph6,witness\n";
            out << "summary," << report.examined << "," << report.locally_connected_count << ","
                << report.findings.size() << ",,\n";
            for (const Finding& f : report.findings)
                out << "finding,,,," << csv_escape(f.graph6) << "," << csv_escape(f.witness) << "\n";
            out << "# wall_time_ms=" << report.wall_ms << "\n";
            return out.str();
        }
        case OutputFormat::Text: {
            std::ostringstream out;
            out << "search ryjacek: n_max=" << report.n_max << " jobs=" << report.jobs << "\n";
            out << "  connected graphs examined: " << report.examined << "\n";
            out << "  locally connected: " << report.locally_connected_count << "\n";
            for (const Finding& f : report.findings)
                out << "  FINDING " << f.graph6 << " " << f.witness << "\n";
            out << (report.clean() ? "no counterexamples at this order\n" : "COUNTEREXAMPLE FOUND\n");
            out << "wall time: " << report.wall_ms << " ms\n";
            return out.str();
        }
    }
    return {};
}

std::string render_catalog(const std::vector<CatalogEntry>& entries, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: {
            json j;
            j["command"] = "catalog";
            j["patterns"] = json::array();
            for (const CatalogEntry& e : entries) {
                json row;
                row["name"] = e.name;
                row["graph6"] = e.graph6;
                row["order"] = e.order;
                row["size"] = e.size;
                row["degree_sequence"] = e.degree_sequence;
                j["patterns"].push_back(row);
            }
            return j.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "name,graph6,order,size,degree_sequence\n";
            for (const CatalogEntry& e : entries) {
                std::string degs;
                for (std::size_t i = 0; i < e.degree_sequence.size(); ++i) {
                    if (i) degs += " ";
                    degs += std::to_string(e.degree_sequence[i]);
                }
                out << e.name << "," << csv_escape(e.graph6) << "," << e.order << "," << e.size << ","
                    << degs << "\n";
            }
            return out.str();
        }
        case OutputFormat::Text: {
            std::ostringstream out;
            for (const CatalogEntry& e : entries) {
                out << e.name << ": " << e.graph6 << "  order " << e.order << ", size " << e.size
                    << ", degrees";
                for (int d : e.degree_sequence) out << " " << d;
                out << "\n";
            }
            return out.str();
        }
    }
    return {};
}

}  // namespace cyclex
