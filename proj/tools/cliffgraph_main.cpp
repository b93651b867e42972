#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cliffgraph/catalog.hpp"
#include "cliffgraph/engine.hpp"
#include "cliffgraph/errors.hpp"
#include "cliffgraph/graph.hpp"
#include "cliffgraph/verify.hpp"

namespace {

using namespace cliff;

int engine_max_order() {
    if (const char* env = std::getenv("CLIFFGRAPH_MAX_ORDER")) {
        int v = std::atoi(env);
        if (v < 1) throw input_error("CLIFFGRAPH_MAX_ORDER must be a positive integer");
        return v;
    }
    return kDefaultMaxOrder;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    if (path.empty()) return builtin_catalog();
    std::ifstream in(path);
    if (!in) throw input_error("cannot open catalog file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_catalog(text.str());
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& name) {
    for (const auto& e : entries)
        if (e.name == name) return e;
    throw input_error("unknown group name: " + name);
}

// "deg=4" or "index=3"; ambiguous degrees abort with the candidate indices.
int resolve_chi(const CharacterTable& table, const std::string& selector) {
    if (selector.rfind("deg=", 0) == 0) {
        long deg = std::stol(selector.substr(4));
        std::vector<int> hits;
        for (int i = 0; i < table.size(); ++i)
            if (table.degrees[static_cast<std::size_t>(i)] == deg) hits.push_back(i);
        if (hits.empty()) throw input_error("no irreducible of degree " + std::to_string(deg));
        if (hits.size() > 1) {
            std::string msg = "degree " + std::to_string(deg) + " is ambiguous; indices:";
            for (int i : hits) msg += " " + std::to_string(i);
            throw input_error(msg + " (use index=<k>)");
        }
        return hits[0];
    }
    if (selector.rfind("index=", 0) == 0) {
        int idx = std::stoi(selector.substr(6));
        if (idx < 0 || idx >= table.size())
            throw input_error("character index out of range: " + std::to_string(idx));
        return idx;
    }
    throw input_error("chi selector must be deg=<d> or index=<k>");
}

// "N=G", "N=1", or "N=<cycles>[,<cycles>...]"
Group resolve_normal(const Group& g, const std::string& selector, int max_order) {
    if (selector.rfind("N=", 0) != 0) throw input_error("normal selector must start with N=");
    std::string body = selector.substr(2);
    if (body == "G") return g;
    if (body == "1") return closure(g.degree, {});
    std::vector<Permutation> gens;
    std::size_t start = 0;
    while (start < body.size()) {
        std::size_t comma = body.find(',', start);
        std::string part = body.substr(start, comma == std::string::npos ? comma : comma - start);
        gens.push_back(parse_permutation(part, g.degree));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    Group n = closure(g.degree, gens, max_order);
    if (!n.subset_of(g)) throw input_error("N generators do not lie inside the group");
    return n;
}

int cmd_table(const std::string& catalog_path, const std::string& name) {
    auto entries = load_catalog(catalog_path);
    const CatalogEntry& entry = find_entry(entries, name);
    Engine eng(EngineConfig{engine_max_order(), kDefaultMaxSubgroups});
    Group g = realize(entry, eng.config().max_order);
    CharacterTablePtr t = eng.table(eng.classes(g));
    std::cout << table_to_json(*t) << '\n';
    return 0;
}

int cmd_graph(const std::string& catalog_path, const std::string& name, const std::string& chi_sel,
              const std::string& normal_sel, const std::string& dot_path,
              const std::string& json_path, bool witness) {
    auto entries = load_catalog(catalog_path);
    const CatalogEntry& entry = find_entry(entries, name);
    Engine eng(EngineConfig{engine_max_order(), kDefaultMaxSubgroups});
    Group g = realize(entry, eng.config().max_order);
    GroupClassesPtr gc = eng.classes(g);
    CharacterTablePtr t = eng.table(gc);
    int chi = resolve_chi(*t, chi_sel);
    Group n = resolve_normal(g, normal_sel, eng.config().max_order);
    GraphBuilder gb(eng);
    CliffordGraph graph = gb.build(gc, chi, eng.classes(n));
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw input_error("cannot write " + dot_path);
        out << graph_to_dot(graph, witness);
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw input_error("cannot write " + json_path);
        out << graph_to_json(graph) << '\n';
    }
    std::cout << "vertices: " << graph.vertices.size() << "\n";
    std::cout << "edges: " << graph.edges.size() << "\n";
    std::cout << "components: " << graph.component_count << "\n";
    return 0;
}

int cmd_verify(const std::string& catalog_path, long max_order_sweep, const std::string& checks_csv,
               const std::string& out_path) {
    static const std::vector<std::string> known = {"theoremA", "corollaryB", "dade",
                                                   "isaacs",   "lemma",      "example"};
    std::vector<std::string> checks;
    std::size_t start = 0;
    while (start <= checks_csv.size()) {
        std::size_t comma = checks_csv.find(',', start);
        std::string part =
            checks_csv.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!part.empty()) {
            if (std::find(known.begin(), known.end(), part) == known.end())
                throw input_error("unknown check name: " + part);
            checks.push_back(part);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (checks.empty()) throw input_error("no checks selected");

    auto entries = load_catalog(catalog_path);
    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return a.name < b.name;
    });
    Engine eng(EngineConfig{engine_max_order(), kDefaultMaxSubgroups});
    GraphBuilder gb(eng);

    std::ofstream file_out;
    std::ostream* report_os = &std::cout;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) throw input_error("cannot write " + out_path);
        report_os = &file_out;
    }

    struct Realized {
        const CatalogEntry* entry;
        Group group;
    };
    std::vector<Realized> groups;
    for (const auto& e : entries) {
        Group g = realize(e, eng.config().max_order);
        if (g.order() <= max_order_sweep) groups.push_back({&e, std::move(g)});
    }
    std::sort(groups.begin(), groups.end(), [](const Realized& a, const Realized& b) {
        if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
        return a.entry->name < b.entry->name;
    });

    int failures = 0;
    for (const auto& check : checks) {
        if (check == "example") {
            bool found = false;
            for (const auto& r : groups)
                if (r.entry->name == "GL23") {
                    VerificationReport rep = reproduce_example(gb, r.group, r.entry->name);
                    append_jsonl(*report_os, rep);
                    failures += rep.count(CheckStatus::fail);
                    std::cout << "example GL23: " << rep.count(CheckStatus::pass) << " pass, "
                              << rep.count(CheckStatus::fail) << " fail\n";
                    found = true;
                }
            if (!found) std::cout << "example: GL23 not in catalog within max-order, skipped\n";
            continue;
        }
        for (const auto& r : groups) {
            VerificationReport rep;
            if (check == "theoremA") rep = check_theorem_A(gb, r.group, r.entry->name);
            else if (check == "corollaryB") rep = check_corollary_B(gb, r.group, r.entry->name);
            else if (check == "dade") rep = check_remark_dade(gb, r.group, r.entry->name);
            else if (check == "isaacs") rep = check_remark_isaacs(gb, r.group, r.entry->name);
            else if (check == "lemma") rep = check_lemma(gb, r.group, r.entry->name);
            append_jsonl(*report_os, rep);
            failures += rep.count(CheckStatus::fail);
            std::cout << check << " " << r.entry->name << ": " << rep.count(CheckStatus::pass)
                      << " pass, " << rep.count(CheckStatus::not_applicable)
                      << " not-applicable, " << rep.count(CheckStatus::fail) << " fail\n";
        }
    }
    std::cout << (failures == 0 ? "VERIFY OK" : "VERIFY FAILED") << " (" << failures
              << " failures)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for Clifford induction graphs of finite groups"};
    app.require_subcommand(1);
    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "JSON-lines catalog file (default: bundled catalog)");

    auto* table = app.add_subcommand("table", "Print the exact character table as JSON");
    std::string table_name;
    table->add_option("name", table_name, "catalog group name")->required();

    auto* graph = app.add_subcommand("graph", "Build C_N(chi) and report its components");
    std::string graph_name, chi_sel, normal_sel = "N=G", dot_path, json_path;
    bool witness = false;
    graph->add_option("name", graph_name, "catalog group name")->required();
    graph->add_option("--chi", chi_sel, "character selector: deg=<d> or index=<k>")->required();
    graph->add_option("--normal", normal_sel, "normal subgroup: N=G, N=1 or N=<cycles>[,<cycles>]");
    graph->add_option("--dot", dot_path, "write DOT export to this path");
    graph->add_option("--json", json_path, "write JSON export to this path");
    graph->add_flag("--witness", witness, "annotate DOT edges with a sample witness (C, gamma)");

    auto* verify = app.add_subcommand("verify", "Run verification sweeps over the catalog");
    long max_order_sweep = 48;
    std::string checks_csv = "theoremA,corollaryB,dade,isaacs,lemma,example";
    std::string out_path;
    verify->add_option("--max-order", max_order_sweep, "sweep groups of order <= this bound");
    verify->add_option("--checks", checks_csv, "comma-separated subset of: theoremA,corollaryB,dade,isaacs,lemma,example");
    verify->add_option("--out", out_path, "write the JSON-lines report here (default: stdout)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*table) return cmd_table(catalog_path, table_name);
        if (*graph)
            return cmd_graph(catalog_path, graph_name, chi_sel, normal_sel, dot_path, json_path,
                             witness);
        if (*verify) return cmd_verify(catalog_path, max_order_sweep, checks_csv, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
