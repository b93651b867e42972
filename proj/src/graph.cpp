#include "cliffgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cliffgraph/errors.hpp"

namespace cliff {

bool charpair_less(const CharPair& a, const CharPair& b) {
    if (a.sub->order() != b.sub->order()) return a.sub->order() < b.sub->order();
    if (a.sub->group.id != b.sub->group.id) return a.sub->group.id < b.sub->group.id;
    if (a.sub.get() != b.sub.get()) return a.sub->group.elements < b.sub->group.elements;
    return a.char_index < b.char_index;
}

std::vector<std::vector<int>> CliffordGraph::partition() const {
    std::map<int, std::vector<int>> by_label;
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
        by_label[component_of[static_cast<std::size_t>(v)]].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [label, members] : by_label) out.push_back(std::move(members));
    return out;
}

const std::vector<CharPair>& GraphBuilder::vertices(const GroupClassesPtr& g, int chi) {
    auto key = std::make_pair(g.get(), chi);
    auto it = vertices_.find(key);
    if (it != vertices_.end()) return it->second;

    CharacterTablePtr gt = eng_.table(g);
    if (chi < 0 || chi >= gt->size()) throw precondition_error("chi index out of range");
    const long chi_deg = gt->degrees[static_cast<std::size_t>(chi)];
    const std::vector<Cyclotomic>& chi_values =
        gt->irreducibles[static_cast<std::size_t>(chi)].values;

    std::vector<CharPair> verts;
    const Engine::Ambient& amb = eng_.ambient(g->group);
    for (const auto& sub : amb.subgroups) {
        long index = g->order() / sub->order();
        if (chi_deg % index != 0) continue;
        CharacterTablePtr st = eng_.table(sub);
        for (int a = 0; a < st->size(); ++a) {
            if (st->degrees[static_cast<std::size_t>(a)] * index != chi_deg) continue;
            if (eng_.induced_values(g, sub, a) == chi_values)
                verts.push_back(CharPair{sub, a, st->degrees[static_cast<std::size_t>(a)]});
        }
    }
    std::sort(verts.begin(), verts.end(), charpair_less);
    return vertices_.emplace(key, std::move(verts)).first->second;
}

const std::vector<GroupClassesPtr>& GraphBuilder::normal_subgroups_of(const GroupClassesPtr& g,
                                                                      const GroupClassesPtr& a) {
    auto key = std::make_pair(g.get(), a.get());
    auto it = normals_.find(key);
    if (it != normals_.end()) return it->second;
    std::vector<GroupClassesPtr> out;
    for (const auto& sub : eng_.ambient(g->group).subgroups)
        if (sub->group.subset_of(a->group) && is_normal_in(sub->group, a->group))
            out.push_back(sub);
    return normals_.emplace(key, std::move(out)).first->second;
}

const InertiaDatum& GraphBuilder::inertia(const GroupClassesPtr& a, const GroupClassesPtr& c,
                                          int gamma) {
    auto key = std::make_tuple(a.get(), c.get(), gamma);
    auto it = inertia_.find(key);
    if (it != inertia_.end()) return it->second;
    return inertia_.emplace(key, inertia_group(eng_, a, c, gamma)).first->second;
}

const std::vector<EdgeWitness>& GraphBuilder::witness_table(const GroupClassesPtr& g, int chi) {
    auto key = std::make_pair(g.get(), chi);
    auto it = witnesses_.find(key);
    if (it != witnesses_.end()) return it->second;

    const std::vector<CharPair>& verts = vertices(g, chi);
    auto vertex_index = [&](const GroupClassesPtr& sub, int idx) {
        for (int v = 0; v < static_cast<int>(verts.size()); ++v)
            if (verts[static_cast<std::size_t>(v)].sub.get() == sub.get() &&
                verts[static_cast<std::size_t>(v)].char_index == idx)
                return v;
        return -1;
    };

    std::vector<EdgeWitness> table;
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
        const CharPair& pair = verts[static_cast<std::size_t>(v)];
        const GroupClassesPtr& a = pair.sub;
        CharacterTablePtr at = eng_.table(a);
        const ClassFunction& alpha_f =
            at->irreducibles[static_cast<std::size_t>(pair.char_index)];
        for (const auto& c : normal_subgroups_of(g, a)) {
            CharacterTablePtr ct = eng_.table(c);
            std::vector<std::pair<int, long>> constituents =
                decompose(restrict_to(alpha_f, c), *ct);
            for (const auto& [gamma, mult] : constituents) {
                const InertiaDatum& inert = inertia(a, c, gamma);
                const GroupClassesPtr& b = inert.stabilizer;
                if (b.get() == a.get()) continue;  // beta = alpha; "each other vertex"
                // Unique beta in Irr(B | gamma) inducing alpha.
                int found = -1;
                for (int beta : irr_over(eng_, b, c, gamma)) {
                    if (eng_.induced_values(a, b, beta) == alpha_f.values) {
                        if (found >= 0)
                            throw consistency_error("multiple Clifford correspondents");
                        found = beta;
                    }
                }
                if (found < 0) throw consistency_error("missing Clifford correspondent");
                int to = vertex_index(b, found);
                if (to < 0)
                    throw consistency_error("Clifford correspondent is not a graph vertex");
                if (to == v) throw consistency_error("self edge with proper stabilizer");
                table.push_back(EdgeWitness{v, to, c, gamma});
            }
        }
    }
    return witnesses_.emplace(key, std::move(table)).first->second;
}

CliffordGraph GraphBuilder::build(const GroupClassesPtr& g, int chi, const GroupClassesPtr& n) {
    if (!is_normal_in(n->group, g->group))
        throw precondition_error("graph construction requires N normal in G");
    CliffordGraph out;
    out.g = g;
    out.chi_index = chi;
    out.chi_degree = eng_.table(g)->degrees[static_cast<std::size_t>(chi)];
    out.n = n;
    out.vertices = vertices(g, chi);

    std::map<std::pair<int, int>, std::vector<EdgeWitness>> edge_map;
    for (const EdgeWitness& w : witness_table(g, chi)) {
        if (!w.c->group.subset_of(n->group)) continue;
        auto key = std::minmax(w.from_vertex, w.to_vertex);
        edge_map[{key.first, key.second}].push_back(w);
    }
    for (auto& [key, ws] : edge_map) {
        out.edges.push_back(key);
        out.witnesses.push_back(std::move(ws));
    }

    // union-find over the sorted vertex list, labels = least member
    std::vector<int> parent(out.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& [i, j] : out.edges) {
        int ri = find(i), rj = find(j);
        if (ri != rj) parent[static_cast<std::size_t>(std::max(ri, rj))] = std::min(ri, rj);
    }
    out.component_of.resize(out.vertices.size());
    std::set<int> labels;
    for (int v = 0; v < static_cast<int>(out.vertices.size()); ++v) {
        out.component_of[static_cast<std::size_t>(v)] = find(v);
        labels.insert(out.component_of[static_cast<std::size_t>(v)]);
    }
    out.component_count = static_cast<int>(labels.size());
    return out;
}

bool components_equal(const CliffordGraph& g1, const CliffordGraph& g2) {
    if (g1.g.get() != g2.g.get() || g1.chi_index != g2.chi_index)
        throw precondition_error("components_equal requires the same ambient (G, chi)");
    if (g1.vertices.size() != g2.vertices.size())
        throw consistency_error("graphs over the same (G, chi) have different vertex sets");
    for (std::size_t v = 0; v < g1.vertices.size(); ++v)
        if (!g1.vertices[v].same(g2.vertices[v]))
            throw consistency_error("graphs over the same (G, chi) have different vertex sets");
    return g1.component_of == g2.component_of;  // labels are canonical (least member)
}

bool is_connected(const CliffordGraph& g) { return g.component_count == 1; }

namespace {

std::string vertex_label(const CharPair& p) {
    std::ostringstream os;
    os << 'A' << p.sub->order() << '#' << id_string(p.sub->group.id) << ":deg" << p.char_degree;
    return os.str();
}

std::string witness_label(const EdgeWitness& w) {
    std::ostringstream os;
    os << 'C' << w.c->order() << '#' << id_string(w.c->group.id) << ",g" << w.gamma;
    return os.str();
}

}  // namespace

std::string graph_to_dot(const CliffordGraph& g, bool annotate_witness) {
    std::ostringstream os;
    os << "graph cliffgraph {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << vertex_label(g.vertices[v]) << "\"];\n";
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        os << "  v" << g.edges[e].first << " -- v" << g.edges[e].second;
        if (annotate_witness) os << " [label=\"" << witness_label(g.witnesses[e].front()) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string graph_to_json(const CliffordGraph& g) {
    nlohmann::json j;
    j["ambient"] = {{"group_id", id_string(g.g->group.id)},
                    {"group_order", g.g->order()},
                    {"chi_index", g.chi_index},
                    {"chi_degree", g.chi_degree},
                    {"n_id", id_string(g.n->group.id)},
                    {"n_order", g.n->order()}};
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : g.vertices)
        verts.push_back({{"subgroup_id", id_string(v.sub->group.id)},
                         {"subgroup_order", v.sub->order()},
                         {"char_index", v.char_index},
                         {"char_degree", v.char_degree},
                         {"label", vertex_label(v)}});
    j["vertices"] = std::move(verts);
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& w : g.witnesses[e])
            ws.push_back({{"from", w.from_vertex},
                          {"to", w.to_vertex},
                          {"c_id", id_string(w.c->group.id)},
                          {"c_order", w.c->order()},
                          {"gamma", w.gamma}});
        edges.push_back(
            {{"a", g.edges[e].first}, {"b", g.edges[e].second}, {"witnesses", std::move(ws)}});
    }
    j["edges"] = std::move(edges);
    j["components"] = g.partition();
    return j.dump(2);
}

}  // namespace cliff
