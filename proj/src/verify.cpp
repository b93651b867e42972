#include "cliffgraph/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cliffgraph/errors.hpp"

namespace cliff {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

int VerificationReport::count(CheckStatus s) const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

namespace {

std::string sub_label(const GroupClassesPtr& s) {
    return std::to_string(s->order()) + "#" + id_string(s->group.id).substr(0, 8);
}

std::string chi_label(const CharacterTable& t, int chi) {
    return "chi=" + std::to_string(chi) + "(deg" +
           std::to_string(t.degrees[static_cast<std::size_t>(chi)]) + ")";
}

// Restriction flags shared by the sweeps of one group.
struct SweepData {
    GroupClassesPtr g;
    CharacterTablePtr gt;
    std::vector<GroupClassesPtr> normals;   // normal subgroups of G, registry order
    std::vector<std::vector<bool>> irred;   // [normal][chi]: chi restricts irreducibly
    std::vector<std::vector<bool>> homog;   // [normal][chi]: chi restricts homogeneously
};

SweepData sweep_data(GraphBuilder& gb, const Group& g) {
    Engine& eng = gb.engine();
    SweepData d;
    d.g = eng.classes(g);
    d.gt = eng.table(d.g);
    const Engine::Ambient& amb = eng.ambient(g);
    for (int i : amb.normal_indices) d.normals.push_back(amb.subgroups[static_cast<std::size_t>(i)]);
    const int nchi = d.gt->size();
    for (const auto& n : d.normals) {
        CharacterTablePtr nt = eng.table(n);
        std::vector<bool> irr_row, hom_row;
        for (int chi = 0; chi < nchi; ++chi) {
            ClassFunction res = restrict_to(d.gt->irreducibles[static_cast<std::size_t>(chi)], n);
            auto norm = inner_product(res, res).as_rational_integer();
            if (!norm) throw consistency_error("restriction norm is not an integer");
            irr_row.push_back(*norm == 1);
            hom_row.push_back(decompose(res, *nt).size() == 1);
        }
        d.irred.push_back(std::move(irr_row));
        d.homog.push_back(std::move(hom_row));
    }
    return d;
}

std::string two_graph_payload(const CliffordGraph& a, const CliffordGraph& b) {
    nlohmann::json j;
    j["graphs"] = {nlohmann::json::parse(graph_to_json(a)), nlohmann::json::parse(graph_to_json(b))};
    return j.dump();
}

// Component of the vertex (G, chi) and its size.
std::pair<int, int> ambient_component(const CliffordGraph& graph) {
    int v = -1;
    for (int i = 0; i < static_cast<int>(graph.vertices.size()); ++i)
        if (graph.vertices[static_cast<std::size_t>(i)].sub.get() == graph.g.get() &&
            graph.vertices[static_cast<std::size_t>(i)].char_index == graph.chi_index)
            v = i;
    if (v < 0) throw consistency_error("(G, chi) is not a vertex of its own graph");
    int label = graph.component_of[static_cast<std::size_t>(v)];
    int size = 0;
    for (int l : graph.component_of)
        if (l == label) ++size;
    return {v, size};
}

}  // namespace

VerificationReport check_theorem_A(GraphBuilder& gb, const Group& g, const std::string& name) {
    VerificationReport rep;
    rep.group = name;
    SweepData d = sweep_data(gb, g);
    for (std::size_t ni = 0; ni < d.normals.size(); ++ni) {
        const GroupClassesPtr& n = d.normals[ni];
        for (int chi = 0; chi < d.gt->size(); ++chi) {
            CheckResult r;
            r.check = "theoremA";
            r.instance = "N=" + sub_label(n) + " " + chi_label(*d.gt, chi);
            if (!d.irred[ni][static_cast<std::size_t>(chi)]) {
                r.status = CheckStatus::not_applicable;
                r.detail = "chi does not restrict irreducibly to N";
            } else {
                CliffordGraph gn = gb.build(d.g, chi, n);
                CliffordGraph gg = gb.build(d.g, chi, d.g);
                if (components_equal(gn, gg)) {
                    r.status = CheckStatus::pass;
                    r.detail = "components equal (" + std::to_string(gn.component_count) + ")";
                } else {
                    r.status = CheckStatus::fail;
                    r.detail = "component partitions differ: C_N has " +
                               std::to_string(gn.component_count) + ", C_G has " +
                               std::to_string(gg.component_count);
                    r.payload_json = two_graph_payload(gn, gg);
                }
            }
            rep.checks.push_back(std::move(r));
        }
    }
    return rep;
}

VerificationReport check_corollary_B(GraphBuilder& gb, const Group& g, const std::string& name) {
    VerificationReport rep;
    rep.group = name;
    SweepData d = sweep_data(gb, g);
    for (std::size_t ni = 0; ni < d.normals.size(); ++ni) {
        const GroupClassesPtr& n = d.normals[ni];
        for (int chi = 0; chi < d.gt->size(); ++chi) {
            CheckResult r;
            r.check = "corollaryB";
            r.instance = "N=" + sub_label(n) + " " + chi_label(*d.gt, chi);
            bool hyp = d.irred[ni][static_cast<std::size_t>(chi)];
            if (hyp)
                for (std::size_t mi = 0; mi < d.normals.size() && hyp; ++mi)
                    if (d.normals[mi]->group.subset_of(n->group) &&
                        !d.homog[mi][static_cast<std::size_t>(chi)])
                        hyp = false;
            if (!hyp) {
                r.status = CheckStatus::not_applicable;
                r.detail = "hypotheses do not hold";
                rep.checks.push_back(std::move(r));
                continue;
            }
            CliffordGraph gn = gb.build(d.g, chi, n);
            CliffordGraph gg = gb.build(d.g, chi, d.g);
            auto [vn, sn] = ambient_component(gn);
            auto [vg, sg] = ambient_component(gg);
            bool quasiprimitive = true;
            for (std::size_t mi = 0; mi < d.normals.size(); ++mi)
                if (!d.homog[mi][static_cast<std::size_t>(chi)]) quasiprimitive = false;
            if (sn == 1 && sg == 1 && quasiprimitive) {
                r.status = CheckStatus::pass;
                r.detail = "(G,chi) singleton in C_N and C_G; chi quasiprimitive";
            } else {
                r.status = CheckStatus::fail;
                r.detail = "singleton-in-C_N=" + std::to_string(sn == 1) +
                           " singleton-in-C_G=" + std::to_string(sg == 1) +
                           " quasiprimitive=" + std::to_string(quasiprimitive);
                r.payload_json = two_graph_payload(gn, gg);
            }
            rep.checks.push_back(std::move(r));
        }
    }
    return rep;
}

VerificationReport check_remark_dade(GraphBuilder& gb, const Group& g, const std::string& name) {
    VerificationReport rep;
    rep.group = name;
    SweepData d = sweep_data(gb, g);
    for (std::size_t ni = 0; ni < d.normals.size(); ++ni) {
        const GroupClassesPtr& n = d.normals[ni];
        if (n->order() % 2 == 0) continue;  // scope: odd |N| only
        for (int chi = 0; chi < d.gt->size(); ++chi) {
            CheckResult r;
            r.check = "dade";
            r.instance = "N=" + sub_label(n) + " " + chi_label(*d.gt, chi);
            if (!d.irred[ni][static_cast<std::size_t>(chi)]) {
                r.status = CheckStatus::not_applicable;
                r.detail = "chi does not restrict irreducibly to N";
            } else {
                CliffordGraph gn = gb.build(d.g, chi, n);
                if (is_connected(gn)) {
                    r.status = CheckStatus::pass;
                    r.detail = "C_N(chi) connected on " + std::to_string(gn.vertices.size()) +
                               " vertices";
                } else {
                    r.status = CheckStatus::fail;
                    r.detail = "C_N(chi) has " + std::to_string(gn.component_count) + " components";
                    r.payload_json = "{\"graph\":" + graph_to_json(gn) + "}";
                }
            }
            rep.checks.push_back(std::move(r));
        }
    }
    return rep;
}

VerificationReport check_remark_isaacs(GraphBuilder& gb, const Group& g, const std::string& name) {
    VerificationReport rep;
    rep.group = name;
    SweepData d = sweep_data(gb, g);
    if (!is_solvable(g)) {
        CheckResult r;
        r.check = "isaacs";
        r.instance = "group";
        r.status = CheckStatus::not_applicable;
        r.detail = "group is not solvable";
        rep.checks.push_back(std::move(r));
        return rep;
    }
    for (int chi = 0; chi < d.gt->size(); ++chi) {
        if (d.gt->degrees[static_cast<std::size_t>(chi)] % 2 == 0) continue;  // scope: odd degree
        CheckResult r;
        r.check = "isaacs";
        r.instance = chi_label(*d.gt, chi);
        CliffordGraph gg = gb.build(d.g, chi, d.g);
        if (is_connected(gg)) {
            r.status = CheckStatus::pass;
            r.detail = "C_G(chi) connected on " + std::to_string(gg.vertices.size()) + " vertices";
        } else {
            r.status = CheckStatus::fail;
            r.detail = "C_G(chi) has " + std::to_string(gg.component_count) + " components";
            r.payload_json = "{\"graph\":" + graph_to_json(gg) + "}";
        }
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

VerificationReport check_lemma(GraphBuilder& gb, const Group& g, const std::string& name) {
    VerificationReport rep;
    rep.group = name;
    Engine& eng = gb.engine();
    SweepData d = sweep_data(gb, g);
    std::map<const GroupClasses*, std::size_t> normal_index;
    for (std::size_t i = 0; i < d.normals.size(); ++i) normal_index[d.normals[i].get()] = i;
    std::map<const GroupClasses*, GroupClassesPtr> derived;
    for (const auto& r_sub : d.normals)
        derived[r_sub.get()] =
            eng.classes_from_elements(g.degree, derived_subgroup(r_sub->group).elements);

    for (std::size_t ni = 0; ni < d.normals.size(); ++ni) {
        for (std::size_t ri = 0; ri < d.normals.size(); ++ri) {
            const GroupClassesPtr& n = d.normals[ni];
            const GroupClassesPtr& r_sub = d.normals[ri];
            GroupClassesPtr l =
                eng.classes_from_elements(g.degree, intersection(n->group, r_sub->group));
            auto li = normal_index.find(l.get());
            if (li == normal_index.end())
                throw consistency_error("intersection of normal subgroups not in registry");
            int qualifying = 0;
            for (int chi = 0; chi < d.gt->size(); ++chi)
                if (d.irred[ni][static_cast<std::size_t>(chi)] &&
                    d.homog[li->second][static_cast<std::size_t>(chi)])
                    ++qualifying;

            CheckResult res;
            res.check = "lemma";
            res.instance = "N=" + sub_label(n) + " R=" + sub_label(r_sub);
            if (qualifying == 0) {
                res.status = CheckStatus::not_applicable;
                res.detail = "no chi with chi|N irreducible and chi|L homogeneous";
                rep.checks.push_back(std::move(res));
                continue;
            }
            // perfect quotient test: [R,R]L = R
            std::vector<Permutation> prod = product_set(derived[r_sub.get()]->group, l->group);
            bool perfect = prod == r_sub->group.elements;
            if (!perfect) {
                res.status = CheckStatus::not_applicable;
                res.detail = "R/L not perfect (" + std::to_string(qualifying) + " qualifying chi)";
            } else if (l->group.elements == r_sub->group.elements) {
                res.status = CheckStatus::pass;
                res.detail = "R = L as required (" + std::to_string(qualifying) + " qualifying chi)";
            } else {
                res.status = CheckStatus::fail;
                res.detail = "R/L perfect but R != L; |R|=" + std::to_string(r_sub->order()) +
                             " |L|=" + std::to_string(l->order());
                nlohmann::json j;
                j["N"] = sub_label(n);
                j["R"] = sub_label(r_sub);
                j["L"] = sub_label(l);
                res.payload_json = j.dump();
            }
            rep.checks.push_back(std::move(res));
        }
    }
    return rep;
}

VerificationReport reproduce_example(GraphBuilder& gb, const Group& gl23, const std::string& name) {
    VerificationReport rep;
    rep.group = name;
    Engine& eng = gb.engine();
    GroupClassesPtr g = eng.classes(gl23);
    CharacterTablePtr gt = eng.table(g);

    std::vector<int> deg4;
    for (int i = 0; i < gt->size(); ++i)
        if (gt->degrees[static_cast<std::size_t>(i)] == 4) deg4.push_back(i);
    {
        CheckResult r;
        r.check = "example";
        r.instance = "unique-degree-4";
        if (deg4.size() == 1) {
            r.status = CheckStatus::pass;
            r.detail = "exactly one degree-4 irreducible (index " + std::to_string(deg4[0]) + ")";
        } else {
            r.status = CheckStatus::fail;
            r.detail = std::to_string(deg4.size()) + " degree-4 irreducibles";
            r.payload_json = "{\"degrees\":" + nlohmann::json(gt->degrees).dump() + "}";
        }
        rep.checks.push_back(std::move(r));
        if (deg4.size() != 1) return rep;
    }
    const int chi = deg4[0];
    CliffordGraph gg = gb.build(g, chi, g);

    // vertex sets of C_N and C_G coincide for every N
    {
        CheckResult r;
        r.check = "example";
        r.instance = "vertex-sets-invariant";
        bool ok = true;
        for (int idx : eng.ambient(gl23).normal_indices) {
            const GroupClassesPtr& n =
                eng.ambient(gl23).subgroups[static_cast<std::size_t>(idx)];
            CliffordGraph gn = gb.build(g, chi, n);
            if (gn.vertices.size() != gg.vertices.size()) ok = false;
            for (std::size_t v = 0; ok && v < gn.vertices.size(); ++v)
                if (!gn.vertices[v].same(gg.vertices[v])) ok = false;
        }
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
        r.detail = ok ? "all C_N share the vertex set of C_G" : "vertex sets differ";
        if (!ok) r.payload_json = "{\"graph\":" + graph_to_json(gg) + "}";
        rep.checks.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.check = "example";
        r.instance = "component-count";
        std::ostringstream census;
        auto parts = gg.partition();
        for (std::size_t p = 0; p < parts.size(); ++p) {
            census << (p ? " | " : "") << "component" << p << ":";
            for (int v : parts[p]) {
                const CharPair& cp = gg.vertices[static_cast<std::size_t>(v)];
                census << " A" << cp.sub->order() << ":deg" << cp.char_degree;
            }
        }
        r.detail = "components=" + std::to_string(gg.component_count) + " [" + census.str() + "]";
        r.status = gg.component_count == 2 ? CheckStatus::pass : CheckStatus::fail;
        r.payload_json = "{\"graph\":" + graph_to_json(gg) + "}";
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

void append_jsonl(std::ostream& os, const VerificationReport& report) {
    for (const auto& c : report.checks) {
        nlohmann::json j;
        j["group"] = report.group;
        j["check"] = c.check;
        j["instance"] = c.instance;
        j["status"] = to_string(c.status);
        j["detail"] = c.detail;
        if (!c.payload_json.empty()) j["payload"] = nlohmann::json::parse(c.payload_json);
        os << j.dump() << '\n';
    }
}

}  // namespace cliff
