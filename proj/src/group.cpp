#include "cliffgraph/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cliffgraph/errors.hpp"

namespace cliff {

namespace {

std::uint64_t hash_elements(int degree, const std::vector<Permutation>& sorted_elements) {
    // FNV-1a over degree, order and the raw image bytes. Deterministic across
    // runs and generating sets.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int k = 0; k < 8; ++k) {
            h ^= (v >> (8 * k)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(degree));
    mix(sorted_elements.size());
    for (const auto& p : sorted_elements)
        for (std::uint8_t b : p.images()) {
            h ^= b;
            h *= 1099511628211ULL;
        }
    return h;
}

}  // namespace

bool Group::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

int Group::element_index(const Permutation& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elements.begin());
}

bool Group::subset_of(const Group& other) const {
    if (degree != other.degree || order() > other.order()) return false;
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(),
                         elements.end());
}

bool Group::same_elements(const Group& other) const {
    return degree == other.degree && elements == other.elements;
}

Group make_group(int degree, std::vector<Permutation> sorted_elements,
                 std::vector<Permutation> generators) {
    Group g;
    g.degree = degree;
    g.elements = std::move(sorted_elements);
    g.generators = std::move(generators);
    g.id = hash_elements(degree, g.elements);
    return g;
}

Group closure(int degree, const std::vector<Permutation>& generators, int max_order) {
    if (degree <= 0) throw input_error("group degree must be positive");
    for (const auto& p : generators)
        if (p.degree() != degree) throw input_error("generator degree mismatch");

    std::set<Permutation> seen;
    std::vector<Permutation> todo;
    Permutation e = Permutation::identity(degree);
    seen.insert(e);
    todo.push_back(e);
    for (const auto& g : generators)
        if (seen.insert(g).second) todo.push_back(g);

    for (std::size_t i = 0; i < todo.size(); ++i) {
        Permutation cur = todo[i];
        for (const auto& g : generators) {
            Permutation prod = cur * g;
            if (seen.insert(prod).second) {
                if (static_cast<int>(seen.size()) > max_order)
                    throw size_error("group order exceeds bound " + std::to_string(max_order));
                todo.push_back(std::move(prod));
            }
        }
    }
    std::vector<Permutation> elems(seen.begin(), seen.end());
    return make_group(degree, std::move(elems), generators);
}

ConjClassPartition conjugacy_classes(const Group& g) {
    const int n = static_cast<int>(g.elements.size());
    ConjClassPartition part;
    part.class_of.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (part.class_of[static_cast<std::size_t>(i)] >= 0) continue;
        int c = static_cast<int>(part.classes.size());
        std::vector<int> members;
        std::vector<int> stack{i};
        part.class_of[static_cast<std::size_t>(i)] = c;
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            members.push_back(j);
            for (const auto& t : g.generators) {
                Permutation conj = cliff::conjugate(g.elements[static_cast<std::size_t>(j)], t);
                int k = g.element_index(conj);
                if (k < 0) throw consistency_error("conjugate left the group");
                if (part.class_of[static_cast<std::size_t>(k)] < 0) {
                    part.class_of[static_cast<std::size_t>(k)] = c;
                    stack.push_back(k);
                }
            }
        }
        std::sort(members.begin(), members.end());
        part.representatives.push_back(members.front());
        part.centralizer_orders.push_back(g.order() / static_cast<long>(members.size()));
        part.classes.push_back(std::move(members));
    }
    return part;
}

namespace {

bool group_less(const Group& a, const Group& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    if (a.id != b.id) return a.id < b.id;
    return a.elements < b.elements;
}

}  // namespace

std::vector<Group> all_subgroups(const Group& g, int max_subgroups) {
    std::map<std::vector<Permutation>, int> seen;  // elements -> index
    std::vector<Group> subs;

    auto add = [&](Group h) -> bool {
        auto [it, fresh] = seen.emplace(h.elements, static_cast<int>(subs.size()));
        if (!fresh) return false;
        if (static_cast<int>(subs.size()) + 1 > max_subgroups)
            throw size_error("subgroup count exceeds bound " + std::to_string(max_subgroups));
        subs.push_back(std::move(h));
        return true;
    };

    add(closure(g.degree, {}));
    for (const auto& x : g.elements)
        if (!x.is_identity()) add(closure(g.degree, {x}));

    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].order() == g.order()) continue;
        for (const auto& x : g.elements) {
            if (subs[i].contains(x)) continue;
            std::vector<Permutation> gens = subs[i].generators;
            gens.push_back(x);
            add(closure(g.degree, gens, static_cast<int>(g.order())));
        }
    }
    std::sort(subs.begin(), subs.end(), group_less);
    return subs;
}

std::vector<Group> subgroups_of_index_dividing(const Group& g, const std::vector<Group>& subgroups,
                                               long d) {
    std::vector<Group> out;
    for (const auto& h : subgroups)
        if (h.order() > 0 && d % (g.order() / h.order()) == 0) out.push_back(h);
    return out;
}

std::vector<Group> subgroups_of_index_dividing(const Group& g, long d, int max_subgroups) {
    if (d < 1) throw input_error("index bound must be >= 1");
    return subgroups_of_index_dividing(g, all_subgroups(g, max_subgroups), d);
}

bool is_normal_in(const Group& c, const Group& a) {
    if (!c.subset_of(a)) return false;
    for (const auto& g : a.generators)
        for (const auto& x : c.elements)
            if (!c.contains(cliff::conjugate(x, g))) return false;
    return true;
}

std::vector<Group> normal_subgroups_in(const Group& a, const std::vector<Group>& subgroups_of_a) {
    std::vector<Group> out;
    for (const auto& c : subgroups_of_a)
        if (c.subset_of(a) && is_normal_in(c, a)) out.push_back(c);
    return out;
}

std::vector<Group> normal_subgroups_in(const Group& a, const Group& ambient) {
    if (!a.subset_of(ambient)) throw precondition_error("A is not a subgroup of the ambient group");
    return normal_subgroups_in(a, all_subgroups(a));
}

Group conjugate_subgroup(const Group& a, const Permutation& g) {
    std::vector<Permutation> elems;
    elems.reserve(a.elements.size());
    for (const auto& x : a.elements) elems.push_back(cliff::conjugate(x, g));
    std::sort(elems.begin(), elems.end());
    std::vector<Permutation> gens;
    gens.reserve(a.generators.size());
    for (const auto& x : a.generators) gens.push_back(cliff::conjugate(x, g));
    if (gens.empty()) gens = derive_generators(a.degree, elems);
    return make_group(a.degree, std::move(elems), std::move(gens));
}

int exponent(const Group& g) {
    long e = 1;
    for (const auto& x : g.elements) e = std::lcm(e, static_cast<long>(x.order()));
    return static_cast<int>(e);
}

Group derived_subgroup(const Group& g) {
    std::set<Permutation> comms;
    for (const auto& x : g.elements)
        for (const auto& y : g.elements)
            comms.insert(x.inverse() * y.inverse() * x * y);
    std::vector<Permutation> gens(comms.begin(), comms.end());
    Group d = closure(g.degree, gens, static_cast<int>(g.order()));
    d.generators = derive_generators(d.degree, d.elements);
    return make_group(d.degree, d.elements, d.generators);
}

bool is_solvable(const Group& g) {
    Group cur = g;
    while (cur.order() > 1) {
        Group next = derived_subgroup(cur);
        if (next.order() == cur.order()) return false;
        cur = std::move(next);
    }
    return true;
}

std::vector<Permutation> product_set(const Group& a, const Group& b) {
    std::set<Permutation> out;
    for (const auto& x : a.elements)
        for (const auto& y : b.elements) out.insert(x * y);
    return {out.begin(), out.end()};
}

std::vector<Permutation> intersection(const Group& a, const Group& b) {
    std::vector<Permutation> out;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(out));
    return out;
}

std::vector<Permutation> derive_generators(int degree, const std::vector<Permutation>& sorted_elements) {
    std::vector<Permutation> gens;
    if (sorted_elements.size() <= 1) return gens;
    std::set<Permutation> have{Permutation::identity(degree)};
    for (const auto& x : sorted_elements) {
        if (have.count(x)) continue;
        gens.push_back(x);
        Group h = closure(degree, gens, static_cast<int>(sorted_elements.size()));
        have = std::set<Permutation>(h.elements.begin(), h.elements.end());
        if (have.size() == sorted_elements.size()) break;
    }
    return gens;
}

std::string id_string(std::uint64_t id) {
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = hex[id & 0xf];
        id >>= 4;
    }
    return s;
}

}  // namespace cliff
