#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cliffgraph/errors.hpp"
#include "cliffgraph/group.hpp"

using namespace cliff;

namespace {

Group s3() { return closure(3, {parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)}); }

Group s4() { return closure(4, {parse_permutation("(1 2)", 4), parse_permutation("(1 2 3 4)", 4)}); }

Group q8() {
    return closure(8, {parse_permutation("(1 2 3 4)(5 6 7 8)", 8),
                       parse_permutation("(1 5 3 7)(2 8 4 6)", 8)});
}

// Brute-force oracle: all subsets of the element list that form subgroups.
// Only usable for tiny groups.
std::set<std::vector<Permutation>> subgroup_sets_oracle(const Group& g) {
    const std::size_t n = g.elements.size();
    REQUIRE(n <= 10);
    std::set<std::vector<Permutation>> out;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Permutation> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(g.elements[i]);
        if (subset.empty()) continue;
        bool closed = true;
        std::set<Permutation> members(subset.begin(), subset.end());
        for (const auto& x : subset)
            for (const auto& y : subset)
                if (!members.count(x * y)) {
                    closed = false;
                    break;
                }
        if (!closed) continue;
        if (!members.count(Permutation::identity(g.degree))) continue;
        out.insert(subset);
    }
    return out;
}

// Exhaustive conjugation oracle, independent of the generator-orbit route.
std::vector<std::set<Permutation>> classes_oracle(const Group& g) {
    std::vector<std::set<Permutation>> out;
    std::set<Permutation> seen;
    for (const auto& x : g.elements) {
        if (seen.count(x)) continue;
        std::set<Permutation> cl;
        for (const auto& t : g.elements) cl.insert(conjugate(x, t));
        for (const auto& y : cl) seen.insert(y);
        out.push_back(std::move(cl));
    }
    return out;
}

}  // namespace

TEST_CASE("closure basics") {
    CHECK(s3().order() == 6);  // S3 by definition
    CHECK(closure(1, {}).order() == 1);
    CHECK_THROWS_AS(closure(0, {}), input_error);
    CHECK_THROWS_AS(closure(3, {parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)}, 5),
                    size_error);
}

TEST_CASE("closure of the GL2(F3) generators has order (9-1)(9-3)") {
    Group g = closure(8, {parse_permutation("(1 4 7)(2 8 5)", 8),
                          parse_permutation("(1 3)(2 6)(5 7)", 8)});
    long q = 9;
    CHECK(g.order() == (q - 1) * (q - 3));
}

TEST_CASE("conjugacy classes against the exhaustive oracle") {
    CHECK(conjugacy_classes(closure(1, {})).classes.size() == 1);

    for (const Group& g : {s3(), q8()}) {
        auto oracle = classes_oracle(g);
        ConjClassPartition part = conjugacy_classes(g);
        REQUIRE(part.classes.size() == oracle.size());
        // oracle classes discovered in min-element order, same as the engine's
        for (std::size_t c = 0; c < oracle.size(); ++c) {
            std::set<Permutation> got;
            for (int idx : part.classes[c]) got.insert(g.elements[static_cast<std::size_t>(idx)]);
            CHECK(got == oracle[c]);
        }
    }
    CHECK(conjugacy_classes(s3()).classes.size() == 3);
    std::vector<std::size_t> sizes;
    for (const auto& c : conjugacy_classes(s3()).classes) sizes.push_back(c.size());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 2});
    CHECK(conjugacy_classes(q8()).classes.size() == 5);
}

TEST_CASE("class invariants: identity first, class equation, centralizers") {
    for (const Group& g : {s3(), s4(), q8()}) {
        ConjClassPartition part = conjugacy_classes(g);
        CHECK(g.elements[static_cast<std::size_t>(part.classes[0][0])].is_identity());
        long total = 0;
        for (std::size_t c = 0; c < part.classes.size(); ++c) {
            total += static_cast<long>(part.classes[c].size());
            CHECK(static_cast<long>(part.classes[c].size()) * part.centralizer_orders[c] ==
                  g.order());
        }
        CHECK(total == g.order());
    }
}

TEST_CASE("all_subgroups against the subset-closure oracle") {
    for (const Group& g : {s3(), q8()}) {
        auto oracle = subgroup_sets_oracle(g);
        std::vector<Group> subs = all_subgroups(g);
        REQUIRE(subs.size() == oracle.size());
        for (const auto& h : subs) CHECK(oracle.count(h.elements) == 1);
    }
    CHECK(all_subgroups(s3()).size() == 6);
    CHECK(all_subgroups(q8()).size() == 6);
    // C5: only 1 and C5 (Lagrange)
    CHECK(all_subgroups(closure(5, {parse_permutation("(1 2 3 4 5)", 5)})).size() == 2);
}

TEST_CASE("subgroup list invariants: Lagrange, conjugation closure, sorted") {
    Group g = s4();
    std::vector<Group> subs = all_subgroups(g);
    CHECK(subs.size() == 30);  // known subgroup count of S4
    std::set<std::vector<Permutation>> element_sets;
    for (const auto& h : subs) {
        CHECK(g.order() % h.order() == 0);
        element_sets.insert(h.elements);
    }
    CHECK(element_sets.size() == subs.size());
    for (const auto& h : subs)
        for (const auto& x : g.generators)
            CHECK(element_sets.count(conjugate_subgroup(h, x).elements) == 1);
    CHECK(std::is_sorted(subs.begin(), subs.end(), [](const Group& a, const Group& b) {
        return std::make_tuple(a.order(), a.id) < std::make_tuple(b.order(), b.id);
    }));
}

TEST_CASE("subgroups_of_index_dividing") {
    Group g = s3();
    std::vector<Group> d2 = subgroups_of_index_dividing(g, 2);
    REQUIRE(d2.size() == 2);  // A3 and S3
    CHECK(d2[0].order() == 3);
    CHECK(d2[1].order() == 6);

    std::vector<Group> d1 = subgroups_of_index_dividing(g, 1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].order() == 6);

    // S4, d=3: S4 itself and the three Sylow-2 subgroups of order 8.
    // Oracle: subgroups found as closures of all pairs (every subgroup of S4
    // is 2-generated), independent of the iterated-extension route.
    Group s = s4();
    std::set<std::vector<Permutation>> pair_closures;
    for (const auto& x : s.elements)
        for (const auto& y : s.elements) pair_closures.insert(closure(4, {x, y}).elements);
    int oracle_order8 = 0;
    for (const auto& elems : pair_closures)
        if (elems.size() == 8) ++oracle_order8;
    CHECK(oracle_order8 == 3);
    std::vector<Group> d3 = subgroups_of_index_dividing(s, 3);
    REQUIRE(d3.size() == 4);
    CHECK(d3[0].order() == 8);
    CHECK(d3[1].order() == 8);
    CHECK(d3[2].order() == 8);
    CHECK(d3[3].order() == 24);
}

TEST_CASE("normal subgroups") {
    Group g = s3();
    std::vector<Group> normals = normal_subgroups_in(g, g);
    REQUIRE(normals.size() == 3);  // 1, A3, S3 (brute-force normality below)
    for (const auto& c : normals)
        for (const auto& x : g.elements)
            CHECK(conjugate_subgroup(c, x).elements == c.elements);

    // abelian: every subgroup normal
    Group c6 = closure(5, {parse_permutation("(1 2 3)(4 5)", 5)});
    CHECK(normal_subgroups_in(c6, c6).size() == all_subgroups(c6).size());

    // Q8: all six subgroups normal
    CHECK(normal_subgroups_in(q8(), q8()).size() == 6);
}

TEST_CASE("conjugate_subgroup") {
    Group g = s3();
    Group c2 = closure(3, {parse_permutation("(1 2)", 3)});
    Group conj = conjugate_subgroup(c2, parse_permutation("(1 2 3)", 3));
    CHECK(conj.contains(parse_permutation("(2 3)", 3)));
    CHECK(conj.order() == 2);
    // normal subgroup: same canonical id
    Group a3 = closure(3, {parse_permutation("(1 2 3)", 3)});
    CHECK(conjugate_subgroup(a3, parse_permutation("(1 2)", 3)).id == a3.id);
    CHECK(conjugate_subgroup(c2, Permutation::identity(3)).id == c2.id);
}

TEST_CASE("exponent") {
    // lcm oracle over element orders
    for (const Group& g : {s3(), q8(), s4()}) {
        long e = 1;
        for (const auto& x : g.elements) e = std::lcm(e, static_cast<long>(x.order()));
        CHECK(exponent(g) == e);
    }
    CHECK(exponent(s3()) == 6);
    CHECK(exponent(closure(4, {parse_permutation("(1 2 3 4)", 4)})) == 4);
    CHECK(exponent(q8()) == 4);
}

TEST_CASE("canonical ids are generator independent") {
    Group a = closure(3, {parse_permutation("(1 2 3)", 3)});
    Group b = closure(3, {parse_permutation("(1 3 2)", 3)});
    CHECK(a.id == b.id);
    CHECK(a.elements == b.elements);

    Group s_a = s3();
    Group s_b = closure(3, {parse_permutation("(2 3)", 3), parse_permutation("(1 3 2)", 3)});
    CHECK(s_a.id == s_b.id);
}

TEST_CASE("derived subgroup and solvability") {
    CHECK(derived_subgroup(s3()).order() == 3);
    CHECK(derived_subgroup(s4()).order() == 12);
    CHECK(derived_subgroup(q8()).order() == 2);
    CHECK(is_solvable(s4()));
    CHECK(is_solvable(q8()));
    Group a5_like = s4();  // all catalog-scale groups here are solvable
    CHECK(is_solvable(a5_like));
}

TEST_CASE("product set and intersection") {
    Group g = s3();
    Group a3 = closure(3, {parse_permutation("(1 2 3)", 3)});
    Group c2 = closure(3, {parse_permutation("(1 2)", 3)});
    CHECK(product_set(a3, c2).size() == 6);
    CHECK(intersection(a3, c2).size() == 1);
    CHECK(intersection(g, a3) == a3.elements);
}
