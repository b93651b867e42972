#include <doctest.h>

#include <set>

#include "cliffgraph/clifford.hpp"
#include "cliffgraph/errors.hpp"

using namespace cliff;

namespace {

struct Fixture {
    Engine eng;

    GroupClassesPtr group(std::initializer_list<const char*> gens, int degree) {
        std::vector<Permutation> g;
        for (const char* t : gens) g.push_back(parse_permutation(t, degree));
        return eng.classes(closure(degree, g));
    }
};

int nontrivial_linear(const CharacterTable& t) {
    for (int i = 0; i < t.size(); ++i) {
        if (t.degrees[static_cast<std::size_t>(i)] != 1) continue;
        bool all_one = true;
        for (const auto& v : t.irreducibles[static_cast<std::size_t>(i)].values)
            if (!(v == Cyclotomic(1))) all_one = false;
        if (!all_one) return i;
    }
    return -1;
}

}  // namespace

TEST_CASE("conjugate_character") {
    Fixture f;
    auto s3 = f.group({"(1 2)", "(1 2 3)"}, 3);
    auto c3 = f.group({"(1 2 3)"}, 3);
    CharacterTablePtr tc3 = f.eng.table(c3);
    int omega = nontrivial_linear(*tc3);
    REQUIRE(omega >= 0);
    const ClassFunction& w = tc3->irreducibles[static_cast<std::size_t>(omega)];

    // a inside C: class functions are invariant
    ClassFunction same = conjugate_character(f.eng, w, parse_permutation("(1 2 3)", 3));
    CHECK(same.gc.get() == c3.get());
    CHECK(same.values == w.values);

    // a = (1 2) inverts C3, sending omega to its conjugate
    ClassFunction swapped = conjugate_character(f.eng, w, parse_permutation("(1 2)", 3));
    CHECK(swapped.gc.get() == c3.get());
    CHECK(swapped.values[1] == w.values[1].conjugate());
    CHECK(!(swapped.values == w.values));

    ClassFunction ident = conjugate_character(f.eng, w, Permutation::identity(3));
    CHECK(ident.values == w.values);

    // conjugating off the normalizer moves the subgroup
    auto c2 = f.group({"(1 2)"}, 3);
    CharacterTablePtr tc2 = f.eng.table(c2);
    ClassFunction moved =
        conjugate_character(f.eng, tc2->irreducibles[0], parse_permutation("(1 2 3)", 3));
    CHECK(moved.gc->group.contains(parse_permutation("(2 3)", 3)));
}

TEST_CASE("inertia_group") {
    Fixture f;
    auto s3 = f.group({"(1 2)", "(1 2 3)"}, 3);
    auto c3 = f.group({"(1 2 3)"}, 3);
    CharacterTablePtr tc3 = f.eng.table(c3);

    // trivial character: stabilizer is all of A
    int triv = -1;
    for (int i = 0; i < tc3->size(); ++i) {
        bool all_one = true;
        for (const auto& v : tc3->irreducibles[static_cast<std::size_t>(i)].values)
            if (!(v == Cyclotomic(1))) all_one = false;
        if (all_one) triv = i;
    }
    REQUIRE(triv >= 0);
    InertiaDatum full = inertia_group(f.eng, s3, c3, triv);
    CHECK(full.stabilizer.get() == s3.get());

    // omega: transpositions invert it, so B = C3
    int omega = nontrivial_linear(*tc3);
    InertiaDatum inert = inertia_group(f.eng, s3, c3, omega);
    CHECK(inert.stabilizer.get() == c3.get());
    CHECK(inert.gamma == omega);

    // Q8 with C = <i>: j inverts i, so the faithful linear has stabilizer C4
    auto q8 = f.group({"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}, 8);
    auto c4 = f.group({"(1 2 3 4)(5 6 7 8)"}, 8);
    CharacterTablePtr tc4 = f.eng.table(c4);
    int faithful = -1;
    for (int i = 0; i < tc4->size(); ++i)
        if (tc4->irreducibles[static_cast<std::size_t>(i)].values[1] == Cyclotomic::root_of_unity(4, 1))
            faithful = i;
    REQUIRE(faithful >= 0);
    InertiaDatum qi = inertia_group(f.eng, q8, c4, faithful);
    CHECK(qi.stabilizer.get() == c4.get());

    // C must be normal in A
    auto c2 = f.group({"(1 2)"}, 3);
    CHECK_THROWS_AS(inertia_group(f.eng, s3, c2, 0), precondition_error);
}

TEST_CASE("irr_over") {
    Fixture f;
    auto s3 = f.group({"(1 2)", "(1 2 3)"}, 3);
    auto c3 = f.group({"(1 2 3)"}, 3);
    CharacterTablePtr tc3 = f.eng.table(c3);
    int omega = nontrivial_linear(*tc3);
    int triv = 0;
    for (int i = 0; i < tc3->size(); ++i) {
        bool all_one = true;
        for (const auto& v : tc3->irreducibles[static_cast<std::size_t>(i)].values)
            if (!(v == Cyclotomic(1))) all_one = false;
        if (all_one) triv = i;
    }

    // B = C: only gamma itself lies over gamma
    std::vector<int> self = irr_over(f.eng, c3, c3, omega);
    CHECK(self == std::vector<int>{omega});

    // over omega in S3: just the degree-2 character
    std::vector<int> over_omega = irr_over(f.eng, s3, c3, omega);
    CharacterTablePtr t3 = f.eng.table(s3);
    REQUIRE(over_omega.size() == 1);
    CHECK(t3->degrees[static_cast<std::size_t>(over_omega[0])] == 2);

    // over the trivial character of C3: the two linears of S3
    std::vector<int> over_triv = irr_over(f.eng, s3, c3, triv);
    REQUIRE(over_triv.size() == 2);
    for (int i : over_triv) CHECK(t3->degrees[static_cast<std::size_t>(i)] == 1);
}

TEST_CASE("clifford_correspondent") {
    Fixture f;
    auto s3 = f.group({"(1 2)", "(1 2 3)"}, 3);
    auto c3 = f.group({"(1 2 3)"}, 3);
    CharacterTablePtr t3 = f.eng.table(s3);
    CharacterTablePtr tc3 = f.eng.table(c3);
    int omega = nontrivial_linear(*tc3);
    int deg2 = -1;
    for (int i = 0; i < t3->size(); ++i)
        if (t3->degrees[static_cast<std::size_t>(i)] == 2) deg2 = i;

    // invariant gamma (B = A): the correspondent is alpha itself
    auto [b_full, beta_full] =
        clifford_correspondent(f.eng, s3, deg2, f.eng.classes(closure(3, {})), 0);
    CHECK(b_full.get() == s3.get());
    CHECK(beta_full == deg2);

    // omega under the degree-2 character: correspondent is (C3, omega)
    auto [b, beta] = clifford_correspondent(f.eng, s3, deg2, c3, omega);
    CHECK(b.get() == c3.get());
    CHECK(beta == omega);

    // Q8 example: A = Q8, C = <i>, gamma faithful -> (C4, gamma)
    auto q8 = f.group({"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}, 8);
    auto c4 = f.group({"(1 2 3 4)(5 6 7 8)"}, 8);
    CharacterTablePtr tq = f.eng.table(q8);
    CharacterTablePtr tc4 = f.eng.table(c4);
    int qdeg2 = -1;
    for (int i = 0; i < tq->size(); ++i)
        if (tq->degrees[static_cast<std::size_t>(i)] == 2) qdeg2 = i;
    int faithful = -1;
    for (int i = 0; i < tc4->size(); ++i)
        if (tc4->irreducibles[static_cast<std::size_t>(i)].values[1] ==
            Cyclotomic::root_of_unity(4, 1))
            faithful = i;
    auto [qb, qbeta] = clifford_correspondent(f.eng, q8, qdeg2, c4, faithful);
    CHECK(qb.get() == c4.get());
    CHECK(qbeta == faithful);

    // gamma not under alpha is a precondition error
    int triv_c3 = (omega == 0) ? 1 : 0;
    bool found_triv = false;
    for (int i = 0; i < tc3->size(); ++i) {
        bool all_one = true;
        for (const auto& v : tc3->irreducibles[static_cast<std::size_t>(i)].values)
            if (!(v == Cyclotomic(1))) all_one = false;
        if (all_one) {
            triv_c3 = i;
            found_triv = true;
        }
    }
    REQUIRE(found_triv);
    CHECK_THROWS_AS(clifford_correspondent(f.eng, s3, deg2, c3, triv_c3), precondition_error);
}

TEST_CASE("correspondence transitivity: beta^G = chi when alpha^G = chi") {
    Fixture f;
    auto s4 = f.group({"(1 2)", "(1 2 3 4)"}, 4);
    auto a4 = f.group({"(1 2)(3 4)", "(1 2 3)"}, 4);
    CharacterTablePtr t4 = f.eng.table(s4);
    CharacterTablePtr ta4 = f.eng.table(a4);
    // every (alpha in Irr(A4), gamma constituent over V4) correspondent
    auto v4 = f.group({"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
    CharacterTablePtr tv4 = f.eng.table(v4);
    for (int alpha = 0; alpha < ta4->size(); ++alpha) {
        ClassFunction res = restrict_to(ta4->irreducibles[static_cast<std::size_t>(alpha)], v4);
        for (const auto& [gamma, mult] : decompose(res, *tv4)) {
            auto [b, beta] = clifford_correspondent(f.eng, a4, alpha, v4, gamma);
            // beta^A4 = alpha, so beta^S4 = alpha^S4 (transitivity)
            CHECK(f.eng.induced_values(s4, b, beta) ==
                  induce_to(ta4->irreducibles[static_cast<std::size_t>(alpha)], s4).values);
        }
    }
}

TEST_CASE("clifford bijection on small groups") {
    Fixture f;
    // for each (A, C normal in A, gamma): induction is a bijection
    // Irr(Stab | gamma) -> Irr(A | gamma)
    std::vector<GroupClassesPtr> groups = {
        f.group({"(1 2)", "(1 2 3)"}, 3),                      // S3
        f.group({"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}, 8),  // Q8
        f.group({"(1 2)(3 4)", "(1 2 3)"}, 4),                 // A4
    };
    for (const auto& a : groups) {
        const Engine::Ambient& amb = f.eng.ambient(a->group);
        for (int ci : amb.normal_indices) {
            const GroupClassesPtr& c = amb.subgroups[static_cast<std::size_t>(ci)];
            CharacterTablePtr ct = f.eng.table(c);
            for (int gamma = 0; gamma < ct->size(); ++gamma) {
                InertiaDatum inert = inertia_group(f.eng, a, c, gamma);
                std::vector<int> source = irr_over(f.eng, inert.stabilizer, c, gamma);
                std::vector<int> target = irr_over(f.eng, a, c, gamma);
                std::set<int> images;
                CharacterTablePtr at = f.eng.table(a);
                for (int beta : source) {
                    const std::vector<Cyclotomic>& ind =
                        f.eng.induced_values(a, inert.stabilizer, beta);
                    int idx = at->index_of(ind);
                    REQUIRE(idx >= 0);  // induced correspondent is irreducible
                    images.insert(idx);
                }
                CHECK(images.size() == source.size());  // injective
                CHECK(images == std::set<int>(target.begin(), target.end()));  // onto
            }
        }
    }
}

TEST_CASE("conjugation equivariance of the correspondence") {
    Fixture f;
    auto s4 = f.group({"(1 2)", "(1 2 3 4)"}, 4);
    auto a4 = f.group({"(1 2)(3 4)", "(1 2 3)"}, 4);
    auto v4 = f.group({"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
    CharacterTablePtr ta4 = f.eng.table(a4);
    CharacterTablePtr tv4 = f.eng.table(v4);
    for (int alpha = 0; alpha < ta4->size(); ++alpha) {
        ClassFunction res = restrict_to(ta4->irreducibles[static_cast<std::size_t>(alpha)], v4);
        for (const auto& [gamma, mult] : decompose(res, *tv4)) {
            auto [b, beta] = clifford_correspondent(f.eng, a4, alpha, v4, gamma);
            for (const auto& g : s4->group.elements) {
                // transport the whole configuration by g
                Group a_conj = conjugate_subgroup(a4->group, g);
                Group c_conj = conjugate_subgroup(v4->group, g);
                GroupClassesPtr ag = f.eng.classes(a_conj);
                GroupClassesPtr cg = f.eng.classes(c_conj);
                ClassFunction alpha_g = conjugate_character(
                    f.eng, ta4->irreducibles[static_cast<std::size_t>(alpha)], g);
                ClassFunction gamma_g = conjugate_character(
                    f.eng, tv4->irreducibles[static_cast<std::size_t>(gamma)], g);
                int alpha_g_idx = f.eng.table(ag)->index_of(alpha_g.values);
                int gamma_g_idx = f.eng.table(cg)->index_of(gamma_g.values);
                REQUIRE(alpha_g_idx >= 0);
                REQUIRE(gamma_g_idx >= 0);
                auto [bg, betag] =
                    clifford_correspondent(f.eng, ag, alpha_g_idx, cg, gamma_g_idx);
                // the result is the g-conjugate of (b, beta)
                CHECK(bg->group.elements == conjugate_subgroup(b->group, g).elements);
                ClassFunction beta_g = conjugate_character(
                    f.eng, f.eng.table(b)->irreducibles[static_cast<std::size_t>(beta)], g);
                CHECK(f.eng.table(bg)->index_of(beta_g.values) == betag);
            }
        }
    }
}
