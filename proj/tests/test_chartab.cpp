#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cliffgraph/chartab.hpp"
#include "cliffgraph/errors.hpp"

using namespace cliff;

namespace {

GroupClassesPtr classes_of(std::initializer_list<const char*> gens, int degree) {
    std::vector<Permutation> g;
    for (const char* t : gens) g.push_back(parse_permutation(t, degree));
    return make_group_classes(closure(degree, g));
}

GroupClassesPtr trivial_classes(int degree) { return make_group_classes(closure(degree, {})); }

std::multiset<long> degree_multiset(const CharacterTable& t) {
    return {t.degrees.begin(), t.degrees.end()};
}

// Independent orthogonality oracle: sum over all group elements rather than
// class-weighted sums.
Cyclotomic element_sum_inner(const ClassFunction& f, const ClassFunction& h) {
    Cyclotomic acc;
    const GroupClasses& gc = *f.gc;
    for (const auto& x : gc.group.elements) {
        int c = gc.class_of(x);
        acc += f.at_class(c) * h.at_class(c).conjugate();
    }
    return acc.scaled(Rational(1, gc.order()));
}

}  // namespace

TEST_CASE("dixon prime choice") {
    CHECK(dixon_prime(6, 6) == 7);     // 7 = 1 mod 6, 49 > 24
    CHECK(dixon_prime(48, 24) == 73);  // 25 and 49 are composite
    CHECK(dixon_prime(8, 4) == 13);    // 5*5 = 25 < 32, 9 composite
    CHECK(dixon_prime(1, 1) == 3);     // 2*2 = 4 is not > 4
}

TEST_CASE("C2 table") {
    auto gc = classes_of({"(1 2)"}, 2);
    CharacterTable t = compute_character_table(gc);
    REQUIRE(t.size() == 2);
    CHECK(t.degrees == std::vector<long>{1, 1});
    // canonical order: rendered row ("1","-1") sorts before ("1","1")
    CHECK(t.irreducibles[0].values[1] == Cyclotomic(-1));
    CHECK(t.irreducibles[1].values[1] == Cyclotomic(1));
}

TEST_CASE("trivial group table") {
    CharacterTable t = compute_character_table(trivial_classes(1));
    REQUIRE(t.size() == 1);
    CHECK(t.degrees[0] == 1);
}

TEST_CASE("S3 table with orthogonality oracle") {
    auto gc = classes_of({"(1 2)", "(1 2 3)"}, 3);
    CharacterTable t = compute_character_table(gc);
    CHECK(degree_multiset(t) == std::multiset<long>{1, 1, 2});
    long sum_sq = 0;
    for (long d : t.degrees) sum_sq += d * d;
    CHECK(sum_sq == 6);
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) {
            Cyclotomic ip = element_sum_inner(t.irreducibles[i], t.irreducibles[j]);
            CHECK(ip.as_rational_integer().value() == (i == j ? 1 : 0));
        }
}

TEST_CASE("GL2(F3) degrees include a unique degree 4") {
    auto gc = classes_of({"(1 4 7)(2 8 5)", "(1 3)(2 6)(5 7)"}, 8);
    CharacterTable t = compute_character_table(gc);
    CHECK(degree_multiset(t) == std::multiset<long>{1, 1, 2, 2, 2, 3, 3, 4});
    long sum_sq = 0;
    for (long d : t.degrees) sum_sq += d * d;
    CHECK(sum_sq == 48);
    for (int i = 0; i < t.size(); ++i) {
        Cyclotomic ip = element_sum_inner(t.irreducibles[i], t.irreducibles[i]);
        CHECK(ip.as_rational_integer().value() == 1);
    }
}

TEST_CASE("SL2(F3) table") {
    auto gc = classes_of({"(1 6 2 3)(4 7 8 5)", "(1 4 7)(2 8 5)"}, 8);
    CHECK(gc->order() == 24);
    CharacterTable t = compute_character_table(gc);
    CHECK(degree_multiset(t) == std::multiset<long>{1, 1, 1, 2, 2, 2, 3});
}

TEST_CASE("inner products") {
    auto gc = classes_of({"(1 2)", "(1 2 3)"}, 3);
    CharacterTable t = compute_character_table(gc);
    for (int i = 0; i < t.size(); ++i)
        CHECK(inner_product(t.irreducibles[i], t.irreducibles[i]).as_rational_integer().value() ==
              1);

    // <1_G, regular> = 1
    ClassFunction regular;
    regular.gc = gc;
    regular.values.assign(static_cast<std::size_t>(gc->class_count()), Cyclotomic(0));
    regular.values[0] = Cyclotomic(gc->order());
    int trivial_idx = -1;
    for (int i = 0; i < t.size(); ++i) {
        bool all_one = true;
        for (const auto& v : t.irreducibles[i].values)
            if (!(v == Cyclotomic(1))) all_one = false;
        if (all_one) trivial_idx = i;
    }
    REQUIRE(trivial_idx >= 0);
    CHECK(inner_product(t.irreducibles[trivial_idx], regular).as_rational_integer().value() == 1);

    auto other = classes_of({"(1 2 3)"}, 3);
    CharacterTable ot = compute_character_table(other);
    CHECK_THROWS_AS(inner_product(t.irreducibles[0], ot.irreducibles[0]), precondition_error);
}

TEST_CASE("restriction") {
    auto s3 = classes_of({"(1 2)", "(1 2 3)"}, 3);
    CharacterTable t3 = compute_character_table(s3);
    // restrict(chi, G) = chi
    for (int i = 0; i < t3.size(); ++i)
        CHECK(restrict_to(t3.irreducibles[i], s3).values == t3.irreducibles[i].values);

    // S3 degree-2 restricted to C3: reducible, two distinct linear constituents
    auto c3 = classes_of({"(1 2 3)"}, 3);
    CharacterTable tc3 = compute_character_table(c3);
    int deg2 = -1;
    for (int i = 0; i < t3.size(); ++i)
        if (t3.degrees[i] == 2) deg2 = i;
    ClassFunction res = restrict_to(t3.irreducibles[deg2], c3);
    CHECK(inner_product(res, res).as_rational_integer().value() == 2);
    auto parts = decompose(res, tc3);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == 1);
    CHECK(parts[1].second == 1);
    // the two constituents are the conjugate pair of nontrivial linears
    CHECK(tc3.irreducibles[parts[0].first].values[1].conjugate() ==
          tc3.irreducibles[parts[1].first].values[1]);

    // S4 degree-3 restricted to A4 stays irreducible
    auto s4 = classes_of({"(1 2)", "(1 2 3 4)"}, 4);
    auto a4 = classes_of({"(1 2)(3 4)", "(1 2 3)"}, 4);
    CharacterTable t4 = compute_character_table(s4);
    int deg3 = -1;
    for (int i = 0; i < t4.size(); ++i)
        if (t4.degrees[i] == 3) deg3 = i;
    ClassFunction res3 = restrict_to(t4.irreducibles[deg3], a4);
    CHECK(inner_product(res3, res3).as_rational_integer().value() == 1);

    CHECK_THROWS_AS(restrict_to(t4.irreducibles[0], s3), precondition_error);
}

TEST_CASE("induction") {
    auto s3 = classes_of({"(1 2)", "(1 2 3)"}, 3);
    CharacterTable t3 = compute_character_table(s3);

    // inducing the trivial character of the trivial subgroup gives the
    // regular character
    auto triv = trivial_classes(3);
    CharacterTable tt = compute_character_table(triv);
    ClassFunction reg = induce_to(tt.irreducibles[0], s3);
    CHECK(reg.values[0] == Cyclotomic(6));
    CHECK(reg.values[1] == Cyclotomic(0));
    CHECK(reg.values[2] == Cyclotomic(0));

    // inducing a nontrivial linear of C3 gives the degree-2 irreducible:
    // values (2, 0, -1) in class order (identity, transpositions, 3-cycles)
    auto c3 = classes_of({"(1 2 3)"}, 3);
    CharacterTable tc3 = compute_character_table(c3);
    int omega = -1;
    for (int i = 0; i < tc3.size(); ++i)
        if (!(tc3.irreducibles[i].values[1] == Cyclotomic(1))) {
            omega = i;
            break;
        }
    REQUIRE(omega >= 0);
    ClassFunction ind = induce_to(tc3.irreducibles[omega], s3);
    CHECK(ind.values[0] == Cyclotomic(2));
    CHECK(ind.values[1] == Cyclotomic(0));
    CHECK(ind.values[2] == Cyclotomic(-1));
    CHECK(inner_product(ind, ind).as_rational_integer().value() == 1);

    // Frobenius reciprocity: <omega^G, chi_deg2> = <omega, chi_deg2 | C3> = 1
    int deg2 = -1;
    for (int i = 0; i < t3.size(); ++i)
        if (t3.degrees[i] == 2) deg2 = i;
    CHECK(inner_product(ind, t3.irreducibles[deg2]).as_rational_integer().value() == 1);
    CHECK(inner_product(tc3.irreducibles[omega], restrict_to(t3.irreducibles[deg2], c3))
              .as_rational_integer()
              .value() == 1);

    // induction degree: (alpha^G)(1) = |G:A| * alpha(1)
    CHECK(ind.degree_int() == 2);
}

TEST_CASE("Frobenius reciprocity over random subgroup pairs") {
    auto s4 = classes_of({"(1 2)", "(1 2 3 4)"}, 4);
    CharacterTable t4 = compute_character_table(s4);
    std::vector<Group> subs = all_subgroups(s4->group);
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        const Group& a = subs[pick(rng)];
        GroupClassesPtr agc = make_group_classes(a);
        CharacterTable ta = compute_character_table(agc);
        std::uniform_int_distribution<int> pick_alpha(0, ta.size() - 1);
        std::uniform_int_distribution<int> pick_chi(0, t4.size() - 1);
        int alpha = pick_alpha(rng);
        int chi = pick_chi(rng);
        Cyclotomic lhs = inner_product(induce_to(ta.irreducibles[alpha], s4),
                                       t4.irreducibles[chi]);
        Cyclotomic rhs = inner_product(ta.irreducibles[alpha],
                                       restrict_to(t4.irreducibles[chi], agc));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("decompose") {
    auto s3 = classes_of({"(1 2)", "(1 2 3)"}, 3);
    CharacterTable t = compute_character_table(s3);
    for (int i = 0; i < t.size(); ++i) {
        auto parts = decompose(t.irreducibles[i], t);
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].first == i);
        CHECK(parts[0].second == 1);
    }
    // regular character: multiplicities equal degrees
    ClassFunction regular;
    regular.gc = s3;
    regular.values.assign(3, Cyclotomic(0));
    regular.values[0] = Cyclotomic(6);
    auto parts = decompose(regular, t);
    REQUIRE(parts.size() == t.irreducibles.size());
    for (const auto& [idx, mult] : parts) CHECK(mult == t.degrees[static_cast<std::size_t>(idx)]);

    // non-characters are rejected loudly
    ClassFunction half;
    half.gc = s3;
    half.values = t.irreducibles[2].values;
    for (auto& v : half.values) v = v.scaled(Rational(1, 2));
    CHECK_THROWS_AS(decompose(half, t), decomposition_error);
    ClassFunction neg;
    neg.gc = s3;
    neg.values = t.irreducibles[2].values;
    for (auto& v : neg.values) v = -v;
    CHECK_THROWS_AS(decompose(neg, t), decomposition_error);
}

TEST_CASE("is_homogeneous") {
    auto s3 = classes_of({"(1 2)", "(1 2 3)"}, 3);
    auto c3 = classes_of({"(1 2 3)"}, 3);
    CharacterTable t3 = compute_character_table(s3);
    CharacterTable tc3 = compute_character_table(c3);
    for (int i = 0; i < t3.size(); ++i) CHECK(is_homogeneous(t3.irreducibles[i], t3));
    int deg2 = -1;
    for (int i = 0; i < t3.size(); ++i)
        if (t3.degrees[i] == 2) deg2 = i;
    CHECK(!is_homogeneous(restrict_to(t3.irreducibles[deg2], c3), tc3));

    // SL2(3): faithful degree-2 restricted to the center is 2 * (faithful
    // linear of Z), homogeneous
    auto sl = classes_of({"(1 6 2 3)(4 7 8 5)", "(1 4 7)(2 8 5)"}, 8);
    CharacterTable tsl = compute_character_table(sl);
    Permutation minus_one = parse_permutation("(1 2)(3 6)(4 8)(5 7)", 8);
    REQUIRE(sl->group.contains(minus_one));
    auto z = make_group_classes(closure(8, {minus_one}));
    CharacterTable tz = compute_character_table(z);
    bool found_faithful_deg2 = false;
    for (int i = 0; i < tsl.size(); ++i) {
        if (tsl.degrees[i] != 2) continue;
        ClassFunction res = restrict_to(tsl.irreducibles[i], z);
        CHECK(is_homogeneous(res, tz));
        auto parts = decompose(res, tz);
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].second == 2);
        // the constituent is the faithful linear (value -1 at -1)
        if (tz.irreducibles[parts[0].first].values[1] == Cyclotomic(-1)) found_faithful_deg2 = true;
    }
    CHECK(found_faithful_deg2);
}

TEST_CASE("character values are algebraic integers and tables are deterministic") {
    auto make = [] {
        return classes_of({"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}, 8);  // Q8
    };
    CharacterTable t1 = compute_character_table(make());
    CharacterTable t2 = compute_character_table(make());
    REQUIRE(t1.size() == t2.size());
    for (int i = 0; i < t1.size(); ++i) {
        CHECK(t1.irreducibles[i].values == t2.irreducibles[i].values);
        for (const auto& v : t1.irreducibles[i].values) CHECK(v.has_integral_coefficients());
    }
    CHECK(degree_multiset(t1) == std::multiset<long>{1, 1, 1, 1, 2});
}
