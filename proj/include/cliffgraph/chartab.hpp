#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "cliffgraph/cyclo.hpp"
#include "cliffgraph/group.hpp"

namespace cliff {

// A group together with its conjugacy class data. Shared immutably by every
// class function on the group.
struct GroupClasses {
    Group group;
    ConjClassPartition classes;
    int group_exponent = 1;

    long order() const { return group.order(); }
    int class_count() const { return static_cast<int>(classes.classes.size()); }
    const Permutation& rep(int c) const {
        return group.elements[static_cast<std::size_t>(classes.representatives[static_cast<std::size_t>(c)])];
    }
    // Class index of an element of the group; throws if absent.
    int class_of(const Permutation& p) const;
};

using GroupClassesPtr = std::shared_ptr<const GroupClasses>;

GroupClassesPtr make_group_classes(Group g);

struct ClassFunction {
    GroupClassesPtr gc;
    std::vector<Cyclotomic> values;  // one per conjugacy class

    const Cyclotomic& at_class(int c) const { return values[static_cast<std::size_t>(c)]; }
    const Cyclotomic& degree() const { return values[0]; }
    long degree_int() const;
    bool operator==(const ClassFunction& rhs) const;
};

struct CharacterTable {
    GroupClassesPtr gc;
    std::vector<ClassFunction> irreducibles;  // canonical order: degree asc, rendered row lex
    std::vector<long> degrees;

    int size() const { return static_cast<int>(irreducibles.size()); }
    // Index of an irreducible matching the given values exactly, else -1.
    int index_of(const std::vector<Cyclotomic>& values) const;
};

using CharacterTablePtr = std::shared_ptr<const CharacterTable>;

// Exact table via the Dixon-Burnside method: class-sum matrices over GF(p)
// with p = 1 (mod exponent) and p > 2*sqrt(|G|), simultaneous eigenvectors,
// then lifting eigenvalue data to exact cyclotomic values. Orthogonality and
// integrality are re-verified exactly; violations raise consistency_error.
CharacterTable compute_character_table(const GroupClassesPtr& gc);

// The smallest Dixon prime for the given group order and exponent.
long dixon_prime(long order, int group_exponent);

// <f, h> = (1/|G|) sum_g f(g) conj(h(g)), exactly.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h);

// f restricted to a subgroup (element subset of f's group).
ClassFunction restrict_to(const ClassFunction& f, const GroupClassesPtr& sub);

// Frobenius induction of f to an overgroup.
ClassFunction induce_to(const ClassFunction& f, const GroupClassesPtr& big);

// f = sum m_i * Irr_i with non-negative integer multiplicities; throws
// decomposition_error otherwise. Returns the nonzero (index, multiplicity)
// pairs in table order.
std::vector<std::pair<int, long>> decompose(const ClassFunction& f, const CharacterTable& table);

bool is_homogeneous(const ClassFunction& f, const CharacterTable& table);

// Exact structural checks: row/column orthogonality, sum of squared degrees,
// degree divisibility, integral coefficients. Throws consistency_error.
void verify_table(const CharacterTable& table);

// JSON export: class representatives as cycle strings, centralizer orders,
// and the exact value grid in the textual cyclotomic rendering.
std::string table_to_json(const CharacterTable& table);

}  // namespace cliff
