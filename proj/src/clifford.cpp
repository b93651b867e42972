#include "cliffgraph/clifford.hpp"

#include <algorithm>

#include "cliffgraph/errors.hpp"

namespace cliff {

namespace {

// Whether gamma^a = gamma on C, for a normalizing C. Compares values through
// the class permutation x -> a x a^-1 without any cyclotomic arithmetic.
bool fixes_character(const GroupClasses& c, const std::vector<Cyclotomic>& gamma_values,
                     const Permutation& a) {
    Permutation ainv = a.inverse();
    for (int j = 0; j < c.class_count(); ++j) {
        Permutation moved = a * c.rep(j) * ainv;
        int cj = c.class_of(moved);
        if (cj != j && !(gamma_values[static_cast<std::size_t>(cj)] ==
                         gamma_values[static_cast<std::size_t>(j)]))
            return false;
    }
    return true;
}

}  // namespace

ClassFunction conjugate_character(Engine& eng, const ClassFunction& gamma, const Permutation& a) {
    const GroupClasses& c = *gamma.gc;
    Group target = conjugate_subgroup(c.group, a);
    GroupClassesPtr tgc = eng.classes(target);
    ClassFunction out;
    out.gc = tgc;
    out.values.reserve(static_cast<std::size_t>(tgc->class_count()));
    Permutation ainv = a.inverse();
    for (int j = 0; j < tgc->class_count(); ++j) {
        Permutation back = a * tgc->rep(j) * ainv;  // gamma^a(x) = gamma(a x a^-1)
        out.values.push_back(gamma.at_class(c.class_of(back)));
    }
    return out;
}

InertiaDatum inertia_group(Engine& eng, const GroupClassesPtr& a, const GroupClassesPtr& c,
                           int gamma) {
    if (!is_normal_in(c->group, a->group))
        throw precondition_error("inertia group requires C normal in A");
    CharacterTablePtr ct = eng.table(c);
    if (gamma < 0 || gamma >= ct->size()) throw precondition_error("gamma index out of range");
    const std::vector<Cyclotomic>& gv = ct->irreducibles[static_cast<std::size_t>(gamma)].values;

    // gamma^a depends on a only modulo C, so test one representative per coset.
    std::vector<bool> visited(a->group.elements.size(), false);
    std::vector<Permutation> members;
    for (std::size_t i = 0; i < a->group.elements.size(); ++i) {
        if (visited[i]) continue;
        const Permutation& rep = a->group.elements[i];
        bool fixed = fixes_character(*c, gv, rep);
        for (const auto& x : c->group.elements) {
            Permutation coset_elem = rep * x;
            int idx = a->group.element_index(coset_elem);
            if (idx < 0) throw consistency_error("coset element left the group");
            visited[static_cast<std::size_t>(idx)] = true;
            if (fixed) members.push_back(std::move(coset_elem));
        }
    }
    std::sort(members.begin(), members.end());
    InertiaDatum out;
    out.ambient = a;
    out.kernel_sub = c;
    out.gamma = gamma;
    out.stabilizer = eng.classes_from_elements(a->group.degree, std::move(members));
    if (!c->group.subset_of(out.stabilizer->group) ||
        !out.stabilizer->group.subset_of(a->group))
        throw consistency_error("inertia group violates C <= B <= A");
    return out;
}

std::vector<int> irr_over(Engine& eng, const GroupClassesPtr& b, const GroupClassesPtr& c,
                          int gamma) {
    if (!c->group.subset_of(b->group)) throw precondition_error("irr_over requires C <= B");
    CharacterTablePtr bt = eng.table(b);
    CharacterTablePtr ct = eng.table(c);
    if (gamma < 0 || gamma >= ct->size()) throw precondition_error("gamma index out of range");
    const ClassFunction& g = ct->irreducibles[static_cast<std::size_t>(gamma)];
    std::vector<int> out;
    for (int i = 0; i < bt->size(); ++i) {
        ClassFunction res = restrict_to(bt->irreducibles[static_cast<std::size_t>(i)], c);
        if (!inner_product(res, g).is_zero()) out.push_back(i);
    }
    return out;
}

std::pair<GroupClassesPtr, int> clifford_correspondent(Engine& eng, const GroupClassesPtr& a,
                                                       int alpha, const GroupClassesPtr& c,
                                                       int gamma) {
    CharacterTablePtr at = eng.table(a);
    CharacterTablePtr ct = eng.table(c);
    if (alpha < 0 || alpha >= at->size()) throw precondition_error("alpha index out of range");
    if (gamma < 0 || gamma >= ct->size()) throw precondition_error("gamma index out of range");
    if (!is_normal_in(c->group, a->group))
        throw precondition_error("clifford correspondent requires C normal in A");
    const ClassFunction& alpha_f = at->irreducibles[static_cast<std::size_t>(alpha)];
    const ClassFunction& gamma_f = ct->irreducibles[static_cast<std::size_t>(gamma)];
    if (inner_product(restrict_to(alpha_f, c), gamma_f).is_zero())
        throw precondition_error("gamma is not a constituent of alpha restricted to C");

    InertiaDatum inert = inertia_group(eng, a, c, gamma);
    const GroupClassesPtr& b = inert.stabilizer;
    CharacterTablePtr bt = eng.table(b);
    std::vector<int> over = irr_over(eng, b, c, gamma);
    int found = -1;
    for (int beta : over) {
        const std::vector<Cyclotomic>& ind = eng.induced_values(a, b, beta);
        if (ind == alpha_f.values) {
            if (found >= 0)
                throw consistency_error("multiple Clifford correspondent candidates");
            found = beta;
        }
    }
    if (found < 0) throw consistency_error("no Clifford correspondent found");
    return {b, found};
}

}  // namespace cliff
