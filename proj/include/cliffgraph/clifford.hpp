#pragma once

#include <utility>
#include <vector>

#include "cliffgraph/engine.hpp"

namespace cliff {

// B = Stab_A(gamma) for gamma in Irr(C), C normal in A. Verified exhaustively
// at construction: C <= B <= A and B is exactly the set of fixing elements.
struct InertiaDatum {
    GroupClassesPtr ambient;     // A
    GroupClassesPtr kernel_sub;  // C
    int gamma = 0;               // index into Irr(C)
    GroupClassesPtr stabilizer;  // B
};

// gamma^a with gamma^a(x) = gamma(a x a^-1), a class function on a^-1 C a.
ClassFunction conjugate_character(Engine& eng, const ClassFunction& gamma, const Permutation& a);

// Exhaustive scan of A (one test per coset of C) for the stabilizer of gamma.
// Throws precondition_error unless C is normal in A.
InertiaDatum inertia_group(Engine& eng, const GroupClassesPtr& a, const GroupClassesPtr& c,
                           int gamma);

// All beta in Irr(B) lying over gamma, i.e. <beta restricted to C, gamma> != 0.
std::vector<int> irr_over(Engine& eng, const GroupClassesPtr& b, const GroupClassesPtr& c,
                          int gamma);

// The Clifford correspondent of alpha in Irr(A) with respect to gamma in
// Irr(C): the unique beta in Irr(Stab_A(gamma) | gamma) with beta^A = alpha.
// Preconditions: C normal in A and gamma a constituent of alpha restricted to
// C. Uniqueness is asserted, not assumed.
std::pair<GroupClassesPtr, int> clifford_correspondent(Engine& eng, const GroupClassesPtr& a,
                                                       int alpha, const GroupClassesPtr& c,
                                                       int gamma);

}  // namespace cliff
