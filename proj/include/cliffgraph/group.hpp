#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffgraph/perm.hpp"

namespace cliff {

inline constexpr int kDefaultMaxOrder = 10000;
inline constexpr int kDefaultMaxSubgroups = 100000;

// A finite permutation group given by its full element list, sorted
// lexicographically by image sequence. The canonical id is a hash of the
// sorted element list, so it is independent of the generating set.
struct Group {
    int degree = 0;
    std::vector<Permutation> elements;    // sorted, closed, contains identity
    std::vector<Permutation> generators;  // generate `elements`
    std::uint64_t id = 0;

    long order() const { return static_cast<long>(elements.size()); }
    bool contains(const Permutation& p) const;
    int element_index(const Permutation& p) const;  // -1 if absent
    bool subset_of(const Group& other) const;
    bool same_elements(const Group& other) const;
};

// Builds a Group value from an already closed, sorted element list.
Group make_group(int degree, std::vector<Permutation> sorted_elements,
                 std::vector<Permutation> generators);

// Generates the group ⟨generators⟩ on the given number of points.
// An empty generator list yields the trivial group.
Group closure(int degree, const std::vector<Permutation>& generators,
              int max_order = kDefaultMaxOrder);

struct ConjClassPartition {
    std::vector<std::vector<int>> classes;  // element indices, each sorted; class 0 = {identity}
    std::vector<int> class_of;              // element index -> class index
    std::vector<int> representatives;       // minimal element index of each class
    std::vector<long> centralizer_orders;   // |G| / |class|
};

ConjClassPartition conjugacy_classes(const Group& g);

// Every subgroup, deduplicated and sorted by (order, id, elements).
// Built by iterated closure: cyclic subgroups first, then single-element
// extensions until fixpoint.
std::vector<Group> all_subgroups(const Group& g, int max_subgroups = kDefaultMaxSubgroups);

std::vector<Group> subgroups_of_index_dividing(const Group& g, long d,
                                               int max_subgroups = kDefaultMaxSubgroups);
std::vector<Group> subgroups_of_index_dividing(const Group& g,
                                               const std::vector<Group>& subgroups, long d);

bool is_normal_in(const Group& c, const Group& a);

// All C ⊴ A. The ambient group is context only; callers intersect with any
// further containment constraint themselves.
std::vector<Group> normal_subgroups_in(const Group& a, const Group& ambient);
std::vector<Group> normal_subgroups_in(const Group& a, const std::vector<Group>& subgroups_of_a);

// g^-1 A g
Group conjugate_subgroup(const Group& a, const Permutation& g);

int exponent(const Group& g);

// ⟨[x,y] : x,y ∈ G⟩
Group derived_subgroup(const Group& g);

bool is_solvable(const Group& g);

// Product set {xy : x ∈ a, y ∈ b}; a subgroup whenever one factor normalizes
// the other (callers' responsibility).
std::vector<Permutation> product_set(const Group& a, const Group& b);

std::vector<Permutation> intersection(const Group& a, const Group& b);

// A small generating set extracted greedily from an element list.
std::vector<Permutation> derive_generators(int degree, const std::vector<Permutation>& sorted_elements);

std::string id_string(std::uint64_t id);

}  // namespace cliff
