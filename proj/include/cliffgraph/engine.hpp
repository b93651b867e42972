#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "cliffgraph/chartab.hpp"
#include "cliffgraph/group.hpp"

namespace cliff {

struct EngineConfig {
    int max_order = kDefaultMaxOrder;
    int max_subgroups = kDefaultMaxSubgroups;
};

// Caching kernel shared by the clifford/graph/verify layers. Groups with the
// same element set are canonicalized to one shared GroupClasses instance, so
// downstream caches can key on pointers. Reads are safe from any thread;
// insertion is serialized by a mutex and duplicated computation resolves as
// first-write-wins.
class Engine {
public:
    explicit Engine(EngineConfig cfg = {}) : cfg_(cfg) {}

    const EngineConfig& config() const { return cfg_; }

    // Canonical class data for the given group (keyed by element set).
    GroupClassesPtr classes(const Group& g);
    // Canonical class data from an already closed element set.
    GroupClassesPtr classes_from_elements(int degree, std::vector<Permutation> sorted_elements);

    CharacterTablePtr table(const GroupClassesPtr& gc);

    struct Ambient {
        GroupClassesPtr gc;
        std::vector<GroupClassesPtr> subgroups;  // sorted by (order, id, elements)
        std::vector<int> normal_indices;         // subgroups normal in the ambient group
    };

    const Ambient& ambient(const Group& g);

    // Values of the induced character (Irr(sub)[alpha])^G on the classes of
    // the ambient group.
    const std::vector<Cyclotomic>& induced_values(const GroupClassesPtr& ambient_gc,
                                                  const GroupClassesPtr& sub, int alpha);

private:
    using ElementsKey = std::pair<int, std::vector<Permutation>>;

    EngineConfig cfg_;
    std::mutex mu_;
    std::map<ElementsKey, GroupClassesPtr> classes_;
    std::map<const GroupClasses*, CharacterTablePtr> tables_;
    std::map<const GroupClasses*, std::unique_ptr<Ambient>> ambients_;
    std::map<std::tuple<const GroupClasses*, const GroupClasses*, int>, std::vector<Cyclotomic>>
        induced_;
};

}  // namespace cliff
