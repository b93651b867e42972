#include "cliffgraph/engine.hpp"

#include <algorithm>

#include "cliffgraph/errors.hpp"

namespace cliff {

GroupClassesPtr Engine::classes(const Group& g) {
    ElementsKey key{g.degree, g.elements};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = classes_.find(key);
        if (it != classes_.end()) return it->second;
    }
    GroupClassesPtr gc = make_group_classes(g);
    std::lock_guard<std::mutex> lock(mu_);
    return classes_.emplace(std::move(key), std::move(gc)).first->second;
}

GroupClassesPtr Engine::classes_from_elements(int degree, std::vector<Permutation> sorted_elements) {
    ElementsKey key{degree, sorted_elements};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = classes_.find(key);
        if (it != classes_.end()) return it->second;
    }
    std::vector<Permutation> gens = derive_generators(degree, sorted_elements);
    GroupClassesPtr gc = make_group_classes(make_group(degree, std::move(sorted_elements), std::move(gens)));
    std::lock_guard<std::mutex> lock(mu_);
    return classes_.emplace(std::move(key), std::move(gc)).first->second;
}

CharacterTablePtr Engine::table(const GroupClassesPtr& gc) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = tables_.find(gc.get());
        if (it != tables_.end()) return it->second;
    }
    auto t = std::make_shared<CharacterTable>(compute_character_table(gc));
    std::lock_guard<std::mutex> lock(mu_);
    return tables_.emplace(gc.get(), std::move(t)).first->second;
}

const Engine::Ambient& Engine::ambient(const Group& g) {
    GroupClassesPtr gc = classes(g);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ambients_.find(gc.get());
        if (it != ambients_.end()) return *it->second;
    }
    auto amb = std::make_unique<Ambient>();
    amb->gc = gc;
    std::vector<Group> subs = all_subgroups(gc->group, cfg_.max_subgroups);
    for (auto& s : subs) amb->subgroups.push_back(classes(s));
    for (int i = 0; i < static_cast<int>(amb->subgroups.size()); ++i)
        if (is_normal_in(amb->subgroups[static_cast<std::size_t>(i)]->group, gc->group))
            amb->normal_indices.push_back(i);
    std::lock_guard<std::mutex> lock(mu_);
    return *ambients_.emplace(gc.get(), std::move(amb)).first->second;
}

const std::vector<Cyclotomic>& Engine::induced_values(const GroupClassesPtr& ambient_gc,
                                                      const GroupClassesPtr& sub, int alpha) {
    auto key = std::make_tuple(ambient_gc.get(), sub.get(), alpha);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = induced_.find(key);
        if (it != induced_.end()) return it->second;
    }
    CharacterTablePtr sub_table = table(sub);
    if (alpha < 0 || alpha >= sub_table->size())
        throw precondition_error("character index out of range");
    ClassFunction ind =
        induce_to(sub_table->irreducibles[static_cast<std::size_t>(alpha)], ambient_gc);
    std::lock_guard<std::mutex> lock(mu_);
    return induced_.emplace(std::move(key), std::move(ind.values)).first->second;
}

}  // namespace cliff
