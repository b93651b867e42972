#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cliffgraph/clifford.hpp"
#include "cliffgraph/engine.hpp"

namespace cliff {

// A vertex (A, alpha) of a Clifford induction graph: a canonical subgroup
// handle plus an index into its canonical character table.
struct CharPair {
    GroupClassesPtr sub;
    int char_index = 0;
    long char_degree = 1;

    bool same(const CharPair& o) const {
        return sub.get() == o.sub.get() && char_index == o.char_index;
    }
};

// Deterministic ordering by (order, id, elements, char index).
bool charpair_less(const CharPair& a, const CharPair& b);

struct EdgeWitness {
    int from_vertex = 0;  // vertex (A, alpha) whose correspondence produced the edge
    int to_vertex = 0;    // (B, beta)
    GroupClassesPtr c;
    int gamma = 0;
};

struct CliffordGraph {
    GroupClassesPtr g;
    int chi_index = 0;
    long chi_degree = 1;
    GroupClassesPtr n;
    std::vector<CharPair> vertices;                   // sorted by charpair_less
    std::vector<std::pair<int, int>> edges;           // vertex index pairs i < j, sorted
    std::vector<std::vector<EdgeWitness>> witnesses;  // parallel to edges
    std::vector<int> component_of;                    // label = least vertex index in component
    int component_count = 0;

    std::vector<std::vector<int>> partition() const;
};

// Builds C_N(chi) graphs against a shared Engine, caching vertex sets,
// Clifford-correspondence witness tables (the N-independent part) and
// inertia data across builds.
class GraphBuilder {
public:
    explicit GraphBuilder(Engine& eng) : eng_(eng) {}

    Engine& engine() { return eng_; }

    // All (A, alpha) with alpha^G = chi, via exact induced-value comparison
    // over subgroups of index dividing chi(1).
    const std::vector<CharPair>& vertices(const GroupClassesPtr& g, int chi);

    // Every Clifford correspondence (A,alpha) -> (B,beta) with witness (C,gamma),
    // C normal in A, B a proper stabilizer. C_N edges are the subset with
    // C contained in N.
    const std::vector<EdgeWitness>& witness_table(const GroupClassesPtr& g, int chi);

    CliffordGraph build(const GroupClassesPtr& g, int chi, const GroupClassesPtr& n);

    const InertiaDatum& inertia(const GroupClassesPtr& a, const GroupClassesPtr& c, int gamma);

    // Subgroups of A that are normal in A, from the ambient registry of g.
    const std::vector<GroupClassesPtr>& normal_subgroups_of(const GroupClassesPtr& g,
                                                            const GroupClassesPtr& a);

private:
    Engine& eng_;
    std::map<std::pair<const GroupClasses*, int>, std::vector<CharPair>> vertices_;
    std::map<std::pair<const GroupClasses*, int>, std::vector<EdgeWitness>> witnesses_;
    std::map<std::tuple<const GroupClasses*, const GroupClasses*, int>, InertiaDatum> inertia_;
    std::map<std::pair<const GroupClasses*, const GroupClasses*>, std::vector<GroupClassesPtr>>
        normals_;
};

// True iff both graphs share the ambient (G, chi) and their vertex partitions
// agree as set partitions. Throws precondition_error on ambient mismatch.
bool components_equal(const CliffordGraph& g1, const CliffordGraph& g2);

bool is_connected(const CliffordGraph& g);

// Deterministic DOT rendering; vertex labels "A<order>#<id>:deg<d>". With
// annotate_witness, each edge carries one sample witness "C<order>#<id>,g<k>".
std::string graph_to_dot(const CliffordGraph& g, bool annotate_witness = false);

// Full JSON mirror including all witnesses and the component partition.
std::string graph_to_json(const CliffordGraph& g);

}  // namespace cliff
