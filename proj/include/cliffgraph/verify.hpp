#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cliffgraph/graph.hpp"

namespace cliff {

enum class CheckStatus { pass, fail, not_applicable };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string check;
    std::string instance;
    CheckStatus status = CheckStatus::not_applicable;
    std::string detail;
    std::string payload_json;  // replayable graphs; always present on fail
};

struct VerificationReport {
    std::string group;
    std::vector<CheckResult> checks;

    int count(CheckStatus s) const;
    bool all_ok() const { return count(CheckStatus::fail) == 0; }
};

// Theorem A: for every N normal in G and chi with irreducible restriction to
// N, C_N(chi) and C_G(chi) have the same connected components.
VerificationReport check_theorem_A(GraphBuilder& gb, const Group& g, const std::string& name);

// Corollary B: under its hypotheses, {(G,chi)} is a singleton component of
// both graphs and chi is quasiprimitive.
VerificationReport check_corollary_B(GraphBuilder& gb, const Group& g, const std::string& name);

// Dade: odd |N| and irreducible restriction imply C_N(chi) connected.
VerificationReport check_remark_dade(GraphBuilder& gb, const Group& g, const std::string& name);

// Isaacs: solvable G and odd chi(1) imply C_G(chi) connected.
VerificationReport check_remark_isaacs(GraphBuilder& gb, const Group& g, const std::string& name);

// For N, R normal with L = N meet R, chi restricting irreducibly to N and
// homogeneously to L: if [R,R]L = R then R = L.
VerificationReport check_lemma(GraphBuilder& gb, const Group& g, const std::string& name);

// GL2(F3): the unique degree-4 irreducible and the component census of its
// Clifford induction graph.
VerificationReport reproduce_example(GraphBuilder& gb, const Group& gl23, const std::string& name);

// One JSON object per check instance.
void append_jsonl(std::ostream& os, const VerificationReport& report);

}  // namespace cliff
