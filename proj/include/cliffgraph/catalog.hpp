#pragma once

#include <string>
#include <vector>

#include "cliffgraph/group.hpp"

namespace cliff {

struct CatalogEntry {
    std::string name;
    int degree = 0;
    std::vector<std::string> generators;  // cycle strings
    std::vector<std::string> tags;
};

// Parses JSON-lines catalog text: one object per line with fields
// name/degree/generators and optional tags. Names must be unique.
std::vector<CatalogEntry> parse_catalog(const std::string& jsonl_text);

// The bundled catalog: every group of order <= 24 plus GL2(F3) on the eight
// nonzero vectors of F3^2, as permutation generator sets.
const std::string& builtin_catalog_text();

std::vector<CatalogEntry> builtin_catalog();

Group realize(const CatalogEntry& entry, int max_order = kDefaultMaxOrder);

}  // namespace cliff
