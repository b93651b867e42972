#include "cliffgraph/catalog.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "cliffgraph/errors.hpp"

namespace cliff {

std::vector<CatalogEntry> parse_catalog(const std::string& jsonl_text) {
    std::vector<CatalogEntry> out;
    std::set<std::string> names;
    std::istringstream is(jsonl_text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw input_error("catalog line " + std::to_string(lineno) + ": " + e.what());
        }
        CatalogEntry entry;
        try {
            entry.name = j.at("name").get<std::string>();
            entry.degree = j.at("degree").get<int>();
            entry.generators = j.at("generators").get<std::vector<std::string>>();
            if (j.contains("tags")) entry.tags = j.at("tags").get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception& e) {
            throw input_error("catalog line " + std::to_string(lineno) + ": " + e.what());
        }
        if (entry.name.empty() || entry.degree < 1)
            throw input_error("catalog line " + std::to_string(lineno) + ": bad name or degree");
        if (!names.insert(entry.name).second)
            throw input_error("catalog line " + std::to_string(lineno) + ": duplicate name " +
                              entry.name);
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<CatalogEntry> builtin_catalog() { return parse_catalog(builtin_catalog_text()); }

Group realize(const CatalogEntry& entry, int max_order) {
    std::vector<Permutation> gens;
    gens.reserve(entry.generators.size());
    for (const auto& text : entry.generators) gens.push_back(parse_permutation(text, entry.degree));
    return closure(entry.degree, gens, max_order);
}

}  // namespace cliff
