#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "distspec/canonical.hpp"
#include "distspec/graph6.hpp"
#include "distspec/recognizers.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

// The named sporadic graphs: unicyclic U1..U6, forbidden subgraphs F1..F13,
// bicyclic B1..B7, split SP1/SP2, and the block-graph template BGA.
struct CatalogEntry {
    std::string id;
    Graph graph;
    std::optional<double> expected_lambda2;
    double lambda2 = 0.0;  // recomputed at load
    std::string role;
};

struct Catalog {
    std::vector<CatalogEntry> entries;

    bool has(const std::string& id) const { return find(id) != nullptr; }

    const CatalogEntry& at(const std::string& id) const {
        if (const CatalogEntry* e = find(id)) return *e;
        throw catalog_error(id, "missing entry");
    }

    const CatalogEntry* find(const std::string& id) const {
        for (const auto& e : entries)
            if (e.id == id) return &e;
        return nullptr;
    }

    std::vector<std::pair<std::string, Graph>> forbidden_patterns() const {
        std::vector<std::pair<std::string, Graph>> out;
        for (const auto& e : entries)
            if (e.id[0] == 'F') out.emplace_back(e.id, e.graph);
        return out;
    }
};

inline const std::vector<std::string>& catalog_required_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 6; ++i) v.push_back("U" + std::to_string(i));
        for (int i = 1; i <= 13; ++i) v.push_back("F" + std::to_string(i));
        for (int i = 1; i <= 7; ++i) v.push_back("B" + std::to_string(i));
        v.push_back("SP1");
        v.push_back("SP2");
        v.push_back("BGA");
        return v;
    }();
    return ids;
}

inline std::string catalog_role(const std::string& id) {
    if (id == "BGA") return "block-graph template";
    if (id[0] == 'U') return "unicyclic sporadic";
    if (id[0] == 'F') return "forbidden subgraph";
    if (id[0] == 'B') return "bicyclic sporadic";
    return "split sporadic";
}

// Tab-separated catalog: id<TAB>graph6[<TAB>expected_lambda2].  '#' comments.
// All invariants are enforced here: the id set is exactly the required one,
// every F entry has lambda2 >= -1/2 - 1e-9, every other entry is strictly
// below -1/2, expected values match within 5e-4, and B2 is isomorphic to BGA.
inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw catalog_error(path, "cannot open catalog file");
    Catalog cat;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            cols.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (cols.size() < 2 || cols.size() > 3)
            throw catalog_error(path + ":" + std::to_string(lineno), "expected 2 or 3 columns");
        CatalogEntry e;
        e.id = cols[0];
        if (cat.has(e.id)) throw catalog_error(e.id, "duplicate id");
        try {
            e.graph = parse_graph6(cols[1]);
        } catch (const error& ex) {
            throw catalog_error(e.id, std::string("bad graph6: ") + ex.what());
        }
        if (cols.size() == 3 && !cols[2].empty()) e.expected_lambda2 = std::stod(cols[2]);
        e.role = catalog_role(e.id);
        cat.entries.push_back(std::move(e));
    }

    for (const std::string& id : catalog_required_ids())
        if (!cat.has(id)) throw catalog_error(id, "missing entry");
    for (const auto& e : cat.entries) {
        bool required = false;
        for (const std::string& id : catalog_required_ids()) required |= (id == e.id);
        if (!required) throw catalog_error(e.id, "unexpected id");
    }

    for (auto& e : cat.entries) {
        if (!is_connected(e.graph)) throw catalog_error(e.id, "graph is not connected");
        e.lambda2 = lambda2(e.graph);
        if (e.id[0] == 'F') {
            if (e.lambda2 < -0.5 - 1e-9)
                throw catalog_error(e.id, "forbidden entry has lambda2 < -1/2");
        } else {
            if (!(e.lambda2 < -0.5 - 1e-9))
                throw catalog_error(e.id, "sporadic entry has lambda2 >= -1/2");
        }
        if (e.expected_lambda2 && std::abs(*e.expected_lambda2 - e.lambda2) > 5e-4)
            throw catalog_error(e.id, "lambda2 deviates from expected value by more than 5e-4");
    }

    if (!are_isomorphic(cat.at("B2").graph, cat.at("BGA").graph))
        throw catalog_error("B2", "not isomorphic to BGA");
    if (!are_isomorphic(cat.at("BGA").graph, bga_graph()))
        throw catalog_error("BGA", "not isomorphic to the built-in BGA construction");
    return cat;
}

inline std::string default_catalog_path() {
    if (const char* env = std::getenv("DISTSPEC_CATALOG")) return env;
    return "data/catalog.tsv";
}

}  // namespace distspec
