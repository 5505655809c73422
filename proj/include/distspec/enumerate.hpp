#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "distspec/canonical.hpp"
#include "distspec/graph.hpp"
#include "distspec/graph6.hpp"

namespace distspec {

// Isomorph-free generation of connected graphs by canonical augmentation:
// level k+1 is built by attaching one new vertex to every level-k
// representative in all ways, keeping one canonical representative per class.
struct EnumerateOptions {
    // Pruning predicate that must hold for every intermediate graph; use it
    // only for hereditary properties (chordal, split, c <= cmax, ...).
    std::function<bool(const Graph&)> hereditary;
    // Cheap cap on the new vertex's degree (tree: 1, unicyclic: 2, bicyclic: 3).
    int max_extension_degree = kMaxOrder;
    // Emit-side filter; does not affect generation.
    std::function<bool(const Graph&)> emit_filter;
    bool emit_all_orders = false;
    // Built-in generation limit; class-restricted corpora may raise it to 10.
    int order_cap = 9;
};

template <typename Callback>
void enumerate_connected(int n, const EnumerateOptions& opts, Callback&& cb) {
    if (n < 1 || n > opts.order_cap)
        throw unsupported_error("enumeration order must be in [1, " +
                                std::to_string(opts.order_cap) + "]");

    auto emit = [&](const Graph& g) {
        if (!opts.emit_filter || opts.emit_filter(g)) cb(g);
    };

    std::vector<Graph> level{Graph(1)};
    if (opts.emit_all_orders || n == 1) emit(level.front());
    for (int k = 1; k < n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& parent : level) {
            const std::uint64_t subsets = std::uint64_t(1) << k;
            for (std::uint64_t s = 1; s < subsets; ++s) {
                if (std::popcount(s) > opts.max_extension_degree) continue;
                Graph child(k + 1);
                child.adj = parent.adj;
                child.adj.resize(k + 1, 0);
                for (std::uint64_t bits = s; bits; bits &= bits - 1)
                    child.add_edge(k, std::countr_zero(bits));
                if (opts.hereditary && !opts.hereditary(child)) continue;
                Graph canon = canonical_form(child);
                std::string key = to_graph6(canon);
                if (!seen.insert(std::move(key)).second) continue;
                next.push_back(std::move(canon));
            }
        }
        level = std::move(next);
        if (opts.emit_all_orders || k + 1 == n)
            for (const Graph& g : level) emit(g);
    }
}

}  // namespace distspec
