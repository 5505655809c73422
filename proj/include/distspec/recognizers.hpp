#pragma once

#include <algorithm>
#include <deque>
#include <list>
#include <optional>
#include <string>
#include <vector>

#include "distspec/canonical.hpp"
#include "distspec/families.hpp"
#include "distspec/graph.hpp"

namespace distspec {

// -- chordality --------------------------------------------------------------

struct ChordalResult {
    bool chordal = false;
    // Perfect elimination ordering when chordal (first vertex eliminated first).
    std::vector<int> peo;
    // A chordless induced cycle of length >= 4 otherwise, in cycle order.
    std::vector<int> chordless_cycle;
};

// Lexicographic BFS visit order; works per component.
inline std::vector<int> lex_bfs_order(const Graph& g) {
    std::list<std::vector<int>> cells;
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    cells.push_back(all);
    std::vector<int> order;
    while (!cells.empty()) {
        int v = cells.front().front();
        cells.front().erase(cells.front().begin());
        if (cells.front().empty()) cells.pop_front();
        order.push_back(v);
        for (auto it = cells.begin(); it != cells.end();) {
            std::vector<int> in, outv;
            for (int u : *it)
                (g.has_edge(v, u) ? in : outv).push_back(u);
            if (in.empty() || outv.empty()) {
                ++it;
                continue;
            }
            *it = outv;
            cells.insert(it, in);  // neighbors split off in front
            ++it;
        }
    }
    return order;
}

// A chordless cycle of length >= 4 in a non-chordal graph: pick u with
// nonadjacent neighbors w, x joined by a path avoiding N[u] \ {w, x}.
inline std::vector<int> find_chordless_cycle(const Graph& g) {
    for (int u = 0; u < g.n; ++u) {
        const std::vector<int> nb = g.neighbors(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int w = nb[i], x = nb[j];
                if (g.has_edge(w, x)) continue;
                std::uint64_t allowed = full_mask(g.n) & ~g.adj[u] & ~(std::uint64_t(1) << u);
                allowed |= (std::uint64_t(1) << w) | (std::uint64_t(1) << x);
                if (!((reachable_set(g, w, allowed) >> x) & 1)) continue;
                // shortest w-x path inside `allowed` is induced
                std::vector<int> prev(g.n, -1);
                std::deque<int> queue{w};
                std::uint64_t seen = std::uint64_t(1) << w;
                while (!queue.empty()) {
                    const int y = queue.front();
                    queue.pop_front();
                    if (y == x) break;
                    for (std::uint64_t bits = g.adj[y] & allowed & ~seen; bits; bits &= bits - 1) {
                        const int z = std::countr_zero(bits);
                        seen |= std::uint64_t(1) << z;
                        prev[z] = y;
                        queue.push_back(z);
                    }
                }
                std::vector<int> cycle{u};
                for (int y = x; y != -1; y = prev[y]) cycle.push_back(y);
                std::reverse(cycle.begin() + 1, cycle.end());
                return cycle;  // u, w, ..., x
            }
        }
    }
    return {};
}

inline ChordalResult is_chordal(const Graph& g) {
    ChordalResult res;
    const std::vector<int> order = lex_bfs_order(g);
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    // reverse LexBFS order is a PEO iff chordal; "later" = earlier in visit order
    for (int i = g.n - 1; i >= 0; --i) {
        const int v = order[i];
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (pos[u] < i) later.push_back(u);
        if (later.size() <= 1) continue;
        int parent = later[0];
        for (int u : later)
            if (pos[u] > pos[parent]) parent = u;
        for (int u : later)
            if (u != parent && !g.has_edge(u, parent)) {
                res.chordal = false;
                res.chordless_cycle = find_chordless_cycle(g);
                return res;
            }
    }
    res.chordal = true;
    res.peo.assign(order.rbegin(), order.rend());
    return res;
}

// -- split graphs -------------------------------------------------------------

struct SplitResult {
    bool split = false;
    std::vector<int> clique;
    std::vector<int> independent;
};

inline SplitResult is_split(const Graph& g) {
    SplitResult res;
    if (!is_chordal(g).chordal || !is_chordal(complement(g)).chordal) return res;
    res.split = true;
    // Hammer-Simeone: with degrees sorted descending the top-m vertices form
    // a clique and the rest an independent set, m = max{i : d_i >= i-1}.
    std::vector<int> verts(g.n);
    for (int v = 0; v < g.n; ++v) verts[v] = v;
    std::stable_sort(verts.begin(), verts.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < g.n; ++i)
        if (g.degree(verts[i]) >= i) m = i + 1;
    res.clique.assign(verts.begin(), verts.begin() + m);
    res.independent.assign(verts.begin() + m, verts.end());
    std::sort(res.clique.begin(), res.clique.end());
    std::sort(res.independent.begin(), res.independent.end());
    for (std::size_t i = 0; i < res.clique.size(); ++i)
        for (std::size_t j = i + 1; j < res.clique.size(); ++j)
            if (!g.has_edge(res.clique[i], res.clique[j]))
                throw error("split partition construction failed");
    for (std::size_t i = 0; i < res.independent.size(); ++i)
        for (std::size_t j = i + 1; j < res.independent.size(); ++j)
            if (g.has_edge(res.independent[i], res.independent[j]))
                throw error("split partition construction failed");
    return res;
}

// -- blocks -------------------------------------------------------------------

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;   // vertex sets, bridges included
    std::vector<int> cut_vertices;
    std::vector<int> blocks_per_vertex;

    int max_blocks_per_vertex() const {
        int best = 0;
        for (int c : blocks_per_vertex) best = std::max(best, c);
        return best;
    }
};

inline BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g)) throw not_connected_error();
    BlockDecomposition out;
    out.blocks_per_vertex.assign(g.n, 0);
    if (g.n == 1) {
        out.blocks.push_back({0});
        out.blocks_per_vertex[0] = 1;
        return out;
    }

    std::vector<int> num(g.n, -1), low(g.n, 0), parent(g.n, -1);
    std::vector<std::pair<int, int>> stack;
    int timer = 0;
    std::vector<char> is_cut(g.n, 0);

    auto emit_block = [&](std::pair<int, int> until) {
        std::uint64_t verts = 0;
        for (;;) {
            auto e = stack.back();
            stack.pop_back();
            verts |= (std::uint64_t(1) << e.first) | (std::uint64_t(1) << e.second);
            if (e == until) break;
        }
        std::vector<int> blk;
        for (std::uint64_t bits = verts; bits; bits &= bits - 1)
            blk.push_back(std::countr_zero(bits));
        out.blocks.push_back(std::move(blk));
    };

    auto dfs = [&](auto&& self, int v) -> void {
        num[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (num[u] == -1) {
                parent[u] = v;
                stack.push_back({v, u});
                ++children;
                self(self, u);
                low[v] = std::min(low[v], low[u]);
                if ((parent[v] == -1 && children > 1) ||
                    (parent[v] != -1 && low[u] >= num[v])) {
                    is_cut[v] = 1;
                    emit_block({v, u});
                } else if (parent[v] == -1 && low[u] >= num[v]) {
                    emit_block({v, u});
                }
            } else if (u != parent[v] && num[u] < num[v]) {
                stack.push_back({v, u});
                low[v] = std::min(low[v], num[u]);
            }
        }
    };
    dfs(dfs, 0);

    for (const auto& blk : out.blocks)
        for (int v : blk) ++out.blocks_per_vertex[v];
    for (int v = 0; v < g.n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

inline bool is_two_connected(const Graph& g) {
    return g.n >= 3 && block_decomposition(g).blocks.size() == 1;
}

// -- block graph classification ----------------------------------------------

enum class BlockGraphClass {
    NotBlockGraph,
    BlockStar,
    Loose,
    BgPq322Sub,
    BgaSub,
    OtherBlockGraph,
};

inline const char* block_graph_class_name(BlockGraphClass c) {
    switch (c) {
        case BlockGraphClass::NotBlockGraph: return "not_block_graph";
        case BlockGraphClass::BlockStar: return "block_star";
        case BlockGraphClass::Loose: return "loose";
        case BlockGraphClass::BgPq322Sub: return "bg_pq322_sub";
        case BlockGraphClass::BgaSub: return "bga_sub";
        case BlockGraphClass::OtherBlockGraph: return "other_block_graph";
    }
    return "?";
}

// Backtracking search for an induced copy of `pattern` inside `host`.
inline bool induced_embeds_into(const Graph& pattern, const Graph& host) {
    if (pattern.n > host.n) return false;
    // map pattern vertices in a BFS-forest order so each new vertex has a
    // mapped anchor whenever possible
    std::vector<int> order;
    std::vector<char> seen(pattern.n, 0);
    for (int s = 0; s < pattern.n; ++s) {
        if (seen[s]) continue;
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (int u : pattern.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
    }
    std::vector<int> image(pattern.n, -1);
    std::vector<char> used(host.n, 0);
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        const int v = order[idx];
        for (int cand = 0; cand < host.n; ++cand) {
            if (used[cand] || host.degree(cand) < pattern.degree(v)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < idx && ok; ++k) {
                const int w = order[k];
                if (pattern.has_edge(v, w) != host.has_edge(cand, image[w])) ok = false;
            }
            if (!ok) continue;
            image[v] = cand;
            used[cand] = 1;
            if (self(self, idx + 1)) return true;
            used[cand] = 0;
            image[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

// BGA of the block-graph lemma; coincides with the bicyclic sporadic B2.
inline Graph bga_graph() {
    Graph g = infinity_graph(3, 3, 2);
    attach_pendant_path(g, 0, 1);  // pendant at one cycle junction
    attach_pendant_path(g, 3, 1);  // pendant at the other
    return g;
}

inline bool is_block_graph(const Graph& g, const BlockDecomposition& dec) {
    for (const auto& blk : dec.blocks)
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = i + 1; j < blk.size(); ++j)
                if (!g.has_edge(blk[i], blk[j])) return false;
    return true;
}

inline BlockGraphClass classify_block_graph(const Graph& g) {
    const BlockDecomposition dec = block_decomposition(g);
    if (g.n == 1) return BlockGraphClass::BlockStar;
    if (!is_block_graph(g, dec)) return BlockGraphClass::NotBlockGraph;
    std::uint64_t common = ~std::uint64_t(0);
    for (const auto& blk : dec.blocks) {
        std::uint64_t mask = 0;
        for (int v : blk) mask |= std::uint64_t(1) << v;
        common &= mask;
    }
    if (common) return BlockGraphClass::BlockStar;
    if (dec.max_blocks_per_vertex() <= 2) return BlockGraphClass::Loose;
    if (induced_embeds_into(g, bg_pq322(std::max(2, g.n), std::max(2, g.n))))
        return BlockGraphClass::BgPq322Sub;
    if (induced_embeds_into(g, bga_graph())) return BlockGraphClass::BgaSub;
    return BlockGraphClass::OtherBlockGraph;
}

// -- cyclic type ---------------------------------------------------------------

enum class CyclicKind { Tree, Unicyclic, BicyclicInfinity, BicyclicTheta, Other };

struct CyclicType {
    CyclicKind kind = CyclicKind::Other;
    int c = 0;  // cyclomatic number
};

// Vertex mask of the 2-core (iterated deletion of degree <= 1 vertices).
inline std::uint64_t two_core_mask(const Graph& g) {
    std::uint64_t alive = full_mask(g.n);
    for (;;) {
        bool changed = false;
        for (int v = 0; v < g.n; ++v) {
            if (!((alive >> v) & 1)) continue;
            if (std::popcount(g.adj[v] & alive) <= 1) {
                alive &= ~(std::uint64_t(1) << v);
                changed = true;
            }
        }
        if (!changed) return alive;
    }
}

inline CyclicType cyclic_type(const Graph& g) {
    if (!is_connected(g)) throw not_connected_error();
    CyclicType t;
    t.c = cyclomatic_number(g);
    if (t.c == 0) {
        t.kind = CyclicKind::Tree;
    } else if (t.c == 1) {
        t.kind = CyclicKind::Unicyclic;
    } else if (t.c == 2) {
        // theta cores are 2-connected; infinity cores have a cut vertex
        const Graph core = induced_subgraph(g, two_core_mask(g));
        t.kind = is_two_connected(core) ? CyclicKind::BicyclicTheta
                                        : CyclicKind::BicyclicInfinity;
    } else {
        t.kind = CyclicKind::Other;
    }
    return t;
}

// -- distance-preserving subgraphs and forbidden-subgraph search ---------------

inline bool is_distance_preserving(const Graph& g, const std::vector<int>& verts) {
    if (!is_connected(g)) throw not_connected_error();
    const Graph h = induced_subgraph(g, verts);
    if (h.n < 2) return true;
    if (!is_connected(h)) return false;
    const DistanceMatrix dg = all_pairs_distances(g);
    const DistanceMatrix dh = all_pairs_distances(h);
    for (int i = 0; i < h.n; ++i)
        for (int j = i + 1; j < h.n; ++j)
            if (dh.at(i, j) != dg.at(verts[i], verts[j])) return false;
    return true;
}

struct ForbiddenWitness {
    std::string id;
    std::vector<int> vertices;
};

// First distance-preserving induced subgraph isomorphic to a pattern, under
// subset sizes ascending then lexicographic subset order then pattern order.
inline std::optional<ForbiddenWitness> find_forbidden(
    const Graph& g, const std::vector<std::pair<std::string, Graph>>& patterns) {
    if (!is_connected(g)) throw not_connected_error();
    if (g.n > kMaxCanonOrder) return std::nullopt;

    std::vector<int> sizes;
    for (const auto& [id, p] : patterns) sizes.push_back(p.n);
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    std::vector<std::pair<std::string, CanonicalLabel>> keys;
    for (const auto& [id, p] : patterns) keys.emplace_back(id, canonical_label(p));

    const DistanceMatrix dg = g.n >= 2 ? all_pairs_distances(g) : DistanceMatrix{};

    for (int size : sizes) {
        if (size > g.n) continue;
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            const Graph sub = induced_subgraph(g, idx);
            if (is_connected(sub)) {
                bool preserving = true;
                const DistanceMatrix ds = all_pairs_distances(sub);
                for (int i = 0; i < size && preserving; ++i)
                    for (int j = i + 1; j < size; ++j)
                        if (ds.at(i, j) != dg.at(idx[i], idx[j])) {
                            preserving = false;
                            break;
                        }
                if (preserving) {
                    const CanonicalLabel sub_key = canonical_label(sub);
                    for (const auto& [id, key] : keys)
                        if (key == sub_key) return ForbiddenWitness{id, idx};
                }
            }
            // next lexicographic size-subset of [0, n)
            int i = size - 1;
            while (i >= 0 && idx[i] == g.n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace distspec
