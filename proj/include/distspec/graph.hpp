#pragma once

#include <bit>
#include <cstdint>
#include <queue>
#include <vector>

#include "distspec/errors.hpp"

namespace distspec {

inline constexpr int kMaxOrder = 64;

// Simple undirected graph on vertices 0..n-1, adjacency kept as bitset rows.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    Graph() = default;
    explicit Graph(int order) : n(order), adj(order, 0) {
        if (order < 1 || order > kMaxOrder)
            throw bad_argument("graph order must be in [1, 64], got " + std::to_string(order));
    }

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        if (u == v) throw bad_argument("self-loop rejected");
        if (u < 0 || v < 0 || u >= n || v >= n) throw bad_argument("vertex index out of range");
        adj[u] |= std::uint64_t(1) << v;
        adj[v] |= std::uint64_t(1) << u;
    }

    int degree(int v) const { return std::popcount(adj[v]); }

    int size() const {
        int twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (std::uint64_t bits = adj[v]; bits; bits &= bits - 1)
            out.push_back(std::countr_zero(bits));
        return out;
    }

    bool operator==(const Graph& other) const { return n == other.n && adj == other.adj; }
};

// Symmetric matrix of BFS hop counts; only defined for connected graphs.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;

    int at(int u, int v) const { return d[u * n + v]; }
    int& at(int u, int v) { return d[u * n + v]; }
};

inline std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

// Bitset BFS closure from `start` restricted to `allowed`.
inline std::uint64_t reachable_set(const Graph& g, int start, std::uint64_t allowed) {
    std::uint64_t seen = std::uint64_t(1) << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t bits = frontier; bits; bits &= bits - 1)
            next |= g.adj[std::countr_zero(bits)];
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return reachable_set(g, 0, full_mask(g.n)) == full_mask(g.n);
}

inline Graph complement(const Graph& g) {
    Graph h(g.n);
    const std::uint64_t all = full_mask(g.n);
    for (int v = 0; v < g.n; ++v)
        h.adj[v] = all & ~g.adj[v] & ~(std::uint64_t(1) << v);
    return h;
}

// Induced subgraph on the sorted vertex set S (given as a bitmask).
// Vertex i of the result is the i-th smallest element of S.
inline Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    if (mask == 0) throw bad_argument("induced subgraph on empty vertex set");
    if (mask & ~full_mask(g.n)) throw bad_argument("vertex set out of range");
    std::vector<int> verts;
    for (std::uint64_t bits = mask; bits; bits &= bits - 1)
        verts.push_back(std::countr_zero(bits));
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(int(i), int(j));
    return h;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::uint64_t mask = 0;
    for (int v : verts) {
        if (v < 0 || v >= g.n) throw bad_argument("vertex set out of range");
        mask |= std::uint64_t(1) << v;
    }
    return induced_subgraph(g, mask);
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    if (g.n == 1) throw too_small_error("distance matrix needs order >= 2");
    if (!is_connected(g)) throw not_connected_error();
    DistanceMatrix dm;
    dm.n = g.n;
    dm.d.assign(std::size_t(g.n) * g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        std::uint64_t seen = std::uint64_t(1) << s;
        std::uint64_t frontier = seen;
        int depth = 0;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t bits = frontier; bits; bits &= bits - 1)
                next |= g.adj[std::countr_zero(bits)];
            next &= ~seen;
            ++depth;
            for (std::uint64_t bits = next; bits; bits &= bits - 1)
                dm.at(s, std::countr_zero(bits)) = depth;
            seen |= next;
            frontier = next;
        }
    }
    return dm;
}

// Hop counts from one source; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(g.n, -1);
    dist[s] = 0;
    std::uint64_t seen = std::uint64_t(1) << s;
    std::uint64_t frontier = seen;
    int depth = 0;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t bits = frontier; bits; bits &= bits - 1)
            next |= g.adj[std::countr_zero(bits)];
        next &= ~seen;
        ++depth;
        for (std::uint64_t bits = next; bits; bits &= bits - 1)
            dist[std::countr_zero(bits)] = depth;
        seen |= next;
        frontier = next;
    }
    return dist;
}

inline int cyclomatic_number(const Graph& g) { return g.size() - g.n + 1; }

// -- standard graphs -------------------------------------------------------

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw bad_argument("cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph complete_bipartite(int r, int s) {
    Graph g(r + s);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) g.add_edge(i, r + j);
    return g;
}

// S_n = K_{1,n-1}; vertex 0 is the center.
inline Graph star_graph(int n) {
    if (n < 1) throw bad_argument("star needs n >= 1");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace distspec
