#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distspec/canonical.hpp"
#include "distspec/graph.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

// -- constructors -----------------------------------------------------------

// S_n plus one edge between two leaves; center is vertex 0.
inline Graph star_plus(int n) {
    if (n < 3) throw bad_argument("star_plus needs n >= 3");
    Graph g = star_graph(n);
    g.add_edge(1, 2);
    return g;
}

// infinity(p,q,s): cycles C_p and C_q joined by a path of length s
// (one shared vertex when s = 0).  Cycle 1 is 0..p-1 with junction 0;
// for s >= 1 cycle 2 is p..p+q-1 with junction p.
inline Graph infinity_graph(int p, int q, int s) {
    if (p < 3 || q < 3 || s < 0) throw bad_argument("infinity graph needs p,q >= 3, s >= 0");
    const int n = p + q + s - 1;
    Graph g(n);
    for (int i = 0; i < p; ++i) g.add_edge(i, (i + 1) % p);
    if (s == 0) {
        // second cycle 0, p, p+1, ..., p+q-2
        g.add_edge(0, p);
        for (int i = 0; i + 1 < q - 1; ++i) g.add_edge(p + i, p + i + 1);
        g.add_edge(p + q - 2, 0);
    } else {
        for (int i = 0; i < q; ++i) g.add_edge(p + i, p + (i + 1) % q);
        int prev = 0;
        for (int i = 0; i < s - 1; ++i) {
            g.add_edge(prev, p + q + i);
            prev = p + q + i;
        }
        g.add_edge(prev, p);
    }
    return g;
}

// theta(p,q,s): internally disjoint paths of lengths p, q, s between
// x = 0 and y = 1; at most one of the lengths may be 1.
inline Graph theta_graph(int p, int q, int s) {
    if (p < 1 || q < 1 || s < 1) throw bad_argument("theta graph needs p,q,s >= 1");
    if ((p == 1) + (q == 1) + (s == 1) > 1)
        throw bad_argument("theta graph allows at most one path of length 1");
    const int n = p + q + s - 1;
    Graph g(n);
    int next = 2;
    for (int len : {p, q, s}) {
        int prev = 0;
        for (int i = 0; i < len - 1; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

// Appends a pendant path of the given length at `root`; length 0 is a no-op.
inline void attach_pendant_path(Graph& g, int root, int length) {
    int prev = root;
    for (int i = 0; i < length; ++i) {
        const int v = g.n;
        g.n += 1;
        g.adj.push_back(0);
        g.add_edge(prev, v);
        prev = v;
    }
}

inline Graph with_order(const Graph& g, int extra) {
    Graph h(g.n + extra);
    h.adj = g.adj;
    h.adj.resize(g.n + extra, 0);
    return h;
}

// B(s; h1,h2,h3,h4): infinity(3,3,s) with a pendant path of length h_i at
// each degree-two cycle vertex.
inline Graph b_family(int s, int h1, int h2, int h3, int h4) {
    if (s < 0 || h1 < 0 || h2 < 0 || h3 < 0 || h4 < 0)
        throw bad_argument("b_family needs s, h_i >= 0");
    Graph g = infinity_graph(3, 3, s);
    const int u3 = (s == 0) ? 3 : 4;
    const int u4 = (s == 0) ? 4 : 5;
    attach_pendant_path(g, 1, h1);
    attach_pendant_path(g, 2, h2);
    attach_pendant_path(g, u3, h3);
    attach_pendant_path(g, u4, h4);
    return g;
}

// B^inf_t: infinity(3,3,0) with t pendant edges at the degree-four vertex.
inline Graph b_inf(int t) {
    if (t < 0) throw bad_argument("b_inf needs t >= 0");
    Graph g = infinity_graph(3, 3, 0);
    for (int i = 0; i < t; ++i) attach_pendant_path(g, 0, 1);
    return g;
}

// B^theta_k: theta(2,2,1) with k pendant edges at degree-three vertex 0.
inline Graph b_theta(int k) {
    if (k < 0) throw bad_argument("b_theta needs k >= 0");
    Graph g = theta_graph(2, 2, 1);
    for (int i = 0; i < k; ++i) attach_pendant_path(g, 0, 1);
    return g;
}

// SP^t: clique K4 = {0,1,2,3}; w = 4 adjacent to u = 0 and v = 1;
// t further independent vertices adjacent to u only.
inline Graph sp_t(int t) {
    if (t < 0) throw bad_argument("sp_t needs t >= 0");
    Graph g = with_order(complete_graph(4), t + 1);
    g.add_edge(4, 0);
    g.add_edge(4, 1);
    for (int i = 0; i < t; ++i) g.add_edge(5 + i, 0);
    return g;
}

// K_s(x1,...,xr): clique 0..s-1 with x_i pendant edges at vertex i-1.
inline Graph k_split(int s, const std::vector<int>& xs) {
    if (s < 2) throw bad_argument("k_split needs s >= 2");
    if (int(xs.size()) > s) throw bad_argument("k_split allows at most s attachment vertices");
    Graph g = complete_graph(s);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 0) throw bad_argument("k_split needs x_i >= 0");
        for (int j = 0; j < xs[i]; ++j) attach_pendant_path(g, int(i), 1);
    }
    return g;
}

// Family G of the unicyclic theorem: C3 = {0,1,2} with pendant paths of
// lengths a, b, c (>= 0, order at least 5).
inline Graph tri_pendant(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c < 2)
        throw bad_argument("tri_pendant needs lengths >= 0 with total order >= 5");
    Graph g = cycle_graph(3);
    attach_pendant_path(g, 0, a);
    attach_pendant_path(g, 1, b);
    attach_pendant_path(g, 2, c);
    return g;
}

// Block star: cliques of the given sizes all sharing vertex 0.
inline Graph block_star(const std::vector<int>& sizes) {
    if (sizes.empty()) throw bad_argument("block_star needs at least one block");
    Graph g(1);
    for (int s : sizes) {
        if (s < 2) throw bad_argument("block_star blocks need size >= 2");
        const int base = g.n;
        g = with_order(g, s - 1);
        for (int i = 0; i < s - 1; ++i) {
            g.add_edge(0, base + i);
            for (int j = 0; j < i; ++j) g.add_edge(base + i, base + j);
        }
    }
    return g;
}

// BG(p,q,3,2,2): K_p = 0..p-1; at v = 0 a triangle {0, p, p+1} and a pendant
// edge to p+2; at u = 1 a bridge to z = p+3 carrying K_q = p+3..p+q+2.
inline Graph bg_pq322(int p, int q) {
    if (p < 2 || q < 2) throw bad_argument("bg_pq322 needs p, q >= 2");
    Graph g = with_order(complete_graph(p), q + 3);
    g.add_edge(0, p);
    g.add_edge(0, p + 1);
    g.add_edge(p, p + 1);
    g.add_edge(0, p + 2);
    g.add_edge(1, p + 3);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < i; ++j) g.add_edge(p + 3 + i, p + 3 + j);
    return g;
}

// -- descriptors ------------------------------------------------------------

enum class FamilyKind {
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    StarPlus,
    InfinityGraph,
    ThetaGraph,
    BFamily,
    BInf,
    BTheta,
    SPt,
    KSplit,
    TriPendant,
    BlockStar,
    BGpq322,
};

struct FamilyDescriptor {
    FamilyKind kind;
    std::vector<int> params;
};

inline const char* family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Cycle: return "Cycle";
        case FamilyKind::Complete: return "Complete";
        case FamilyKind::CompleteBipartite: return "CompleteBipartite";
        case FamilyKind::Star: return "Star";
        case FamilyKind::StarPlus: return "StarPlus";
        case FamilyKind::InfinityGraph: return "Infinity";
        case FamilyKind::ThetaGraph: return "Theta";
        case FamilyKind::BFamily: return "BFamily";
        case FamilyKind::BInf: return "BInf";
        case FamilyKind::BTheta: return "BTheta";
        case FamilyKind::SPt: return "SPt";
        case FamilyKind::KSplit: return "KSplit";
        case FamilyKind::TriPendant: return "TriPendant";
        case FamilyKind::BlockStar: return "BlockStar";
        case FamilyKind::BGpq322: return "BGpq322";
    }
    return "?";
}

inline Graph build(const FamilyDescriptor& d) {
    const auto& p = d.params;
    auto want = [&](std::size_t k) {
        if (p.size() != k)
            throw bad_argument(std::string(family_name(d.kind)) + ": wrong parameter count");
    };
    switch (d.kind) {
        case FamilyKind::Cycle: want(1); return cycle_graph(p[0]);
        case FamilyKind::Complete: want(1); return complete_graph(p[0]);
        case FamilyKind::CompleteBipartite: want(2); return complete_bipartite(p[0], p[1]);
        case FamilyKind::Star: want(1); return star_graph(p[0]);
        case FamilyKind::StarPlus: want(1); return star_plus(p[0]);
        case FamilyKind::InfinityGraph: want(3); return infinity_graph(p[0], p[1], p[2]);
        case FamilyKind::ThetaGraph: want(3); return theta_graph(p[0], p[1], p[2]);
        case FamilyKind::BFamily: want(5); return b_family(p[0], p[1], p[2], p[3], p[4]);
        case FamilyKind::BInf: want(1); return b_inf(p[0]);
        case FamilyKind::BTheta: want(1); return b_theta(p[0]);
        case FamilyKind::SPt: want(1); return sp_t(p[0]);
        case FamilyKind::KSplit:
            if (p.empty()) throw bad_argument("KSplit needs s");
            return k_split(p[0], std::vector<int>(p.begin() + 1, p.end()));
        case FamilyKind::TriPendant: want(3); return tri_pendant(p[0], p[1], p[2]);
        case FamilyKind::BlockStar:
            return block_star(p);
        case FamilyKind::BGpq322: want(2); return bg_pq322(p[0], p[1]);
    }
    throw bad_argument("unknown family kind");
}

// Parameter tuples compatible with (n, m), in the order membership tries them.
inline std::vector<std::vector<int>> candidate_params(FamilyKind kind, int n, int m) {
    std::vector<std::vector<int>> out;
    switch (kind) {
        case FamilyKind::Cycle:
            if (n >= 3 && m == n) out.push_back({n});
            break;
        case FamilyKind::Complete:
            if (m == n * (n - 1) / 2) out.push_back({n});
            break;
        case FamilyKind::CompleteBipartite:
            for (int r = 1; r <= n / 2; ++r)
                if (r * (n - r) == m) out.push_back({r, n - r});
            break;
        case FamilyKind::Star:
            if (m == n - 1) out.push_back({n});
            break;
        case FamilyKind::StarPlus:
            if (n >= 3 && m == n) out.push_back({n});
            break;
        case FamilyKind::InfinityGraph:
            if (m == n + 1)
                for (int p = 3; p <= n; ++p)
                    for (int q = p; q <= n; ++q) {
                        const int s = n + 1 - p - q;
                        if (s >= 0) out.push_back({p, q, s});
                    }
            break;
        case FamilyKind::ThetaGraph:
            if (m == n + 1)
                for (int p = 1; p <= n; ++p)
                    for (int q = p; q <= n; ++q) {
                        const int s = n + 1 - p - q;
                        if (s < q) continue;
                        if ((p == 1) + (q == 1) + (s == 1) > 1) continue;
                        out.push_back({p, q, s});
                    }
            break;
        case FamilyKind::BFamily:
            if (m == n + 1 && n >= 5)
                for (int s = 0; s <= n - 5; ++s) {
                    const int rest = n - 5 - s;
                    for (int h1 = 0; h1 <= rest; ++h1)
                        for (int h2 = 0; h2 <= rest - h1; ++h2)
                            for (int h3 = 0; h3 <= rest - h1 - h2; ++h3)
                                out.push_back({s, h1, h2, h3, rest - h1 - h2 - h3});
                }
            break;
        case FamilyKind::BInf:
            if (m == n + 1 && n >= 5) out.push_back({n - 5});
            break;
        case FamilyKind::BTheta:
            if (m == n + 1 && n >= 4) out.push_back({n - 4});
            break;
        case FamilyKind::SPt:
            if (n >= 5 && m == n + 3) out.push_back({n - 5});
            break;
        case FamilyKind::KSplit: {
            // s(s-3)/2 == m - n determines s; then partitions of n - s.
            for (int s = 2; s <= n; ++s) {
                if (s * (s - 3) / 2 != m - n) continue;
                const int total = n - s;
                if (total == 0) {
                    out.push_back({s});
                    break;
                }
                // partitions of `total` into at most s parts, descending
                std::vector<int> part;
                auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
                    if (remaining == 0) {
                        std::vector<int> tuple{s};
                        tuple.insert(tuple.end(), part.begin(), part.end());
                        out.push_back(std::move(tuple));
                        return;
                    }
                    if (int(part.size()) == s) return;
                    for (int next = std::min(remaining, maxpart); next >= 1; --next) {
                        part.push_back(next);
                        self(self, remaining - next, next);
                        part.pop_back();
                    }
                };
                rec(rec, total, total);
                break;
            }
            break;
        }
        case FamilyKind::TriPendant:
            if (m == n && n >= 5)
                for (int a = 0; 3 * a <= n - 3; ++a)
                    for (int b = a; a + 2 * b <= n - 3; ++b)
                        out.push_back({a, b, n - 3 - a - b});
            break;
        case FamilyKind::BlockStar:
            break;  // structural; see recognizers
        case FamilyKind::BGpq322:
            for (int p = 2; p <= n - 5; ++p) {
                const int q = n - 3 - p;
                if (q < 2) continue;
                if (m == p * (p - 1) / 2 + q * (q - 1) / 2 + 5) out.push_back({p, q});
            }
            break;
    }
    return out;
}

// First parameter tuple (in candidate order) whose build is isomorphic to g.
inline std::optional<std::vector<int>> membership(const Graph& g, FamilyKind kind) {
    const int m = g.size();
    for (const auto& params : candidate_params(kind, g.n, m)) {
        Graph h = build(FamilyDescriptor{kind, params});
        if (are_isomorphic(g, h)) return params;
    }
    return std::nullopt;
}

// -- equitable partitions used by the quotient-identity checks --------------

// B^theta_k, k >= 1: {w}, {z}, two degree-2 vertices, k pendants.
inline Partition btheta_partition(int k) {
    if (k < 1) throw bad_argument("btheta partition needs k >= 1");
    Partition p;
    p.blocks = {{0}, {1}, {2, 3}};
    std::vector<int> pend;
    for (int i = 0; i < k; ++i) pend.push_back(4 + i);
    p.blocks.push_back(pend);
    return p;
}

// SP^t, t >= 1: V1 = K4 \ {u,v}, V2 = pendants, {u}, {v}, {w}.
inline Partition spt_partition(int t) {
    if (t < 1) throw bad_argument("spt partition needs t >= 1");
    Partition p;
    std::vector<int> v2;
    for (int i = 0; i < t; ++i) v2.push_back(5 + i);
    p.blocks = {{2, 3}, v2, {0}, {1}, {4}};
    return p;
}

// K_s(2,1), s >= 3: V1 = K_s \ {u,v}, V2 = {w1,w2}, {u}, {v}, {w3}.
inline Partition ks21_partition(int s) {
    if (s < 3) throw bad_argument("ks21 partition needs s >= 3");
    Partition p;
    std::vector<int> v1;
    for (int i = 2; i < s; ++i) v1.push_back(i);
    p.blocks = {v1, {s, s + 1}, {0}, {1}, {s + 2}};
    return p;
}

}  // namespace distspec
