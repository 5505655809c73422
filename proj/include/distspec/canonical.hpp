#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/graph6.hpp"

namespace distspec {

inline constexpr int kMaxCanonOrder = 16;

// Total-order key with key(G) == key(H) iff G and H are isomorphic.
// The bytes are the graph6 string of the canonical form.
struct CanonicalLabel {
    std::string bytes;
    auto operator<=>(const CanonicalLabel&) const = default;
};

namespace detail {

// Backtracking canonizer: color refinement (seeded with distance profiles),
// then individualization with prefix pruning and automorphism-orbit skips.
// The canonical form minimizes the column-major upper-triangle bit string.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.n) {}

    // perm[pos] = original vertex placed at canonical position pos.
    std::vector<int> run() {
        std::vector<int> color = initial_colors();
        std::vector<int> fixed;
        search(color, fixed);
        return best_perm_;
    }

private:
    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::vector<std::uint8_t> best_bits_;
    std::vector<int> best_perm_;
    std::vector<std::vector<int>> autos_;

    static constexpr std::size_t kMaxAutos = 2048;

    std::vector<int> initial_colors() const {
        std::vector<std::uint64_t> profile(n_, 0);
        for (int v = 0; v < n_; ++v) {
            std::vector<int> dist = bfs_distances(g_, v);
            int cnt[16] = {0};
            for (int u = 0; u < n_; ++u) {
                if (u == v) continue;
                int d = dist[u] < 0 ? 15 : std::min(dist[u], 15);
                ++cnt[d];
            }
            std::uint64_t packed = 0;
            for (int d = 0; d < 16; ++d) packed |= std::uint64_t(cnt[d]) << (4 * d);
            profile[v] = packed;
        }
        return dense_rank(profile);
    }

    template <typename Key>
    std::vector<int> dense_rank(const std::vector<Key>& key) const {
        std::vector<Key> sorted = key;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> color(n_);
        for (int v = 0; v < n_; ++v)
            color[v] = int(std::lower_bound(sorted.begin(), sorted.end(), key[v]) - sorted.begin());
        return color;
    }

    // 1-WL refinement; splits cells in place (old color leads the signature).
    void refine(std::vector<int>& color) const {
        for (;;) {
            std::vector<std::pair<int, std::uint64_t>> sig(n_);
            for (int v = 0; v < n_; ++v) {
                std::uint64_t packed = 0;
                for (std::uint64_t bits = g_.adj[v]; bits; bits &= bits - 1)
                    packed += std::uint64_t(1) << (4 * color[std::countr_zero(bits)]);
                sig[v] = {color[v], packed};
            }
            std::vector<int> next = dense_rank(sig);
            if (next == color) return;
            color = std::move(next);
        }
    }

    // Vertices ordered by color for the leading run of singleton cells.
    std::vector<int> singleton_prefix(const std::vector<int>& color) const {
        std::vector<int> count(n_, 0), member(n_, -1);
        for (int v = 0; v < n_; ++v) {
            ++count[color[v]];
            member[color[v]] = v;
        }
        std::vector<int> prefix;
        for (int c = 0; c < n_ && count[c] == 1; ++c) prefix.push_back(member[c]);
        return prefix;
    }

    // Column-major upper-triangle bits of g_ relabeled by perm prefix.
    std::vector<std::uint8_t> prefix_bits(const std::vector<int>& perm) const {
        std::vector<std::uint8_t> bits;
        bits.reserve(perm.size() * (perm.size() - 1) / 2);
        for (std::size_t j = 1; j < perm.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                bits.push_back(g_.has_edge(perm[i], perm[j]) ? 1 : 0);
        return bits;
    }

    void search(std::vector<int> color, std::vector<int>& fixed) {
        refine(color);
        std::vector<int> prefix = singleton_prefix(color);
        std::vector<std::uint8_t> bits = prefix_bits(prefix);
        if (have_best_) {
            const auto ord = std::lexicographical_compare_three_way(
                bits.begin(), bits.end(), best_bits_.begin(), best_bits_.begin() + bits.size());
            if (ord == std::strong_ordering::greater) return;
        }
        if (int(prefix.size()) == n_) {
            if (!have_best_ || bits < best_bits_) {
                have_best_ = true;
                best_bits_ = std::move(bits);
                best_perm_ = prefix;
            } else if (bits == best_bits_ && autos_.size() < kMaxAutos) {
                std::vector<int> a(n_);
                for (int i = 0; i < n_; ++i) a[prefix[i]] = best_perm_[i];
                autos_.push_back(std::move(a));
            }
            return;
        }

        // branch on the first cell of size >= 2
        const int cell_color = int(prefix.size());
        std::vector<int> cell;
        for (int v = 0; v < n_; ++v)
            if (color[v] == cell_color) cell.push_back(v);

        std::vector<int> done;
        for (int v : cell) {
            if (skip_by_automorphism(v, done, fixed)) continue;
            std::vector<int> child = color;
            for (int u = 0; u < n_; ++u)
                if (u != v && child[u] >= cell_color) ++child[u];
            fixed.push_back(v);
            search(std::move(child), fixed);
            fixed.pop_back();
            done.push_back(v);
        }
    }

    bool skip_by_automorphism(int v, const std::vector<int>& done,
                              const std::vector<int>& fixed) const {
        if (done.empty()) return false;
        for (const auto& a : autos_) {
            bool fixes = true;
            for (int u : fixed)
                if (a[u] != u) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int w : done)
                if (a[w] == v) return true;
        }
        return false;
    }
};

}  // namespace detail

// perm[pos] = original vertex at canonical position pos.
inline std::vector<int> canonical_permutation(const Graph& g) {
    if (g.n > kMaxCanonOrder)
        throw unsupported_error("canonical labeling limited to n <= 16");
    if (g.n == 1) return {0};
    return detail::Canonizer(g).run();
}

inline Graph canonical_form(const Graph& g) {
    std::vector<int> perm = canonical_permutation(g);
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[perm[i]] = i;
    Graph h(g.n);
    for (int v = 0; v < g.n; ++v)
        for (std::uint64_t bits = g.adj[v]; bits; bits &= bits - 1) {
            int u = std::countr_zero(bits);
            if (u > v) h.add_edge(pos[v], pos[u]);
        }
    return h;
}

inline CanonicalLabel canonical_label(const Graph& g) {
    return CanonicalLabel{to_graph6(canonical_form(g))};
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_label(a) == canonical_label(b);
}

}  // namespace distspec
