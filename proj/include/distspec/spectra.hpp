#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

struct RealSymMatrix {
    int n = 0;
    std::vector<double> a;

    RealSymMatrix() = default;
    explicit RealSymMatrix(int order) : n(order), a(std::size_t(order) * order, 0.0) {}

    double at(int i, int j) const { return a[std::size_t(i) * n + j]; }
    double& at(int i, int j) { return a[std::size_t(i) * n + j]; }

    double frobenius() const {
        double s = 0;
        for (double x : a) s += x * x;
        return std::sqrt(s);
    }
};

inline RealSymMatrix to_matrix(const DistanceMatrix& dm) {
    RealSymMatrix m(dm.n);
    for (int i = 0; i < dm.n; ++i)
        for (int j = 0; j < dm.n; ++j) m.at(i, j) = dm.at(i, j);
    return m;
}

// D(G) + c*I as a dense matrix.
inline RealSymMatrix distance_matrix_plus(const Graph& g, double c = 0.0) {
    RealSymMatrix m = to_matrix(all_pairs_distances(g));
    for (int i = 0; i < m.n; ++i) m.at(i, i) += c;
    return m;
}

// Real eigenvalues sorted descending.
struct Spectrum {
    std::vector<double> values;
    int source_order = 0;

    double lambda1() const { return values.at(0); }
    double lambda2() const { return values.at(1); }
};

// Cyclic Jacobi; converges when the off-diagonal Frobenius norm drops below
// 1e-12 * ||M||_F, hard cap 100 sweeps.
inline Spectrum eig_symmetric(const RealSymMatrix& m_in) {
    const int n = m_in.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m_in.at(i, j) - m_in.at(j, i)) >
                1e-12 * std::max(1.0, m_in.frobenius()))
                throw bad_argument("eig_symmetric: matrix is not symmetric");
    for (double x : m_in.a)
        if (!std::isfinite(x)) throw bad_argument("eig_symmetric: non-finite entry");

    std::vector<double> a = m_in.a;
    auto at = [&](int i, int j) -> double& { return a[std::size_t(i) * n + j]; };
    const double norm = m_in.frobenius();
    const double tol = 1e-12 * std::max(norm, 1e-300);

    auto off_norm = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= tol / (10.0 * n)) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    Spectrum spec;
    spec.source_order = n;
    spec.values.resize(n);
    for (int i = 0; i < n; ++i) spec.values[i] = at(i, i);
    std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
    return spec;
}

inline Spectrum distance_spectrum(const Graph& g) {
    return eig_symmetric(to_matrix(all_pairs_distances(g)));
}

inline double lambda2(const Graph& g) { return distance_spectrum(g).lambda2(); }

// lambda2 of the cycle C_n: 0 for even n, -sec^2(pi/n)/4 for odd n.
inline double cycle_lambda2_closed_form(int n) {
    if (n < 3) throw bad_argument("cycle closed form needs n >= 3");
    if (n % 2 == 0) return 0.0;
    const double sec = 1.0 / std::cos(std::numbers::pi / n);
    return -0.25 * sec * sec;
}

// Count of eigenvalues with |lambda| > tol * max(1, ||M||_F).
inline int numeric_rank(const RealSymMatrix& m, double tol = 1e-7) {
    Spectrum s = eig_symmetric(m);
    const double cutoff = tol * std::max(1.0, m.frobenius());
    int rank = 0;
    for (double v : s.values)
        if (std::abs(v) > cutoff) ++rank;
    return rank;
}

struct InterlacingReport {
    bool ok = true;
    // Most violated signed slack; nonnegative slack everywhere means ok.
    double worst_violation = 0.0;
};

// Cauchy interlacing of the principal submatrix on `rows`:
// rho_i(A) >= rho_i(B) >= rho_{n-m+i}(A), checked within 1e-8.
inline InterlacingReport check_interlacing(const RealSymMatrix& a, const std::vector<int>& rows) {
    if (rows.empty()) throw bad_argument("interlacing needs a nonempty row set");
    RealSymMatrix b(int(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) b.at(int(i), int(j)) = a.at(rows[i], rows[j]);
    Spectrum sa = eig_symmetric(a), sb = eig_symmetric(b);
    const int n = a.n, m = b.n;
    InterlacingReport rep;
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        worst = std::min(worst, sa.values[i] - sb.values[i]);
        worst = std::min(worst, sb.values[i] - sa.values[n - m + i]);
    }
    rep.worst_violation = worst;
    rep.ok = worst >= -1e-8;
    return rep;
}

// Ordered partition of 0..n-1 into disjoint nonempty blocks.
struct Partition {
    std::vector<std::vector<int>> blocks;

    void validate(int n) const {
        std::vector<char> seen(n, 0);
        if (blocks.empty()) throw bad_argument("partition has no blocks");
        for (const auto& blk : blocks) {
            if (blk.empty()) throw bad_argument("partition has an empty block");
            for (int v : blk) {
                if (v < 0 || v >= n) throw bad_argument("partition index out of range");
                if (seen[v]) throw bad_argument("partition blocks are not disjoint");
                seen[v] = 1;
            }
        }
        for (int v = 0; v < n; ++v)
            if (!seen[v]) throw bad_argument("partition does not cover all indices");
    }
};

inline bool matrix_is_integral(const RealSymMatrix& m) {
    for (double x : m.a)
        if (x != std::floor(x)) return false;
    return true;
}

// Equitable: every row in block i has the same sum over the columns of block j.
// Exact comparison for integer matrices, 1e-9 otherwise.
inline bool is_equitable(const RealSymMatrix& m, const Partition& p) {
    p.validate(m.n);
    const double tol = matrix_is_integral(m) ? 0.0 : 1e-9;
    for (const auto& bi : p.blocks) {
        for (const auto& bj : p.blocks) {
            double first = 0;
            bool have = false;
            for (int u : bi) {
                double sum = 0;
                for (int v : bj) sum += m.at(u, v);
                if (!have) {
                    first = sum;
                    have = true;
                } else if (std::abs(sum - first) > tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Row-major dense quotient matrix (generally non-symmetric).
struct QuotientMatrix {
    int n = 0;
    std::vector<double> a;
    double at(int i, int j) const { return a[std::size_t(i) * n + j]; }
    double& at(int i, int j) { return a[std::size_t(i) * n + j]; }
};

inline QuotientMatrix quotient_matrix(const RealSymMatrix& m, const Partition& p) {
    if (!is_equitable(m, p)) throw bad_argument("partition is not equitable");
    const int k = int(p.blocks.size());
    QuotientMatrix q;
    q.n = k;
    q.a.assign(std::size_t(k) * k, 0.0);
    for (int i = 0; i < k; ++i) {
        const int u = p.blocks[i].front();
        for (int j = 0; j < k; ++j) {
            double sum = 0;
            for (int v : p.blocks[j]) sum += m.at(u, v);
            q.at(i, j) = sum;
        }
    }
    return q;
}

// Eigenvalues of the quotient: Q is similar to the symmetric matrix
// S[i][j] = Q[i][j] * sqrt(|B_i| / |B_j|), so they are real.
inline Spectrum quotient_eigenvalues(const RealSymMatrix& m, const Partition& p) {
    QuotientMatrix q = quotient_matrix(m, p);
    RealSymMatrix s(q.n);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            s.at(i, j) = q.at(i, j) * std::sqrt(double(p.blocks[i].size()) / double(p.blocks[j].size()));
    for (int i = 0; i < q.n; ++i)
        for (int j = i + 1; j < q.n; ++j) {
            const double avg = 0.5 * (s.at(i, j) + s.at(j, i));
            s.at(i, j) = s.at(j, i) = avg;
        }
    return eig_symmetric(s);
}

}  // namespace distspec
