#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "distspec/errors.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Monic polynomial with exact integer coefficients, degree-descending.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    int degree() const { return int(coeffs.size()) - 1; }

    BigRational evaluate(const BigRational& x) const {
        BigRational acc = 0;
        for (const BigInt& c : coeffs) acc = acc * x + BigRational(c);
        return acc;
    }

    IntPolynomial derivative() const {
        IntPolynomial d;
        const int deg = degree();
        for (int i = 0; i < deg; ++i) d.coeffs.push_back(coeffs[i] * (deg - i));
        if (d.coeffs.empty()) d.coeffs.push_back(0);
        return d;
    }

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }

    std::string str() const {
        std::string s;
        for (const BigInt& c : coeffs) {
            if (!s.empty()) s += ' ';
            s += c.str();
        }
        return s;
    }
};

// det(lambda*I - Q) by Faddeev-LeVerrier over exact integers.  The trace
// divisions are exact for integer input; any nonzero remainder is a defect.
inline IntPolynomial char_poly_exact(const std::vector<std::vector<long long>>& q) {
    const int n = int(q.size());
    if (n == 0 || n > 8) throw bad_argument("char_poly_exact: order must be in [1, 8]");
    for (const auto& row : q)
        if (int(row.size()) != n) throw bad_argument("char_poly_exact: matrix is not square");

    std::vector<BigInt> m(std::size_t(n) * n), next(std::size_t(n) * n);
    auto at = [&](std::vector<BigInt>& v, int i, int j) -> BigInt& {
        return v[std::size_t(i) * n + j];
    };

    IntPolynomial p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[0] = 1;
    // M_1 = Q
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(m, i, j) = q[i][j];
    for (int k = 1; k <= n; ++k) {
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += at(m, i, i);
        BigInt ck = -tr;
        if (ck % k != 0) throw error("char_poly_exact: non-integral trace step");
        ck /= k;
        p.coeffs[k] = ck;
        if (k == n) break;
        // M_{k+1} = Q * (M_k + c_k I)
        for (int i = 0; i < n; ++i) at(m, i, i) += ck;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt s = 0;
                for (int l = 0; l < n; ++l) s += BigInt(q[i][l]) * at(m, l, j);
                at(next, i, j) = s;
            }
        m.swap(next);
    }
    return p;
}

inline IntPolynomial char_poly_exact(const QuotientMatrix& q) {
    std::vector<std::vector<long long>> rows(q.n, std::vector<long long>(q.n));
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            const double x = q.at(i, j);
            if (x != std::floor(x) || std::abs(x) > 1e15)
                throw bad_argument("char_poly_exact: non-integer matrix entry");
            rows[i][j] = (long long)(x);
        }
    return char_poly_exact(rows);
}

inline IntPolynomial make_poly(std::vector<BigInt> coeffs) {
    return IntPolynomial{std::move(coeffs)};
}

}  // namespace distspec
