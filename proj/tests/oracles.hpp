// Test-side oracles, deliberately written along routes the library does not
// take: cofactor expansion instead of the trace recursion, permutation sums
// instead of Bareiss, full permutation scans instead of the pruned DFS.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sgspectra/int_polynomial.hpp"
#include "sgspectra/search.hpp"
#include "sgspectra/signed_graph.hpp"

namespace oracle {

using sgs::IntPolynomial;
using sgs::SignedGraph;

using PolyGrid = std::vector<std::vector<IntPolynomial>>;

inline IntPolynomial cofactor_det(const PolyGrid& m) {
    size_t n = m.size();
    if (n == 0) return IntPolynomial::constant(1);
    if (n == 1) return m[0][0];
    IntPolynomial acc;
    for (size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        PolyGrid minor;
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        IntPolynomial term = m[r][0] * cofactor_det(minor);
        if (r % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// det(xI - A) by cofactor expansion.
inline IntPolynomial char_poly(const SignedGraph& g) {
    int n = g.order();
    PolyGrid m(n, std::vector<IntPolynomial>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                m[i][j] = IntPolynomial::x();
            else
                m[i][j] = IntPolynomial::constant(-g.sign(i, j));
        }
    return cofactor_det(m);
}

// Sum over all permutations; n <= 8 or so.
inline mpz_class permutation_det(const std::vector<mpz_class>& m, int n) {
    if (n == 0) return 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class det = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        mpz_class term = inversions % 2 ? -1 : 1;
        for (int i = 0; i < n; ++i) term *= m[static_cast<size_t>(i) * n + perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Minimum relabeled mask over every permutation.
inline std::uint32_t canonical_mask(std::uint32_t mask, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0u;
    do {
        std::uint32_t relabeled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (mask & sgs::mask_bit(i, j, n)) relabeled |= sgs::mask_bit(perm[i], perm[j], n);
        best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline long triangle_sign_sum(const SignedGraph& g) {
    long sum = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            for (int k = j + 1; k < g.order(); ++k)
                sum += g.sign(i, j) * g.sign(j, k) * g.sign(k, i);
    return sum;
}

inline SignedGraph random_graph(std::mt19937_64& rng, int n, double density = 0.5) {
    std::vector<sgs::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if ((rng() % 1000) / 1000.0 >= density) continue;
            edges.push_back({i, j, rng() & 1 ? 1 : -1});
        }
    return SignedGraph::from_edge_list(n, edges);
}

inline sgs::VertexSet random_vertex_set(std::mt19937_64& rng, int n) {
    sgs::VertexSet s;
    for (int v = 0; v < n; ++v)
        if (rng() & 1) s.push_back(v);
    return s;
}

// |p(x)| below tol scaled by the coefficient norm at |x|.
inline bool residual_ok(const IntPolynomial& p, double x, double tol = 1e-8) {
    double scale = 0.0, pw = 1.0;
    for (int d = 0; d <= p.degree(); ++d) {
        scale += std::abs(p.coeff(d).get_d()) * std::max(1.0, pw);
        pw *= std::abs(x);
    }
    return std::abs(p.evaluate(x)) <= tol * std::max(1.0, scale);
}

}  // namespace oracle
