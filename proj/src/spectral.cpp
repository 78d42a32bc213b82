#include "sgspectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgs {

IntPolynomial char_poly(const SignedGraph& g) {
    // Faddeev-LeVerrier trace recursion; every division is exact over Z.
    int n = g.order();
    std::vector<mpz_class> c(n + 1, 0);
    c[n] = 1;
    if (n == 0) return IntPolynomial(std::move(c));

    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
    std::vector<mpz_class> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[idx(i, j)] = g.sign(i, j);

    std::vector<mpz_class> m = a, next(static_cast<size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // m <- a * (m + c[n-k+1] * I)
            for (int i = 0; i < n; ++i) m[idx(i, i)] += c[n - k + 1];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    mpz_class acc = 0;
                    for (int l = 0; l < n; ++l)
                        if (g.sign(i, l) != 0) acc += a[idx(i, l)] * m[idx(l, j)];
                    next[idx(i, j)] = acc;
                }
            std::swap(m, next);
        }
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += m[idx(i, i)];
        mpz_class q;
        mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -q;
    }
    return IntPolynomial(std::move(c));
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    if (n < 0 || a.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("matrix size does not match dimension");
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
        if (std::sqrt(off) <= kJacobiOffDiagTolerance) break;
        if (sweep == max_sweeps - 1) throw std::runtime_error("jacobi did not converge");

        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                double tau = s / (1.0 + c);

                double h = t * apq;
                at(p, p) -= h;
                at(q, q) += h;
                at(p, q) = at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = at(p, i) = aip - s * (aiq + tau * aip);
                    at(i, q) = at(q, i) = aiq + s * (aip - tau * aiq);
                }
            }
    }

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = at(i, i);
    std::sort(vals.begin(), vals.end());
    return vals;
}

Spectrum eigenvalues(const SignedGraph& g) {
    int n = g.order();
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = g.sign(i, j);
    return Spectrum{jacobi_eigenvalues(std::move(a), n), char_poly(g)};
}

bool is_spectrally_symmetric(const IntPolynomial& p) {
    int parity = p.degree() & 1;
    for (int d = 0; d <= p.degree(); ++d)
        if ((d & 1) != parity && p.coeff(d) != 0) return false;
    return true;
}

bool has_symmetric_spectrum(const SignedGraph& g) { return is_spectrally_symmetric(char_poly(g)); }

bool are_cospectral(const SignedGraph& a, const SignedGraph& b) {
    return a.order() == b.order() && char_poly(a) == char_poly(b);
}

bool multisets_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<double> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    for (size_t i = 0; i < sa.size(); ++i)
        if (std::abs(sa[i] - sb[i]) > tol) return false;
    return true;
}

}  // namespace sgs
