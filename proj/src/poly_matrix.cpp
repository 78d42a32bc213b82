#include "sgspectra/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sgs {

PolyMatrix::PolyMatrix(int dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
    e_.assign(static_cast<size_t>(dim) * dim, IntPolynomial::zero());
}

mpz_class bareiss_determinant(std::vector<mpz_class> m, int dim) {
    if (dim == 0) return 1;
    auto at = [&](int i, int j) -> mpz_class& { return m[static_cast<size_t>(i) * dim + j]; };
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < dim - 1; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < dim; ++r)
                if (at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = k; j < dim; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < dim; ++i) {
            for (int j = k + 1; j < dim; ++j) {
                mpz_class num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(dim - 1, dim - 1);
}

namespace {

int determinant_degree_bound(const PolyMatrix& m) {
    int bound = 0;
    for (int i = 0; i < m.dim(); ++i) {
        int row_max = 0;
        for (int j = 0; j < m.dim(); ++j) row_max = std::max(row_max, m.at(i, j).degree());
        bound += std::max(row_max, 0);
    }
    return bound;
}

IntPolynomial det_by_evaluation(const PolyMatrix& m, bool parallel) {
    int dim = m.dim();
    if (dim == 0) return IntPolynomial::constant(1);

    int points = determinant_degree_bound(m) + 1;
    std::vector<mpz_class> xs(points), ys(points);
    for (int k = 0; k < points; ++k) xs[k] = k - points / 2;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int k = 0; k < points; ++k) {
        std::vector<mpz_class> scalar(static_cast<size_t>(dim) * dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                scalar[static_cast<size_t>(i) * dim + j] = m.at(i, j)(xs[k]);
        ys[k] = bareiss_determinant(std::move(scalar), dim);
    }

    return interpolate_integer(xs, ys);
}

}  // namespace

IntPolynomial poly_matrix_det(const PolyMatrix& m) { return det_by_evaluation(m, true); }

IntPolynomial poly_matrix_det_serial(const PolyMatrix& m) { return det_by_evaluation(m, false); }

IntPolynomial poly_matrix_det_expansion(const PolyMatrix& m) {
    int dim = m.dim();
    if (dim == 0) return IntPolynomial::constant(1);
    if (dim == 1) return m.at(0, 0);
    IntPolynomial acc;
    for (int r = 0; r < dim; ++r) {
        if (m.at(r, 0).is_zero()) continue;
        PolyMatrix minor(dim - 1);
        for (int i = 0, ii = 0; i < dim; ++i) {
            if (i == r) continue;
            for (int j = 1; j < dim; ++j) minor.at(ii, j - 1) = m.at(i, j);
            ++ii;
        }
        IntPolynomial term = m.at(r, 0) * poly_matrix_det_expansion(minor);
        if (r % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

}  // namespace sgs
