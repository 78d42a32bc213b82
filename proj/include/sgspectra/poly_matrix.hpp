#pragma once

#include <vector>

#include "sgspectra/int_polynomial.hpp"

namespace sgs {

/// Square matrix with integer-polynomial entries.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int dim);

    int dim() const { return dim_; }
    IntPolynomial& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
    const IntPolynomial& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

private:
    int dim_ = 0;
    std::vector<IntPolynomial> e_;
};

/// Exact integer determinant by fraction-free (Bareiss) elimination.
/// dim == 0 gives 1. The input is row-major of size dim*dim.
mpz_class bareiss_determinant(std::vector<mpz_class> m, int dim);

/// Exact determinant over the integer-polynomial ring, computed by evaluating
/// every entry at D+1 integer points (D = sum of row-maximal degrees, an a
/// priori bound on the determinant degree), taking exact integer determinants
/// and interpolating back. Evaluation points are processed in parallel with
/// OpenMP; the result is identical to the serial variant.
IntPolynomial poly_matrix_det(const PolyMatrix& m);

/// Single-threaded evaluation-interpolation path, kept as the reference the
/// parallel kernel is tested and benchmarked against.
IntPolynomial poly_matrix_det_serial(const PolyMatrix& m);

/// Minor-expansion determinant over polynomial arithmetic. Exponential in dim;
/// independent route used for cross-checking at small sizes.
IntPolynomial poly_matrix_det_expansion(const PolyMatrix& m);

}  // namespace sgs
