#pragma once

#include <optional>
#include <vector>

#include "sgspectra/int_polynomial.hpp"
#include "sgspectra/signed_graph.hpp"

namespace sgs {

/// Off-diagonal Frobenius norm below which the Jacobi sweep stops.
inline constexpr double kJacobiOffDiagTolerance = 1e-12;
/// Absolute tolerance for comparing floating eigenvalue multisets.
inline constexpr double kEigenvalueTolerance = 1e-8;

struct Spectrum {
    std::vector<double> values;                // ascending, one entry per vertex
    std::optional<IntPolynomial> source_poly;  // exact polynomial the values root, when known
};

/// Exact characteristic polynomial det(xI - A), monic of degree order().
/// Integer-preserving trace recursion; no floating arithmetic involved.
IntPolynomial char_poly(const SignedGraph& g);

/// Eigenvalues of a dense symmetric matrix (row-major n*n) by cyclic Jacobi
/// rotations, returned ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

Spectrum eigenvalues(const SignedGraph& g);

/// True iff every nonzero coefficient sits at a degree with the parity of
/// deg p. For a characteristic polynomial this is exactly the tolerance-free
/// test that the root multiset is closed under negation.
bool is_spectrally_symmetric(const IntPolynomial& p);

bool has_symmetric_spectrum(const SignedGraph& g);

/// Exact: equal order and equal characteristic polynomial.
bool are_cospectral(const SignedGraph& a, const SignedGraph& b);

/// Sorted pairwise comparison with absolute tolerance.
bool multisets_close(const std::vector<double>& a, const std::vector<double>& b,
                     double tol = kEigenvalueTolerance);

}  // namespace sgs
