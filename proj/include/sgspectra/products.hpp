#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgspectra/int_polynomial.hpp"
#include "sgspectra/signed_graph.hpp"
#include "sgspectra/spectral.hpp"

namespace sgs {

/// NEPS basis: a nonempty set of distinct nonzero 0/1 vectors of fixed arity.
/// Vector coordinate i is held at bit i; vectors are kept sorted.
class Basis {
public:
    Basis(int arity, std::vector<std::uint32_t> vectors);

    /// Parses the inline form "10,01". Vector length fixes the arity.
    static Basis parse(const std::string& csv);
    /// Reads the file form: one 0/1 vector per line, '#' comments allowed.
    static Basis read(std::istream& in);

    int arity() const { return arity_; }
    const std::vector<std::uint32_t>& vectors() const { return vectors_; }
    std::string to_string() const;  // inline form

    bool operator==(const Basis&) const = default;

private:
    int arity_;
    std::vector<std::uint32_t> vectors_;
};

/// Self-inverse permutation of factor indices.
class Involution {
public:
    explicit Involution(std::vector<int> map);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[i]; }
    const std::vector<int>& map() const { return map_; }

private:
    std::vector<int> map_;
};

enum class Certificate { certified, not_certified };

/// NEPS of signed graphs. Product vertices are tuples of factor vertices in
/// lexicographic order (first factor most significant); (u, v) is an edge iff
/// some basis vector has u_i = v_i exactly at its zero coordinates and
/// u_i ~ v_i at its one coordinates, with sign the product of the factor edge
/// signs over the one coordinates. The generating vector of each edge is
/// unique, which is asserted during construction.
SignedGraph neps(const std::vector<SignedGraph>& factors, const Basis& b);

/// Product spectrum straight from factor spectra: one value per index tuple,
/// sum over basis vectors of the products of selected factor eigenvalues.
Spectrum neps_eigenvalues(const std::vector<Spectrum>& factor_spectra, const Basis& b);

/// Searches for an involution pairing each factor with one whose exact
/// characteristic polynomial is the degree-signed reflection of its own, so
/// the partner's spectrum is the negation of the factor's. Returns the
/// lexicographically smallest such involution, or nullopt.
std::optional<Involution> find_involution(const std::vector<SignedGraph>& factors);

/// True iff relabeling every basis vector's support through inv lands in the
/// basis again (the induced map is then automatically a bijection).
bool is_compatible(const Basis& b, const Involution& inv);

/// True iff every basis vector has odd Hamming weight, i.e. the basis
/// polynomial is odd.
bool is_odd_basis(const Basis& b);

/// Sufficient condition for the NEPS to have symmetric spectrum: an odd basis
/// compatible with some spectrum-negating involution of the factor list. All
/// valid involutions are tried before giving up. Certified implies symmetric
/// spectrum; the converse may fail.
Certificate neps_symmetry_certificate(const std::vector<SignedGraph>& factors, const Basis& b);

/// Attaches blocks[i] at vertex i of base by identifying its root: block
/// interiors are copied verbatim and roots are joined exactly where base has
/// an edge, with base's sign. Block i occupies a contiguous index range in
/// block order.
SignedGraph rooted_product(const SignedGraph& base, const RootedList& blocks);

/// Characteristic polynomial of the rooted product via the determinant of the
/// polynomial matrix with diagonal charpoly(block i) and off-diagonal
/// -A(i,j) * charpoly(block i minus its root).
IntPolynomial rooted_product_char_poly(const SignedGraph& base, const RootedList& blocks);

/// Closed form for n identical blocks, evaluated denominator-free:
/// sum over base charpoly coefficients c_d of
/// c_d * charpoly(block)^d * charpoly(block - root)^(n-d).
IntPolynomial uniform_rooted_char_poly(const SignedGraph& base, const RootedSignedGraph& block);

/// Sufficient condition: base, block and root-deleted block all have symmetric
/// spectrum. Certified implies the uniform rooted product has symmetric spectrum.
Certificate rooted_symmetry_certificate(const SignedGraph& base, const RootedSignedGraph& block);

}  // namespace sgs
