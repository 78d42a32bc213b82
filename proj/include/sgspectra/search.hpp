#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sgspectra/int_polynomial.hpp"
#include "sgspectra/iso.hpp"
#include "sgspectra/signed_graph.hpp"

namespace sgs {

// Unlabeled-graph machinery for n <= 8 vertices. A graph is a bitmask over the
// n(n-1)/2 unordered pairs; pair (i < j) has index j(j-1)/2 + i and is stored
// at bit P-1-index (P = pair count), so comparing masks as integers compares
// adjacency strings level by level: all pairs inside {0..t} precede any pair
// reaching t+1. The canonical form of a graph is the minimal mask over all
// vertex relabelings.

int pair_count(int n);
std::uint32_t mask_bit(int i, int j, int n);

std::uint32_t canonical_mask(std::uint32_t mask, int n);
bool mask_is_canonical(std::uint32_t mask, int n);

/// All automorphisms (as permutation vectors) of the graph encoded by mask.
std::vector<std::vector<int>> mask_automorphisms(std::uint32_t mask, int n);

/// Ascending list of canonical masks = one representative per unlabeled graph.
/// The mask range is split into contiguous chunks processed in parallel with
/// OpenMP and merged in chunk order, so the output equals the serial variant.
std::vector<std::uint32_t> enumerate_canonical_masks(int n);
std::vector<std::uint32_t> enumerate_canonical_masks_serial(int n);

/// Signed graph with the mask's ground and every edge set to `sign`.
SignedGraph mask_to_graph(std::uint32_t mask, int n, int sign = 1);

/// Bucket key for rooted graphs: exact characteristic polynomials of the whole
/// graph and of the root-deleted graph.
struct RootedSpectralKey {
    IntPolynomial whole_poly;
    IntPolynomial deleted_poly;

    bool operator==(const RootedSpectralKey&) const = default;
};

struct CospectrallyRootedPair {
    RootedSignedGraph first;
    RootedSignedGraph second;
    RootedSpectralKey key;
};

inline constexpr int kDefaultEnumerationLimit = 8;

/// Enumerates every rooted unlabeled graph on n vertices (roots deduplicated
/// by automorphism orbit), buckets by RootedSpectralKey and returns all cross
/// pairs sharing a key. Pair members are all-positive signed graphs and are
/// never rooted-isomorphic to each other. Deterministic order.
std::vector<CospectrallyRootedPair> find_cospectrally_rooted_pairs(
    int n, int limit = kDefaultEnumerationLimit);

inline constexpr int kDefaultSignatureEdgeLimit = 20;

/// Iterates all 2^m sign assignments over the edges of `ground` (m bounded by
/// edge_limit), keeps those satisfying the predicate and deduplicates the hits
/// by switching isomorphism when the order permits (<= dedup_limit vertices;
/// beyond that only identical signatures collapse). Predicate evaluation runs
/// in parallel; output order is by ascending sign assignment.
std::vector<SignedGraph> enumerate_signatures(
    const SignedGraph& ground, const std::function<bool(const SignedGraph&)>& predicate,
    int edge_limit = kDefaultSignatureEdgeLimit, int dedup_limit = kDefaultSwitchSearchLimit);

/// Sampling mode for grounds too large to exhaust: draws `samples` seeded
/// pseudorandom sign assignments after the explicit `include` pool, then
/// filters and deduplicates as above. Same seed, same output.
std::vector<SignedGraph> sample_signatures(
    const SignedGraph& ground, const std::function<bool(const SignedGraph&)>& predicate,
    std::uint64_t seed, int samples, const std::vector<SignedGraph>& include = {},
    int dedup_limit = kDefaultSwitchSearchLimit);

/// Attaches all-positive copies of the pair's two rooted graphs at every
/// vertex of base; the results are exactly cospectral. The pair is
/// re-validated and rejected if its key polynomials differ.
std::pair<SignedGraph, SignedGraph> build_cospectral_pair(const SignedGraph& base,
                                                          const CospectrallyRootedPair& pair);

/// List form: the two rooted lists must satisfy the coiso condition
/// (indexwise cospectrally-rooted or rooted-isomorphic).
std::pair<SignedGraph, SignedGraph> build_cospectral_pair(const SignedGraph& base,
                                                          const RootedList& h1,
                                                          const RootedList& h2);

}  // namespace sgs
