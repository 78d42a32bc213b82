#pragma once

#include <optional>
#include <vector>

#include "sgspectra/signed_graph.hpp"

namespace sgs {

/// Witness for (switching) isomorphism: switch the first graph by switch_set,
/// then relabel vertex i to permutation[i]; the result equals the second graph
/// entrywise. switch_set is empty for plain isomorphism. Every witness returned
/// by the searches below has been re-verified by direct application.
struct IsoWitness {
    std::vector<int> permutation;
    VertexSet switch_set;
};

bool verify_witness(const SignedGraph& a, const SignedGraph& b, const IsoWitness& w);

/// Sign-preserving isomorphism search. Backtracking ordered by
/// (degree, negative degree); deterministic.
std::optional<IsoWitness> are_isomorphic(const SignedGraph& a, const SignedGraph& b);

/// Isomorphism constrained to map root to root.
std::optional<IsoWitness> are_rooted_isomorphic(const RootedSignedGraph& a,
                                                const RootedSignedGraph& b);

inline constexpr int kDefaultSwitchSearchLimit = 12;

/// Exhaustive search over the 2^(n-1) switch classes (vertex 0 is never
/// switched; a set and its complement act identically) combined with pruned
/// isomorphism search. Throws Error("limit") above `limit` vertices.
std::optional<IsoWitness> are_switching_isomorphic(const SignedGraph& a, const SignedGraph& b,
                                                   int limit = kDefaultSwitchSearchLimit);

/// Switching isomorphism onto the negation.
std::optional<IsoWitness> is_sign_symmetric(const SignedGraph& g,
                                            int limit = kDefaultSwitchSearchLimit);

/// All maximum cliques of the ground, each sorted, in lexicographic order.
std::vector<VertexSet> maximum_cliques(const SignedGraph& g);

enum class CliqueRefutation { refuted, inconclusive };

/// One-sided sign-symmetry test for graphs beyond the search limit: any
/// switching isomorphism onto the negation must map the unique maximum clique
/// of the ground onto itself, so a mismatch between the graph and its negation
/// restricted to that clique refutes sign-symmetry. Everything else
/// (several maximum cliques, or a matching restriction) is inconclusive.
CliqueRefutation sign_symmetry_clique_check(const SignedGraph& g,
                                            int limit = kDefaultSwitchSearchLimit);

/// Indexwise condition on two rooted lists: members are cospectral both whole
/// and root-deleted, or rooted-isomorphic.
bool check_coiso(const RootedList& h1, const RootedList& h2);

}  // namespace sgs
