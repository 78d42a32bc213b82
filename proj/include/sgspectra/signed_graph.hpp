#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sgs {

struct Edge {
    int u = 0;
    int v = 0;
    int sign = 1;
};

/// Simple signed graph held as a dense symmetric adjacency with entries in
/// {-1, 0, +1} and zero diagonal. Values are immutable after construction;
/// every operation below returns a new graph, so sharing across threads is safe.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(int n);

    /// Builds from an edge list. Rejects loops, out-of-range endpoints,
    /// duplicate unordered pairs (regardless of sign) and signs outside {-1,+1}.
    static SignedGraph from_edge_list(int n, const std::vector<Edge>& edges);

    /// Builds from a row-major n*n array; validates symmetry, zero diagonal
    /// and the {-1,0,+1} entry range.
    static SignedGraph from_adjacency(int n, std::vector<int8_t> adj);

    int order() const { return n_; }
    int sign(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v]; }

    int edge_count() const;
    int negative_edge_count() const;
    std::vector<Edge> edges() const;  // u < v, sorted by (u, v)

    int degree(int v) const;
    int negative_degree(int v) const;

    bool operator==(const SignedGraph&) const = default;

private:
    int n_ = 0;
    std::vector<int8_t> adj_;
};

using VertexSet = std::vector<int>;

struct RootedSignedGraph {
    SignedGraph graph;
    int root = 0;

    RootedSignedGraph(SignedGraph g, int r);
};

using RootedList = std::vector<RootedSignedGraph>;

/// Same ground, every edge sign flipped.
SignedGraph negate(const SignedGraph& g);

/// Flips the sign of every edge with exactly one endpoint in s. Involution in s;
/// the zero pattern is unchanged.
SignedGraph switched(const SignedGraph& g, const VertexSet& s);

/// Principal submatrix omitting row/column v.
SignedGraph delete_vertex(const SignedGraph& g, int v);

SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b);

/// Subgraph induced by `keep` (sorted, deduplicated internally); vertex i of the
/// result is the i-th smallest member of keep.
SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& keep);

bool has_bipartite_ground(const SignedGraph& g);

/// Complete graph on 8 vertices with a fixed 9-edge negative signature.
/// Its spectrum is symmetric about zero, yet it is not switching-isomorphic
/// to its own negation.
SignedGraph sk8();

// .sg text format: optional '#' comment lines, then "n m", then m lines "u v s"
// with 0-based u < v and s written "+1" or "-1". Parse errors carry the line number.
SignedGraph read_sg(std::istream& in);
SignedGraph read_sg_file(const std::string& path);
void write_sg(std::ostream& out, const SignedGraph& g);
void write_sg_file(const std::string& path, const SignedGraph& g);

}  // namespace sgs
