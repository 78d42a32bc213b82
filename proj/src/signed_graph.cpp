#include "sgspectra/signed_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "sgspectra/error.hpp"

namespace sgs {

SignedGraph::SignedGraph(int n) : n_(n) {
    if (n < 0) throw Error("range", "vertex count must be nonnegative");
    adj_.assign(static_cast<size_t>(n) * n, 0);
}

SignedGraph SignedGraph::from_edge_list(int n, const std::vector<Edge>& edges) {
    SignedGraph g(n);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error("range", "edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                                     std::to_string(e.v) + ")");
        if (e.u == e.v) throw Error("invalid", "loops are not allowed: vertex " + std::to_string(e.u));
        if (e.sign != 1 && e.sign != -1)
            throw Error("invalid", "edge sign must be +1 or -1, got " + std::to_string(e.sign));
        if (g.sign(e.u, e.v) != 0)
            throw Error("invalid", "duplicate edge (" + std::to_string(e.u) + ", " +
                                       std::to_string(e.v) + ")");
        g.adj_[static_cast<size_t>(e.u) * n + e.v] = static_cast<int8_t>(e.sign);
        g.adj_[static_cast<size_t>(e.v) * n + e.u] = static_cast<int8_t>(e.sign);
    }
    return g;
}

SignedGraph SignedGraph::from_adjacency(int n, std::vector<int8_t> adj) {
    if (n < 0) throw Error("range", "vertex count must be nonnegative");
    if (adj.size() != static_cast<size_t>(n) * n)
        throw Error("invalid", "adjacency size does not match vertex count");
    for (int i = 0; i < n; ++i) {
        if (adj[static_cast<size_t>(i) * n + i] != 0)
            throw Error("invalid", "nonzero diagonal at vertex " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            int8_t e = adj[static_cast<size_t>(i) * n + j];
            if (e != 0 && e != 1 && e != -1) throw Error("invalid", "adjacency entry outside {-1,0,+1}");
            if (e != adj[static_cast<size_t>(j) * n + i])
                throw Error("invalid", "adjacency not symmetric at (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ")");
        }
    }
    SignedGraph g;
    g.n_ = n;
    g.adj_ = std::move(adj);
    return g;
}

int SignedGraph::edge_count() const {
    int m = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (sign(i, j) != 0) ++m;
    return m;
}

int SignedGraph::negative_edge_count() const {
    int m = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (sign(i, j) < 0) ++m;
    return m;
}

std::vector<Edge> SignedGraph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (sign(i, j) != 0) out.push_back({i, j, sign(i, j)});
    return out;
}

int SignedGraph::degree(int v) const {
    int d = 0;
    for (int j = 0; j < n_; ++j)
        if (sign(v, j) != 0) ++d;
    return d;
}

int SignedGraph::negative_degree(int v) const {
    int d = 0;
    for (int j = 0; j < n_; ++j)
        if (sign(v, j) < 0) ++d;
    return d;
}

RootedSignedGraph::RootedSignedGraph(SignedGraph g, int r) : graph(std::move(g)), root(r) {
    if (r < 0 || r >= graph.order())
        throw Error("range", "root " + std::to_string(r) + " out of range for order " +
                                 std::to_string(graph.order()));
}

SignedGraph negate(const SignedGraph& g) {
    int n = g.order();
    std::vector<int8_t> adj(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            adj[static_cast<size_t>(i) * n + j] = static_cast<int8_t>(-g.sign(i, j));
    return SignedGraph::from_adjacency(n, std::move(adj));
}

SignedGraph switched(const SignedGraph& g, const VertexSet& s) {
    int n = g.order();
    std::vector<char> in_s(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw Error("range", "switch vertex " + std::to_string(v) + " out of range");
        in_s[v] = 1;
    }
    std::vector<int8_t> adj(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int flip = (in_s[i] != in_s[j]) ? -1 : 1;
            adj[static_cast<size_t>(i) * n + j] = static_cast<int8_t>(flip * g.sign(i, j));
        }
    return SignedGraph::from_adjacency(n, std::move(adj));
}

SignedGraph delete_vertex(const SignedGraph& g, int v) {
    int n = g.order();
    if (n == 0) throw Error("invalid", "cannot delete a vertex from the empty graph");
    if (v < 0 || v >= n) throw Error("range", "vertex " + std::to_string(v) + " out of range");
    std::vector<int8_t> adj(static_cast<size_t>(n - 1) * (n - 1), 0);
    for (int i = 0, ii = 0; i < n; ++i) {
        if (i == v) continue;
        for (int j = 0, jj = 0; j < n; ++j) {
            if (j == v) continue;
            adj[static_cast<size_t>(ii) * (n - 1) + jj] = static_cast<int8_t>(g.sign(i, j));
            ++jj;
        }
        ++ii;
    }
    return SignedGraph::from_adjacency(n - 1, std::move(adj));
}

SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
    int n = a.order() + b.order();
    std::vector<int8_t> adj(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            adj[static_cast<size_t>(i) * n + j] = static_cast<int8_t>(a.sign(i, j));
    for (int i = 0; i < b.order(); ++i)
        for (int j = 0; j < b.order(); ++j)
            adj[static_cast<size_t>(a.order() + i) * n + (a.order() + j)] =
                static_cast<int8_t>(b.sign(i, j));
    return SignedGraph::from_adjacency(n, std::move(adj));
}

SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& keep) {
    std::set<int> sorted;
    for (int v : keep) {
        if (v < 0 || v >= g.order())
            throw Error("range", "vertex " + std::to_string(v) + " out of range");
        sorted.insert(v);
    }
    std::vector<int> verts(sorted.begin(), sorted.end());
    int n = static_cast<int>(verts.size());
    std::vector<int8_t> adj(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            adj[static_cast<size_t>(i) * n + j] = static_cast<int8_t>(g.sign(verts[i], verts[j]));
    return SignedGraph::from_adjacency(n, std::move(adj));
}

bool has_bipartite_ground(const SignedGraph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (g.sign(u, v) == 0) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

SignedGraph sk8() {
    // Negative pairs in 0-based labels; the remaining 19 pairs of K8 are positive.
    static const std::pair<int, int> kNegative[] = {{2, 3}, {2, 4}, {3, 4}, {3, 5}, {3, 6},
                                                    {4, 6}, {4, 7}, {5, 6}, {6, 7}};
    std::vector<Edge> edges;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            int s = 1;
            for (const auto& [a, b] : kNegative)
                if (a == i && b == j) s = -1;
            edges.push_back({i, j, s});
        }
    return SignedGraph::from_edge_list(8, edges);
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw Error("parse", "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

SignedGraph read_sg(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_comment_or_blank(line)) continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> m) || n < 0 || m < 0) parse_fail(line_no, "expected header \"n m\"");
            std::string rest;
            if (ss >> rest) parse_fail(line_no, "trailing tokens after header");
            continue;
        }
        if (static_cast<int>(edges.size()) == m) parse_fail(line_no, "more edge lines than declared");
        int u, v;
        std::string stok;
        if (!(ss >> u >> v >> stok)) parse_fail(line_no, "expected \"u v s\"");
        std::string rest;
        if (ss >> rest) parse_fail(line_no, "trailing tokens after edge");
        int s;
        if (stok == "+1")
            s = 1;
        else if (stok == "-1")
            s = -1;
        else
            parse_fail(line_no, "sign must be \"+1\" or \"-1\", got \"" + stok + "\"");
        if (u >= v) parse_fail(line_no, "edges require u < v");
        if (u < 0 || v >= n) parse_fail(line_no, "vertex out of range");
        if (!seen.insert({u, v}).second) parse_fail(line_no, "duplicate edge");
        edges.push_back({u, v, s});
    }
    if (n < 0) throw Error("parse", "missing \"n m\" header");
    if (static_cast<int>(edges.size()) != m)
        throw Error("parse", "declared " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
    try {
        return SignedGraph::from_edge_list(n, edges);
    } catch (const Error& e) {
        throw Error("parse", e.what());
    }
}

SignedGraph read_sg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open " + path);
    try {
        return read_sg(in);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

void write_sg(std::ostream& out, const SignedGraph& g) {
    auto edges = g.edges();
    out << g.order() << " " << edges.size() << "\n";
    for (const Edge& e : edges)
        out << e.u << " " << e.v << " " << (e.sign > 0 ? "+1" : "-1") << "\n";
}

void write_sg_file(const std::string& path, const SignedGraph& g) {
    std::ofstream out(path);
    if (!out) throw Error("io", "cannot open " + path + " for writing");
    write_sg(out, g);
    if (!out) throw Error("io", "write failed: " + path);
}

}  // namespace sgs
