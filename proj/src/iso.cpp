#include "sgspectra/iso.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgspectra/error.hpp"
#include "sgspectra/spectral.hpp"

namespace sgs {

bool verify_witness(const SignedGraph& a, const SignedGraph& b, const IsoWitness& w) {
    int n = a.order();
    if (b.order() != n || static_cast<int>(w.permutation.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int p : w.permutation) {
        if (p < 0 || p >= n || seen[p]) return false;
        seen[p] = 1;
    }
    for (int v : w.switch_set)
        if (v < 0 || v >= n) return false;
    SignedGraph g = switched(a, w.switch_set);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.sign(i, j) != b.sign(w.permutation[i], w.permutation[j])) return false;
    return true;
}

namespace {

struct VertexClass {
    int degree;
    int negative_degree;

    bool operator==(const VertexClass&) const = default;
    auto operator<=>(const VertexClass&) const = default;
};

std::vector<VertexClass> vertex_classes(const SignedGraph& g) {
    std::vector<VertexClass> out(g.order());
    for (int v = 0; v < g.order(); ++v) out[v] = {g.degree(v), g.negative_degree(v)};
    return out;
}

struct IsoSearch {
    const SignedGraph& a;
    const SignedGraph& b;
    std::vector<VertexClass> ca, cb;
    std::vector<int> order;  // source vertices, most constrained first
    std::vector<int> map;
    std::vector<char> used;

    IsoSearch(const SignedGraph& a_, const SignedGraph& b_)
        : a(a_), b(b_), ca(vertex_classes(a_)), cb(vertex_classes(b_)),
          map(a_.order(), -1), used(b_.order(), 0) {
        order.resize(a.order());
        for (int i = 0; i < a.order(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (ca[x] != ca[y]) return ca[y] < ca[x];
            return x < y;
        });
    }

    bool feasible() const {
        if (a.order() != b.order()) return false;
        auto ma = ca, mb = cb;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        return ma == mb;
    }

    bool extend(size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        if (map[v] >= 0) return extend(depth + 1);  // pre-assigned (rooted search)
        for (int u = 0; u < b.order(); ++u) {
            if (used[u] || cb[u] != ca[v]) continue;
            bool ok = true;
            for (int w = 0; w < a.order() && ok; ++w)
                if (map[w] >= 0 && b.sign(u, map[w]) != a.sign(v, w)) ok = false;
            if (!ok) continue;
            map[v] = u;
            used[u] = 1;
            if (extend(depth + 1)) return true;
            map[v] = -1;
            used[u] = 0;
        }
        return false;
    }
};

std::optional<IsoWitness> iso_search(const SignedGraph& a, const SignedGraph& b,
                                     int root_a = -1, int root_b = -1) {
    IsoSearch s(a, b);
    if (!s.feasible()) return std::nullopt;
    if (root_a >= 0) {
        if (s.ca[root_a] != s.cb[root_b]) return std::nullopt;
        s.map[root_a] = root_b;
        s.used[root_b] = 1;
    }
    if (!s.extend(0)) return std::nullopt;
    IsoWitness w{s.map, {}};
    if (!verify_witness(a, b, w)) throw std::logic_error("isomorphism witness failed verification");
    return w;
}

// Switching-invariant triangle census: counts of triangles with positive and
// negative sign product.
std::pair<int, int> triangle_census(const SignedGraph& g) {
    int pos = 0, neg = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) {
            if (g.sign(i, j) == 0) continue;
            for (int k = j + 1; k < g.order(); ++k) {
                int p = g.sign(i, j) * g.sign(j, k) * g.sign(k, i);
                if (p > 0)
                    ++pos;
                else if (p < 0)
                    ++neg;
            }
        }
    return {pos, neg};
}

std::vector<int> sorted_degrees(const SignedGraph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

std::optional<IsoWitness> are_isomorphic(const SignedGraph& a, const SignedGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count() ||
        a.negative_edge_count() != b.negative_edge_count())
        return std::nullopt;
    return iso_search(a, b);
}

std::optional<IsoWitness> are_rooted_isomorphic(const RootedSignedGraph& a,
                                                const RootedSignedGraph& b) {
    if (a.graph.order() != b.graph.order() || a.graph.edge_count() != b.graph.edge_count() ||
        a.graph.negative_edge_count() != b.graph.negative_edge_count())
        return std::nullopt;
    return iso_search(a.graph, b.graph, a.root, b.root);
}

std::optional<IsoWitness> are_switching_isomorphic(const SignedGraph& a, const SignedGraph& b,
                                                   int limit) {
    int n = a.order();
    if (n != b.order()) return std::nullopt;
    if (n > limit)
        throw Error("limit", "switching-isomorphism search too large: " + std::to_string(n) +
                                 " vertices exceeds limit " + std::to_string(limit));

    // Switching-invariant rejections before touching the 2^(n-1) classes.
    if (sorted_degrees(a) != sorted_degrees(b)) return std::nullopt;
    if (triangle_census(a) != triangle_census(b)) return std::nullopt;
    if (char_poly(a) != char_poly(b)) return std::nullopt;

    // Vertex 0 never switches: a set and its complement produce the same graph.
    std::uint32_t classes = n > 0 ? (1u << (n - 1)) : 1u;
    for (std::uint32_t s = 0; s < classes; ++s) {
        VertexSet set;
        for (int v = 1; v < n; ++v)
            if ((s >> (v - 1)) & 1u) set.push_back(v);
        SignedGraph g = switched(a, set);
        if (auto w = are_isomorphic(g, b)) {
            IsoWitness full{w->permutation, set};
            if (!verify_witness(a, b, full))
                throw std::logic_error("switching witness failed verification");
            return full;
        }
    }
    return std::nullopt;
}

std::optional<IsoWitness> is_sign_symmetric(const SignedGraph& g, int limit) {
    return are_switching_isomorphic(g, negate(g), limit);
}

namespace {

void bron_kerbosch(const SignedGraph& g, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    std::vector<int> p_iter = p;
    for (int v : p_iter) {
        std::vector<int> np, nx;
        for (int u : p)
            if (g.sign(v, u) != 0) np.push_back(u);
        for (int u : x)
            if (g.sign(v, u) != 0) nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

std::vector<VertexSet> maximum_cliques(const SignedGraph& g) {
    std::vector<VertexSet> maximal;
    std::vector<int> r, p(g.order());
    for (int v = 0; v < g.order(); ++v) p[v] = v;
    bron_kerbosch(g, r, std::move(p), {}, maximal);

    size_t best = 0;
    for (const auto& c : maximal) best = std::max(best, c.size());
    std::vector<VertexSet> out;
    for (auto& c : maximal)
        if (c.size() == best) {
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

CliqueRefutation sign_symmetry_clique_check(const SignedGraph& g, int limit) {
    auto cliques = maximum_cliques(g);
    if (cliques.size() != 1) return CliqueRefutation::inconclusive;
    const VertexSet& clique = cliques.front();
    if (static_cast<int>(clique.size()) > limit) return CliqueRefutation::inconclusive;

    // Any switching isomorphism g -> -g fixes the unique maximum clique of the
    // shared ground setwise and restricts to one on the induced signed graphs.
    SignedGraph restricted = induced_subgraph(g, clique);
    if (are_switching_isomorphic(restricted, negate(restricted), limit))
        return CliqueRefutation::inconclusive;
    return CliqueRefutation::refuted;
}

bool check_coiso(const RootedList& h1, const RootedList& h2) {
    if (h1.size() != h2.size()) throw Error("arity", "coiso lists must have equal length");
    for (size_t i = 0; i < h1.size(); ++i) {
        bool cospectrally_rooted =
            char_poly(h1[i].graph) == char_poly(h2[i].graph) &&
            char_poly(delete_vertex(h1[i].graph, h1[i].root)) ==
                char_poly(delete_vertex(h2[i].graph, h2[i].root));
        if (cospectrally_rooted) continue;
        if (are_rooted_isomorphic(h1[i], h2[i])) continue;
        return false;
    }
    return true;
}

}  // namespace sgs
