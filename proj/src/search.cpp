#include "sgspectra/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "sgspectra/error.hpp"
#include "sgspectra/spectral.hpp"
#include "sgspectra/products.hpp"

namespace sgs {

int pair_count(int n) { return n * (n - 1) / 2; }

std::uint32_t mask_bit(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    int index = j * (j - 1) / 2 + i;
    return 1u << (pair_count(n) - 1 - index);
}

namespace {

constexpr int kMaxMaskVertices = 8;

// Relabeling search shared by canonicality, canonical form and automorphisms.
// New positions are filled 0..n-1; placing position t fixes the adjacency
// block of pairs (i, t), i < t, which occupies a contiguous bit range of the
// mask directly below everything decided earlier. Branches whose block
// exceeds the reference block are pruned; equal blocks recurse; a smaller
// block means a strictly smaller relabeled mask.
struct RelabelSearch {
    int n = 0;
    int pairs = 0;
    bool adj[kMaxMaskVertices][kMaxMaskVertices] = {};
    std::uint32_t reference = 0;
    int chosen[kMaxMaskVertices] = {};
    bool used[kMaxMaskVertices] = {};

    RelabelSearch(std::uint32_t mask, int n_) : n(n_), pairs(pair_count(n_)) {
        if (n_ < 0 || n_ > kMaxMaskVertices)
            throw Error("limit", "graph masks support at most 8 vertices");
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                adj[i][j] = adj[j][i] = (mask & mask_bit(i, j, n)) != 0;
        reference = mask;
    }

    std::uint32_t reference_block(int t) const {
        int low = pairs - t * (t + 1) / 2;  // bit just below the level-t block
        return (reference >> low) & ((1u << t) - 1u);
    }

    std::uint32_t candidate_block(int t, int v) const {
        std::uint32_t b = 0;
        for (int i = 0; i < t; ++i) b |= static_cast<std::uint32_t>(adj[chosen[i]][v]) << (t - 1 - i);
        return b;
    }

    // Returns true if some relabeling produces a strictly smaller mask.
    bool smaller_exists(int t = 0) {
        if (t == n) return false;
        std::uint32_t ref = reference_block(t);
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint32_t b = candidate_block(t, v);
            if (b > ref) continue;
            if (b < ref) return true;
            chosen[t] = v;
            used[v] = true;
            bool found = smaller_exists(t + 1);
            used[v] = false;
            if (found) return true;
        }
        return false;
    }

    // Completes the current prefix with the least remaining vertices and
    // returns the relabeled mask. Only called below a strictly smaller block,
    // where any completion already wins.
    std::uint32_t complete_prefix(int t) {
        for (; t < n; ++t)
            for (int v = 0; v < n; ++v)
                if (!used[v]) {
                    chosen[t] = v;
                    used[v] = true;
                    break;
                }
        std::uint32_t mask = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (adj[chosen[i]][chosen[j]]) mask |= mask_bit(i, j, n);
        for (int v = 0; v < n; ++v) used[v] = false;
        return mask;
    }

    // Finds any relabeled mask strictly below `reference`, or nullopt.
    std::optional<std::uint32_t> find_smaller(int t = 0) {
        if (t == n) return std::nullopt;
        std::uint32_t ref = reference_block(t);
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint32_t b = candidate_block(t, v);
            if (b > ref) continue;
            chosen[t] = v;
            used[v] = true;
            if (b < ref) {
                std::uint32_t mask = complete_prefix(t + 1);
                return mask;
            }
            auto found = find_smaller(t + 1);
            used[v] = false;
            if (found) return found;
        }
        return std::nullopt;
    }

    void collect_automorphisms(int t, std::vector<std::vector<int>>& out) {
        if (t == n) {
            // chosen maps new position -> original vertex; report original -> new.
            std::vector<int> perm(n);
            for (int pos = 0; pos < n; ++pos) perm[chosen[pos]] = pos;
            out.push_back(std::move(perm));
            return;
        }
        std::uint32_t ref = reference_block(t);
        for (int v = 0; v < n; ++v) {
            if (used[v] || candidate_block(t, v) != ref) continue;
            chosen[t] = v;
            used[v] = true;
            collect_automorphisms(t + 1, out);
            used[v] = false;
        }
    }
};

}  // namespace

bool mask_is_canonical(std::uint32_t mask, int n) {
    RelabelSearch s(mask, n);
    return !s.smaller_exists();
}

std::uint32_t canonical_mask(std::uint32_t mask, int n) {
    std::uint32_t best = mask;
    for (;;) {
        RelabelSearch s(best, n);
        auto smaller = s.find_smaller();
        if (!smaller) return best;
        best = *smaller;
    }
}

std::vector<std::vector<int>> mask_automorphisms(std::uint32_t mask, int n) {
    RelabelSearch s(mask, n);
    std::vector<std::vector<int>> out;
    s.collect_automorphisms(0, out);
    return out;
}

std::vector<std::uint32_t> enumerate_canonical_masks_serial(int n) {
    if (n < 0 || n > kMaxMaskVertices) throw Error("limit", "graph masks support at most 8 vertices");
    int pairs = pair_count(n);
    std::vector<std::uint32_t> out;
    std::uint64_t total = 1ull << pairs;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (mask_is_canonical(static_cast<std::uint32_t>(mask), n))
            out.push_back(static_cast<std::uint32_t>(mask));
    return out;
}

std::vector<std::uint32_t> enumerate_canonical_masks(int n) {
    if (n < 0 || n > kMaxMaskVertices) throw Error("limit", "graph masks support at most 8 vertices");
    int pairs = pair_count(n);
    std::uint64_t total = 1ull << pairs;

    // Contiguous chunks merged in index order: output matches the serial scan.
    const int chunks = 256;
    std::vector<std::vector<std::uint32_t>> partial(chunks);
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunks; ++c) {
        std::uint64_t from = total * c / chunks;
        std::uint64_t to = total * (c + 1) / chunks;
        for (std::uint64_t mask = from; mask < to; ++mask)
            if (mask_is_canonical(static_cast<std::uint32_t>(mask), n))
                partial[c].push_back(static_cast<std::uint32_t>(mask));
    }

    std::vector<std::uint32_t> out;
    for (const auto& p : partial) out.insert(out.end(), p.begin(), p.end());
    return out;
}

SignedGraph mask_to_graph(std::uint32_t mask, int n, int sign) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask & mask_bit(i, j, n)) edges.push_back({i, j, sign});
    return SignedGraph::from_edge_list(n, edges);
}

namespace {

std::vector<int> orbit_representatives(std::uint32_t mask, int n) {
    auto autos = mask_automorphisms(mask, n);
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& perm : autos)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(perm[v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> reps;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) reps.push_back(v);
    return reps;
}

}  // namespace

std::vector<CospectrallyRootedPair> find_cospectrally_rooted_pairs(int n, int limit) {
    if (n < 1) throw Error("range", "vertex count must be positive");
    if (n > limit)
        throw Error("limit", "enumeration on " + std::to_string(n) + " vertices exceeds limit " +
                                 std::to_string(limit));

    struct Bucket {
        RootedSpectralKey key;
        std::vector<RootedSignedGraph> members;
    };
    std::vector<Bucket> buckets;
    std::map<std::string, size_t> bucket_index;  // first-seen order preserved via buckets

    for (std::uint32_t mask : enumerate_canonical_masks(n)) {
        SignedGraph g = mask_to_graph(mask, n);
        IntPolynomial whole = char_poly(g);
        for (int r : orbit_representatives(mask, n)) {
            IntPolynomial deleted = char_poly(delete_vertex(g, r));
            std::string key = whole.to_string() + "|" + deleted.to_string();
            auto [it, inserted] = bucket_index.try_emplace(key, buckets.size());
            if (inserted) buckets.push_back({{whole, deleted}, {}});
            buckets[it->second].members.emplace_back(g, r);
        }
    }

    std::vector<CospectrallyRootedPair> pairs;
    for (const auto& bucket : buckets)
        for (size_t a = 0; a < bucket.members.size(); ++a)
            for (size_t b = a + 1; b < bucket.members.size(); ++b)
                pairs.push_back({bucket.members[a], bucket.members[b], bucket.key});
    return pairs;
}

namespace {

SignedGraph with_signature(const SignedGraph& ground, const std::vector<Edge>& edges,
                           std::uint64_t negative_mask) {
    std::vector<Edge> signed_edges = edges;
    for (size_t i = 0; i < signed_edges.size(); ++i)
        signed_edges[i].sign = (negative_mask >> i) & 1ull ? -1 : 1;
    return SignedGraph::from_edge_list(ground.order(), signed_edges);
}

// Keeps the first representative of every switching-isomorphism class, in
// input order. Beyond dedup_limit vertices only identical graphs collapse.
std::vector<SignedGraph> dedup_by_switching(std::vector<SignedGraph> hits, int dedup_limit) {
    std::vector<SignedGraph> kept;
    std::map<std::string, std::vector<size_t>> by_poly;  // kept indices per charpoly
    for (auto& g : hits) {
        bool duplicate = false;
        if (g.order() <= dedup_limit) {
            auto& candidates = by_poly[char_poly(g).to_string()];
            for (size_t k : candidates)
                if (are_switching_isomorphic(kept[k], g, dedup_limit)) {
                    duplicate = true;
                    break;
                }
            if (!duplicate) candidates.push_back(kept.size());
        } else {
            for (const auto& k : kept)
                if (k == g) {
                    duplicate = true;
                    break;
                }
        }
        if (!duplicate) kept.push_back(std::move(g));
    }
    return kept;
}

std::vector<SignedGraph> filter_signatures(const SignedGraph& ground,
                                           const std::vector<std::uint64_t>& masks,
                                           const std::function<bool(const SignedGraph&)>& predicate,
                                           int dedup_limit) {
    const auto edges = ground.edges();
    std::vector<char> hit(masks.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(masks.size()); ++i)
        hit[i] = predicate(with_signature(ground, edges, masks[i])) ? 1 : 0;

    std::vector<SignedGraph> hits;
    for (size_t i = 0; i < masks.size(); ++i)
        if (hit[i]) hits.push_back(with_signature(ground, edges, masks[i]));
    return dedup_by_switching(std::move(hits), dedup_limit);
}

}  // namespace

std::vector<SignedGraph> enumerate_signatures(const SignedGraph& ground,
                                              const std::function<bool(const SignedGraph&)>& predicate,
                                              int edge_limit, int dedup_limit) {
    int m = ground.edge_count();
    if (m > edge_limit)
        throw Error("limit", "ground has " + std::to_string(m) + " edges, above the limit " +
                                 std::to_string(edge_limit) + "; use sampling mode");
    std::vector<std::uint64_t> masks(1ull << m);
    for (std::uint64_t i = 0; i < masks.size(); ++i) masks[i] = i;
    return filter_signatures(ground, masks, predicate, dedup_limit);
}

std::vector<SignedGraph> sample_signatures(const SignedGraph& ground,
                                           const std::function<bool(const SignedGraph&)>& predicate,
                                           std::uint64_t seed, int samples,
                                           const std::vector<SignedGraph>& include, int dedup_limit) {
    const auto edges = ground.edges();
    if (edges.size() > 63) throw Error("limit", "sampling supports at most 63 edges");
    if (samples < 0) throw Error("range", "sample count must be nonnegative");

    std::vector<std::uint64_t> masks;
    for (const auto& g : include) {
        if (g.order() != ground.order())
            throw Error("invalid", "include graph order does not match ground");
        std::uint64_t mask = 0;
        for (size_t i = 0; i < edges.size(); ++i) {
            int s = g.sign(edges[i].u, edges[i].v);
            if (s == 0) throw Error("invalid", "include graph does not share the ground");
            if (s < 0) mask |= 1ull << i;
        }
        if (g.edge_count() != static_cast<int>(edges.size()))
            throw Error("invalid", "include graph does not share the ground");
        masks.push_back(mask);
    }

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::uint64_t mask = 0;
        for (size_t i = 0; i < edges.size(); ++i)
            if (rng() & 1ull) mask |= 1ull << i;
        masks.push_back(mask);
    }
    return filter_signatures(ground, masks, predicate, dedup_limit);
}

namespace {

std::pair<SignedGraph, SignedGraph> build_products(const SignedGraph& base, const RootedList& h1,
                                                   const RootedList& h2) {
    SignedGraph g1 = rooted_product(base, h1);
    SignedGraph g2 = rooted_product(base, h2);
    if (!are_cospectral(g1, g2))
        throw std::logic_error("cospectral construction produced non-cospectral outputs");
    return {std::move(g1), std::move(g2)};
}

}  // namespace

std::pair<SignedGraph, SignedGraph> build_cospectral_pair(const SignedGraph& base,
                                                          const CospectrallyRootedPair& pair) {
    bool valid = char_poly(pair.first.graph) == char_poly(pair.second.graph) &&
                 char_poly(delete_vertex(pair.first.graph, pair.first.root)) ==
                     char_poly(delete_vertex(pair.second.graph, pair.second.root));
    if (!valid) throw Error("invalid", "pair is not cospectrally rooted: key polynomials differ");
    RootedList h1(base.order(), pair.first), h2(base.order(), pair.second);
    return build_products(base, h1, h2);
}

std::pair<SignedGraph, SignedGraph> build_cospectral_pair(const SignedGraph& base,
                                                          const RootedList& h1,
                                                          const RootedList& h2) {
    if (static_cast<int>(h1.size()) != base.order() || h1.size() != h2.size())
        throw Error("arity", "rooted lists must match the base order");
    if (!check_coiso(h1, h2))
        throw Error("invalid", "rooted lists do not satisfy the coiso condition");
    return build_products(base, h1, h2);
}

}  // namespace sgs
