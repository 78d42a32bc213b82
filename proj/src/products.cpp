#include "sgspectra/products.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "sgspectra/error.hpp"
#include "sgspectra/poly_matrix.hpp"

namespace sgs {

Basis::Basis(int arity, std::vector<std::uint32_t> vectors)
    : arity_(arity), vectors_(std::move(vectors)) {
    if (arity < 1 || arity > 31) throw Error("invalid", "basis arity must be in 1..31");
    if (vectors_.empty()) throw Error("invalid", "basis must be nonempty");
    std::sort(vectors_.begin(), vectors_.end());
    for (size_t i = 0; i < vectors_.size(); ++i) {
        if (vectors_[i] == 0) throw Error("invalid", "basis may not contain the zero vector");
        if (vectors_[i] >= (1u << arity)) throw Error("invalid", "basis vector exceeds arity");
        if (i > 0 && vectors_[i] == vectors_[i - 1])
            throw Error("invalid", "duplicate basis vector");
    }
}

namespace {

std::uint32_t parse_basis_token(const std::string& tok, int& arity) {
    if (tok.empty()) throw Error("parse", "empty basis vector");
    if (arity == 0) arity = static_cast<int>(tok.size());
    if (static_cast<int>(tok.size()) != arity)
        throw Error("parse", "basis vectors must share one length");
    std::uint32_t mask = 0;
    for (size_t i = 0; i < tok.size(); ++i) {
        if (tok[i] == '1')
            mask |= 1u << i;
        else if (tok[i] != '0')
            throw Error("parse", "basis vector must be over {0,1}: \"" + tok + "\"");
    }
    return mask;
}

}  // namespace

Basis Basis::parse(const std::string& csv) {
    std::vector<std::uint32_t> vecs;
    int arity = 0;
    std::string tok;
    std::istringstream ss(csv);
    while (std::getline(ss, tok, ',')) vecs.push_back(parse_basis_token(tok, arity));
    if (vecs.empty()) throw Error("parse", "empty basis");
    return Basis(arity, std::move(vecs));
}

Basis Basis::read(std::istream& in) {
    std::vector<std::uint32_t> vecs;
    int arity = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t from = line.find_first_not_of(" \t");
        if (from == std::string::npos || line[from] == '#') continue;
        size_t to = line.find_last_not_of(" \t");
        vecs.push_back(parse_basis_token(line.substr(from, to - from + 1), arity));
    }
    if (vecs.empty()) throw Error("parse", "empty basis");
    return Basis(arity, std::move(vecs));
}

std::string Basis::to_string() const {
    std::string out;
    for (size_t v = 0; v < vectors_.size(); ++v) {
        if (v) out += ",";
        for (int i = 0; i < arity_; ++i) out += (vectors_[v] >> i) & 1u ? '1' : '0';
    }
    return out;
}

Involution::Involution(std::vector<int> map) : map_(std::move(map)) {
    int k = static_cast<int>(map_.size());
    for (int i = 0; i < k; ++i) {
        if (map_[i] < 0 || map_[i] >= k) throw Error("invalid", "involution value out of range");
        if (map_[map_[i]] != i) throw Error("invalid", "map is not self-inverse");
    }
}

namespace {

constexpr int kNepsOrderCap = 4096;  // dense adjacency stays desk-sized

struct ProductIndexing {
    int total = 1;
    std::vector<int> orders;
    std::vector<std::vector<int>> digits;  // digits[v][i] = factor-i coordinate of vertex v
};

ProductIndexing index_product(const std::vector<SignedGraph>& factors) {
    ProductIndexing ix;
    for (const auto& f : factors) {
        if (f.order() == 0) throw Error("invalid", "NEPS factors must be nonempty");
        ix.orders.push_back(f.order());
        if (ix.total > kNepsOrderCap / f.order())
            throw Error("limit", "NEPS order exceeds " + std::to_string(kNepsOrderCap));
        ix.total *= f.order();
    }
    int k = static_cast<int>(factors.size());
    ix.digits.assign(ix.total, std::vector<int>(k, 0));
    for (int v = 0; v < ix.total; ++v) {
        int rest = v;
        for (int i = k - 1; i >= 0; --i) {
            ix.digits[v][i] = rest % ix.orders[i];
            rest /= ix.orders[i];
        }
    }
    return ix;
}

}  // namespace

SignedGraph neps(const std::vector<SignedGraph>& factors, const Basis& b) {
    int k = static_cast<int>(factors.size());
    if (b.arity() != k) throw Error("arity", "basis arity does not match factor count");
    ProductIndexing ix = index_product(factors);

    std::vector<Edge> edges;
    for (int p = 0; p < ix.total; ++p)
        for (int q = p + 1; q < ix.total; ++q) {
            const auto& up = ix.digits[p];
            const auto& uq = ix.digits[q];
            bool found = false;
            int sign = 0;
            for (std::uint32_t beta : b.vectors()) {
                int s = 1;
                bool match = true;
                for (int i = 0; i < k && match; ++i) {
                    if ((beta >> i) & 1u) {
                        int e = factors[i].sign(up[i], uq[i]);
                        if (e == 0) match = false;
                        s *= e;
                    } else if (up[i] != uq[i]) {
                        match = false;
                    }
                }
                if (!match) continue;
                // Loops are absent, so the differing-coordinate support pins beta down.
                if (found) throw std::logic_error("product pair generated by two basis vectors");
                found = true;
                sign = s;
            }
            if (found) edges.push_back({p, q, sign});
        }
    return SignedGraph::from_edge_list(ix.total, edges);
}

Spectrum neps_eigenvalues(const std::vector<Spectrum>& factor_spectra, const Basis& b) {
    int k = static_cast<int>(factor_spectra.size());
    if (b.arity() != k) throw Error("arity", "basis arity does not match factor count");
    long long total = 1;
    for (const auto& s : factor_spectra) {
        if (s.values.empty()) throw Error("invalid", "NEPS factors must be nonempty");
        total *= static_cast<long long>(s.values.size());
        if (total > kNepsOrderCap) throw Error("limit", "NEPS order exceeds cap");
    }

    std::vector<double> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<size_t> tuple(k, 0);
    for (;;) {
        double val = 0.0;
        for (std::uint32_t beta : b.vectors()) {
            double prod = 1.0;
            for (int i = 0; i < k; ++i)
                if ((beta >> i) & 1u) prod *= factor_spectra[i].values[tuple[i]];
            val += prod;
        }
        out.push_back(val);
        int i = k - 1;
        while (i >= 0 && ++tuple[i] == factor_spectra[i].values.size()) tuple[i--] = 0;
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return Spectrum{std::move(out), std::nullopt};
}

namespace {

// target[i] = (-1)^(n_i) charpoly_i(-x): the polynomial a partner must equal
// for its spectrum to be the negation of factor i's.
std::vector<IntPolynomial> reflection_targets(const std::vector<IntPolynomial>& polys) {
    std::vector<IntPolynomial> targets;
    targets.reserve(polys.size());
    for (const auto& p : polys) {
        IntPolynomial r = p.reflected();
        targets.push_back(p.degree() % 2 ? -r : r);
    }
    return targets;
}

// DFS over involutions, pairing the smallest unassigned index with ascending
// candidates; the first hit is the lexicographically smallest valid map.
bool involution_dfs(const std::vector<std::vector<char>>& valid, std::vector<int>& map,
                    const std::function<bool(const std::vector<int>&)>& accept) {
    int k = static_cast<int>(map.size());
    int i = 0;
    while (i < k && map[i] >= 0) ++i;
    if (i == k) return accept(map);
    for (int j = i; j < k; ++j) {
        if (map[j] >= 0 || !valid[i][j]) continue;
        map[i] = j;
        map[j] = i;
        if (involution_dfs(valid, map, accept)) return true;
        map[i] = map[j] = -1;
    }
    return false;
}

std::vector<std::vector<char>> pairing_validity(const std::vector<SignedGraph>& factors) {
    int k = static_cast<int>(factors.size());
    std::vector<IntPolynomial> polys;
    polys.reserve(k);
    for (const auto& f : factors) polys.push_back(char_poly(f));
    auto targets = reflection_targets(polys);
    std::vector<std::vector<char>> valid(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) valid[i][j] = (polys[j] == targets[i]) ? 1 : 0;
    return valid;
}

}  // namespace

std::optional<Involution> find_involution(const std::vector<SignedGraph>& factors) {
    if (factors.empty()) return std::nullopt;
    auto valid = pairing_validity(factors);
    std::vector<int> map(factors.size(), -1);
    if (involution_dfs(valid, map, [](const std::vector<int>&) { return true; }))
        return Involution(map);
    return std::nullopt;
}

bool is_compatible(const Basis& b, const Involution& inv) {
    if (inv.size() != b.arity()) throw Error("arity", "involution size does not match basis arity");
    for (std::uint32_t v : b.vectors()) {
        std::uint32_t mapped = 0;
        for (int i = 0; i < b.arity(); ++i)
            if ((v >> i) & 1u) mapped |= 1u << inv(i);
        if (!std::binary_search(b.vectors().begin(), b.vectors().end(), mapped)) return false;
    }
    return true;
}

bool is_odd_basis(const Basis& b) {
    for (std::uint32_t v : b.vectors())
        if (__builtin_popcount(v) % 2 == 0) return false;
    return true;
}

Certificate neps_symmetry_certificate(const std::vector<SignedGraph>& factors, const Basis& b) {
    int k = static_cast<int>(factors.size());
    if (b.arity() != k) throw Error("arity", "basis arity does not match factor count");
    if (!is_odd_basis(b)) return Certificate::not_certified;
    auto valid = pairing_validity(factors);
    std::vector<int> map(factors.size(), -1);
    bool ok = involution_dfs(valid, map, [&](const std::vector<int>& m) {
        return is_compatible(b, Involution(m));
    });
    return ok ? Certificate::certified : Certificate::not_certified;
}

SignedGraph rooted_product(const SignedGraph& base, const RootedList& blocks) {
    int n = base.order();
    if (static_cast<int>(blocks.size()) != n)
        throw Error("arity", "rooted product needs one block per base vertex");

    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + blocks[i].graph.order();

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (const Edge& e : blocks[i].graph.edges())
            edges.push_back({offset[i] + e.u, offset[i] + e.v, e.sign});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (int s = base.sign(i, j); s != 0)
                edges.push_back({offset[i] + blocks[i].root, offset[j] + blocks[j].root, s});
    return SignedGraph::from_edge_list(offset[n], edges);
}

IntPolynomial rooted_product_char_poly(const SignedGraph& base, const RootedList& blocks) {
    int n = base.order();
    if (static_cast<int>(blocks.size()) != n)
        throw Error("arity", "rooted product needs one block per base vertex");

    PolyMatrix m(n);
    for (int i = 0; i < n; ++i) {
        IntPolynomial whole = char_poly(blocks[i].graph);
        IntPolynomial deleted = char_poly(delete_vertex(blocks[i].graph, blocks[i].root));
        m.at(i, i) = std::move(whole);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            int s = base.sign(i, j);
            if (s == 0) continue;
            m.at(i, j) = s > 0 ? -deleted : deleted;
        }
    }
    return poly_matrix_det(m);
}

IntPolynomial uniform_rooted_char_poly(const SignedGraph& base, const RootedSignedGraph& block) {
    int n = base.order();
    IntPolynomial cs = char_poly(base);
    IntPolynomial whole = char_poly(block.graph);
    IntPolynomial deleted = char_poly(delete_vertex(block.graph, block.root));

    std::vector<IntPolynomial> whole_pow(n + 1), deleted_pow(n + 1);
    whole_pow[0] = deleted_pow[0] = IntPolynomial::constant(1);
    for (int d = 1; d <= n; ++d) {
        whole_pow[d] = whole_pow[d - 1] * whole;
        deleted_pow[d] = deleted_pow[d - 1] * deleted;
    }

    IntPolynomial acc;
    for (int d = 0; d <= n; ++d) {
        if (cs.coeff(d) == 0) continue;
        acc += cs.coeff(d) * (whole_pow[d] * deleted_pow[n - d]);
    }
    return acc;
}

Certificate rooted_symmetry_certificate(const SignedGraph& base, const RootedSignedGraph& block) {
    bool ok = has_symmetric_spectrum(base) && has_symmetric_spectrum(block.graph) &&
              has_symmetric_spectrum(delete_vertex(block.graph, block.root));
    return ok ? Certificate::certified : Certificate::not_certified;
}

}  // namespace sgs
