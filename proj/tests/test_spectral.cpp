#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgspectra/poly_matrix.hpp"
#include "sgspectra/signed_graph.hpp"
#include "sgspectra/spectral.hpp"

using namespace sgs;

namespace {

SignedGraph k3(int sign) {
    return SignedGraph::from_edge_list(3, {{0, 1, sign}, {1, 2, sign}, {0, 2, sign}});
}

SignedGraph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    return SignedGraph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("IntPolynomial basics") {
    IntPolynomial p({-1, 0, 1});  // x^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.to_string() == "[-1, 0, 1]");
    CHECK(IntPolynomial::zero().to_string() == "[0]");
    CHECK(IntPolynomial({0, 0, 0}).is_zero());  // trailing zeros trim away
    CHECK(p(mpz_class(3)) == 8);
    CHECK(p.evaluate(2.0) == doctest::Approx(3.0));
    CHECK(p.reflected() == p);
    CHECK(IntPolynomial({0, 1}).reflected() == IntPolynomial({0, -1}));
    CHECK(IntPolynomial({1, 1}).pow(2) == IntPolynomial({1, 2, 1}));
    CHECK((p - p).is_zero());
    CHECK(-p == IntPolynomial({1, 0, -1}));
}

TEST_CASE("IntPolynomial ring identities on random inputs") {
    std::mt19937_64 rng(31);
    auto random_poly = [&rng]() {
        std::vector<mpz_class> c(rng() % 6);
        for (auto& x : c) x = static_cast<long>(rng() % 21) - 10;
        return IntPolynomial(c);
    };
    for (int it = 0; it < 50; ++it) {
        IntPolynomial a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        mpz_class x = static_cast<long>(rng() % 11) - 5;
        CHECK((a * b)(x) == a(x) * b(x));
    }
}

TEST_CASE("interpolate_integer recovers random polynomials") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 30; ++it) {
        std::vector<mpz_class> c(1 + rng() % 7);
        for (auto& x : c) x = static_cast<long>(rng() % 41) - 20;
        IntPolynomial p(c);
        int points = static_cast<int>(c.size());
        std::vector<mpz_class> xs(points), ys(points);
        for (int k = 0; k < points; ++k) {
            xs[k] = k - points / 2;
            ys[k] = p(xs[k]);
        }
        CHECK(interpolate_integer(xs, ys) == p);
    }
    CHECK_THROWS(interpolate_integer({1, 1}, {0, 0}));  // repeated point
}

TEST_CASE("char_poly fixtures") {
    CHECK(char_poly(SignedGraph()) == IntPolynomial({1}));
    CHECK(char_poly(SignedGraph(1)) == IntPolynomial({0, 1}));
    CHECK(char_poly(SignedGraph::from_edge_list(2, {{0, 1, 1}})) == IntPolynomial({-1, 0, 1}));
    CHECK(char_poly(k3(1)) == IntPolynomial({-2, -3, 0, 1}));
    CHECK(char_poly(k3(-1)) == IntPolynomial({2, -3, 0, 1}));
    CHECK(char_poly(path(4)) == IntPolynomial({1, 0, -3, 0, 1}));
}

TEST_CASE("char_poly equals the cofactor oracle") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 50; ++it) {
        SignedGraph g = oracle::random_graph(rng, static_cast<int>(rng() % 7));
        CHECK(char_poly(g) == oracle::char_poly(g));
    }
}

TEST_CASE("char_poly coefficient identities") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 100; ++it) {
        int n = 3 + static_cast<int>(rng() % 6);
        SignedGraph g = oracle::random_graph(rng, n, 0.6);
        IntPolynomial p = char_poly(g);
        CHECK(p.coeff(n) == 1);
        CHECK(p.coeff(n - 1) == 0);
        CHECK(p.coeff(n - 2) == -g.edge_count());
        CHECK(p.coeff(n - 3) == -2 * oracle::triangle_sign_sum(g));
    }
}

TEST_CASE("jacobi eigenvalue fixtures") {
    Spectrum k2 = eigenvalues(SignedGraph::from_edge_list(2, {{0, 1, 1}}));
    CHECK(multisets_close(k2.values, {-1.0, 1.0}));
    Spectrum t = eigenvalues(k3(1));
    CHECK(multisets_close(t.values, {-1.0, -1.0, 2.0}));
    CHECK(eigenvalues(SignedGraph()).values.empty());

    Spectrum s = eigenvalues(sk8());
    std::vector<double> neg;
    for (double v : s.values) neg.push_back(-v);
    CHECK(multisets_close(s.values, neg));
    double r5 = std::sqrt(5.0), r17 = std::sqrt(17.0);
    CHECK(multisets_close(s.values, {-r17, -r5, -r5, -1.0, 1.0, r5, r5, r17}));
}

TEST_CASE("jacobi handles high-multiplicity spectra") {
    // complete graph on 12 vertices: eigenvalue 11 once, -1 eleven times
    std::vector<Edge> edges;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j) edges.push_back({i, j, 1});
    Spectrum k12 = eigenvalues(SignedGraph::from_edge_list(12, edges));
    std::vector<double> expect(11, -1.0);
    expect.push_back(11.0);
    CHECK(multisets_close(k12.values, expect));

    // complete bipartite 6+6: eigenvalues +-6 and ten zeros
    edges.clear();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) edges.push_back({i, 6 + j, 1});
    Spectrum k66 = eigenvalues(SignedGraph::from_edge_list(12, edges));
    std::vector<double> expect2(10, 0.0);
    expect2.insert(expect2.begin(), -6.0);
    expect2.push_back(6.0);
    CHECK(multisets_close(k66.values, expect2));
}

TEST_CASE("eigenvalues root the exact polynomial and sum to the trace") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 50; ++it) {
        SignedGraph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.6);
        Spectrum s = eigenvalues(g);
        REQUIRE(s.values.size() == static_cast<size_t>(g.order()));
        double sum = 0.0;
        for (double v : s.values) {
            CHECK(oracle::residual_ok(*s.source_poly, v));
            sum += v;
        }
        CHECK(std::abs(sum) < 1e-9);
        CHECK(std::is_sorted(s.values.begin(), s.values.end()));
    }
}

TEST_CASE("has_symmetric_spectrum fixtures") {
    CHECK(has_symmetric_spectrum(sk8()));
    CHECK_FALSE(has_symmetric_spectrum(k3(1)));
    CHECK(has_symmetric_spectrum(SignedGraph()));
    CHECK(has_symmetric_spectrum(path(5)));

    // any signature over a bipartite ground
    std::mt19937_64 rng(53);
    for (int it = 0; it < 50; ++it) {
        int a = 1 + static_cast<int>(rng() % 3), b = 1 + static_cast<int>(rng() % 3);
        std::vector<Edge> edges;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (rng() & 1) edges.push_back({i, a + j, rng() & 1 ? 1 : -1});
        SignedGraph g = SignedGraph::from_edge_list(a + b, edges);
        CHECK(has_symmetric_spectrum(g));
    }
}

TEST_CASE("exact symmetric-spectrum test agrees with the floating oracle") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 1000; ++it) {
        SignedGraph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.5);
        std::vector<double> vals = eigenvalues(g).values;
        std::vector<double> neg;
        for (double v : vals) neg.push_back(-v);
        bool floating = multisets_close(vals, neg);
        CHECK(has_symmetric_spectrum(g) == floating);
    }
}

TEST_CASE("are_cospectral") {
    SignedGraph t = k3(1);
    CHECK(are_cospectral(t, t));
    CHECK(are_cospectral(SignedGraph::from_edge_list(2, {{0, 1, 1}}),
                         SignedGraph::from_edge_list(2, {{0, 1, -1}})));
    CHECK_FALSE(are_cospectral(t, k3(-1)));
    CHECK_FALSE(are_cospectral(SignedGraph(2), SignedGraph(3)));

    std::mt19937_64 rng(61);
    for (int it = 0; it < 30; ++it) {
        SignedGraph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7));
        CHECK(are_cospectral(g, switched(g, oracle::random_vertex_set(rng, g.order()))));
    }
}

TEST_CASE("bareiss determinant equals the permutation oracle") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 50; ++it) {
        int n = static_cast<int>(rng() % 6);
        std::vector<mpz_class> m(static_cast<size_t>(n) * n);
        for (auto& x : m) x = static_cast<long>(rng() % 11) - 5;
        CHECK(bareiss_determinant(m, n) == oracle::permutation_det(m, n));
    }
}

TEST_CASE("poly_matrix_det fixtures") {
    PolyMatrix one(1);
    one.at(0, 0) = IntPolynomial({-1, 0, 1});
    CHECK(poly_matrix_det(one) == IntPolynomial({-1, 0, 1}));

    PolyMatrix two(2);
    two.at(0, 0) = IntPolynomial::x();
    two.at(0, 1) = IntPolynomial::constant(-1);
    two.at(1, 0) = IntPolynomial::constant(-1);
    two.at(1, 1) = IntPolynomial::x();
    CHECK(poly_matrix_det(two) == IntPolynomial({-1, 0, 1}));

    for (int dim = 0; dim <= 4; ++dim) {
        PolyMatrix id(dim);
        for (int i = 0; i < dim; ++i) id.at(i, i) = IntPolynomial::constant(1);
        CHECK(poly_matrix_det(id) == IntPolynomial({1}));
    }
}

TEST_CASE("poly_matrix_det routes agree and evaluation commutes") {
    std::mt19937_64 rng(71);
    auto random_poly = [&rng]() {
        std::vector<mpz_class> c(rng() % 4);
        for (auto& x : c) x = static_cast<long>(rng() % 9) - 4;
        return IntPolynomial(c);
    };
    for (int it = 0; it < 25; ++it) {
        int dim = static_cast<int>(rng() % 5);
        PolyMatrix m(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m.at(i, j) = random_poly();

        IntPolynomial det = poly_matrix_det(m);
        CHECK(det == poly_matrix_det_serial(m));
        CHECK(det == poly_matrix_det_expansion(m));

        for (int k = 0; k < 10; ++k) {
            mpz_class x = static_cast<long>(rng() % 21) - 10;
            std::vector<mpz_class> scalar(static_cast<size_t>(dim) * dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) scalar[static_cast<size_t>(i) * dim + j] = m.at(i, j)(x);
            CHECK(det(x) == bareiss_determinant(scalar, dim));
        }
    }
}

TEST_CASE("is_spectrally_symmetric") {
    CHECK(is_spectrally_symmetric(IntPolynomial({-1, 0, 1})));
    CHECK_FALSE(is_spectrally_symmetric(IntPolynomial({-2, -3, 0, 1})));
    CHECK(is_spectrally_symmetric(IntPolynomial({0, -3, 0, 1})));
    CHECK(is_spectrally_symmetric(IntPolynomial::zero()));
    CHECK(is_spectrally_symmetric(IntPolynomial({5})));
}
