// Compares the OpenMP kernels against their serial reference paths:
// evaluation-interpolation determinants and canonical graph enumeration.

#include <omp.h>

#include <cstdio>
#include <random>
#include <vector>

#include "sgspectra/poly_matrix.hpp"
#include "sgspectra/search.hpp"
#include "sgspectra/signed_graph.hpp"
#include "sgspectra/spectral.hpp"

namespace {

sgs::SignedGraph random_signed_graph(std::mt19937_64& rng, int n, double density) {
    std::vector<sgs::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if ((rng() % 1000) / 1000.0 >= density) continue;
            edges.push_back({i, j, rng() & 1 ? 1 : -1});
        }
    return sgs::SignedGraph::from_edge_list(n, edges);
}

sgs::PolyMatrix rooted_matrix(std::mt19937_64& rng, int base_n, int block_n) {
    sgs::SignedGraph base = random_signed_graph(rng, base_n, 0.5);
    sgs::RootedList blocks;
    for (int i = 0; i < base_n; ++i)
        blocks.emplace_back(random_signed_graph(rng, block_n, 0.6), static_cast<int>(rng() % block_n));

    sgs::PolyMatrix m(base_n);
    for (int i = 0; i < base_n; ++i) {
        m.at(i, i) = sgs::char_poly(blocks[i].graph);
        sgs::IntPolynomial deleted = sgs::char_poly(sgs::delete_vertex(blocks[i].graph, blocks[i].root));
        for (int j = 0; j < base_n; ++j) {
            int s = base.sign(i, j);
            if (i == j || s == 0) continue;
            m.at(i, j) = s > 0 ? -deleted : deleted;
        }
    }
    return m;
}

template <typename F>
double time_ms(F&& fn) {
    double t0 = omp_get_wtime();
    fn();
    return (omp_get_wtime() - t0) * 1000.0;
}

}  // namespace

int main() {
    std::printf("threads: %d\n\n", omp_get_max_threads());

    {
        std::mt19937_64 rng(42);
        const int base_n = 24, block_n = 4;
        sgs::PolyMatrix m = rooted_matrix(rng, base_n, block_n);
        sgs::IntPolynomial serial, parallel;
        double ts = time_ms([&] { serial = sgs::poly_matrix_det_serial(m); });
        double tp = time_ms([&] { parallel = sgs::poly_matrix_det(m); });
        std::printf("poly_matrix_det  (dim %d, degree %d)\n", base_n, serial.degree());
        std::printf("  serial   %9.2f ms\n", ts);
        std::printf("  openmp   %9.2f ms   speedup %.2fx   %s\n\n", tp, ts / tp,
                    serial == parallel ? "match" : "MISMATCH");
    }

    for (int n : {6, 7}) {
        std::vector<std::uint32_t> serial, parallel;
        double ts = time_ms([&] { serial = sgs::enumerate_canonical_masks_serial(n); });
        double tp = time_ms([&] { parallel = sgs::enumerate_canonical_masks(n); });
        std::printf("canonical graph enumeration (n = %d, %zu graphs)\n", n, serial.size());
        std::printf("  serial   %9.2f ms\n", ts);
        std::printf("  openmp   %9.2f ms   speedup %.2fx   %s\n\n", tp, ts / tp,
                    serial == parallel ? "match" : "MISMATCH");
    }
    return 0;
}
