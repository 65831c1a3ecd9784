#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qwalk/datasets.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

Matrix random_symmetric(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = 2.0 * rng.next_double() - 1.0;
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        SplitMix64 rng(s);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng.next_double() < p) pairs.emplace_back(i, j);
        Graph g = Graph::from_edge_list(pairs, n);
        if (g.is_connected()) return g;
    }
}

double reconstruction_error(const Matrix& m, const SpectralDecomposition& d) {
    int n = m.rows();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double rebuilt = 0.0;
            for (int k = 0; k < n; ++k)
                rebuilt += d.eigenvectors(i, k) * d.eigenvalues[k] * d.eigenvectors(j, k);
            worst = std::max(worst, std::abs(rebuilt - m(i, j)));
        }
    return worst;
}

double orthonormality_error(const SpectralDecomposition& d) {
    int n = d.size();
    double worst = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double dot = 0.0;
            for (int r = 0; r < n; ++r)
                dot += d.eigenvectors(r, a) * d.eigenvectors(r, b);
            worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    return worst;
}

} // namespace

TEST_CASE("eigh on the 2x2 exchange matrix") {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    SpectralDecomposition d = eigh(m);
    CHECK(d.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(orthonormality_error(d) < 1e-10);
}

TEST_CASE("eigh rejects bad input") {
    Matrix m(2, 3);
    CHECK_THROWS_AS(eigh(m), std::invalid_argument);
    Matrix a(2, 2);
    a(0, 1) = 1.0;
    a(1, 0) = 1.0 + 1e-9;
    CHECK_THROWS_AS(eigh(a), std::invalid_argument);
}

TEST_CASE("4-cycle Laplacian spectrum is the circulant 2 - 2cos(2 pi k / 4)") {
    std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
    Graph c4 = Graph::from_edge_list(pairs, 4);
    SpectralDecomposition d = eigh(c4.laplacian_matrix());
    std::vector<double> expected{0.0, 2.0, 2.0, 4.0};
    for (int k = 0; k < 4; ++k)
        CHECK(d.eigenvalues[k] == doctest::Approx(expected[k]).epsilon(1e-12));
}

TEST_CASE("connected-graph Laplacian has a simple zero eigenvalue with constant eigenvector") {
    Graph g = random_connected_graph(12, 0.3, 5);
    REQUIRE(g.is_connected());
    SpectralDecomposition d = eigh(g.laplacian_matrix());
    CHECK(std::abs(d.eigenvalues[0]) < 1e-10);
    CHECK(d.eigenvalues[1] > 1e-8); // multiplicity exactly 1
    double expected = 1.0 / std::sqrt(12.0);
    for (int r = 0; r < 12; ++r)
        CHECK(d.eigenvectors(r, 0) == doctest::Approx(expected).epsilon(1e-9));

    Graph split = Graph::from_edge_list({{1, 2}, {3, 4}}, 4);
    REQUIRE_FALSE(split.is_connected());
    SpectralDecomposition ds = eigh(split.laplacian_matrix());
    CHECK(std::abs(ds.eigenvalues[0]) < 1e-10);
    CHECK(std::abs(ds.eigenvalues[1]) < 1e-10); // one zero per component
}

TEST_CASE("eigh invariants on random symmetric matrices") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        for (int n : {3, 8, 17}) {
            Matrix m = random_symmetric(n, seed * 100 + n);
            SpectralDecomposition d = eigh(m);
            CHECK(orthonormality_error(d) <= 1e-10);
            CHECK(reconstruction_error(m, d) <= 1e-9 * std::max(1.0, m.max_abs()));
            for (int k = 1; k < n; ++k) CHECK(d.eigenvalues[k] >= d.eigenvalues[k - 1]);
        }
    }
}

TEST_CASE("Laplacian zero-eigenvalue multiplicity matches connectivity") {
    // two independent routes to the same fact: BFS reachability vs spectrum
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        SplitMix64 rng(seed);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j)
                if (rng.next_double() < 0.2) pairs.emplace_back(i, j);
        Graph g = Graph::from_edge_list(pairs, 8);
        SpectralDecomposition d = eigh(g.laplacian_matrix());
        int zeros = 0;
        for (double lambda : d.eigenvalues)
            if (std::abs(lambda) < 1e-8) ++zeros;
        CHECK((zeros == 1) == g.is_connected());
    }
}

TEST_CASE("eigh is deterministic") {
    Matrix m = random_symmetric(10, 77);
    SpectralDecomposition a = eigh(m);
    SpectralDecomposition b = eigh(m);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("propagate solves the two-level system analytically") {
    Graph k2 = Graph::from_edge_list({{1, 2}});
    SpectralDecomposition d = eigh(k2.adjacency_matrix());
    AmplitudeVector psi0 = localized_state(2, 1);
    for (double t : {0.0, 0.3, 1.7, 10.0}) {
        AmplitudeVector psi = propagate(d, psi0, t, -1);
        // exp(-iAt)|1> = (cos t, -i sin t)
        CHECK(psi[0].real() == doctest::Approx(std::cos(t)).epsilon(1e-12));
        CHECK(psi[0].imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(psi[1].real() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(psi[1].imag() == doctest::Approx(-std::sin(t)).epsilon(1e-12));
    }
}

TEST_CASE("propagate at t=0 is the identity") {
    Graph g = random_connected_graph(7, 0.5, 3);
    SpectralDecomposition d = eigh(g.adjacency_matrix());
    AmplitudeVector psi0 = uniform_state(7);
    AmplitudeVector psi = propagate(d, psi0, 0.0, -1);
    for (int j = 0; j < 7; ++j) CHECK(std::abs(psi[j] - psi0[j]) < 1e-12);
}

TEST_CASE("uniform state is stationary under the Laplacian walk") {
    Graph g = random_connected_graph(9, 0.4, 8);
    SpectralDecomposition d = eigh(g.laplacian_matrix());
    AmplitudeVector psi0 = uniform_state(9);
    for (double t : {0.5, 3.0, 40.0}) {
        AmplitudeVector psi = propagate(d, psi0, t, +1);
        for (int j = 0; j < 9; ++j) CHECK(std::abs(psi[j] - psi0[j]) < 1e-10);
    }
}

TEST_CASE("propagation is unitary and composes") {
    Graph g = random_connected_graph(11, 0.35, 21);
    SpectralDecomposition d = eigh(g.adjacency_matrix());

    // random normalized complex state
    SplitMix64 rng(4);
    std::vector<std::complex<double>> raw(11);
    double norm2 = 0.0;
    for (auto& z : raw) {
        z = {2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
        norm2 += std::norm(z);
    }
    for (auto& z : raw) z /= std::sqrt(norm2);
    AmplitudeVector psi0{raw};

    for (double t : {0.1, 1.0, 10.0, 100.0})
        CHECK(std::abs(propagate(d, psi0, t, -1).norm() - 1.0) < 1e-10);

    AmplitudeVector direct = propagate(d, psi0, 2.75, -1);
    AmplitudeVector staged = propagate(d, propagate(d, psi0, 1.5, -1), 1.25, -1);
    for (int j = 0; j < 11; ++j) CHECK(std::abs(direct[j] - staged[j]) < 1e-9);
}

TEST_CASE("opposite phase signs conjugate the amplitudes of a real state") {
    Graph g = random_connected_graph(8, 0.45, 33);
    SpectralDecomposition d = eigh(g.adjacency_matrix());
    AmplitudeVector psi0 = uniform_state(8);
    AmplitudeVector plus = propagate(d, psi0, 3.1, +1);
    AmplitudeVector minus = propagate(d, psi0, 3.1, -1);
    for (int j = 0; j < 8; ++j) {
        CHECK(plus[j].real() == doctest::Approx(minus[j].real()).epsilon(1e-12));
        CHECK(plus[j].imag() == doctest::Approx(-minus[j].imag()).epsilon(1e-12));
        CHECK(std::norm(plus[j]) == doctest::Approx(std::norm(minus[j])).epsilon(1e-12));
    }
}

TEST_CASE("exact_time_average on K2 from a localized start") {
    Graph k2 = Graph::from_edge_list({{1, 2}});
    SpectralDecomposition d = eigh(k2.adjacency_matrix());
    std::vector<double> p = exact_time_average(d, localized_state(2, 1));
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("exact_time_average of the stationary Laplacian walk is uniform") {
    Graph g = random_connected_graph(10, 0.4, 55);
    SpectralDecomposition d = eigh(g.laplacian_matrix());
    std::vector<double> p = exact_time_average(d, uniform_state(10));
    for (double v : p) CHECK(v == doctest::Approx(0.1).epsilon(1e-10));
}

TEST_CASE("exact_time_average sums to one") {
    Graph g = random_connected_graph(13, 0.3, 91);
    SpectralDecomposition d = eigh(g.adjacency_matrix());
    std::vector<double> p = exact_time_average(d, localized_state(13, 4));
    double sum = 0.0;
    for (double v : p) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("AmplitudeVector validates its norm") {
    std::vector<std::complex<double>> empty;
    std::vector<std::complex<double>> short_norm{{0.5, 0.0}};
    CHECK_THROWS_AS(AmplitudeVector{empty}, std::invalid_argument);
    CHECK_THROWS_AS(AmplitudeVector{short_norm}, std::invalid_argument);
    AmplitudeVector ok{std::vector<std::complex<double>>{{0.0, 1.0}}};
    CHECK(ok.norm() == doctest::Approx(1.0));
}

TEST_CASE("propagate validates preconditions") {
    Graph k2 = Graph::from_edge_list({{1, 2}});
    SpectralDecomposition d = eigh(k2.adjacency_matrix());
    AmplitudeVector psi0 = localized_state(2, 1);
    CHECK_THROWS_AS(propagate(d, psi0, -1.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(propagate(d, psi0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(propagate(d, localized_state(3, 1), 1.0, -1), std::invalid_argument);
}
