#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gcx/cluster.hpp"
#include "gcx/gc.hpp"
#include "gcx/named_graphs.hpp"
#include "gcx/sym_eig.hpp"

using namespace gcx;

namespace {

// Independent multiplicity oracle: rank of the integer matrix L - x*I via
// fraction-free (Bareiss) elimination; multiplicity = n - rank.
int integer_rank(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    int rank = 0;
    long long prev = 1;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

int exact_multiplicity(const RotationGraph& g, long long lambda) {
    const int n = g.num_vertices();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int v = 0; v < n; ++v) {
        m[v][v] = g.degree(v) - lambda;
        for (int u : g.rotation(v)) m[v][u] -= 1;
    }
    return n - integer_rank(std::move(m));
}

}  // namespace

TEST_CASE("sym_eig on tiny matrices") {
    SymMatrix m(2);
    m.at(0, 0) = 1;
    m.at(0, 1) = -1;
    m.at(1, 0) = -1;
    m.at(1, 1) = 1;
    auto r = sym_eig(m);
    CHECK(r.values[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(r.values[1] == doctest::Approx(2.0).epsilon(1e-14));

    SymMatrix bad(2);
    bad.at(0, 1) = 1.0;  // not symmetric
    CHECK_THROWS(sym_eig(bad));
}

TEST_CASE("cube spectrum against the integer-rank oracle") {
    RotationGraph c = cube();
    // exact multiplicities of the integer eigenvalues 0,2,4,6
    CHECK(exact_multiplicity(c, 0) == 1);
    CHECK(exact_multiplicity(c, 2) == 3);
    CHECK(exact_multiplicity(c, 4) == 3);
    CHECK(exact_multiplicity(c, 6) == 1);

    auto ev = sym_eig(laplacian(c)).values;
    std::vector<double> expect = {0, 2, 2, 2, 4, 4, 4, 6};
    for (int i = 0; i < 8; ++i) CHECK(ev[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("eigenvector residuals") {
    ClusterGraph cl = cluster3(5, 0);
    SymMatrix l = laplacian(cl.graph());
    auto r = sym_eig(l, true);
    double norm = 6.0;  // ||L|| <= 2*deg for a Laplacian
    for (size_t j = 0; j < r.values.size(); ++j) {
        auto lv = l.apply(r.vectors[j]);
        double res = 0;
        for (size_t i = 0; i < lv.size(); ++i)
            res = std::max(res, std::abs(lv[i] - r.values[j] * r.vectors[j][i]));
        CHECK(res <= 1e-10 * norm);
    }
}

TEST_CASE("spectrum grouping") {
    Spectrum s = make_spectrum({0.0, 2.0 - 1e-8, 2.0, 2.0 + 1e-8, 4.0, 6.0}, 1e-6);
    CHECK(s.groups.size() == 4);
    CHECK(multiplicity_at(s, 2.0) == 3);
    CHECK(multiplicity_at(s, 4.0) == 1);
    CHECK(spectral_gap_ok(s, 2.0, 1e-4));
    Spectrum t = make_spectrum({2.0, 2.0 + 5e-5}, 1e-6);
    CHECK_FALSE(spectral_gap_ok(t, 2.0, 1e-4));
}

TEST_CASE("eigensolver is deterministic") {
    SymMatrix l = laplacian(cluster3(6, 0).graph());
    auto a = sym_eig(l).values;
    auto b = sym_eig(l).values;
    CHECK(a == b);  // bitwise identical
}

TEST_CASE("laplacian spectra stay in [0, 2r]") {
    for (const char* name : {"tetrahedron", "octahedron", "hex_torus:3"}) {
        RotationGraph g = build_named(name);
        double r = g.degree(0);
        auto ev = sym_eig(laplacian(g)).values;
        CHECK(ev.front() >= -1e-10);
        CHECK(ev.back() <= 2 * r + 1e-10);
        CHECK(ev[1] > 1e-9);  // connected: simple zero
    }
}

TEST_CASE("extreme eigenvalue trend for growing subdivision") {
    // the floor(k^1.5)-th smallest decreases and the matching largest
    // increases toward 6 on the tetrahedron series
    RotationGraph tet = tetrahedron();
    std::vector<double> low, high;
    for (int k : {4, 8, 12}) {
        GCGraph g = gc_build(tet, k, 0);
        auto ev = sym_eig(laplacian(g.graph)).values;
        int idx = static_cast<int>(std::floor(std::pow(k, 1.5)));
        low.push_back(ev[idx - 1]);
        high.push_back(ev[ev.size() - idx]);
    }
    CHECK(low[1] < low[0]);
    CHECK(low[2] < low[1]);
    CHECK(high[1] > high[0]);
    CHECK(high[2] > high[1]);
    CHECK(high[2] < 6.0);
}
