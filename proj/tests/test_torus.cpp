#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "gcx/cluster.hpp"
#include "gcx/gc.hpp"
#include "gcx/named_graphs.hpp"
#include "gcx/sym_eig.hpp"
#include "gcx/torus_spectra.hpp"
#include "gcx/verify.hpp"

using namespace gcx;

namespace {
bool multisets_close(const std::vector<double>& a, const std::vector<double>& b,
                     double tol) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}
}  // namespace

TEST_CASE("closed torus eigenvalues") {
    CHECK(hex_torus_eigenvalue(7, 0, 0, -1) == doctest::Approx(0.0));
    CHECK(hex_torus_eigenvalue(7, 0, 0, +1) == doctest::Approx(6.0));
    for (int k : {3, 5, 8})
        CHECK(hex_torus_eigenvalue(k, 1, 0, +1) ==
              doctest::Approx(3.0 + std::sqrt(5.0 + 4.0 * std::cos(2.0 * M_PI / k))));
    CHECK(square_torus_eigenvalue(6, 0, 0) == doctest::Approx(0.0));
    CHECK(square_torus_eigenvalue(6, 3, 3) == doctest::Approx(8.0));  // (k,k,k) with k=3
    CHECK(square_torus_eigenvalue(4, 1, 1) == doctest::Approx(4.0));
    CHECK_THROWS(hex_torus_eigenvalue(5, 5, 0, 1));
}

TEST_CASE("hex torus spectra match the closed form") {
    for (int k = 1; k <= 6; ++k) {
        auto ev = sym_eig(laplacian(hex_torus(k))).values;
        std::vector<double> closed;
        for (int s = 0; s < k; ++s)
            for (int t = 0; t < k; ++t) {
                closed.push_back(hex_torus_eigenvalue(k, s, t, +1));
                closed.push_back(hex_torus_eigenvalue(k, s, t, -1));
            }
        std::sort(closed.begin(), closed.end());
        CHECK(multisets_close(ev, closed, 1e-9));
    }
}

TEST_CASE("square torus spectra match the closed form") {
    for (int n = 2; n <= 8; ++n) {
        auto ev = sym_eig(laplacian(square_torus(n))).values;
        std::vector<double> closed;
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) closed.push_back(square_torus_eigenvalue(n, s, t));
        std::sort(closed.begin(), closed.end());
        CHECK(multisets_close(ev, closed, 1e-9));
    }
}

TEST_CASE("torus eigenfunctions solve the eigen-equation") {
    for (int k : {4, 5, 6}) {
        RotationGraph t = hex_torus(k);
        for (int s = 0; s < k; ++s)
            for (int sign : {+1, -1}) {
                auto fs = hex_eigenfunctions(k, s, (s * 2 + 1) % k, sign);
                double lam = hex_torus_eigenvalue(k, s, (s * 2 + 1) % k, sign);
                for (const auto& f : fs) {
                    auto lf = apply_laplacian(t, f);
                    double res = 0, norm = 0;
                    for (size_t i = 0; i < f.size(); ++i) {
                        res = std::max(res, std::abs(lf[i] - (hex_degenerate_index(
                                                                  k, s, (s * 2 + 1) % k)
                                                                  ? 3.0
                                                                  : lam) *
                                                                 f[i]));
                        norm = std::max(norm, std::abs(f[i]));
                    }
                    CHECK(res <= 1e-8 * norm);
                }
            }
    }
}

TEST_CASE("d6 projection basics") {
    const int k = 4;
    std::vector<cdouble> ones(2 * k * k, 1.0);
    auto inv = d6_project(k, ones, ProjMode::Invariant);
    auto alt = d6_project(k, ones, ProjMode::Alternating);
    for (const auto& z : inv) CHECK(z.real() == doctest::Approx(12.0));
    for (const auto& z : alt) CHECK(std::abs(z) == doctest::Approx(0.0));

    // projected eigenfunction keeps the eigenvalue
    auto f = hex_eigenfunctions(k, 1, 0, +1)[0];
    auto u = d6_project(k, f, ProjMode::Invariant);
    double lam = hex_torus_eigenvalue(k, 1, 0, +1);
    auto lu = apply_laplacian(hex_torus(k), u);
    double res = 0, norm = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        res = std::max(res, std::abs(lu[i] - lam * u[i]));
        norm = std::max(norm, std::abs(u[i]));
    }
    CHECK(norm > 1e-9);
    CHECK(res <= 1e-8 * norm);
}

TEST_CASE("vanishing rules: named examples") {
    CHECK(vanishing_test(6, 2, 4, +1, ProjMode::Invariant));  // degenerate pair
    for (int s = 0; s < 6; ++s) {
        CHECK(vanishing_test(6, s, s, +1, ProjMode::Alternating));
        CHECK(vanishing_test(6, s, s, -1, ProjMode::Alternating));
    }
    CHECK_FALSE(vanishing_test(5, 1, 3, +1, ProjMode::Invariant));
    // constant survives as the minus-label (0,0); the plus label vanishes
    CHECK_FALSE(vanishing_test(5, 0, 0, -1, ProjMode::Invariant));
    CHECK(vanishing_test(5, 0, 0, +1, ProjMode::Invariant));
}

TEST_CASE("vanishing rules agree with projection norms exhaustively") {
    auto rep = verify_vanishing_rules(5);
    CHECK(rep.pass);
}

TEST_CASE("closed cluster spectra equal the numeric oracle") {
    for (int k = 1; k <= 8; ++k) {
        auto closed3 = cluster3_closed_spectrum(k);
        auto oracle3 = sym_eig(laplacian(cluster3(k, 0).graph())).values;
        CHECK(multisets_close(closed3, oracle3, 1e-9));
        auto closed4 = cluster4_closed_spectrum(k);
        auto oracle4 = sym_eig(laplacian(cluster4(k, 0, 0).graph())).values;
        CHECK(multisets_close(closed4, oracle4, 1e-9));
    }
    CHECK(cluster3_closed_spectrum(1) == std::vector<double>{0.0});
    CHECK(cluster4_closed_spectrum(1) == std::vector<double>{0.0});
    // multiplicity of 4 in the (12,0)-cluster is at least 3
    auto big = cluster3_closed_spectrum(12);
    int m4 = 0;
    for (double x : big) m4 += std::abs(x - 4.0) < 1e-9;
    CHECK(m4 >= 3);
}

TEST_CASE("index set sizes follow the counting polynomials") {
    auto u_count = [](int k) -> int {
        int j;
        if (k % 3 == 2) {
            j = (k - 2) / 3;
            return (9 * j * j + 15 * j) / 2 + 3;
        }
        if (k % 3 == 0) {
            j = (k - 3) / 3;
            return (9 * j * j + 21 * j) / 2 + 6;
        }
        j = (k - 4) / 3;
        return (9 * j * j + 27 * j) / 2 + 10;
    };
    for (int k = 2; k <= 14; ++k) {
        CHECK(static_cast<int>(cluster3_u_indices(k).size()) == u_count(k));
        CHECK(static_cast<int>(cluster3_u_indices(k).size() +
                               cluster3_w_indices(k).size()) == k * k);
    }
}

TEST_CASE("invariant eigenvalue families") {
    // k=3: the family contains 0 (constant); k=4: contains 3+sqrt(5)
    auto v3 = d3_invariant_eigenvalues(3);
    CHECK(std::any_of(v3.begin(), v3.end(),
                      [](double x) { return std::abs(x) < 1e-12; }));
    auto v4 = d3_invariant_eigenvalues(4);
    CHECK(std::any_of(v4.begin(), v4.end(), [](double x) {
        return std::abs(x - (3.0 + std::sqrt(5.0))) < 1e-12;
    }));
    auto d4 = d4_invariant_eigenvalues(4);
    CHECK(std::any_of(d4.begin(), d4.end(),
                      [](double x) { return std::abs(x - 4.0) < 1e-12; }));
    CHECK(d4.size() == 3);  // s = 2 = k/2 excluded
    auto d5 = d4_invariant_eigenvalues(5);
    double mx = *std::max_element(d5.begin(), d5.end());
    CHECK(mx == doctest::Approx(4.0 + 4.0 * std::cos(M_PI / 5.0)));

    // every family member is an eigenvalue of the cluster spectrum
    auto spec = cluster3_closed_spectrum(5);
    for (double lam : d3_invariant_eigenvalues(5)) {
        bool found = false;
        for (double x : spec) found = found || std::abs(x - lam) < 1e-9;
        CHECK(found);
    }
}

TEST_CASE("projected eigenfunctions restrict to the cluster") {
    auto ef = cluster3_projected_eigenfunction(4, 1, 0, +1, ProjMode::Invariant);
    REQUIRE_FALSE(ef.values.empty());
    RotationGraph cg = cluster3(4, 0).graph();
    auto lf = apply_laplacian(cg, ef.values);
    double norm = 0, res = 0;
    for (size_t i = 0; i < ef.values.size(); ++i) {
        norm = std::max(norm, std::abs(ef.values[i]));
        res = std::max(res, std::abs(lf[i] - ef.eigenvalue * ef.values[i]));
    }
    CHECK(norm > 1e-9);
    CHECK(res <= 1e-8 * norm);
}

TEST_CASE("extension to the whole construction") {
    // constant: eigenvalue 0
    GCGraph g = gc_build(tetrahedron(), 3, 0);
    std::vector<double> ones(9, 1.0);
    auto rep = extend_cluster_eigenfunction(g, ones, 0.0);
    CHECK(rep.residual <= 1e-12);
    CHECK(rep.boundary_mismatch <= 1e-12);

    // largest invariant eigenvalue extends to any seed
    auto ef = cluster3_projected_eigenfunction(4, 1, 0, +1, ProjMode::Invariant);
    for (const char* seed : {"tetrahedron", "cube"}) {
        GCGraph g4 = gc_build(build_named(seed), 4, 0);
        auto r = extend_cluster_eigenfunction(g4, ef.values, ef.eigenvalue);
        CHECK(r.residual <= 1e-8);
        CHECK(r.boundary_mismatch <= 1e-8);
    }

    // eigenvalue-4 function on the (4,0)-cluster from the fold
    auto f4 = lemma_eigenfunction_3valent(2, 0, +1);
    REQUIRE_FALSE(f4.values.empty());
    GCGraph g4 = gc_build(tetrahedron(), 4, 0);
    auto r4 = extend_cluster_eigenfunction(g4, f4.values, 4.0);
    CHECK(r4.residual <= 1e-8);

    // eigenvalue-2 companion
    auto f2 = lemma_eigenfunction_3valent(2, 1, -1);
    REQUIRE_FALSE(f2.values.empty());
    auto r2 = extend_cluster_eigenfunction(g4, f2.values, 2.0);
    CHECK(r2.residual <= 1e-8);

    // 4-valent: both-even grid eigenfunctions extend over the octahedron
    GCGraph o4 = gc_build(octahedron(), 4, 0);
    auto q = cluster4_invariant_eigenfunction(4, 2, 2);
    CHECK(q.eigenvalue == doctest::Approx(4.0));
    auto ro = extend_cluster_eigenfunction(o4, q.values, q.eigenvalue);
    CHECK(ro.residual <= 1e-8);
    // the off-diagonal even pair gives the eigenvalue-2 witness the diagonal
    // family misses (octahedron table column (4,0) has multiplicity 1 there)
    auto q2 = cluster4_invariant_eigenfunction(4, 2, 0);
    CHECK(q2.eigenvalue == doctest::Approx(2.0));
    auto ro2 = extend_cluster_eigenfunction(o4, q2.values, q2.eigenvalue);
    CHECK(ro2.residual <= 1e-8);
    CHECK(ro2.boundary_mismatch <= 1e-8);
    GCGraph st4 = gc_build(square_torus(4), 3, 0);
    auto q3 = cluster4_invariant_eigenfunction(3, 2, 2);
    auto ro3 = extend_cluster_eigenfunction(st4, q3.values, q3.eigenvalue);
    CHECK(ro3.residual <= 1e-8);

    // a non-invariant function is rejected by the boundary check
    auto w = cluster3_projected_eigenfunction(4, 2, 1, -1, ProjMode::Alternating);
    REQUIRE_FALSE(w.values.empty());
    auto rw = extend_cluster_eigenfunction(g4, w.values, w.eigenvalue);
    CHECK(rw.boundary_mismatch > 1e-6);
}

TEST_CASE("fold criterion") {
    CHECK(fold_condition(3, 0));
    CHECK_FALSE(fold_condition(1, 3));
    auto rep = verify_fold(2);
    CHECK(rep.pass);
}

TEST_CASE("steady eigenvalue witnesses on the (2k,0)-cluster") {
    for (int kk : {1, 2, 3}) {
        RotationGraph cg = cluster3(2 * kk, 0).graph();
        int found4 = 0, found2 = 0;
        for (int j = 0; 2 * j < kk; ++j) {
            auto f = lemma_eigenfunction_3valent(kk, j, +1);
            if (f.values.empty()) continue;
            auto lf = apply_laplacian(cg, f.values);
            double res = 0, nrm = 0;
            for (size_t i = 0; i < f.values.size(); ++i) {
                res = std::max(res, std::abs(lf[i] - 4.0 * f.values[i]));
                nrm = std::max(nrm, std::abs(f.values[i]));
            }
            if (res <= 1e-8 * nrm) ++found4;
        }
        for (int j = 1; 2 * j <= kk; ++j) {
            auto f = lemma_eigenfunction_3valent(kk, j, -1);
            if (f.values.empty()) continue;
            auto lf = apply_laplacian(cg, f.values);
            double res = 0, nrm = 0;
            for (size_t i = 0; i < f.values.size(); ++i) {
                res = std::max(res, std::abs(lf[i] - 2.0 * f.values[i]));
                nrm = std::max(nrm, std::abs(f.values[i]));
            }
            if (res <= 1e-8 * nrm) ++found2;
        }
        CHECK(found4 >= (kk + 1) / 2);
        CHECK(found2 >= kk / 2);
    }
}

TEST_CASE("covering radius of the invariant families") {
    double r3 = invariant_covering_radius(3, 60, 0.01);
    CHECK(r3 < 0.2);
    CHECK(invariant_covering_radius(3, 30, 0.01) > r3);
    double r4 = invariant_covering_radius(4, 60, 0.01);
    CHECK(r4 < 0.2);
    // the endpoint 0 is always covered exactly
    auto fam = d3_invariant_eigenvalues(9);
    bool has_zero = false;
    for (double x : fam) has_zero = has_zero || std::abs(x) < 1e-12;
    CHECK(has_zero);
}

TEST_CASE("cluster/torus correspondence") {
    for (int k : {2, 3, 5}) CHECK_NOTHROW(cluster3_torus_vertices(k));
}
