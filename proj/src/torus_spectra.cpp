#include "gcx/torus_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <stdexcept>

#include "gcx/named_graphs.hpp"

namespace gcx {

namespace {
constexpr double kPi = std::numbers::pi;
int mod(int a, int m) { return ((a % m) + m) % m; }
}  // namespace

double hex_torus_eigenvalue(int n, int s, int t, int sign) {
    if (s < 0 || s >= n || t < 0 || t >= n)
        throw std::invalid_argument("hex_torus_eigenvalue: index out of range");
    double r = 3.0 + 2.0 * std::cos(2.0 * kPi * s / n) + 2.0 * std::cos(2.0 * kPi * t / n) +
               2.0 * std::cos(2.0 * kPi * (s - t) / n);
    r = std::max(r, 0.0);
    return 3.0 + (sign >= 0 ? 1.0 : -1.0) * std::sqrt(r);
}

double square_torus_eigenvalue(int n, int s, int t) {
    if (s < 0 || s >= n || t < 0 || t >= n)
        throw std::invalid_argument("square_torus_eigenvalue: index out of range");
    return 4.0 - 2.0 * std::cos(2.0 * kPi * s / n) - 2.0 * std::cos(2.0 * kPi * t / n);
}

bool hex_degenerate_index(int n, int s, int t) {
    if (n % 3 != 0) return false;
    return (s == n / 3 && t == 2 * n / 3) || (s == 2 * n / 3 && t == n / 3);
}

std::vector<std::vector<cdouble>> hex_eigenfunctions(int n, int s, int t, int sign) {
    const int nv = 2 * n * n;
    auto phase = [&](int a, int b) {
        double arg = 2.0 * kPi * (static_cast<double>(s) * a + static_cast<double>(t) * b) / n;
        return std::polar(1.0, arg);
    };
    if (hex_degenerate_index(n, s, t)) {
        std::vector<cdouble> f0(nv, 0.0), f1(nv, 0.0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                f0[hex_vertex(n, 0, a, b)] = phase(a, b);
                f1[hex_vertex(n, 1, a, b)] = phase(a, b);
            }
        return {f0, f1};
    }
    cdouble S = 1.0 + std::polar(1.0, 2.0 * kPi * s / n) + std::polar(1.0, 2.0 * kPi * t / n);
    double lam = hex_torus_eigenvalue(n, s, t, sign);
    cdouble ratio = S / (3.0 - lam);
    std::vector<cdouble> f(nv, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            cdouble v = phase(a, b);
            f[hex_vertex(n, 0, a, b)] = v;
            f[hex_vertex(n, 1, a, b)] = v * ratio;
        }
    return {f};
}

namespace {
std::vector<TorusGroupElement> build_hex_symmetry_group(int n);
}

std::vector<TorusGroupElement> hex_symmetry_group(int n) {
    static std::map<int, std::vector<TorusGroupElement>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_hex_symmetry_group(n)).first;
    return it->second;
}

namespace {
std::vector<TorusGroupElement> build_hex_symmetry_group(int n) {
    const int nv = 2 * n * n;
    auto perm_of = [&](auto&& mapfun) {
        std::vector<int> p(nv);
        for (int type = 0; type < 2; ++type)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    p[hex_vertex(n, type, a, b)] = mapfun(type, a, b);
        return p;
    };
    // rotation by 2pi/3 about (n-1)(1+w)/3
    auto rot = perm_of([&](int type, int a, int b) {
        if (type == 0) return hex_vertex(n, 0, n - a - b - 1, a);
        return hex_vertex(n, 1, n - a - b - 2, a);
    });
    // reflection along the long diagonal
    auto refl_long = perm_of([&](int type, int a, int b) { return hex_vertex(n, type, b, a); });
    // reflection along the short diagonal
    auto refl_short = perm_of([&](int type, int a, int b) {
        return hex_vertex(n, 1 - type, n - b - 1, n - a - 1);
    });

    struct Gen {
        const std::vector<int>* p;
        int sign;
    };
    const Gen gens[3] = {{&rot, +1}, {&refl_long, -1}, {&refl_short, +1}};

    std::map<std::vector<int>, int> seen;
    std::vector<int> ident(nv);
    for (int i = 0; i < nv; ++i) ident[i] = i;
    seen[ident] = 1;
    std::vector<std::vector<int>> frontier{ident};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            int sp = seen[p];
            for (const auto& g : gens) {
                std::vector<int> q(nv);
                for (int i = 0; i < nv; ++i) q[i] = (*g.p)[p[i]];
                if (!seen.count(q)) {
                    seen[q] = sp * g.sign;
                    next.push_back(q);
                }
            }
        }
        frontier = std::move(next);
    }
    if (seen.size() != 12) throw std::logic_error("hex symmetry group order != 12");
    std::vector<TorusGroupElement> out;
    for (auto& [p, sg] : seen) out.push_back({p, sg});
    return out;
}
}  // namespace

std::vector<cdouble> d6_project(int n, const std::vector<cdouble>& f, ProjMode mode) {
    auto group = hex_symmetry_group(n);
    std::vector<cdouble> out(f.size(), 0.0);
    for (const auto& el : group) {
        double w = mode == ProjMode::Invariant ? 1.0 : static_cast<double>(el.sign);
        for (size_t i = 0; i < f.size(); ++i) out[i] += w * f[el.perm[i]];
    }
    return out;
}

namespace {

// All index images of (s,t) under the torus symmetries (mod n).
std::vector<std::pair<int, int>> index_orbit(int n, int s, int t) {
    auto M = [&](int x) { return mod(x, n); };
    std::set<std::pair<int, int>> o{{s, t},
                                    {t, s},
                                    {M(t - s), t},
                                    {t, M(t - s)},
                                    {M(-s), M(-t)},
                                    {M(-t), M(-s)},
                                    {M(s - t), M(-t)},
                                    {M(-t), M(s - t)},
                                    {M(-s), M(t - s)},
                                    {M(t - s), M(-s)},
                                    {s, M(s - t)},
                                    {M(s - t), s}};
    return {o.begin(), o.end()};
}

bool u_family_hit(int n, int a, int b, int sign) {
    if (sign > 0) {
        if (a + b == n && ((0 < a && 3 * a < n) || (0 < b && 3 * b < n))) return true;
        if ((b == 2 * a && 3 * a < n) || (a == 2 * b && 3 * b < n)) return true;
        if (b == 2 * a - n && 2 * a >= n && 2 * n < 3 * a && a <= n - 1) return true;
        if (a == 2 * b - n && 2 * b >= n && 2 * n < 3 * b && b <= n - 1) return true;
    } else {
        if (a + b == n && 3 * a > n && 3 * a < 2 * n) return true;
        if ((b == 2 * a && 3 * a > n && 2 * a < n) ||
            (a == 2 * b && 3 * b > n && 2 * b < n))
            return true;
        if ((b == 2 * a - n && 2 * a >= n && 3 * a < 2 * n) ||
            (a == 2 * b - n && 2 * b >= n && 3 * b < 2 * n))
            return true;
    }
    return false;
}

}  // namespace

bool vanishing_test(int n, int s, int t, int sign, ProjMode mode) {
    if (s < 0 || s >= n || t < 0 || t >= n)
        throw std::invalid_argument("vanishing_test: index out of range");
    if (hex_degenerate_index(n, s, t)) return true;
    for (auto [a, b] : index_orbit(n, s, t)) {
        if (mode == ProjMode::Alternating && (a == 0 || b == 0 || a == b)) return true;
        if (u_family_hit(n, a, b, sign)) return true;
    }
    return false;
}

std::vector<IndexTriple> cluster3_u_indices(int k) {
    const int n = 3 * k;
    std::vector<IndexTriple> out;
    for (int s = 1; s < 2 * k; ++s)
        for (int t = std::max(0, 2 * s - n) + 1; 2 * t < s; ++t)
            if ((s + t) % 3 == 0) {
                out.push_back({+1, s, t});
                out.push_back({-1, s, t});
            }
    for (int s = 0; s < k; ++s) out.push_back({-1, 2 * s, s});
    for (int s = (n + 1) / 2; s < 2 * k; ++s) out.push_back({+1, s, 2 * s - n});
    for (int s = 3; 2 * s < n; s += 3) {
        out.push_back({+1, s, 0});
        out.push_back({-1, s, 0});
    }
    return out;
}

std::vector<IndexTriple> cluster3_w_indices(int k) {
    const int n = 3 * k;
    std::vector<IndexTriple> out;
    for (int s = 1; s < 2 * k; ++s)
        for (int t = std::max(0, 2 * s - n) + 1; 2 * t < s; ++t)
            if ((s + t) % 3 == 0) {
                out.push_back({+1, s, t});
                out.push_back({-1, s, t});
            }
    for (int s = 1; s < k; ++s) out.push_back({-1, 2 * s, s});
    // drop the t = 0 member (s = 3k/2) that vanishes in the alternating mode
    for (int s = n / 2 + 1; s < 2 * k; ++s) out.push_back({+1, s, 2 * s - n});
    return out;
}

std::vector<double> cluster3_closed_spectrum(int k) {
    const int n = 3 * k;
    std::vector<double> vals;
    for (const auto& ix : cluster3_u_indices(k))
        vals.push_back(hex_torus_eigenvalue(n, mod(ix.s, n), mod(ix.t, n), ix.sign));
    for (const auto& ix : cluster3_w_indices(k))
        vals.push_back(hex_torus_eigenvalue(n, mod(ix.s, n), mod(ix.t, n), ix.sign));
    if (static_cast<int>(vals.size()) != k * k)
        throw std::logic_error("cluster3_closed_spectrum: index count != k^2");
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<double> cluster4_closed_spectrum(int k) {
    std::vector<double> vals;
    for (int t = 0; t < k; ++t)
        for (int s = t; s < k; ++s) vals.push_back(square_torus_eigenvalue(2 * k, s, t));
    for (int t = 0; t < k; ++t)
        for (int s = t + 1; s < k; ++s) vals.push_back(square_torus_eigenvalue(2 * k, s, t));
    if (static_cast<int>(vals.size()) != k * k)
        throw std::logic_error("cluster4_closed_spectrum: index count != k^2");
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<double> d3_invariant_eigenvalues(int k) {
    std::vector<double> vals;
    // lambda^-_{j,k-j}, 0 <= j <= ceil(k/3)-1
    for (int j = 0; 3 * j < k; ++j)
        vals.push_back(hex_torus_eigenvalue(k, j, mod(k - j, k), -1));
    // lambda^+_{floor(k/3)+j, k-floor(k/3)-j}, 1 <= j <= ceil(2k/3)-floor(k/3)-1
    int lo = k / 3, hi = (2 * k + 2) / 3;
    for (int j = 1; lo + j < hi; ++j) {
        int s = lo + j;
        vals.push_back(hex_torus_eigenvalue(k, s, mod(k - s, k), +1));
    }
    // lambda^+_{s,0} = 3 + sqrt(5 + 4cos(2pi s/k)), 1 <= s <= k-1
    for (int s = 1; s < k; ++s) vals.push_back(hex_torus_eigenvalue(k, s, 0, +1));
    return vals;
}

std::vector<double> d4_invariant_eigenvalues(int k) {
    std::vector<double> vals;
    for (int s = 0; s < k; ++s) {
        if (k % 2 == 0 && s == k / 2) continue;
        vals.push_back(4.0 - 4.0 * std::cos(2.0 * kPi * s / k));
    }
    return vals;
}

std::vector<double> d4_invariant_eigenvalues_full(int k) {
    std::vector<double> vals;
    for (int a = 0; 2 * a <= k - 1; ++a)
        for (int b = 0; 2 * b <= k - 1; ++b)
            vals.push_back(4.0 - 2.0 * std::cos(2.0 * kPi * a / k) -
                           2.0 * std::cos(2.0 * kPi * b / k));
    return vals;
}

std::vector<int> cluster3_torus_vertices(int k) {
    ClusterGraph cl = cluster3(k, 0);
    std::vector<int> map(cl.size());
    for (int i = 0; i < cl.size(); ++i) {
        const TriCell& c = cl.tri_cells[i];
        map[i] = c.orient == Orient::Up
                     ? hex_vertex(k, 0, static_cast<int>(c.a), static_cast<int>(c.b))
                     : hex_vertex(k, 1, static_cast<int>(c.a) - 1, static_cast<int>(c.b));
    }
    // correspondence must carry cluster adjacency onto torus adjacency
    RotationGraph torus = hex_torus(k);
    std::set<std::pair<int, int>> torus_edges;
    for (int v = 0; v < torus.num_vertices(); ++v)
        for (int u : torus.rotation(v)) torus_edges.insert({v, u});
    int cluster_edge_count = 0;
    for (int i = 0; i < cl.size(); ++i)
        for (int nb : cl.adj[i])
            if (nb >= 0) {
                ++cluster_edge_count;
                if (!torus_edges.count({map[i], map[nb]}))
                    throw std::logic_error("cluster/torus correspondence broken");
            }
    // and no extra torus edges inside the image
    std::set<int> image(map.begin(), map.end());
    int inside = 0;
    for (auto [v, u] : torus_edges)
        if (image.count(v) && image.count(u)) ++inside;
    if (inside != cluster_edge_count)
        throw std::logic_error("cluster/torus correspondence missed edges");
    return map;
}

ClusterEigenfunction cluster3_projected_eigenfunction(int k, int s, int t, int sign,
                                                      ProjMode mode) {
    ClusterEigenfunction out;
    out.eigenvalue = hex_torus_eigenvalue(k, s, t, sign);
    auto basis = hex_eigenfunctions(k, s, t, sign);
    auto map = cluster3_torus_vertices(k);
    double best = 0.0;
    for (const auto& f : basis) {
        auto u = d6_project(k, f, mode);
        double norm = 0.0;
        for (const auto& z : u) norm = std::max(norm, std::abs(z));
        if (norm <= 1e-9) continue;
        std::vector<double> re(map.size()), im(map.size());
        double nre = 0.0, nim = 0.0;
        for (size_t i = 0; i < map.size(); ++i) {
            re[i] = u[map[i]].real();
            im[i] = u[map[i]].imag();
            nre = std::max(nre, std::abs(re[i]));
            nim = std::max(nim, std::abs(im[i]));
        }
        double n1 = std::max(nre, nim);
        if (n1 > best) {
            best = n1;
            out.values = nre >= nim ? std::move(re) : std::move(im);
        }
    }
    return out;
}

bool fold_condition(int s, int t) { return (s + t) % 3 == 0; }

double fold_identity_deviation(int k, const std::vector<cdouble>& f) {
    const int n = 3 * k;
    double dev = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            cdouble x = f[hex_vertex(n, 0, a, b)];
            cdouble y = f[hex_vertex(n, 1, k - b - 1, k - a - 1)];
            cdouble z = f[hex_vertex(n, 1, 2 * k - b - 1, 2 * k - a - 1)];
            dev = std::max(dev, std::abs(x - y));
            dev = std::max(dev, std::abs(x - z));
        }
    return dev;
}

std::vector<double> restrict_to_corner(int k, const std::vector<double>& f3k) {
    ClusterGraph big = cluster3(3 * k, 0);
    ClusterGraph small = cluster3(k, 0);
    if (static_cast<int>(f3k.size()) != big.size())
        throw std::invalid_argument("restrict_to_corner: size mismatch");
    std::vector<double> out(small.size());
    for (int i = 0; i < small.size(); ++i) {
        auto it = big.tri_index.find(small.tri_cells[i]);
        if (it == big.tri_index.end())
            throw std::logic_error("corner cell missing in big cluster");
        out[i] = f3k[it->second];
    }
    return out;
}

ClusterEigenfunction lemma_eigenfunction_3valent(int k, int j, int sign) {
    // u^{sign}_{3k,3j} on T(6k), restricted through the (6k,0)-cluster and the
    // fold to the (2k,0)-cluster; eigenvalue 4 for sign=+1, 2 for sign=-1.
    ClusterEigenfunction out;
    out.eigenvalue = sign > 0 ? 4.0 : 2.0;
    auto big = cluster3_projected_eigenfunction(6 * k, 3 * k, 3 * j, sign,
                                                ProjMode::Invariant);
    if (big.values.empty()) return out;
    out.values = restrict_to_corner(2 * k, big.values);
    double norm = 0.0;
    for (double v : out.values) norm = std::max(norm, std::abs(v));
    if (norm <= 1e-9) out.values.clear();
    return out;
}

ClusterEigenfunction cluster4_invariant_eigenfunction(int K, int s, int t) {
    // grid eigenvectors cos(pi s (2a+1) / 2K); D4-invariant when s,t even
    ClusterGraph cl = cluster4(K, 0, 0);
    auto phi = [&](int idx, int a) { return std::cos(kPi * idx * (2 * a + 1) / (2.0 * K)); };
    ClusterEigenfunction out;
    out.eigenvalue = square_torus_eigenvalue(2 * K, s, t);
    out.values.resize(cl.size());
    for (int i = 0; i < cl.size(); ++i) {
        int a = static_cast<int>(cl.sq_cells[i].a);
        int b = static_cast<int>(cl.sq_cells[i].b);
        out.values[i] = phi(s, a) * phi(t, b) + phi(t, a) * phi(s, b);
    }
    return out;
}

ExtensionReport extend_cluster_eigenfunction(const GCGraph& g,
                                             const std::vector<double>& cluster_fun,
                                             double eigenvalue) {
    const int ncell = static_cast<int>(cluster_fun.size());
    const int nv = g.graph.num_vertices();
    if (ncell == 0 || nv % ncell != 0)
        throw std::invalid_argument("extend: cluster size does not divide |V|");
    ExtensionReport rep;
    rep.values.resize(nv);
    for (int v = 0; v < nv; ++v) rep.values[v] = cluster_fun[v % ncell];

    auto lf = apply_laplacian(g.graph, rep.values);
    double norm = 0.0;
    for (double v : rep.values) norm = std::max(norm, std::abs(v));
    if (norm == 0.0) norm = 1.0;
    for (int v = 0; v < nv; ++v)
        rep.residual = std::max(rep.residual,
                                std::abs(lf[v] - eigenvalue * rep.values[v]) / norm);
    for (int v = 0; v < nv; ++v)
        for (int i = 0; i < g.graph.degree(v); ++i) {
            int u = g.graph.neighbor({v, i});
            if (g.provenance[v].first != g.provenance[u].first)
                rep.boundary_mismatch = std::max(
                    rep.boundary_mismatch, std::abs(rep.values[v] - rep.values[u]) / norm);
        }
    return rep;
}

double invariant_covering_radius(int valence, int k, double grid_step) {
    std::vector<double> fam =
        valence == 3 ? d3_invariant_eigenvalues(k) : d4_invariant_eigenvalues_full(k);
    std::sort(fam.begin(), fam.end());
    double hi = valence == 3 ? 6.0 : 8.0;
    double radius = 0.0;
    for (double x = 0.0; x <= hi + 1e-12; x += grid_step) {
        auto it = std::lower_bound(fam.begin(), fam.end(), x);
        double d = 1e18;
        if (it != fam.end()) d = std::min(d, std::abs(*it - x));
        if (it != fam.begin()) d = std::min(d, std::abs(*(it - 1) - x));
        radius = std::max(radius, d);
    }
    return radius;
}

std::vector<double> apply_laplacian(const RotationGraph& g, const std::vector<double>& f) {
    std::vector<double> out(f.size());
    for (int v = 0; v < g.num_vertices(); ++v) {
        double acc = g.degree(v) * f[v];
        for (int u : g.rotation(v)) acc -= f[u];
        out[v] = acc;
    }
    return out;
}

std::vector<cdouble> apply_laplacian(const RotationGraph& g, const std::vector<cdouble>& f) {
    std::vector<cdouble> out(f.size());
    for (int v = 0; v < g.num_vertices(); ++v) {
        cdouble acc = static_cast<double>(g.degree(v)) * f[v];
        for (int u : g.rotation(v)) acc -= f[u];
        out[v] = acc;
    }
    return out;
}

}  // namespace gcx
