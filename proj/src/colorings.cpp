#include "gcx/colorings.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "gcx/torus_spectra.hpp"

namespace gcx {

bool check_F(const RotationGraph& x) {
    if (!x.is_regular(3)) throw std::invalid_argument("check_F: 3-valent only");
    FaceSet fs = faces(x);
    if (fs.genus != 0) throw std::invalid_argument("check_F: plane graphs only");
    for (const auto& f : fs.faces)
        if (f.size() % 3 != 0) return false;
    return true;
}

std::optional<EdgeNumbering> build_CN(const RotationGraph& x) {
    if (!x.is_regular(3)) throw std::invalid_argument("build_CN: 3-valent only");
    const int ne = x.num_edges();
    std::vector<int> nu(ne, -1);
    nu[x.edge_id(Dart{0, 0})] = 0;
    std::deque<Dart> dq{Dart{0, 0}, x.theta(Dart{0, 0})};
    while (!dq.empty()) {
        Dart d = dq.front();
        dq.pop_front();
        Dart arr = x.theta(d);  // arrival dart at the head vertex
        int v = arr.v;
        for (auto [step, tau] : {std::pair{1, +1}, std::pair{2, -1}}) {
            Dart out{v, (arr.i + step) % 3};
            int e2 = x.edge_id(out);
            int val = ((nu[x.edge_id(d)] + tau) % 3 + 3) % 3;
            if (nu[e2] < 0) {
                nu[e2] = val;
                dq.push_back(out);
                dq.push_back(x.theta(out));
            } else if (nu[e2] != val) {
                return std::nullopt;  // path dependent: (F) fails
            }
        }
    }
    EdgeNumbering en;
    en.value.resize(ne);
    for (int e = 0; e < ne; ++e) en.value[e] = nu[e] + 1;  // report in {1,2,3}
    return en;
}

bool check_CN(const RotationGraph& x, const EdgeNumbering& nu) {
    bool incr = true, decr = true;
    for (int v = 0; v < x.num_vertices(); ++v) {
        std::array<int, 3> vals;
        for (int i = 0; i < 3; ++i) vals[i] = nu.value[x.edge_id(Dart{v, i})];
        std::array<int, 3> sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 3>{1, 2, 3}) return false;
        for (int i = 0; i < 3; ++i) {
            int diff = ((vals[(i + 1) % 3] - vals[i]) % 3 + 3) % 3;
            if (diff != 1) incr = false;
            if (diff != 2) decr = false;
        }
    }
    return incr || decr;
}

VertexNumbering build_N(const RotationGraph& x, const EdgeNumbering& nu) {
    // cluster3(2,0) cells sort as: up(0,0), up(0,1), up(1,0), down(1,0).
    // The leaf opposite side i: side0 -> up(0,1), side1 -> up(0,0),
    // side2 -> up(1,0); the center down(1,0) gets 0.
    static constexpr int kOpposite[3] = {1, 0, 2};
    static constexpr int kCenter = 3;
    VertexNumbering vn;
    vn.value.assign(static_cast<size_t>(x.num_vertices()) * 4, -1);
    for (int p = 0; p < x.num_vertices(); ++p) {
        vn.value[p * 4 + kCenter] = 0;
        for (int i = 0; i < 3; ++i)
            vn.value[p * 4 + kOpposite[i]] = nu.value[x.edge_id(Dart{p, i})];
    }
    return vn;
}

bool check_N(const GCGraph& g20, const VertexNumbering& vn) {
    const RotationGraph& g = g20.graph;
    if (vn.value.size() != static_cast<size_t>(g.num_vertices())) return false;
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int u : g.rotation(v))
            if (vn.value[v] == vn.value[u]) return false;
    // centers carry 0
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& cell = g20.provenance[v].second;
        bool center = cell.tri.orient == Orient::Down;
        if (center != (vn.value[v] == 0)) return false;
    }
    return true;
}

std::vector<double> eigenfunction_from_N(const GCGraph& g20, const VertexNumbering& vn,
                                         const std::array<double, 4>& alpha) {
    double sum = alpha[0] + alpha[1] + alpha[2] + alpha[3];
    if (std::abs(sum) > 1e-12)
        throw std::invalid_argument("eigenfunction_from_N: alpha must sum to 0");
    std::vector<double> f(g20.graph.num_vertices());
    double norm = 0.0;
    for (int v = 0; v < g20.graph.num_vertices(); ++v) {
        f[v] = alpha[static_cast<size_t>(vn.value[v])];
        norm = std::max(norm, std::abs(f[v]));
    }
    if (norm == 0.0) throw std::invalid_argument("eigenfunction_from_N: zero function");
    auto lf = apply_laplacian(g20.graph, f);
    for (size_t v = 0; v < f.size(); ++v)
        if (std::abs(lf[v] - 4.0 * f[v]) > 1e-9 * norm)
            throw std::logic_error("eigenfunction_from_N: residual too large");
    return f;
}

namespace {

// Endpoints reachable by 3-edge walks from v whose two interior turns are
// both right or both left.
std::vector<int> double_turn_targets(const RotationGraph& x, int v) {
    std::vector<int> out;
    for (int i = 0; i < 3; ++i)
        for (int step : {1, 2}) {
            Dart d{v, i};
            Dart arr = x.theta(d);
            Dart d2{arr.v, (arr.i + step) % 3};
            Dart arr2 = x.theta(d2);
            Dart d3{arr2.v, (arr2.i + step) % 3};
            out.push_back(x.theta(d3).v);
        }
    return out;
}

std::optional<std::vector<bool>> greedy_closure(const RotationGraph& x, int seed) {
    const int n = x.num_vertices();
    std::vector<bool> black(n, false);
    black[seed] = true;
    std::deque<int> dq{seed};
    while (!dq.empty()) {
        int v = dq.front();
        dq.pop_front();
        for (int y : double_turn_targets(x, v))
            if (!black[y]) {
                black[y] = true;
                dq.push_back(y);
            }
    }
    for (int v = 0; v < n; ++v) {
        int nb = 0;
        for (int u : x.rotation(v)) nb += black[u];
        if (black[v] && nb != 0) return std::nullopt;
        if (!black[v] && nb != 1) return std::nullopt;
    }
    return black;
}

// Exact cover of V by closed neighborhoods (efficient dominating set).
bool exact_code(const RotationGraph& x, std::vector<bool>& black, long& budget) {
    const int n = x.num_vertices();
    std::vector<int> covered(n, 0);
    std::vector<int> state(n, 0);  // 0 open, 1 black, -1 barred
    std::vector<int> chosen;

    auto ball_free = [&](int u) {
        if (state[u] != 0 || covered[u] != 0) return false;
        for (int w : x.rotation(u))
            if (covered[w] != 0) return false;
        return true;
    };
    std::function<bool()> solve = [&]() -> bool {
        if (--budget < 0) return false;
        int pick = -1;
        int best = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (covered[v] != 0) continue;
            int cnt = ball_free(v);
            for (int u : x.rotation(v)) cnt += ball_free(u);
            if (cnt < best) {
                best = cnt;
                pick = v;
                if (cnt == 0) break;
            }
        }
        if (pick < 0) return true;  // everything covered
        if (best == 0) return false;
        std::vector<int> cands;
        if (ball_free(pick)) cands.push_back(pick);
        for (int u : x.rotation(pick))
            if (ball_free(u)) cands.push_back(u);
        for (int u : cands) {
            state[u] = 1;
            ++covered[u];
            for (int w : x.rotation(u)) ++covered[w];
            if (solve()) {
                chosen.push_back(u);
                return true;
            }
            state[u] = 0;
            --covered[u];
            for (int w : x.rotation(u)) --covered[w];
        }
        return false;
    };
    if (!solve()) return false;
    black.assign(n, false);
    for (int u : chosen) black[u] = true;
    return true;
}

}  // namespace

std::variant<BWColoring, CColoringFailure> build_C(const RotationGraph& x) {
    if (!x.is_regular(3)) throw std::invalid_argument("build_C: 3-valent only");
    for (int seed = 0; seed < x.num_vertices(); ++seed) {
        auto b = greedy_closure(x, seed);
        if (b) return BWColoring{*b};
    }
    std::vector<bool> black;
    long budget = 2'000'000;
    if (x.num_vertices() % 4 == 0 && exact_code(x, black, budget))
        return BWColoring{black};

    // report an adjacent black pair of the closure from vertex 0 as witness
    std::vector<bool> cl(x.num_vertices(), false);
    cl[0] = true;
    std::deque<int> dq{0};
    while (!dq.empty()) {
        int v = dq.front();
        dq.pop_front();
        for (int y : double_turn_targets(x, v))
            if (!cl[y]) {
                cl[y] = true;
                dq.push_back(y);
            }
    }
    for (int v = 0; v < x.num_vertices(); ++v)
        if (cl[v])
            for (int u : x.rotation(v))
                if (cl[u]) return CColoringFailure{v, u};
    return CColoringFailure{0, -1};
}

CCheck check_C(const RotationGraph& x, const BWColoring& c) {
    CCheck r;
    const int n = x.num_vertices();
    r.c1 = r.c2 = r.c3 = true;
    for (int v = 0; v < n; ++v) {
        int nb = 0;
        for (int u : x.rotation(v)) nb += c.black[u];
        if (c.black[v] && nb != 0) r.c1 = false;
        if (!c.black[v] && nb != 1) r.c2 = false;
    }
    // black pairs at graph distance exactly 3
    for (int v = 0; v < n; ++v) {
        if (!c.black[v]) continue;
        std::vector<int> dist(n, -1);
        dist[v] = 0;
        std::deque<int> dq{v};
        while (!dq.empty()) {
            int a = dq.front();
            dq.pop_front();
            if (dist[a] >= 3) continue;
            for (int u : x.rotation(a))
                if (dist[u] < 0) {
                    dist[u] = dist[a] + 1;
                    dq.push_back(u);
                }
        }
        auto targets = double_turn_targets(x, v);
        for (int u = 0; u < n; ++u)
            if (c.black[u] && dist[u] == 3 &&
                std::find(targets.begin(), targets.end(), u) == targets.end())
                r.c3 = false;
    }
    return r;
}

void write_labels_json(const std::vector<int>& labels, std::ostream& out) {
    nlohmann::json j = nlohmann::json::object();
    for (size_t v = 0; v < labels.size(); ++v) j[std::to_string(v)] = labels[v];
    out << j.dump(1) << "\n";
}

std::vector<int> gc_bipartition(const RotationGraph& x, const GCGraph& g) {
    auto base = bipartition(x);
    if (!base) throw std::invalid_argument("gc_bipartition: seed not bipartite");
    if (g.valence != 3)
        throw std::invalid_argument("gc_bipartition: 3-valent constructions only");
    std::vector<int> color(g.graph.num_vertices());
    for (int v = 0; v < g.graph.num_vertices(); ++v) {
        const auto& [parent, cell] = g.provenance[v];
        int up = cell.tri.orient == Orient::Up ? 1 : 0;
        color[v] = (*base)[parent] ^ up;
    }
    for (int v = 0; v < g.graph.num_vertices(); ++v)
        for (int u : g.graph.rotation(v))
            if (color[v] == color[u])
                throw std::logic_error("gc_bipartition: coloring not proper");
    return color;
}

}  // namespace gcx
