#include "gcx/rotation_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace gcx {

RotationGraph::RotationGraph(std::vector<std::vector<int>> rot,
                             std::vector<std::string> labels)
    : rot_(std::move(rot)), labels_(std::move(labels)) {
    const int n = num_vertices();
    dart_offset_.resize(n + 1, 0);
    for (int v = 0; v < n; ++v)
        dart_offset_[v + 1] = dart_offset_[v] + static_cast<int>(rot_[v].size());
    const int nd = dart_offset_[n];
    if (nd % 2 != 0) throw std::invalid_argument("odd number of darts");
    darts_.resize(nd);
    theta_.assign(nd, Dart{});
    edge_id_.assign(nd, -1);

    // Pair the c-th occurrence of u in rot[v] with the c-th occurrence of v
    // in rot[u]; rejects loops and asymmetric neighbor lists.
    std::map<std::pair<int, int>, std::vector<int>> occ;  // (v,u) -> dart indices
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
            int u = rot_[v][i];
            if (u == v) throw std::invalid_argument("loops are not supported");
            if (u < 0 || u >= n) throw std::invalid_argument("neighbor out of range");
            int di = dart_offset_[v] + i;
            darts_[di] = Dart{v, i};
            occ[{v, u}].push_back(di);
        }
    int eid = 0;
    for (auto& [key, fwd] : occ) {
        auto [v, u] = key;
        if (v > u) continue;
        auto it = occ.find({u, v});
        if (it == occ.end() || it->second.size() != fwd.size())
            throw std::invalid_argument("rotation lists are not symmetric");
        for (size_t c = 0; c < fwd.size(); ++c) {
            int d1 = fwd[c], d2 = it->second[c];
            theta_[d1] = darts_[d2];
            theta_[d2] = darts_[d1];
            edge_id_[d1] = edge_id_[d2] = eid++;
        }
    }
    num_edges_ = eid;
}

bool RotationGraph::is_connected() const {
    const int n = num_vertices();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> dq{0};
    seen[0] = 1;
    int cnt = 1;
    while (!dq.empty()) {
        int v = dq.front();
        dq.pop_front();
        for (int u : rot_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                dq.push_back(u);
            }
    }
    return cnt == n;
}

bool RotationGraph::is_simple() const {
    for (const auto& r : rot_) {
        auto s = r;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    }
    return true;
}

bool RotationGraph::is_regular(int r) const {
    for (const auto& row : rot_)
        if (static_cast<int>(row.size()) != r) return false;
    return true;
}

FaceSet faces(const RotationGraph& g) {
    FaceSet out;
    std::vector<char> used(g.num_darts(), 0);
    for (int s = 0; s < g.num_darts(); ++s) {
        if (used[s]) continue;
        std::vector<Dart> face;
        Dart d = g.dart_at(s);
        while (!used[g.dart_index(d)]) {
            used[g.dart_index(d)] = 1;
            face.push_back(d);
            Dart r = g.theta(d);
            d = Dart{r.v, (r.i + 1) % g.degree(r.v)};
        }
        out.faces.push_back(std::move(face));
    }
    int chi = g.num_vertices() - g.num_edges() + static_cast<int>(out.faces.size());
    out.genus = (2 - chi) / 2;
    return out;
}

SymMatrix adjacency(const RotationGraph& g) {
    SymMatrix a(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int u : g.rotation(v)) a.at(v, u) += 1.0;
    return a;
}

SymMatrix laplacian(const RotationGraph& g) {
    SymMatrix m(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        m.at(v, v) = static_cast<double>(g.degree(v));
        for (int u : g.rotation(v)) m.at(v, u) -= 1.0;
    }
    return m;
}

std::optional<std::vector<int>> bipartition(const RotationGraph& g) {
    const int n = g.num_vertices();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> dq{s};
        while (!dq.empty()) {
            int v = dq.front();
            dq.pop_front();
            for (int u : g.rotation(v)) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    dq.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

namespace {

std::vector<Dart> hierholzer(const RotationGraph& g) {
    std::vector<char> used(g.num_darts(), 0);
    auto take = [&](Dart d) {
        used[g.dart_index(d)] = 1;
        used[g.dart_index(g.theta(d))] = 1;
    };
    auto walk = [&](Dart start) {
        std::vector<Dart> path;
        Dart d = start;
        while (true) {
            take(d);
            path.push_back(d);
            int v = g.theta(d).v;
            Dart next{-1, -1};
            for (int i = 0; i < g.degree(v); ++i)
                if (!used[g.dart_index({v, i})]) {
                    next = {v, i};
                    break;
                }
            if (next.v < 0) return path;
            d = next;
        }
    };
    std::vector<Dart> trail = walk(Dart{0, 0});
    bool spliced = true;
    while (spliced) {
        spliced = false;
        for (size_t idx = 0; idx < trail.size() && !spliced; ++idx) {
            int v = trail[idx].v;
            for (int i = 0; i < g.degree(v); ++i)
                if (!used[g.dart_index({v, i})]) {
                    auto sub = walk({v, i});
                    trail.insert(trail.begin() + static_cast<long>(idx), sub.begin(),
                                 sub.end());
                    spliced = true;
                    break;
                }
        }
    }
    return trail;
}

// Positions in the trail where the transition into trail[j].v goes straight.
std::vector<int> straight_positions(const RotationGraph& g,
                                    const std::vector<Dart>& trail) {
    std::vector<int> bad;
    const int m = static_cast<int>(trail.size());
    for (int j = 0; j < m; ++j) {
        Dart prev = trail[(j + m - 1) % m];
        Dart arr = g.theta(prev);
        Dart dep = trail[j];
        if (arr.v != dep.v) throw std::logic_error("broken trail");
        if (g.degree(arr.v) == 4 && (dep.i - arr.i + 4) % 4 == 2) bad.push_back(j);
    }
    return bad;
}

}  // namespace

EulerATrail euler_a_trail(const RotationGraph& g) {
    if (!g.is_regular(4)) throw std::invalid_argument("A-trail needs a 4-valent graph");
    if (!g.is_connected()) throw std::invalid_argument("graph not connected");
    std::vector<Dart> trail = hierholzer(g);
    if (trail.size() != static_cast<size_t>(g.num_edges()))
        throw std::logic_error("euler circuit incomplete");

    // Repair: reverse the interval between the two visits of a straight vertex.
    int guard = 4 * g.num_edges() + 16;
    while (true) {
        auto bad = straight_positions(g, trail);
        if (bad.empty()) break;
        if (--guard < 0) throw std::logic_error("a-trail repair did not terminate");
        int j = bad.front();
        int v = trail[j].v;
        int j2 = -1;
        for (int t = 0; t < static_cast<int>(trail.size()); ++t)
            if (t != j && trail[t].v == v) {
                j2 = t;
                break;
            }
        if (j2 < 0) throw std::logic_error("second visit not found");
        int a = std::min(j, j2), b = std::max(j, j2);
        std::vector<Dart> seg(trail.begin() + a, trail.begin() + b);
        std::reverse(seg.begin(), seg.end());
        for (auto& d : seg) d = g.theta(d);
        std::copy(seg.begin(), seg.end(), trail.begin() + a);
    }
    return EulerATrail{std::move(trail)};
}

bool is_a_trail(const RotationGraph& g, const EulerATrail& t) {
    if (t.darts.size() != static_cast<size_t>(g.num_edges())) return false;
    std::vector<char> seen(g.num_edges(), 0);
    for (Dart d : t.darts) {
        int e = g.edge_id(d);
        if (seen[e]) return false;
        seen[e] = 1;
    }
    const int m = static_cast<int>(t.darts.size());
    for (int j = 0; j < m; ++j) {
        Dart prev = t.darts[(j + m - 1) % m];
        Dart arr = g.theta(prev);
        Dart dep = t.darts[j];
        if (arr.v != dep.v) return false;
        if ((dep.i - arr.i + 4) % 4 == 2) return false;
    }
    return true;
}

std::optional<std::vector<bool>> alternating_orientation(const RotationGraph& g) {
    if (!g.is_regular(4)) return std::nullopt;
    // 2-coloring on darts: out(v,i) == out(v,i+2), out(v,i) != out(v,i+1),
    // out(d) != out(theta(d)).
    std::vector<int> color(g.num_darts(), -1);
    for (int s = 0; s < g.num_darts(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 1;
        std::deque<int> dq{s};
        while (!dq.empty()) {
            int di = dq.front();
            dq.pop_front();
            Dart d = g.dart_at(di);
            int c = color[di];
            auto require = [&](Dart e, int want) -> bool {
                int ei = g.dart_index(e);
                if (color[ei] >= 0) return color[ei] == want;
                color[ei] = want;
                dq.push_back(ei);
                return true;
            };
            if (!require({d.v, (d.i + 2) % 4}, c)) return std::nullopt;
            if (!require({d.v, (d.i + 1) % 4}, 1 - c)) return std::nullopt;
            if (!require({d.v, (d.i + 3) % 4}, 1 - c)) return std::nullopt;
            if (!require(g.theta(d), 1 - c)) return std::nullopt;
        }
    }
    std::vector<bool> out(g.num_darts());
    for (int i = 0; i < g.num_darts(); ++i) out[i] = color[i] == 1;
    return out;
}

namespace {

bool try_root(const RotationGraph& x, const RotationGraph& y, Dart rx, Dart ry,
              bool reverse) {
    // f maps darts of x to darts of y; propagate through sigma and theta.
    std::vector<int> f(x.num_darts(), -1);
    std::vector<int> vmap(x.num_vertices(), -1);
    std::vector<Dart> stack;
    f[x.dart_index(rx)] = y.dart_index(ry);
    vmap[rx.v] = ry.v;
    stack.push_back(rx);
    int mapped = 1;
    while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        Dart e = y.dart_at(f[x.dart_index(d)]);
        if (x.degree(d.v) != y.degree(e.v)) return false;
        int degx = x.degree(d.v), degy = y.degree(e.v);
        Dart dn{d.v, (d.i + 1) % degx};
        Dart en{e.v, reverse ? (e.i + degy - 1) % degy : (e.i + 1) % degy};
        const Dart pairs[2][2] = {{dn, en}, {x.theta(d), y.theta(e)}};
        for (const auto& pr : pairs) {
            Dart a = pr[0], b = pr[1];
            int ai = x.dart_index(a);
            if (f[ai] >= 0) {
                if (f[ai] != y.dart_index(b)) return false;
            } else {
                f[ai] = y.dart_index(b);
                if (vmap[a.v] >= 0 && vmap[a.v] != b.v) return false;
                vmap[a.v] = b.v;
                stack.push_back(a);
                ++mapped;
            }
        }
    }
    return mapped == x.num_darts();
}

}  // namespace

bool map_isomorphic(const RotationGraph& x, const RotationGraph& y) {
    if (x.num_vertices() != y.num_vertices() || x.num_edges() != y.num_edges())
        return false;
    if (x.num_vertices() == 0) return true;
    std::vector<int> dx, dy;
    for (int v = 0; v < x.num_vertices(); ++v) dx.push_back(x.degree(v));
    for (int v = 0; v < y.num_vertices(); ++v) dy.push_back(y.degree(v));
    std::sort(dx.begin(), dx.end());
    std::sort(dy.begin(), dy.end());
    if (dx != dy) return false;

    Dart rx{0, 0};
    for (int w = 0; w < y.num_vertices(); ++w)
        for (int j = 0; j < y.degree(w); ++j)
            for (bool rev : {false, true})
                if (try_root(x, y, rx, Dart{w, j}, rev)) return true;
    return false;
}

}  // namespace gcx
