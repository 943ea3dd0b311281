#include "gcx/gc.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace gcx {

NormalizedParams normalize_params(std::int64_t k, std::int64_t l, int valence) {
    if (k == 0 && l == 0) throw std::invalid_argument("(k,l) must not be (0,0)");
    struct Cand {
        std::int64_t k, l;
        std::string sym;
    };
    std::vector<Cand> orbit;
    std::int64_t a = k, b = l;
    int period = valence == 3 ? 6 : 4;
    for (int r = 0; r < period; ++r) {
        orbit.push_back({a, b, "rot^" + std::to_string(r)});
        orbit.push_back({b, a, "rot^" + std::to_string(r) + "*swap"});
        if (valence == 3) {
            std::int64_t na = -b, nb = a + b;  // z -> wz
            a = na;
            b = nb;
        } else {
            std::int64_t na = -b, nb = a;  // z -> iz
            a = na;
            b = nb;
        }
    }
    for (const auto& c : orbit)
        if (c.k >= c.l && c.l >= 0 && c.k != 0) return {c.k, c.l, c.sym};
    throw std::logic_error("normalize_params: no canonical representative");
}

namespace {

struct Frame3 {
    EisensteinInt z;
    int rot;     // number of rho applications
    bool flip;   // apply R after rotating
    TriCell operator()(TriCell c) const {
        c = tri_rotate_n(z, c, rot);
        return flip ? tri_flip(z, c) : c;
    }
};

struct Frame4 {
    GaussianInt z;
    int rot;
    bool flip;
    SqCell operator()(SqCell c) const {
        c = sq_rotate_n(z, c, rot);
        return flip ? sq_flip(z, c) : c;
    }
};

int mod(int a, int m) { return ((a % m) + m) % m; }

GCGraph build3(const RotationGraph& x, std::int64_t k, std::int64_t l) {
    const EisensteinInt z{k, l};
    ClusterGraph cl = cluster3(k, l);
    const int ncell = cl.size();
    const int nv = x.num_vertices();

    auto vid = [&](int p, int ci) { return p * ncell + ci; };
    std::vector<std::array<int, 3>> slots(static_cast<size_t>(nv) * ncell,
                                          {-1, -1, -1});
    for (int p = 0; p < nv; ++p)
        for (int ci = 0; ci < ncell; ++ci)
            for (int s = 0; s < 3; ++s)
                if (cl.adj[ci][s] >= 0) slots[vid(p, ci)][s] = vid(p, cl.adj[ci][s]);

    GCGraph out;
    out.valence = 3;
    out.k = k;
    out.l = l;
    out.intercluster_edges.assign(x.num_edges(), 0);

    std::vector<char> done(x.num_edges(), 0);
    for (int p = 0; p < nv; ++p) {
        for (int ip = 0; ip < 3; ++ip) {
            Dart d{p, ip};
            int eid = x.edge_id(d);
            if (done[eid]) continue;
            done[eid] = 1;
            Dart r = x.theta(d);
            int q = r.v, iq = r.i;

            Frame3 tp{z, mod(1 - ip, 3), false};
            Frame3 tq{z, mod(1 - iq, 3), true};
            std::map<TriCell, int> placed_q;
            for (int ci = 0; ci < ncell; ++ci) placed_q[tq(cl.tri_cells[ci])] = ci;
            for (int ci = 0; ci < ncell; ++ci) {
                TriCell sc = tp(cl.tri_cells[ci]);
                if (placed_q.count(sc))
                    throw std::logic_error("gc_build: overlapping cluster placement");
                auto nbs = tri_neighbors(sc);
                for (int s = 0; s < 3; ++s) {
                    auto it = placed_q.find(nbs[s]);
                    if (it == placed_q.end()) continue;
                    int cj = it->second;
                    // slot of the edge in each cluster's own frame
                    int s0 = -1, s1 = -1;
                    auto nb0 = tri_neighbors(cl.tri_cells[ci]);
                    for (int t = 0; t < 3; ++t)
                        if (tp(nb0[t]) == nbs[s]) s0 = t;
                    auto nb1 = tri_neighbors(cl.tri_cells[cj]);
                    for (int t = 0; t < 3; ++t)
                        if (tq(nb1[t]) == sc) s1 = t;
                    if (s0 < 0 || s1 < 0) throw std::logic_error("gc_build: slot lookup");
                    auto& sl0 = slots[vid(p, ci)][s0];
                    auto& sl1 = slots[vid(q, cj)][s1];
                    if (sl0 != -1 || sl1 != -1)
                        throw std::logic_error("gc_build: slot filled twice");
                    sl0 = vid(q, cj);
                    sl1 = vid(p, ci);
                    ++out.intercluster_edges[eid];
                }
            }
        }
    }

    std::vector<std::vector<int>> rot(slots.size());
    for (size_t v = 0; v < slots.size(); ++v) {
        for (int s = 0; s < 3; ++s) {
            if (slots[v][s] < 0)
                throw std::logic_error("gc_build: unfilled slot (inconsistent orientation)");
            rot[v].push_back(slots[v][s]);
        }
    }
    out.graph = RotationGraph(std::move(rot));
    out.provenance.reserve(slots.size());
    for (int p = 0; p < nv; ++p)
        for (int ci = 0; ci < ncell; ++ci)
            out.provenance.push_back({p, LatticeCell{3, cl.tri_cells[ci], {}}});
    return out;
}

GCGraph build4(const RotationGraph& x, std::int64_t k, std::int64_t l) {
    const GaussianInt z{k, l};
    auto norm = normalize_params(k, l, 4);
    const bool boundary = edge_hits_barycenter(norm.k, norm.l, 4);

    // Outward side parity per vertex, from an alternating direction
    // assignment (only needed when barycenters sit on region sides).
    std::vector<int> parity(x.num_vertices(), 0);
    if (boundary) {
        auto orient = alternating_orientation(x);
        if (!orient)
            throw std::invalid_argument(
                "gc_build: no alternating in/out edge assignment exists for this "
                "rotation system; the boundary-barycenter case is undefined here");
        for (int v = 0; v < x.num_vertices(); ++v) {
            int first_out = -1;
            for (int i = 0; i < 4; ++i)
                if ((*orient)[x.dart_index({v, i})]) {
                    first_out = i;
                    break;
                }
            parity[v] = first_out & 1;
        }
    }

    ClusterGraph cls[2] = {cluster4(k, l, 0), cluster4(k, l, 1)};
    const int ncell = cls[0].size();
    if (cls[1].size() != ncell) throw std::logic_error("cluster size mismatch");
    const int nv = x.num_vertices();
    auto cluster_of = [&](int p) -> ClusterGraph& { return cls[parity[p]]; };

    auto vid = [&](int p, int ci) { return p * ncell + ci; };
    std::vector<std::array<int, 4>> slots(static_cast<size_t>(nv) * ncell,
                                          {-1, -1, -1, -1});
    for (int p = 0; p < nv; ++p) {
        const ClusterGraph& cl = cluster_of(p);
        for (int ci = 0; ci < ncell; ++ci)
            for (int s = 0; s < 4; ++s)
                if (cl.adj[ci][s] >= 0) slots[vid(p, ci)][s] = vid(p, cl.adj[ci][s]);
    }

    GCGraph out;
    out.valence = 4;
    out.k = k;
    out.l = l;
    out.intercluster_edges.assign(x.num_edges(), 0);

    std::vector<char> done(x.num_edges(), 0);
    for (int p = 0; p < nv; ++p) {
        for (int ip = 0; ip < 4; ++ip) {
            Dart d{p, ip};
            int eid = x.edge_id(d);
            if (done[eid]) continue;
            done[eid] = 1;
            Dart r = x.theta(d);
            int q = r.v, iq = r.i;

            const ClusterGraph& cp = cluster_of(p);
            const ClusterGraph& cq = cluster_of(q);
            Frame4 tp{z, mod(1 - ip, 4), false};
            Frame4 tq{z, mod(1 - iq, 4), true};
            std::map<SqCell, int> placed_q;
            for (int cj = 0; cj < ncell; ++cj) placed_q[tq(cq.sq_cells[cj])] = cj;
            for (int ci = 0; ci < ncell; ++ci) {
                SqCell sc = tp(cp.sq_cells[ci]);
                if (placed_q.count(sc))
                    throw std::logic_error("gc_build: overlapping cluster placement");
                auto nbs = sq_neighbors(sc);
                for (int s = 0; s < 4; ++s) {
                    auto it = placed_q.find(nbs[s]);
                    if (it == placed_q.end()) continue;
                    int cj = it->second;
                    int s0 = -1, s1 = -1;
                    auto nb0 = sq_neighbors(cp.sq_cells[ci]);
                    for (int t = 0; t < 4; ++t)
                        if (tp(nb0[t]) == nbs[s]) s0 = t;
                    auto nb1 = sq_neighbors(cq.sq_cells[cj]);
                    for (int t = 0; t < 4; ++t)
                        if (tq(nb1[t]) == sc) s1 = t;
                    if (s0 < 0 || s1 < 0) throw std::logic_error("gc_build: slot lookup");
                    auto& sl0 = slots[vid(p, ci)][s0];
                    auto& sl1 = slots[vid(q, cj)][s1];
                    if (sl0 != -1 || sl1 != -1)
                        throw std::logic_error("gc_build: slot filled twice");
                    sl0 = vid(q, cj);
                    sl1 = vid(p, ci);
                    ++out.intercluster_edges[eid];
                }
            }
        }
    }

    std::vector<std::vector<int>> rot(slots.size());
    for (size_t v = 0; v < slots.size(); ++v)
        for (int s = 0; s < 4; ++s) {
            if (slots[v][s] < 0)
                throw std::logic_error("gc_build: unfilled slot (inconsistent orientation)");
            rot[v].push_back(slots[v][s]);
        }
    out.graph = RotationGraph(std::move(rot));
    out.provenance.reserve(slots.size());
    for (int p = 0; p < nv; ++p) {
        const ClusterGraph& cl = cluster_of(p);
        for (int ci = 0; ci < ncell; ++ci)
            out.provenance.push_back({p, LatticeCell{4, {}, cl.sq_cells[ci]}});
    }
    return out;
}

}  // namespace

GCGraph gc_build(const RotationGraph& x, std::int64_t k, std::int64_t l) {
    if (k == 0 && l == 0) throw std::invalid_argument("gc_build: (k,l) != (0,0)");
    if (!x.is_connected()) throw std::invalid_argument("gc_build: seed not connected");
    if (!x.is_simple()) throw std::invalid_argument("gc_build: seed must be simple");
    GCGraph g;
    if (x.is_regular(3))
        g = build3(x, k, l);
    else if (x.is_regular(4))
        g = build4(x, k, l);
    else
        throw std::invalid_argument("gc_build: seed must be 3- or 4-valent");

    for (int e = 1; e < static_cast<int>(g.intercluster_edges.size()); ++e)
        if (g.intercluster_edges[e] != g.intercluster_edges[0])
            throw std::logic_error("gc_build: cross-edge count differs between edges");
    if (!g.graph.is_connected()) throw std::logic_error("gc_build: result disconnected");
    return g;
}

int intercluster_edge_count(const GCGraph& g) {
    return g.intercluster_edges.empty() ? 0 : g.intercluster_edges[0];
}

bool compose_check(const RotationGraph& x, std::int64_t k1, std::int64_t l1,
                   std::int64_t k2, std::int64_t l2) {
    GCGraph inner = gc_build(x, k2, l2);
    GCGraph lhs = gc_build(inner.graph, k1, l1);
    std::int64_t pk, pl;
    if (x.is_regular(3)) {
        EisensteinInt prod = EisensteinInt{k1, l1} * EisensteinInt{k2, l2};
        pk = prod.a;
        pl = prod.b;
    } else {
        GaussianInt prod = GaussianInt{k1, l1} * GaussianInt{k2, l2};
        pk = prod.a;
        pl = prod.b;
    }
    GCGraph rhs = gc_build(x, pk, pl);
    return map_isomorphic(lhs.graph, rhs.graph);
}

void write_provenance_json(const GCGraph& g, std::ostream& out) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v = 0; v < g.graph.num_vertices(); ++v) {
        const auto& [parent, cell] = g.provenance[v];
        nlohmann::json rec;
        rec["gc_vertex"] = v;
        rec["parent_vertex"] = parent;
        if (g.valence == 3)
            rec["cell"] = {{"orient", cell.tri.orient == Orient::Up ? "up" : "down"},
                           {"a", cell.tri.a},
                           {"b", cell.tri.b}};
        else
            rec["cell"] = {{"orient", "square"}, {"a", cell.sq.a}, {"b", cell.sq.b}};
        arr.push_back(rec);
    }
    out << arr.dump(1) << "\n";
}

}  // namespace gcx
