#include "gcx/cluster.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcx {

namespace {

// Project scaled point p on the side direction; used to order ports along a
// side from its lower corner.  Exact integer key.
std::int64_t side_key(ScaledPoint from, ScaledPoint to, std::int64_t px,
                      std::int64_t py) {
    return (to.x - from.x) * px + (to.y - from.y) * py;
}

}  // namespace

ClusterGraph cluster3(std::int64_t k, std::int64_t l) {
    if (k == 0 && l == 0) throw std::invalid_argument("cluster3: (k,l) != (0,0)");
    ClusterGraph c;
    c.valence = 3;
    c.k = k;
    c.l = l;
    const EisensteinInt z{k, l};
    const BigTriangle region{z};

    std::int64_t lo_a = std::min<std::int64_t>({0, k, -l}) - 2;
    std::int64_t hi_a = std::max<std::int64_t>({0, k, -l}) + 2;
    std::int64_t lo_b = std::min<std::int64_t>({0, l, k + l}) - 2;
    std::int64_t hi_b = std::max<std::int64_t>({0, l, k + l}) + 2;
    for (std::int64_t a = lo_a; a <= hi_a; ++a)
        for (std::int64_t b = lo_b; b <= hi_b; ++b) {
            TriCell up{Orient::Up, a, b};
            if (barycenter_position(up, region).pos != Position::Outside)
                c.tri_cells.push_back(up);
            TriCell dn{Orient::Down, a, b};
            if (barycenter_position(dn, region).pos == Position::Interior)
                c.tri_cells.push_back(dn);
        }
    std::sort(c.tri_cells.begin(), c.tri_cells.end());
    for (int i = 0; i < c.size(); ++i) c.tri_index[c.tri_cells[i]] = i;

    c.adj.assign(c.size(), std::vector<int>(3, -1));
    c.ports.assign(3, {});
    auto corners = region.corners3();
    std::vector<std::vector<std::pair<std::int64_t, std::pair<int, int>>>> keyed(3);
    for (int i = 0; i < c.size(); ++i) {
        auto nbs = tri_neighbors(c.tri_cells[i]);
        for (int s = 0; s < 3; ++s) {
            auto it = c.tri_index.find(nbs[s]);
            if (it != c.tri_index.end()) {
                c.adj[i][s] = it->second;
                continue;
            }
            // Attribute the dangling edge to the side across which the
            // gluing completes it: carry the outside cell through the side
            // transform (rotate side to side 1, then pi-flip) and test it
            // against the base region, exactly as gc_build will.
            for (int side = 0; side < 3; ++side) {
                TriCell img = tri_flip(z, tri_rotate_n(z, nbs[s], 1 - side));
                auto cls = barycenter_position(img, region);
                bool hit = cls.pos == Position::Interior ||
                           (cls.pos == Position::OnEdge && img.orient == Orient::Up);
                if (hit) {
                    ScaledPoint px = tri_barycenter3(c.tri_cells[i]);
                    ScaledPoint py = tri_barycenter3(nbs[s]);
                    keyed[side].push_back({side_key(corners[side], corners[(side + 1) % 3],
                                                    px.x + py.x, px.y + py.y),
                                           {i, s}});
                    break;
                }
            }
        }
    }
    for (int side = 0; side < 3; ++side) {
        std::stable_sort(keyed[side].begin(), keyed[side].end());
        for (auto& [key, port] : keyed[side]) c.ports[side].push_back(port);
    }
    return c;
}

ClusterGraph cluster4(std::int64_t k, std::int64_t l, int outward_parity) {
    if (k == 0 && l == 0) throw std::invalid_argument("cluster4: (k,l) != (0,0)");
    ClusterGraph c;
    c.valence = 4;
    c.k = k;
    c.l = l;
    c.outward = outward_parity & 1;
    const GaussianInt z{k, l};
    const BigSquare region{z};

    std::int64_t lo_a = std::min<std::int64_t>({0, k, k - l, -l}) - 2;
    std::int64_t hi_a = std::max<std::int64_t>({0, k, k - l, -l}) + 2;
    std::int64_t lo_b = std::min<std::int64_t>({0, l, k + l, k}) - 2;
    std::int64_t hi_b = std::max<std::int64_t>({0, l, k + l, k}) + 2;
    for (std::int64_t a = lo_a; a <= hi_a; ++a)
        for (std::int64_t b = lo_b; b <= hi_b; ++b) {
            SqCell cell{a, b};
            auto p = barycenter_position(cell, region);
            if (p.pos == Position::Interior ||
                (p.pos == Position::OnEdge && p.side % 2 == c.outward))
                c.sq_cells.push_back(cell);
        }
    std::sort(c.sq_cells.begin(), c.sq_cells.end());
    for (int i = 0; i < c.size(); ++i) c.sq_index[c.sq_cells[i]] = i;

    c.adj.assign(c.size(), std::vector<int>(4, -1));
    c.ports.assign(4, {});
    auto corners = region.corners2();
    std::vector<std::vector<std::pair<std::int64_t, std::pair<int, int>>>> keyed(4);
    for (int i = 0; i < c.size(); ++i) {
        auto nbs = sq_neighbors(c.sq_cells[i]);
        for (int s = 0; s < 4; ++s) {
            auto it = c.sq_index.find(nbs[s]);
            if (it != c.sq_index.end()) {
                c.adj[i][s] = it->second;
                continue;
            }
            for (int side = 0; side < 4; ++side) {
                SqCell img = sq_flip(z, sq_rotate_n(z, nbs[s], 1 - side));
                auto cls = barycenter_position(img, region);
                // the partner claims every unselected on-side barycenter
                bool hit = cls.pos == Position::Interior || cls.pos == Position::OnEdge;
                if (hit) {
                    ScaledPoint px = sq_barycenter2(c.sq_cells[i]);
                    ScaledPoint py = sq_barycenter2(nbs[s]);
                    keyed[side].push_back({side_key(corners[side], corners[(side + 1) % 4],
                                                    px.x + py.x, px.y + py.y),
                                           {i, s}});
                    break;
                }
            }
        }
    }
    for (int side = 0; side < 4; ++side) {
        std::stable_sort(keyed[side].begin(), keyed[side].end());
        for (auto& [key, port] : keyed[side]) c.ports[side].push_back(port);
    }
    return c;
}

RotationGraph ClusterGraph::graph() const {
    std::vector<std::vector<int>> rot(size());
    for (int i = 0; i < size(); ++i)
        for (int nb : adj[i])
            if (nb >= 0) rot[i].push_back(nb);
    return RotationGraph(std::move(rot));
}

std::map<int, int> degree_profile(const ClusterGraph& c) {
    if (c.l != 0) throw std::invalid_argument("degree_profile: l == 0 only");
    std::map<int, int> prof;
    for (const auto& row : c.adj) {
        int d = 0;
        for (int nb : row) d += nb >= 0;
        ++prof[d];
    }
    return prof;
}

}  // namespace gcx
