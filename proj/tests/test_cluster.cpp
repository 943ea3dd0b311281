#include <doctest.h>

#include <set>

#include "gcx/cluster.hpp"

using namespace gcx;

TEST_CASE("cluster sizes match the vertex-count formula") {
    for (int k = 1; k <= 6; ++k)
        for (int l = 0; l <= k; ++l) {
            CHECK(cluster3(k, l).size() == k * k + k * l + l * l);
            CHECK(cluster4(k, l, 0).size() == k * k + l * l);
            CHECK(cluster4(k, l, 1).size() == k * k + l * l);
        }
    CHECK(cluster3(5, 0).size() == 25);
    CHECK(cluster3(3, 3).size() == 27);
    CHECK(cluster3(4, 1).size() == 21);
    CHECK(cluster4(5, 0, 0).size() == 25);
    CHECK(cluster4(3, 3, 0).size() == 18);
    CHECK(cluster4(5, 1, 0).size() == 26);
    CHECK_THROWS(cluster3(0, 0));
}

TEST_CASE("cluster3 boundary cells") {
    // (4,1): one boundary upward cell per side
    ClusterGraph c = cluster3(4, 1);
    BigTriangle region{{4, 1}};
    int on_edge = 0;
    for (const auto& cell : c.tri_cells)
        if (barycenter_position(cell, region).pos == Position::OnEdge) {
            CHECK(cell.orient == Orient::Up);
            ++on_edge;
        }
    CHECK(on_edge == 3);

    // (k,k): 3k boundary cells
    ClusterGraph d = cluster3(3, 3);
    BigTriangle r33{{3, 3}};
    int cnt = 0;
    for (const auto& cell : d.tri_cells)
        if (barycenter_position(cell, r33).pos == Position::OnEdge) ++cnt;
    CHECK(cnt == 9);
}

TEST_CASE("cluster3 selection is rotation invariant") {
    for (auto [k, l] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {5, 0}, {3, 3}, {4, 1}, {3, 2}}) {
        ClusterGraph c = cluster3(k, l);
        EisensteinInt z{k, l};
        std::set<TriCell> cells(c.tri_cells.begin(), c.tri_cells.end());
        for (const auto& cell : cells) CHECK(cells.count(tri_rotate(z, cell)) == 1);
    }
}

TEST_CASE("cluster4 boundary selection follows the outward sides") {
    ClusterGraph c = cluster4(5, 1, 0);
    BigSquare region{{5, 1}};
    int per_side[4] = {0, 0, 0, 0};
    for (const auto& cell : c.sq_cells) {
        auto p = barycenter_position(cell, region);
        if (p.pos == Position::OnEdge) ++per_side[p.side];
    }
    CHECK(per_side[0] == 1);
    CHECK(per_side[2] == 1);
    CHECK(per_side[1] == 0);
    CHECK(per_side[3] == 0);

    ClusterGraph c1 = cluster4(5, 1, 1);
    int total = 0;
    for (const auto& cell : c1.sq_cells) {
        auto p = barycenter_position(cell, region);
        if (p.pos == Position::OnEdge) {
            CHECK(p.side % 2 == 1);
            ++total;
        }
    }
    CHECK(total == 2);
}

TEST_CASE("degree profiles") {
    CHECK(degree_profile(cluster3(5, 0)) == std::map<int, int>{{1, 3}, {2, 9}, {3, 13}});
    CHECK(degree_profile(cluster3(2, 0)) == std::map<int, int>{{1, 3}, {3, 1}});
    CHECK(degree_profile(cluster3(1, 0)) == std::map<int, int>{{0, 1}});
    CHECK(degree_profile(cluster4(3, 0, 0)) ==
          std::map<int, int>{{2, 4}, {3, 4}, {4, 1}});
    CHECK(degree_profile(cluster4(1, 0, 0)) == std::map<int, int>{{0, 1}});
    for (int k = 2; k <= 7; ++k) {
        auto p3 = degree_profile(cluster3(k, 0));
        CHECK(p3[1] == 3);
        CHECK(p3[2] == 3 * k - 6);
        CHECK(p3[3] == k * k - 3 * k + 3);
        auto p4 = degree_profile(cluster4(k, 0, 0));
        CHECK(p4[2] == 4);
        CHECK(p4[3] == 4 * k - 8);
        CHECK(p4[4] == k * k - 4 * k + 4);
    }
    CHECK_THROWS(degree_profile(cluster3(3, 1)));
}

TEST_CASE("cluster connectivity and adjacency symmetry") {
    // k > l: internally connected.  k = l: the three boundary cells nearest
    // the corners have no selected neighbor at all (every edge of theirs is
    // completed by the gluing), so the internal graph is disconnected there.
    for (auto [k, l] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {1, 0}, {4, 0}, {4, 1}, {3, 2}, {5, 2}}) {
        ClusterGraph c = cluster3(k, l);
        RotationGraph g = c.graph();
        CHECK(g.is_connected());
    }
    {
        ClusterGraph c = cluster3(1, 1);
        for (const auto& row : c.adj)
            for (int nb : row) CHECK(nb == -1);
    }
    for (auto [k, l] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {3, 3}, {4, 1}, {5, 2}, {5, 0}}) {
        ClusterGraph c = cluster3(k, l);
        for (int i = 0; i < c.size(); ++i)
            for (int s = 0; s < 3; ++s)
                if (c.adj[i][s] >= 0) {
                    bool back = false;
                    for (int t = 0; t < 3; ++t)
                        back = back || c.adj[c.adj[i][s]][t] == i;
                    CHECK(back);
                }
    }
}

TEST_CASE("port lists") {
    // all three sides carry the same number of ports; (k,0) -> k, (k,k) -> 3k
    for (auto [k, l, expect] : std::vector<std::array<std::int64_t, 3>>{
             {5, 0, 5}, {3, 3, 9}, {1, 0, 1}, {1, 1, 3}}) {
        ClusterGraph c = cluster3(k, l);
        for (int s = 0; s < 3; ++s)
            CHECK(c.ports[s].size() == static_cast<size_t>(expect));
    }
    // square clusters: opposite sides carry equal port counts
    for (auto [k, l] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {5, 0}, {3, 1}, {3, 3}, {4, 2}}) {
        for (int par = 0; par < 2; ++par) {
            ClusterGraph c = cluster4(k, l, par);
            CHECK(c.ports[0].size() == c.ports[2].size());
            CHECK(c.ports[1].size() == c.ports[3].size());
        }
    }
    // every dangling cell edge is attributed to exactly one side, with equal
    // counts per side
    for (auto [k, l] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {4, 1}, {3, 2}, {5, 0}, {2, 1}, {9, 3}}) {
        ClusterGraph c = cluster3(k, l);
        int dangling = 0;
        for (const auto& row : c.adj)
            for (int nb : row) dangling += nb < 0;
        CHECK(c.ports[0].size() == c.ports[1].size());
        CHECK(c.ports[1].size() == c.ports[2].size());
        CHECK(static_cast<int>(c.ports[0].size() * 3) == dangling);
    }
}
