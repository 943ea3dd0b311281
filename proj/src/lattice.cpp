#include "gcx/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gcx {

ScaledPoint tri_barycenter3(TriCell c) {
    if (c.orient == Orient::Up) return {3 * c.a + 1, 3 * c.b + 1};
    return {3 * c.a - 1, 3 * c.b + 2};
}

ScaledPoint sq_barycenter2(SqCell c) { return {2 * c.a + 1, 2 * c.b + 1}; }

std::array<ScaledPoint, 3> BigTriangle::corners3() const {
    // 0, z, wz with wz = -l + (k+l)w
    return {ScaledPoint{0, 0}, ScaledPoint{3 * z.a, 3 * z.b},
            ScaledPoint{-3 * z.b, 3 * (z.a + z.b)}};
}

std::array<ScaledPoint, 4> BigSquare::corners2() const {
    // 0, z, (1+i)z, iz with iz = -l + ki
    return {ScaledPoint{0, 0}, ScaledPoint{2 * z.a, 2 * z.b},
            ScaledPoint{2 * (z.a - z.b), 2 * (z.a + z.b)},
            ScaledPoint{-2 * z.b, 2 * z.a}};
}

namespace {
std::int64_t cross(ScaledPoint o, ScaledPoint p, ScaledPoint q) {
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}
}  // namespace

Classification classify_point(ScaledPoint p, const ScaledPoint* corners, int n) {
    // Corners must be CCW; true for Triangle/Square with any z != 0 since
    // the region orientation sign equals norm(z) > 0.
    int on_side = -1;
    for (int i = 0; i < n; ++i) {
        ScaledPoint a = corners[i];
        ScaledPoint b = corners[(i + 1) % n];
        std::int64_t c = cross(a, b, p);
        if (c < 0) return {Position::Outside, -1};
        if (c == 0) {
            bool within = std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                          std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
            if (!within) return {Position::Outside, -1};
            on_side = i;
        }
    }
    if (on_side >= 0) return {Position::OnEdge, on_side};
    return {Position::Interior, -1};
}

Classification barycenter_position(TriCell c, const BigTriangle& t) {
    if (t.z.norm() == 0) throw std::invalid_argument("degenerate region");
    auto cs = t.corners3();
    return classify_point(tri_barycenter3(c), cs.data(), 3);
}

Classification barycenter_position(SqCell c, const BigSquare& s) {
    if (s.z.norm() == 0) throw std::invalid_argument("degenerate region");
    auto cs = s.corners2();
    return classify_point(sq_barycenter2(c), cs.data(), 4);
}

bool edge_hits_barycenter(std::int64_t k, std::int64_t l, int valence) {
    if (k < l || l < 0 || k == 0) throw std::invalid_argument("need k >= l >= 0, k != 0");
    std::int64_t m = l == 0 ? k : std::gcd(k, l);
    std::int64_t k1 = k / m, l1 = l / m;
    if (valence == 3) return k1 % 3 != 0 && (k1 - l1) % 3 == 0;
    if (valence == 4) return k1 % 2 != 0 && (k1 - l1) % 2 == 0;
    throw std::invalid_argument("valence must be 3 or 4");
}

std::array<TriCell, 3> tri_neighbors(TriCell c) {
    if (c.orient == Orient::Up)
        return {TriCell{Orient::Down, c.a + 1, c.b - 1},
                TriCell{Orient::Down, c.a + 1, c.b},
                TriCell{Orient::Down, c.a, c.b}};
    return {TriCell{Orient::Up, c.a, c.b},
            TriCell{Orient::Up, c.a - 1, c.b + 1},
            TriCell{Orient::Up, c.a - 1, c.b}};
}

std::array<SqCell, 4> sq_neighbors(SqCell c) {
    return {SqCell{c.a, c.b - 1}, SqCell{c.a + 1, c.b}, SqCell{c.a, c.b + 1},
            SqCell{c.a - 1, c.b}};
}

// rho(x) = w^2 x + z in vertex coordinates; on cells:
//   Up(a,b)   -> Up(k-a-b-1, l+a)
//   Down(a,b) -> Down(k-a-b, l+a-1)
TriCell tri_rotate(EisensteinInt z, TriCell c) {
    if (c.orient == Orient::Up)
        return {Orient::Up, z.a - c.a - c.b - 1, z.b + c.a};
    return {Orient::Down, z.a - c.a - c.b, z.b + c.a - 1};
}

TriCell tri_rotate_n(EisensteinInt z, TriCell c, int n) {
    n %= 3;
    if (n < 0) n += 3;
    for (int i = 0; i < n; ++i) c = tri_rotate(z, c);
    return c;
}

// R(x) = z + wz - x; swaps orientations:
//   Up(a,b)   -> Down(k-l-a, k+2l-b-1)
//   Down(a,b) -> Up(k-l-a, k+2l-b-1)
TriCell tri_flip(EisensteinInt z, TriCell c) {
    std::int64_t a2 = z.a - z.b - c.a;
    std::int64_t b2 = z.a + 2 * z.b - c.b - 1;
    return {c.orient == Orient::Up ? Orient::Down : Orient::Up, a2, b2};
}

// rho(x) = i x + z; on cells: (a,b) -> (k-b-1, l+a)
SqCell sq_rotate(GaussianInt z, SqCell c) { return {z.a - c.b - 1, z.b + c.a}; }

SqCell sq_rotate_n(GaussianInt z, SqCell c, int n) {
    n %= 4;
    if (n < 0) n += 4;
    for (int i = 0; i < n; ++i) c = sq_rotate(z, c);
    return c;
}

// R(x) = (2+i)z - x; on cells: (a,b) -> (2k-l-a-1, k+2l-b-1)
SqCell sq_flip(GaussianInt z, SqCell c) {
    return {2 * z.a - z.b - c.a - 1, z.a + 2 * z.b - c.b - 1};
}

}  // namespace gcx
