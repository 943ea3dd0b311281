#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

// Exact arithmetic for the triangular lattice Z[w] (w = e^{i pi/3}, w^2 = w-1)
// and the square lattice Z[i]. All geometric predicates below run on scaled
// integer coordinates, never on floating point.

namespace gcx {

struct EisensteinInt {
    std::int64_t a = 0;  // a + b*w
    std::int64_t b = 0;

    friend EisensteinInt operator+(EisensteinInt x, EisensteinInt y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend EisensteinInt operator-(EisensteinInt x, EisensteinInt y) {
        return {x.a - y.a, x.b - y.b};
    }
    // (a+bw)(c+dw) = ac-bd + (ad+bc+bd) w, using w^2 = w-1
    friend EisensteinInt operator*(EisensteinInt x, EisensteinInt y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend bool operator==(EisensteinInt, EisensteinInt) = default;

    std::int64_t norm() const { return a * a + a * b + b * b; }
};

struct GaussianInt {
    std::int64_t a = 0;  // a + b*i
    std::int64_t b = 0;

    friend GaussianInt operator+(GaussianInt x, GaussianInt y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend GaussianInt operator-(GaussianInt x, GaussianInt y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend GaussianInt operator*(GaussianInt x, GaussianInt y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(GaussianInt, GaussianInt) = default;

    std::int64_t norm() const { return a * a + b * b; }
};

enum class Orient : std::uint8_t { Up, Down };

// Up triangle (a,b): vertices a+bw, (a+1)+bw, a+(b+1)w.
// Down triangle (a,b): vertices a+bw, a+(b+1)w, (a-1)+(b+1)w.
struct TriCell {
    Orient orient = Orient::Up;
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(TriCell, TriCell) = default;
    friend auto operator<=>(TriCell, TriCell) = default;
};

// Unit square with corner a+bi.
struct SqCell {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(SqCell, SqCell) = default;
    friend auto operator<=>(SqCell, SqCell) = default;
};

// Integer lattice point scaled by 3 (triangles) or 2 (squares), so that
// barycenters are exact.
struct ScaledPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
};

// Barycenter of a cell in scaled coordinates (x3 for triangles).
ScaledPoint tri_barycenter3(TriCell c);
// Barycenter of a square in scaled coordinates (x2).
ScaledPoint sq_barycenter2(SqCell c);

enum class Position : std::uint8_t { Interior, OnEdge, Outside };

struct Classification {
    Position pos = Position::Outside;
    int side = -1;  // valid when pos == OnEdge; sides CCW from corner 0
};

// Big region of the construction. Triangle(z): corners 0, z, wz.
// Square(z): corners 0, z, (1+i)z, iz. Sides are numbered CCW starting with
// the side leaving corner 0 (side 1 is the gluing side z -> wz resp.
// z -> (1+i)z).
struct BigTriangle {
    EisensteinInt z;
    std::array<ScaledPoint, 3> corners3() const;  // scaled x3
};
struct BigSquare {
    GaussianInt z;
    std::array<ScaledPoint, 4> corners2() const;  // scaled x2
};

Classification classify_point(ScaledPoint p, const ScaledPoint* corners, int n);
Classification barycenter_position(TriCell c, const BigTriangle& t);
Classification barycenter_position(SqCell c, const BigSquare& s);

// Lemma criterion: does an edge of the big region pass through cell
// barycenters?  valence 3: k1 != 0 (mod 3) and k1 == l1 (mod 3);
// valence 4: k1 odd and k1 == l1 (mod 2); with m=gcd(k,l), k1=k/m, l1=l/m
// (l=0 handled as m=k, k1=1, l1=0).
bool edge_hits_barycenter(std::int64_t k, std::int64_t l, int valence);

// Neighbor cells across the three (resp. four) cell edges, in CCW order.
// Triangles: Up -> {Down(a+1,b-1), Down(a+1,b), Down(a,b)},
//            Down -> {Up(a,b), Up(a-1,b+1), Up(a-1,b)}.
std::array<TriCell, 3> tri_neighbors(TriCell c);
// Squares, CCW: bottom, right, top, left.
std::array<SqCell, 4> sq_neighbors(SqCell c);

// Lattice symmetries used by the gluing step.  rho maps the big region onto
// itself rotating side i to side i+1; R is the pi-rotation about the midpoint
// of side 1 (carries the region onto its gluing partner).  Both are
// orientation preserving and map cells to cells.
TriCell tri_rotate(EisensteinInt z, TriCell c);      // 2pi/3 about center
TriCell tri_rotate_n(EisensteinInt z, TriCell c, int n);
TriCell tri_flip(EisensteinInt z, TriCell c);        // pi about side-1 midpoint
SqCell sq_rotate(GaussianInt z, SqCell c);           // pi/2 about center
SqCell sq_rotate_n(GaussianInt z, SqCell c, int n);
SqCell sq_flip(GaussianInt z, SqCell c);             // pi about side-1 midpoint

}  // namespace gcx
