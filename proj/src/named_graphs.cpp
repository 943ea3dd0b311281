#include "gcx/named_graphs.hpp"

#include <stdexcept>

namespace gcx {

// Rotation tables are derived from coordinates of the solids: at each vertex
// the neighbors are sorted by angle around the outward normal.

RotationGraph tetrahedron() {
    return RotationGraph({{3, 1, 2}, {0, 3, 2}, {3, 0, 1}, {0, 2, 1}});
}

RotationGraph cube() {
    return RotationGraph({{1, 2, 4},
                          {5, 3, 0},
                          {3, 6, 0},
                          {1, 7, 2},
                          {5, 0, 6},
                          {7, 1, 4},
                          {7, 4, 2},
                          {3, 5, 6}});
}

RotationGraph dodecahedron() {
    return RotationGraph({{9, 10, 8},  {11, 13, 9}, {12, 14, 10}, {17, 12, 13},
                          {16, 15, 8}, {19, 11, 15}, {18, 16, 14}, {17, 19, 18},
                          {4, 0, 14},  {1, 0, 15},  {13, 2, 0},   {17, 1, 5},
                          {3, 18, 2},  {1, 3, 10},  {2, 6, 8},    {5, 9, 4},
                          {19, 4, 6},  {11, 7, 3},  {12, 7, 6},   {7, 5, 16}});
}

RotationGraph octahedron() {
    return RotationGraph({{2, 4, 3, 5},
                          {4, 2, 5, 3},
                          {4, 0, 5, 1},
                          {0, 4, 1, 5},
                          {0, 2, 1, 3},
                          {2, 0, 3, 1}});
}

RotationGraph triangular_prism() {
    return RotationGraph(
        {{3, 2, 1}, {4, 0, 2}, {5, 1, 0}, {4, 5, 0}, {5, 3, 1}, {3, 4, 2}});
}

RotationGraph complete5() {
    std::vector<std::vector<int>> rot(5);
    for (int v = 0; v < 5; ++v)
        for (int u = 0; u < 5; ++u)
            if (u != v) rot[v].push_back(u);
    return RotationGraph(std::move(rot));
}

int hex_vertex(int k, int type, int a, int b) {
    a = ((a % k) + k) % k;
    b = ((b % k) + k) % k;
    return type * k * k + a * k + b;
}

RotationGraph hex_torus(int k) {
    if (k < 1) throw std::invalid_argument("hex_torus: k >= 1");
    std::vector<std::vector<int>> rot(2 * k * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            // CCW at A(a,b): B(a,b), B(a-1,b), B(a,b-1)
            rot[hex_vertex(k, 0, a, b)] = {hex_vertex(k, 1, a, b),
                                           hex_vertex(k, 1, a - 1, b),
                                           hex_vertex(k, 1, a, b - 1)};
            // CCW at B(a,b): A(a,b+1), A(a,b), A(a+1,b)
            rot[hex_vertex(k, 1, a, b)] = {hex_vertex(k, 0, a, b + 1),
                                           hex_vertex(k, 0, a, b),
                                           hex_vertex(k, 0, a + 1, b)};
        }
    return RotationGraph(std::move(rot));
}

int square_vertex(int n, int a, int b) {
    a = ((a % n) + n) % n;
    b = ((b % n) + n) % n;
    return a * n + b;
}

RotationGraph square_torus(int n) {
    if (n < 2) throw std::invalid_argument("square_torus: n >= 2");
    std::vector<std::vector<int>> rot(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            rot[square_vertex(n, a, b)] = {
                square_vertex(n, a + 1, b), square_vertex(n, a, b + 1),
                square_vertex(n, a - 1, b), square_vertex(n, a, b - 1)};
    return RotationGraph(std::move(rot));
}

RotationGraph build_named(const std::string& name) {
    if (name == "tetrahedron") return tetrahedron();
    if (name == "cube") return cube();
    if (name == "dodecahedron") return dodecahedron();
    if (name == "octahedron") return octahedron();
    if (name == "triangular_prism") return triangular_prism();
    if (name == "k5") return complete5();
    auto parse_param = [&](const std::string& prefix) -> int {
        return std::stoi(name.substr(prefix.size()));
    };
    if (name.rfind("hex_torus:", 0) == 0) return hex_torus(parse_param("hex_torus:"));
    if (name.rfind("square_torus:", 0) == 0)
        return square_torus(parse_param("square_torus:"));
    throw std::invalid_argument("unknown graph name: " + name);
}

}  // namespace gcx
