#pragma once

#include <string>

#include "gcx/rotation_graph.hpp"

namespace gcx {

// Seed graphs with the rotation induced by the standard embedding
// (counterclockwise as seen from outside, toroidal grids row/column wired).
RotationGraph tetrahedron();
RotationGraph cube();
RotationGraph dodecahedron();
RotationGraph octahedron();
RotationGraph triangular_prism();
RotationGraph complete5();  // K5 with the natural cyclic rotation

// Hexagonal torus T(k): 2k^2 vertices, two sublattices A(a,b) and B(a,b);
// A(a,b) ~ B(a,b), B(a-1,b), B(a,b-1) (indices mod k).  k=1 is a valid map
// with a triple edge.
RotationGraph hex_torus(int k);
int hex_vertex(int k, int type, int a, int b);  // index helper

// Square torus: n^2 vertices with wraparound; n=2 has doubled edges.
RotationGraph square_torus(int n);
int square_vertex(int n, int a, int b);

// Lookup by name: "tetrahedron", "cube", "dodecahedron", "octahedron",
// "triangular_prism", "k5", "hex_torus:<k>", "square_torus:<n>".
// Throws std::invalid_argument for unknown names or bad parameters.
RotationGraph build_named(const std::string& name);

}  // namespace gcx
