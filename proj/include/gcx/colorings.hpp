#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "gcx/gc.hpp"
#include "gcx/rotation_graph.hpp"

// Face-size, edge-numbering and coloring conditions on 3-valent plane graphs,
// and the bipartition rule for constructions of bipartite seeds.

namespace gcx {

// (F): every face size divisible by 3.  Requires genus 0.
bool check_F(const RotationGraph& x);

// Coherent edge numbering: values in {1,2,3}, indexed by edge id.
struct EdgeNumbering {
    std::vector<int> value;
};

// nu(e) = sum of turn signs along any edge path from a base edge, mod 3.
// Path independent iff (F) holds; returns nullopt (with a witness conflict)
// otherwise.  Turn sign: arriving at a vertex by dart a and leaving by the
// rotation successor of a is a right turn (+1), by the predecessor a left
// turn (-1).
std::optional<EdgeNumbering> build_CN(const RotationGraph& x);

// At every vertex the three incident labels are {1,2,3} in consistent cyclic
// rotation order.
bool check_CN(const RotationGraph& x, const EdgeNumbering& nu);

// Vertex numbering of GC_{2,0}(X): cluster centers get 0, the leaf opposite
// the i-th seed edge gets nu(e_i); adjacent numbers differ.
struct VertexNumbering {
    std::vector<int> value;  // on V(GC_{2,0}(X)), values 0..3
};
VertexNumbering build_N(const RotationGraph& x, const EdgeNumbering& nu);
bool check_N(const GCGraph& g20, const VertexNumbering& vn);

// f(v) = alpha[number(v)] with sum(alpha) = 0 is a Laplacian eigenfunction of
// GC_{2,0}(X) with eigenvalue 4; returns the residual-checked vector.
std::vector<double> eigenfunction_from_N(const GCGraph& g20, const VertexNumbering& vn,
                                         const std::array<double, 4>& alpha);

// Black/white coloring: (C-i) black vertices have all-white neighborhoods,
// (C-ii) every white vertex has exactly one black neighbor, (C-iii) black
// pairs at distance 3 are joined by a double-left or double-right path.
struct BWColoring {
    std::vector<bool> black;
};
struct CColoringFailure {
    int u = -1, v = -1;  // adjacent black pair from the last greedy attempt
};

// Greedy closure over double turns from every seed, then a bounded exact
// search for an efficient dominating set; failure is a value.
std::variant<BWColoring, CColoringFailure> build_C(const RotationGraph& x);

struct CCheck {
    bool c1 = false, c2 = false, c3 = false;
};
CCheck check_C(const RotationGraph& x, const BWColoring& c);

// Proper 2-coloring of GC_{k,l}(X) from a bipartition of X: cells of white
// seeds are colored by their lattice orientation (up = black), black seeds
// exchange the rule.
std::vector<int> gc_bipartition(const RotationGraph& x, const GCGraph& g);

// JSON map keyed by vertex id; works for numberings and colorings alike.
void write_labels_json(const std::vector<int>& labels, std::ostream& out);

}  // namespace gcx
