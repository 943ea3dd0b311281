#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gcx/lattice.hpp"
#include "gcx/rotation_graph.hpp"

namespace gcx {

// The (k,l)-cluster: the set of cells one seed vertex contributes to the
// construction, with internal adjacency and boundary bookkeeping.
//
// Valence 3 selection: barycenter interior to Triangle(z), plus Up cells with
// barycenter on a side.  Valence 4: interior to Square(z), plus cells with
// barycenter on the two outward sides (an opposite side pair).
struct ClusterGraph {
    int valence = 3;
    std::int64_t k = 0, l = 0;
    int outward = 0;  // valence 4 only: side parity of the outward pair (0 or 1)

    std::vector<TriCell> tri_cells;  // used when valence == 3
    std::vector<SqCell> sq_cells;    // used when valence == 4
    std::map<TriCell, int> tri_index;
    std::map<SqCell, int> sq_index;

    // adj[c][s] = index of the neighbor across cell edge s, or -1 when the
    // neighbor cell is not selected; s follows the CCW cell-edge order.
    std::vector<std::vector<int>> adj;

    // Boundary ports per region side: (cell index, cell edge slot) of cell
    // edges whose lattice neighbor is unselected and crosses that side,
    // ordered along the side from the lower corner.
    std::vector<std::vector<std::pair<int, int>>> ports;

    int size() const {
        return static_cast<int>(valence == 3 ? tri_cells.size() : sq_cells.size());
    }
    RotationGraph graph() const;  // internal adjacency only (ports dangle)
};

// k >= l >= 0 is the documented range, but any (k,l) != (0,0) builds (the
// gluing uses unnormalized parameters when verifying the isomorphism orbit).
ClusterGraph cluster3(std::int64_t k, std::int64_t l);
ClusterGraph cluster4(std::int64_t k, std::int64_t l, int outward_parity = 0);

// Multiset of internal degrees of the (k,0)-cluster, as value -> count.
// Valence 3, k >= 2: {1:3, 2:3k-6, 3:k^2-3k+3}; valence 4: {2:4, 3:4k-8,
// 4:k^2-4k+4}.  k=1 is the single isolated cell.
std::map<int, int> degree_profile(const ClusterGraph& c);

}  // namespace gcx
