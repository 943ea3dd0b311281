#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "gcx/cluster.hpp"
#include "gcx/lattice.hpp"
#include "gcx/rotation_graph.hpp"

namespace gcx {

// A cell of either lattice, tagged for provenance.
struct LatticeCell {
    int valence = 3;
    TriCell tri;  // valence 3
    SqCell sq;    // valence 4
};

struct GCGraph {
    RotationGraph graph;
    int valence = 3;
    std::int64_t k = 0, l = 0;
    // provenance[v] = (seed vertex, cell within that vertex's cluster)
    std::vector<std::pair<int, LatticeCell>> provenance;
    // cross-edge count per seed edge id (equal for all edges: mu(k,l))
    std::vector<int> intercluster_edges;
};

// Canonical parameter representative k >= l >= 0, k != 0 under the listed
// isomorphisms: (k,l) -> (-l,k+l) orbit and (k,l) -> (l,k) for valence 3;
// (k,l) -> (-l,k) orbit and swap for valence 4.
struct NormalizedParams {
    std::int64_t k = 0, l = 0;
    std::string symmetry;  // e.g. "rot^2", "rot^1*swap"
};
NormalizedParams normalize_params(std::int64_t k, std::int64_t l, int valence = 3);

// Goldberg-Coxeter construction.  X must be connected, simple and regular of
// degree 3 or 4; any (k,l) != (0,0) is accepted (the isomorphism orbit is
// exercised by tests with unnormalized parameters).  For 4-valent X whose
// parameters put barycenters on the region boundary, edges are directed by an
// alternating A-trail; if no alternating direction assignment exists the
// construction is rejected rather than silently mis-glued.
GCGraph gc_build(const RotationGraph& x, std::int64_t k, std::int64_t l);

// mu(k,l): cross edges between two adjacent clusters; checked equal over all
// seed edges by gc_build.
int intercluster_edge_count(const GCGraph& g);

// Prop-style composition check: GC_z(GC_z'(X)) isomorphic to GC_{zz'}(X),
// with the product taken in Z[w] or Z[i] according to the valence of X.
bool compose_check(const RotationGraph& x, std::int64_t k1, std::int64_t l1,
                   std::int64_t k2, std::int64_t l2);

// Provenance export: one record per GC vertex.
void write_provenance_json(const GCGraph& g, std::ostream& out);

}  // namespace gcx
