#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gcx/gc.hpp"
#include "gcx/rotation_graph.hpp"

// Closed-form spectra of the hexagonal and square tori and everything the
// (k,0)-cluster analysis needs: dihedral projections of torus eigenfunctions,
// the vanishing lists, the index sets enumerating the full cluster spectrum,
// the fold criterion, and copy-extension of invariant eigenfunctions to a
// whole construction.

namespace gcx {

using cdouble = std::complex<double>;

// lambda^{+-}_{s,t} on the hexagonal torus with 2n^2 vertices:
// 3 +- sqrt(3 + 2cos(2pi s/n) + 2cos(2pi t/n) + 2cos(2pi(s-t)/n)).
double hex_torus_eigenvalue(int n, int s, int t, int sign);
// lambda_{s,t} on the n^2-vertex square torus: 4 - 2cos(2pi s/n) - 2cos(2pi t/n).
double square_torus_eigenvalue(int n, int s, int t);

// (s,t) with 1 + e^{2pi i s/n} + e^{2pi i t/n} = 0; both signs give 3 and the
// eigenspace is the two-parameter sublattice family.
bool hex_degenerate_index(int n, int s, int t);

// Eigenfunctions of the hexagonal torus, indexed like hex_torus()/hex_vertex.
// Nondegenerate indices return one function; degenerate ones return the two
// sublattice basis functions.
std::vector<std::vector<cdouble>> hex_eigenfunctions(int n, int s, int t, int sign);

enum class ProjMode { Invariant, Alternating };

// The order-12 symmetry group of the torus generated by the 2pi/3 rotation
// and the two diagonal reflections; sign = parity of long-diagonal
// reflections.
struct TorusGroupElement {
    std::vector<int> perm;  // vertex permutation of hex_torus(n)
    int sign = 1;
};
std::vector<TorusGroupElement> hex_symmetry_group(int n);

// sum_sigma f(sigma x) resp. sum_sigma sgn(sigma) f(sigma x).
std::vector<cdouble> d6_project(int n, const std::vector<cdouble>& f, ProjMode mode);

// Rule-based evaluation of the vanishing lists (checked exhaustively against
// numeric projection norms in the tests).  Degenerate indices vanish in both
// modes.
bool vanishing_test(int n, int s, int t, int sign, ProjMode mode);

// Index triples (sign, s, t) on the 18k^2-vertex torus whose eigenvalues
// exhaust the (k,0)-cluster spectrum; the two sets together have exactly k^2
// entries.
struct IndexTriple {
    int sign, s, t;
};
std::vector<IndexTriple> cluster3_u_indices(int k);
std::vector<IndexTriple> cluster3_w_indices(int k);

// Full eigenvalue multiset of the 3-valent (k,0)-cluster from the closed
// forms; ascending.
std::vector<double> cluster3_closed_spectrum(int k);
// Same for the 4-valent (k,0)-cluster: lambda_{s,t}(2k) over the u-indices
// {t <= s <= k-1} and w-indices {t+1 <= s <= k-1}.
std::vector<double> cluster4_closed_spectrum(int k);

// The three closed families of D3-invariant cluster eigenvalues, and the
// 4-valent analogue 4 - 4cos(2pi s/k), s != k/2.
std::vector<double> d3_invariant_eigenvalues(int k);
std::vector<double> d4_invariant_eigenvalues(int k);

// The diagonal family above is not complete: every symmetrized grid
// eigenfunction with both cosine indices even is invariant under the full
// square symmetry, giving 4 - 2cos(2pi a/k) - 2cos(2pi b/k) for
// 0 <= a,b <= (k-1)/2 (eigenvalue 2 of the (4,0)-cluster is the smallest
// witness the diagonal misses).  These are what the density check uses.
std::vector<double> d4_invariant_eigenvalues_full(int k);

// Mapping of cluster3(k,0) cell indices onto hex_torus(k) vertices
// (up(a,b) -> A(a,b), down(a,b) -> B(a-1,b)); validated to preserve
// adjacency.
std::vector<int> cluster3_torus_vertices(int k);

// Restriction of the projected torus eigenfunction to the cluster, as a real
// vector (the larger of the real/imaginary parts).  Empty when the
// projection vanishes.
struct ClusterEigenfunction {
    std::vector<double> values;  // per cluster3(k,0) cell, cell-sorted order
    double eigenvalue = 0.0;
};
ClusterEigenfunction cluster3_projected_eigenfunction(int k, int s, int t, int sign,
                                                      ProjMode mode);

// Fold criterion of the (3k)->(k) folding: a nonvanishing projection lies in
// the folded image iff s + t = 0 (mod 3); the numeric form checks the two
// fold identities f(A(a,b)) = f(B(k-b-1,k-a-1)) = f(B(2k-b-1,2k-a-1)) on
// T(3k).
bool fold_condition(int s, int t);
double fold_identity_deviation(int k, const std::vector<cdouble>& f);

// Restriction of a (3k,0)-cluster function to the (k,0)-corner cells.
std::vector<double> restrict_to_corner(int k, const std::vector<double>& f3k);

// Eigenvalue-4 / eigenvalue-2 invariant eigenfunctions on the (2k,0)-cluster
// (fold of u^{+}_{3k,3j} resp. u^{-}_{3k,3j} from T(6k)).
ClusterEigenfunction lemma_eigenfunction_3valent(int k, int j, int sign);

// D4-invariant grid eigenfunctions of the 4-valent (K,0)-cluster: the
// symmetrized cosine products with both indices even.
ClusterEigenfunction cluster4_invariant_eigenfunction(int K, int s, int t);

// Copy a cluster function to every cluster of GC_{k,0}(X) (vertex ids are
// seed-major, matching gc_build) and report the Laplacian residual and the
// worst cross-edge mismatch (the Neumann matching).
struct ExtensionReport {
    std::vector<double> values;
    double residual = 0.0;        // max |(L f)_v - lambda f_v| / max|f|
    double boundary_mismatch = 0.0;  // max |f(x)-f(y)| over cross edges
};
ExtensionReport extend_cluster_eigenfunction(const GCGraph& g,
                                             const std::vector<double>& cluster_fun,
                                             double eigenvalue);

// Covering radius of the invariant-eigenvalue families over [0,6] resp [0,8].
double invariant_covering_radius(int valence, int k, double grid_step);

// Laplacian action without forming the matrix.
std::vector<double> apply_laplacian(const RotationGraph& g,
                                    const std::vector<double>& f);
std::vector<cdouble> apply_laplacian(const RotationGraph& g,
                                     const std::vector<cdouble>& f);

}  // namespace gcx
