#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcx/sym_eig.hpp"

// Combinatorial-map graphs: every vertex carries a cyclic order of its
// incident darts (edge ends).  Multi-edges are representable (darts of a
// repeated neighbor are paired by occurrence order); loops are not.

namespace gcx {

struct Dart {
    int v = -1;  // vertex
    int i = -1;  // slot in the rotation at v
    friend bool operator==(Dart, Dart) = default;
    friend auto operator<=>(Dart, Dart) = default;
};

class RotationGraph {
  public:
    RotationGraph() = default;
    // rot[v] lists the neighbors of v in cyclic (CCW) order.
    explicit RotationGraph(std::vector<std::vector<int>> rot,
                           std::vector<std::string> labels = {});

    int num_vertices() const { return static_cast<int>(rot_.size()); }
    int num_edges() const { return num_edges_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    int neighbor(Dart d) const { return rot_[d.v][d.i]; }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Reverse dart of d (other end of the same edge).
    Dart theta(Dart d) const { return theta_[dart_index(d)]; }
    // Undirected edge id of the dart, in [0, num_edges).
    int edge_id(Dart d) const { return edge_id_[dart_index(d)]; }

    bool is_connected() const;
    bool is_simple() const;  // no repeated neighbors anywhere
    // true when all degrees equal r
    bool is_regular(int r) const;

    int dart_index(Dart d) const { return dart_offset_[d.v] + d.i; }
    int num_darts() const { return static_cast<int>(theta_.size()); }
    Dart dart_at(int index) const { return darts_[index]; }

  private:
    std::vector<std::vector<int>> rot_;
    std::vector<std::string> labels_;
    std::vector<int> dart_offset_;
    std::vector<Dart> darts_;
    std::vector<Dart> theta_;
    std::vector<int> edge_id_;
    int num_edges_ = 0;
};

struct FaceSet {
    std::vector<std::vector<Dart>> faces;
    int genus = 0;  // from V - E + F = 2 - 2g
};

// Face tracing with the next-dart rule: follow theta, then step to the next
// dart in the rotation.  Deterministic; every dart lies in exactly one face.
FaceSet faces(const RotationGraph& g);

SymMatrix laplacian(const RotationGraph& g);
SymMatrix adjacency(const RotationGraph& g);

// BFS 2-coloring; nullopt when an odd cycle exists.
std::optional<std::vector<int>> bipartition(const RotationGraph& g);

struct EulerATrail {
    std::vector<Dart> darts;  // departing darts, in trail order (cyclic)
};

// Euler circuit of a connected 4-valent graph that never goes straight at a
// vertex, built by repairing an arbitrary Euler circuit: while some crossing
// is straight, the interval between the two visits is reversed.
EulerATrail euler_a_trail(const RotationGraph& g);

// Checker used by tests and gc: every edge exactly once, never straight.
bool is_a_trail(const RotationGraph& g, const EulerATrail& t);

// Edge directions that alternate in/out around every vertex (out-darts at
// opposite rotation slots).  Exists iff a certain dart 2-coloring is
// consistent; nullopt otherwise.  Any directed Euler circuit of such an
// orientation is an A-trail, and this is the form the 4-valent gluing needs.
std::optional<std::vector<bool>> alternating_orientation(const RotationGraph& g);

// Combinatorial-map isomorphism, orientation preserving or reversing.
bool map_isomorphic(const RotationGraph& x, const RotationGraph& y);

}  // namespace gcx
