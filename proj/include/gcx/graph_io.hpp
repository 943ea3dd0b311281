#pragma once

#include <iosfwd>
#include <string>

#include "gcx/rotation_graph.hpp"

namespace gcx {

// Canonical interchange format:
//   { "valence": 3|4, "vertices": ["name", ...],
//     "rotation": [[neighbor indices in cyclic order], ...] }
// The loader validates regularity against "valence", connectivity, and
// rejects loops.  Repeated neighbors (multi-edges) are paired by occurrence
// order, which is also how write_json emits them.
RotationGraph read_graph_json(std::istream& in);
RotationGraph read_graph_json_file(const std::string& path);
void write_graph_json(const RotationGraph& g, std::ostream& out);

// Export-only formats.
void write_graph_dot(const RotationGraph& g, std::ostream& out);
void write_edge_csv(const RotationGraph& g, std::ostream& out);

}  // namespace gcx
