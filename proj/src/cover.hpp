#pragma once

#include <vector>

#include "diagram.hpp"

namespace treegap {

// Inverse Bass-Serre bookkeeping: group orders realizing the edge indices as
// subgroup indices, and the tree unfolding of an integer-indexed diagram.
// Only orders are represented, never group elements: orders suffice for
// covolume and for the degree law of the cover.

struct GraphOfGroups {
  std::vector<Int> vertex_order;  // n_x = scale / mu(x)
  std::vector<Int> edge_order;    // per half-edge; equal on partners
  Rat scale;                      // the minimal lambda making all orders integral
};

/// Minimal integral grouping of an integer-indexed diagram. The scale is the
/// rational lcm of all vertex and edge measures, so dividing it into any mu
/// gives a positive integer and no smaller uniform scale does.
GraphOfGroups finite_grouping(const Diagram& d);

/// Sum of 1/n_x; equals total_volume(d) / scale exactly.
Rat covolume(const GraphOfGroups& g);

struct CoverBall {
  Diagram ball;                     // all indices 1, uniform mass, depth-R leaves boundary
  std::vector<int> over_vertex;     // cover vertex -> underlying vertex
  std::vector<int> over_half_edge;  // cover half-edge -> underlying half-edge
};

/// Radius-R ball of the universal cover, unfolded from the fiber over base.
/// Each half-edge e at a vertex lifts to i(e) tree edges at every fiber
/// point, except that the lift used to enter a vertex accounts for one copy
/// of the reversed edge. Cover vertices are named by their non-backtracking
/// access path, so output is deterministic. Depth-R leaves are boundary.
CoverBall universal_cover_ball(const Diagram& d, VertexId base, long radius,
                               std::size_t max_vertices = 1u << 20);

/// Same unfolding for a bare edge-indexed graph. Skips the measure axioms:
/// graphs like the (1,2)-indexed loop bouquet cover the 3-regular tree even
/// though no finite-volume measure (and no finite grouping) exists for them.
CoverBall universal_cover_ball(const DiagramSpec& spec, const std::string& base, long radius,
                               std::size_t max_vertices = 1u << 20);

}  // namespace treegap
