#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace treegap {

// Constructors for the diagram families the tool studies: the k-regular
// ray-of-blocks family (a finite-volume diagram whose block cuts have
// isoperimetric ratio (q+1)/(2n+1), decaying in n), cusped diagrams (a finite
// core with geometrically decaying rays, the fundamental-domain shape that
// admits a positive gap certificate), and plain tree balls.

struct RayBlocksSpec {
  long q = 2;       // k = q + 1 >= 3
  long blocks = 1;  // number of blocks before the cut
};

// Ray vertices carry mass 1/q^m per the family's measure law; blocks of
// 2n+1 vertices carry constant mass 1/q^n. Truncation mode is a plain cut:
// the diagram stops at the ray stub after block N and the last vertex is
// boundary-flagged (its indeg is defective by exactly the missing light
// attachment of block N+1).
Diagram gen_ray_blocks(const RayBlocksSpec& spec);

/// Vertex ids used by the generator: "x<m>" on the ray, "b<n>_<m>" in blocks.
std::string ray_blocks_block_vertex(long n, long m);
std::vector<std::string> ray_blocks_block_ids(long n);

struct CuspRay {
  std::string attach;  // core vertex the ray hangs from
  long length = 1;     // >= 1
  Rat decay = 2;       // d >= 2: mu drops by d per step (forward 1 / backward d)
  Rat strength = 0;    // c; 0 -> defaults to decay (exact under this realization)
};

struct CuspSpec {
  DiagramSpec core;
  std::vector<CuspRay> rays;
};

struct CuspDiagram {
  Diagram diagram;
  std::vector<std::string> core_ids;
  Rat c;  // certified first-edge strength, min over rays
  Rat d;  // certified decay, min over rays
};

// Core copied verbatim; ray j becomes r<j>_0 .. r<j>_<L-1> with forward index
// 1 and backward index d, so every tail's first boundary edge has measure
// exactly d times the first tail vertex. Last ray vertices are boundary.
CuspDiagram gen_cusp(const CuspSpec& spec);

/// The built-in cusp family used by the CLI: a symmetric cycle core of
/// max(rays, 3) unit-mass vertices with one ray of the given length per slot.
CuspSpec cusp_family(long q, long rays, long ray_length);

/// Radius-R ball of the (k0,k1)-biregular tree (k0 = k1 = k gives the regular
/// tree), centered on a degree-k0 vertex. All indices 1, uniform mass, leaves
/// boundary-flagged.
Diagram gen_tree_ball(long k0, long k1, long radius);

// Seeded random valid diagrams for oracle cross-checks: a random spanning
// tree plus a few chords whose indices are forced (up to an integer factor)
// by cycle consistency.
Diagram random_diagram(std::uint64_t seed, int n_vertices, bool integer_indices);

}  // namespace treegap
