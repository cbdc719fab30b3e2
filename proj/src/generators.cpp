#include "generators.hpp"

#include <random>

namespace treegap {

namespace {

std::string xid(long m) { return "x" + std::to_string(m); }

}  // namespace

std::string ray_blocks_block_vertex(long n, long m) {
  return "b" + std::to_string(n) + "_" + std::to_string(m);
}

std::vector<std::string> ray_blocks_block_ids(long n) {
  std::vector<std::string> ids;
  ids.reserve(2 * n + 1);
  for (long m = 1; m <= 2 * n + 1; ++m) ids.push_back(ray_blocks_block_vertex(n, m));
  return ids;
}

Diagram gen_ray_blocks(const RayBlocksSpec& spec) {
  if (spec.q < 2) fail(Errc::invalid_argument, "ray-blocks: q must be >= 2");
  if (spec.blocks < 1) fail(Errc::invalid_argument, "ray-blocks: need at least one block");
  const Rat q(spec.q);
  const long N = spec.blocks;

  DiagramSpec s;
  long edge_no = 0;
  auto eid = [&edge_no] { return "e" + std::to_string(edge_no++); };

  // Ray stub before block 1. The first edge is the only asymmetric-measure
  // spot: forward q+1, backward q, realizing mu(x0) = 1/(q+1) next to
  // mu(x1) = 1/q.
  s.vertices.push_back({xid(0), false});
  s.vertices.push_back({xid(1), false});
  s.edges.push_back({eid(), xid(0), xid(1), q + 1, q});

  for (long n = 1; n <= N; ++n) {
    const auto block = ray_blocks_block_ids(n);
    for (const auto& b : block) s.vertices.push_back({b, false});
    // light attachment (1/1) on the ray vertex entering the block
    s.edges.push_back({eid(), xid(2 * n - 1), block.front(), 1, 1});
    // inside the block the index alternates q,1,q,...,q starting heavy, so
    // that indeg stays q+1 against the index-1 attachment at each end
    for (long m = 1; m <= 2 * n; ++m) {
      const Rat w = (m % 2 == 1) ? q : Rat(1);
      s.edges.push_back({eid(), block[m - 1], block[m], w, w});
    }
    // heavy attachment (q/q) onto the next even ray vertex
    s.vertices.push_back({xid(2 * n), false});
    s.edges.push_back({eid(), block.back(), xid(2 * n), q, q});
    // ray edge to the next odd vertex; the last one is the truncation cut
    const bool last = (n == N);
    s.vertices.push_back({xid(2 * n + 1), last});
    s.edges.push_back({eid(), xid(2 * n), xid(2 * n + 1), 1, q});
  }

  s.base = xid(0);
  s.base_mass = Rat(1) / (q + 1);
  return Diagram::build(s);
}

CuspDiagram gen_cusp(const CuspSpec& spec) {
  DiagramSpec s = spec.core;
  CuspDiagram out{Diagram::build(spec.core), {}, Rat(0), Rat(0)};
  for (const auto& v : spec.core.vertices) out.core_ids.push_back(v.name);

  long edge_no = 0;
  for (std::size_t j = 0; j < spec.rays.size(); ++j) {
    const auto& ray = spec.rays[j];
    if (ray.length < 1) fail(Errc::invalid_argument, "cusp ray length must be >= 1");
    if (ray.decay < 2) fail(Errc::invalid_argument, "cusp ray decay must be >= 2");
    const Rat c = (ray.strength == 0) ? ray.decay : ray.strength;
    if (c > ray.decay)
      fail(Errc::invalid_argument,
           "cusp ray strength c exceeds what the realization provides (c <= d)");
    std::string prev = ray.attach;
    for (long i = 0; i < ray.length; ++i) {
      const std::string id = "r" + std::to_string(j) + "_" + std::to_string(i);
      s.vertices.push_back({id, i + 1 == ray.length});
      s.edges.push_back({"re" + std::to_string(edge_no++), prev, id, 1, ray.decay});
      prev = id;
    }
    out.c = (out.c == 0) ? c : std::min(out.c, c);
    out.d = (out.d == 0) ? ray.decay : std::min(out.d, ray.decay);
  }
  if (spec.rays.empty()) fail(Errc::invalid_argument, "cusp spec has no rays");
  out.diagram = Diagram::build(s);
  return out;
}

CuspSpec cusp_family(long q, long rays, long ray_length) {
  if (q < 2) fail(Errc::invalid_argument, "cusp family: q must be >= 2");
  if (rays < 1) fail(Errc::invalid_argument, "cusp family: need at least one ray");
  if (ray_length < 1) fail(Errc::invalid_argument, "cusp family: ray length must be >= 1");
  CuspSpec spec;
  const long m = std::max<long>(rays, 3);
  for (long i = 0; i < m; ++i) spec.core.vertices.push_back({"c" + std::to_string(i), false});
  for (long i = 0; i < m; ++i)
    spec.core.edges.push_back({"ce" + std::to_string(i), "c" + std::to_string(i),
                               "c" + std::to_string((i + 1) % m), 1, 1});
  spec.core.base = "c0";
  spec.core.base_mass = 1;
  for (long j = 0; j < rays; ++j)
    spec.rays.push_back({"c" + std::to_string(j), ray_length, Rat(q), Rat(0)});
  return spec;
}

Diagram gen_tree_ball(long k0, long k1, long radius) {
  if (k0 < 2 || k1 < 2) fail(Errc::invalid_argument, "tree ball: degrees must be >= 2");
  if (radius < 1) fail(Errc::invalid_argument, "tree ball: radius must be >= 1");

  DiagramSpec s;
  long next_id = 0;
  auto vid = [&] { return "t" + std::to_string(next_id++); };
  long edge_no = 0;

  struct Node {
    std::string id;
    long depth;
  };
  std::vector<Node> frontier{{vid(), 0}};
  s.vertices.push_back({frontier[0].id, false});
  for (long depth = 0; depth < radius; ++depth) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      const long deg = (depth % 2 == 0) ? k0 : k1;
      const long children = (depth == 0) ? deg : deg - 1;
      for (long c = 0; c < children; ++c) {
        Node child{vid(), depth + 1};
        s.vertices.push_back({child.id, depth + 1 == radius});
        s.edges.push_back({"e" + std::to_string(edge_no++), node.id, child.id, 1, 1});
        next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  s.base = "t0";
  s.base_mass = 1;
  return Diagram::build(s);
}

Diagram random_diagram(std::uint64_t seed, int n_vertices, bool integer_indices) {
  if (n_vertices < 2) fail(Errc::invalid_argument, "random diagram needs >= 2 vertices");
  std::mt19937_64 rng(seed);
  auto rnd = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  DiagramSpec s;
  for (int v = 0; v < n_vertices; ++v) s.vertices.push_back({"v" + std::to_string(v), false});
  long edge_no = 0;
  auto eid = [&edge_no] { return "e" + std::to_string(edge_no++); };

  // Keep mu within 2^[-6,6] by driving the measure ratio of each tree edge
  // from a bounded exponent walk; unbounded random ratios would concentrate
  // all the mass on a few vertices and starve the eigensolvers of precision.
  std::vector<int> expo(n_vertices, 0);
  std::vector<Rat> mu(n_vertices);
  mu[0] = 1;
  for (int v = 1; v < n_vertices; ++v) {
    const int u = rnd(0, v - 1);
    int delta = rnd(-1, 1);
    if (expo[u] + delta > 6 || expo[u] + delta < -6) delta = -delta;
    expo[v] = expo[u] + delta;
    Rat fwd = (delta > 0) ? Rat(2) : Rat(1);
    Rat bwd = (delta < 0) ? Rat(2) : Rat(1);
    const Rat scale = integer_indices ? Rat(rnd(1, 3)) : Rat(rnd(1, 3), rnd(1, 2));
    fwd *= scale;
    bwd *= scale;
    s.edges.push_back({eid(), "v" + std::to_string(u), "v" + std::to_string(v), fwd, bwd});
    mu[v] = mu[u] * fwd / bwd;
  }
  // chords: cycle consistency pins the index ratio, a positive factor is free
  const int chords = rnd(0, n_vertices / 3);
  for (int t = 0; t < chords; ++t) {
    const int u = rnd(0, n_vertices - 1);
    const int v = rnd(0, n_vertices - 1);
    if (u == v) continue;
    const Rat ratio = mu[v] / mu[u];  // required i(e)/i(partner)
    const Rat scale(rnd(1, 3));
    const Rat fwd = Rat(rat_num(ratio)) * scale;
    const Rat bwd = Rat(rat_den(ratio)) * scale;
    s.edges.push_back({eid(), "v" + std::to_string(u), "v" + std::to_string(v), fwd, bwd});
  }
  s.base = "v0";
  s.base_mass = integer_indices ? Rat(1) : Rat(1, rnd(1, 3));
  return Diagram::build(s);
}

}  // namespace treegap
