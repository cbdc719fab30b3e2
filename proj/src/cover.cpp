#include "cover.hpp"

namespace treegap {

GraphOfGroups finite_grouping(const Diagram& d) {
  if (!d.has_integer_indices())
    fail(Errc::non_integer_index, "grouping needs integer edge indices");

  Rat scale = d.mu_vertex(0);
  for (std::size_t v = 1; v < d.vertex_count(); ++v)
    scale = rat_lcm(scale, d.mu_vertex(static_cast<VertexId>(v)));
  for (std::size_t e = 0; e < d.half_edge_count(); ++e)
    scale = rat_lcm(scale, d.mu_edge(static_cast<HalfEdgeId>(e)));

  GraphOfGroups g;
  g.scale = scale;
  auto integral = [](const Rat& order) {
    if (rat_den(order) != 1) fail(Errc::invalid_argument, "grouping scale is not integralizing");
    return rat_num(order);
  };
  g.vertex_order.reserve(d.vertex_count());
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    g.vertex_order.push_back(integral(scale / d.mu_vertex(static_cast<VertexId>(v))));
  g.edge_order.reserve(d.half_edge_count());
  for (std::size_t e = 0; e < d.half_edge_count(); ++e)
    g.edge_order.push_back(integral(scale / d.mu_edge(static_cast<HalfEdgeId>(e))));
  // n_x = i(e) * n_e must reproduce the indices
  for (std::size_t e = 0; e < d.half_edge_count(); ++e) {
    const auto id = static_cast<HalfEdgeId>(e);
    if (Rat(g.vertex_order[d.origin(id)]) != d.index(id) * Rat(g.edge_order[e]))
      fail(Errc::invalid_argument, "grouping does not reproduce the edge indices");
  }
  return g;
}

Rat covolume(const GraphOfGroups& g) {
  Rat s = 0;
  for (const Int& n : g.vertex_order) s += Rat(1, n);
  return s;
}

namespace {

// Combinatorial view shared by both unfolding entry points: half-edges with
// integer indices and an explicit involution, no measure.
struct CombGraph {
  struct He {
    int origin, target, partner;
    long index;
  };
  std::vector<He> hes;
  std::vector<std::vector<int>> out;
  int base = 0;
};

CombGraph comb_from_diagram(const Diagram& d, VertexId base) {
  if (!d.has_integer_indices())
    fail(Errc::non_integer_index, "unfolding needs integer edge indices");
  CombGraph g;
  g.base = base;
  g.out.resize(d.vertex_count());
  for (std::size_t e = 0; e < d.half_edge_count(); ++e) {
    const auto id = static_cast<HalfEdgeId>(e);
    g.hes.push_back({d.origin(id), d.terminus(id), d.partner(id),
                     rat_num(d.index(id)).convert_to<long>()});
    g.out[d.origin(id)].push_back(static_cast<int>(e));
  }
  return g;
}

CombGraph comb_from_spec(const DiagramSpec& spec, const std::string& base) {
  CombGraph g;
  std::unordered_map<std::string, int> by_name;
  for (std::size_t v = 0; v < spec.vertices.size(); ++v)
    if (!by_name.emplace(spec.vertices[v].name, static_cast<int>(v)).second)
      fail(Errc::invalid_argument, "duplicate vertex id '" + spec.vertices[v].name + "'");
  const auto resolved = by_name.find(base.empty() && !spec.vertices.empty()
                                         ? spec.vertices.front().name
                                         : base);
  if (resolved == by_name.end())
    fail(Errc::invalid_argument, "base vertex '" + base + "' not found");
  g.base = resolved->second;
  g.out.resize(spec.vertices.size());
  for (const auto& e : spec.edges) {
    auto from = by_name.find(e.from);
    auto to = by_name.find(e.to);
    if (from == by_name.end() || to == by_name.end())
      fail(Errc::invalid_argument, "edge '" + e.name + "' references an unknown vertex");
    for (const Rat* idx : {&e.fwd, &e.bwd}) {
      if (*idx <= 0) fail(Errc::non_positive_index, "edge '" + e.name + "' has index <= 0");
      if (rat_den(*idx) != 1)
        fail(Errc::non_integer_index, "unfolding needs integer edge indices");
    }
    const int id = static_cast<int>(g.hes.size());
    g.hes.push_back({from->second, to->second, id + 1, rat_num(e.fwd).convert_to<long>()});
    g.hes.push_back({to->second, from->second, id, rat_num(e.bwd).convert_to<long>()});
    g.out[from->second].push_back(id);
    g.out[to->second].push_back(id + 1);
  }
  return g;
}

CoverBall unfold(const CombGraph& g, long radius, std::size_t max_vertices) {
  if (radius < 1) fail(Errc::invalid_argument, "radius must be >= 1");

  struct Node {
    int over;      // underlying graph vertex
    int entered;   // lift of this half-edge reached the node (-1 at root)
    long depth;
    std::string name;
  };

  DiagramSpec s;
  std::vector<Node> nodes{{g.base, -1, 0, "o"}};
  s.vertices.push_back({"o", false});
  long edge_no = 0;
  std::vector<int> over_vertex{g.base};
  std::vector<int> over_half_edge;

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Node node = nodes[head];
    if (node.depth == radius) continue;
    for (int e : g.out[node.over]) {
      long lifts = g.hes[e].index;
      if (node.entered >= 0 && e == g.hes[node.entered].partner) --lifts;
      for (long copy = 1; copy <= lifts; ++copy) {
        if (nodes.size() >= max_vertices)
          fail(Errc::budget_exceeded, "cover ball exceeds the vertex budget");
        // access-path name: (half-edge id, copy) steps from the root
        Node child{g.hes[e].target, e, node.depth + 1,
                   node.name + "." + std::to_string(e) + ":" + std::to_string(copy)};
        s.vertices.push_back({child.name, child.depth == radius});
        s.edges.push_back({"c" + std::to_string(edge_no++), node.name, child.name, 1, 1});
        over_vertex.push_back(child.over);
        over_half_edge.push_back(e);                   // parent -> child lift
        over_half_edge.push_back(g.hes[e].partner);    // child -> parent lift
        nodes.push_back(std::move(child));
      }
    }
  }
  s.base = "o";
  s.base_mass = 1;
  return {Diagram::build(s), std::move(over_vertex), std::move(over_half_edge)};
}

}  // namespace

CoverBall universal_cover_ball(const Diagram& d, VertexId base, long radius,
                               std::size_t max_vertices) {
  return unfold(comb_from_diagram(d, base), radius, max_vertices);
}

CoverBall universal_cover_ball(const DiagramSpec& spec, const std::string& base, long radius,
                               std::size_t max_vertices) {
  return unfold(comb_from_spec(spec, base), radius, max_vertices);
}

}  // namespace treegap
