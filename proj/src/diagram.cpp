#include "diagram.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace treegap {

namespace {

void check_unique_vertices(const std::vector<VertexSpec>& vs,
                           std::unordered_map<std::string, VertexId>& by_name) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].name.empty()) fail(Errc::invalid_argument, "empty vertex id");
    if (!by_name.emplace(vs[i].name, static_cast<VertexId>(i)).second)
      fail(Errc::invalid_argument, "duplicate vertex id '" + vs[i].name + "'");
  }
}

}  // namespace

Diagram Diagram::build(const DiagramSpec& spec) {
  if (spec.vertices.empty()) fail(Errc::invalid_argument, "diagram has no vertices");
  Diagram d;
  d.vertices_.reserve(spec.vertices.size());
  for (const auto& v : spec.vertices) d.vertices_.push_back({v.name, v.boundary});
  check_unique_vertices(spec.vertices, d.by_name_);

  std::unordered_map<std::string, int> edge_names;
  d.half_edges_.reserve(2 * spec.edges.size());
  for (const auto& e : spec.edges) {
    if (e.name.empty()) fail(Errc::invalid_argument, "empty edge id");
    if (!edge_names.emplace(e.name, 1).second)
      fail(Errc::invalid_argument, "duplicate edge id '" + e.name + "'");
    auto from = d.find_vertex(e.from);
    auto to = d.find_vertex(e.to);
    if (!from) fail(Errc::invalid_argument, "edge '" + e.name + "': unknown vertex '" + e.from + "'");
    if (!to) fail(Errc::invalid_argument, "edge '" + e.name + "': unknown vertex '" + e.to + "'");
    const auto id = static_cast<HalfEdgeId>(d.half_edges_.size());
    d.half_edges_.push_back({*from, id + 1, e.fwd, e.name});
    d.half_edges_.push_back({*to, id, e.bwd, e.name});
  }

  const std::string base_name = spec.base.empty() ? spec.vertices.front().name : spec.base;
  auto base = d.find_vertex(base_name);
  if (!base) fail(Errc::invalid_argument, "base vertex '" + base_name + "' not found");
  d.base_ = *base;
  d.base_mass_ = spec.base_mass;

  d.validate_and_propagate();
  return d;
}

Diagram Diagram::build(const std::vector<VertexSpec>& vertices,
                       const std::vector<HalfEdgeSpec>& half_edges,
                       const std::string& base, const Rat& base_mass) {
  if (vertices.empty()) fail(Errc::invalid_argument, "diagram has no vertices");
  Diagram d;
  d.vertices_.reserve(vertices.size());
  for (const auto& v : vertices) d.vertices_.push_back({v.name, v.boundary});
  check_unique_vertices(vertices, d.by_name_);

  std::unordered_map<std::string, HalfEdgeId> he_by_name;
  for (std::size_t i = 0; i < half_edges.size(); ++i) {
    if (!he_by_name.emplace(half_edges[i].name, static_cast<HalfEdgeId>(i)).second)
      fail(Errc::invalid_argument, "duplicate half-edge id '" + half_edges[i].name + "'");
  }
  d.half_edges_.resize(half_edges.size());
  for (std::size_t i = 0; i < half_edges.size(); ++i) {
    const auto& h = half_edges[i];
    auto origin = d.find_vertex(h.origin);
    if (!origin) fail(Errc::invalid_argument, "half-edge '" + h.name + "': unknown vertex");
    auto p = he_by_name.find(h.partner);
    if (p == he_by_name.end())
      fail(Errc::dangling_partner, "half-edge '" + h.name + "' pairs with undeclared '" + h.partner + "'");
    if (p->second == static_cast<HalfEdgeId>(i))
      fail(Errc::fixed_point_involution, "half-edge '" + h.name + "' is paired with itself");
    d.half_edges_[i] = {*origin, p->second, h.index, h.name};
  }
  // the involution must close: partner(partner(e)) == e
  for (std::size_t i = 0; i < d.half_edges_.size(); ++i) {
    const auto p = d.half_edges_[i].partner;
    if (d.half_edges_[p].partner != static_cast<HalfEdgeId>(i))
      fail(Errc::dangling_partner,
           "half-edge '" + d.half_edges_[i].name + "': pairing is not an involution");
  }

  auto b = d.find_vertex(base);
  if (!b) fail(Errc::invalid_argument, "base vertex '" + base + "' not found");
  d.base_ = *b;
  d.base_mass_ = base_mass;

  d.validate_and_propagate();
  return d;
}

void Diagram::validate_and_propagate() {
  for (const auto& h : half_edges_) {
    if (h.index <= 0) fail(Errc::non_positive_index, "half-edge '" + h.name + "' has index <= 0");
  }
  if (base_mass_ <= 0) fail(Errc::invalid_argument, "base mass must be positive");

  out_by_vertex_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < half_edges_.size(); ++e)
    out_by_vertex_[half_edges_[e].origin].push_back(static_cast<HalfEdgeId>(e));

  // Measure propagation doubles as the connectivity and cycle-consistency
  // check: BFS from the base, assigning mu(terminus) = mu(origin) * Delta(e);
  // any revisited vertex must agree exactly or some cycle has Delta-product
  // != 1 and no measure exists.
  mu_vertex_.assign(vertices_.size(), Rat(0));
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<HalfEdgeId> parent_edge(vertices_.size(), -1);
  std::deque<VertexId> queue;
  mu_vertex_[base_] = base_mass_;
  seen[base_] = 1;
  queue.push_back(base_);
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (HalfEdgeId e : out_by_vertex_[v]) {
      const VertexId u = terminus(e);
      const Rat next = mu_vertex_[v] * index(e) / index(partner(e));
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        mu_vertex_[u] = next;
        parent_edge[u] = e;
        queue.push_back(u);
      } else if (mu_vertex_[u] != next) {
        // Reconstruct the offending cycle: base->v, e, then u->base backwards.
        std::string cycle = vertices_[u].name;
        for (VertexId w = v; w != base_ && parent_edge[w] >= 0; w = origin(parent_edge[w]))
          cycle = vertices_[w].name + " " + cycle;
        fail(Errc::cycle_inconsistent,
             "cycle through '" + half_edges_[e].name +
                 "' has index-ratio product != 1 (path: ... " + cycle + ")");
      }
    }
  }
  if (reached != vertices_.size())
    fail(Errc::disconnected, "diagram is not connected");

  mu_edge_.resize(half_edges_.size());
  for (std::size_t e = 0; e < half_edges_.size(); ++e)
    mu_edge_[e] = half_edges_[e].index * mu_vertex_[half_edges_[e].origin];
  // mu(e) == mu(partner(e)) holds exactly once propagation succeeded.
  for (std::size_t e = 0; e < half_edges_.size(); ++e) {
    if (mu_edge_[e] != mu_edge_[half_edges_[e].partner])
      fail(Errc::cycle_inconsistent,
           "edge measure mismatch on '" + half_edges_[e].name + "'");
  }
}

Rat Diagram::indeg(VertexId v) const {
  Rat s = 0;
  for (HalfEdgeId e : out_by_vertex_[v]) s += half_edges_[e].index;
  return s;
}

Rat Diagram::total_volume() const {
  Rat s = 0;
  for (const auto& m : mu_vertex_) s += m;
  return s;
}

RegularityReport Diagram::regularity() const {
  RegularityReport r;
  r.indeg.reserve(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    r.indeg.push_back(indeg(static_cast<VertexId>(v)));
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].boundary) r.exempted.push_back(static_cast<VertexId>(v));

  std::optional<Rat> k;
  bool regular = true;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].boundary) continue;
    if (!k) {
      k = r.indeg[v];
    } else if (*k != r.indeg[v]) {
      regular = false;
      break;
    }
  }
  r.is_k_regular = regular && k.has_value() && *k > 0;
  if (r.is_k_regular) r.k = k;
  return r;
}

std::optional<VertexId> Diagram::find_vertex(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool Diagram::has_integer_indices() const {
  for (const auto& h : half_edges_)
    if (rat_den(h.index) != 1) return false;
  return true;
}

std::vector<Rat> propagate_measure(const Diagram& d, VertexId new_base, const Rat& mass) {
  if (mass <= 0) fail(Errc::invalid_argument, "mass must be positive");
  std::vector<Rat> mu(d.vertex_count(), Rat(0));
  std::vector<char> seen(d.vertex_count(), 0);
  std::deque<VertexId> queue;
  mu[new_base] = mass;
  seen[new_base] = 1;
  queue.push_back(new_base);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (HalfEdgeId e : d.out_edges(v)) {
      const VertexId u = d.terminus(e);
      const Rat next = mu[v] * d.index(e) / d.index(d.partner(e));
      if (!seen[u]) {
        seen[u] = 1;
        mu[u] = next;
        queue.push_back(u);
      } else if (mu[u] != next) {
        fail(Errc::cycle_inconsistent, "cycle with index-ratio product != 1");
      }
    }
  }
  return mu;
}

// ---- DIAG v1 ----------------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Rat parse_rat_or_fail(const std::string& s, int lineno) {
  auto r = rat_parse(s);
  if (!r) fail(Errc::parse_error, "line " + std::to_string(lineno) + ": bad rational '" + s + "'");
  return *r;
}

}  // namespace

DiagramSpec parse_diag_spec(std::istream& in) {
  DiagramSpec spec;
  bool header_seen = false;
  bool base_seen = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') continue;
    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "diag" || toks[1] != "v1")
        fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected 'diag v1' header");
      header_seen = true;
      continue;
    }
    if (toks[0] == "vertex") {
      if (toks.size() < 2 || toks.size() > 3 || (toks.size() == 3 && toks[2] != "boundary"))
        fail(Errc::parse_error, "line " + std::to_string(lineno) + ": bad vertex directive");
      spec.vertices.push_back({toks[1], toks.size() == 3});
    } else if (toks[0] == "edge") {
      if (toks.size() != 6)
        fail(Errc::parse_error, "line " + std::to_string(lineno) + ": bad edge directive");
      spec.edges.push_back({toks[1], toks[2], toks[3], parse_rat_or_fail(toks[4], lineno),
                            parse_rat_or_fail(toks[5], lineno)});
    } else if (toks[0] == "base") {
      if (toks.size() != 3)
        fail(Errc::parse_error, "line " + std::to_string(lineno) + ": bad base directive");
      if (base_seen) fail(Errc::parse_error, "line " + std::to_string(lineno) + ": duplicate base");
      base_seen = true;
      spec.base = toks[1];
      spec.base_mass = parse_rat_or_fail(toks[2], lineno);
    } else {
      fail(Errc::parse_error,
           "line " + std::to_string(lineno) + ": unknown directive '" + toks[0] + "'");
    }
  }
  if (!header_seen) fail(Errc::parse_error, "missing 'diag v1' header");
  if (!base_seen) fail(Errc::parse_error, "missing base directive");
  return spec;
}

DiagramSpec parse_diag_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  return parse_diag_spec(in);
}

Diagram parse_diag(std::istream& in) { return Diagram::build(parse_diag_spec(in)); }

Diagram parse_diag_string(const std::string& text) {
  std::istringstream is(text);
  return parse_diag(is);
}

Diagram parse_diag_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  return parse_diag(in);
}

std::string to_diag(const Diagram& d) {
  std::ostringstream os;
  os << "diag v1\n";
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    os << "vertex " << d.vertex(static_cast<VertexId>(v)).name;
    if (d.vertex(static_cast<VertexId>(v)).boundary) os << " boundary";
    os << "\n";
  }
  for (std::size_t e = 0; e < d.half_edge_count(); ++e) {
    const auto id = static_cast<HalfEdgeId>(e);
    if (d.partner(id) < id) continue;  // one line per pair, first-seen order
    os << "edge " << d.half_edge(id).name << " " << d.vertex(d.origin(id)).name << " "
       << d.vertex(d.terminus(id)).name << " " << rat_str(d.index(id)) << " "
       << rat_str(d.index(d.partner(id))) << "\n";
  }
  os << "base " << d.vertex(d.base()).name << " " << rat_str(d.base_mass()) << "\n";
  return os.str();
}

void write_diag_file(const Diagram& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write '" + path + "'");
  out << to_diag(d);
}

}  // namespace treegap
