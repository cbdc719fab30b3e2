#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace treegap {

using VertexId = std::int32_t;
using HalfEdgeId = std::int32_t;

// An edge-indexed graph with a finite-volume measure. Oriented half-edges come
// in partner pairs (a strict fix-point-free involution, stored explicitly);
// loops are two distinct half-edges with identical endpoints. Every half-edge
// carries a positive rational index i(e); the vertex measure is propagated
// from a base vertex through the ratios i(e)/i(partner(e)) and the edge
// measure is mu(e) = i(e) * mu(origin(e)).
//
// Diagrams are immutable after construction and safe to share across threads.

struct VertexSpec {
  std::string name;
  bool boundary = false;  // truncation cut vertex, exempt from regularity
};

struct EdgeSpec {
  std::string name;
  std::string from, to;
  Rat fwd;  // index of the from->to half-edge
  Rat bwd;  // index of the to->from half-edge
};

struct DiagramSpec {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::string base;   // empty -> first vertex
  Rat base_mass = 1;  // generators override; defaults to 1
};

// Low-level input where the involution is declared half-edge by half-edge.
// Lets validation catch incomplete or fixed-point pairings that the paired
// EdgeSpec form cannot express.
struct HalfEdgeSpec {
  std::string name;
  std::string origin;
  std::string partner;  // name of the partner half-edge
  Rat index;
};

struct Vertex {
  std::string name;
  bool boundary = false;
};

struct HalfEdge {
  VertexId origin = -1;
  HalfEdgeId partner = -1;
  Rat index;
  std::string name;  // name of the declaring edge pair (shared with partner)
};

struct RegularityReport {
  std::vector<Rat> indeg;            // per vertex, exact
  bool is_k_regular = false;         // over non-exempted vertices
  std::optional<Rat> k;              // present iff is_k_regular
  std::vector<VertexId> exempted;    // boundary-flagged vertices
};

class Diagram {
 public:
  static Diagram build(const DiagramSpec& spec);
  static Diagram build(const std::vector<VertexSpec>& vertices,
                       const std::vector<HalfEdgeSpec>& half_edges,
                       const std::string& base, const Rat& base_mass);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t half_edge_count() const { return half_edges_.size(); }

  const Vertex& vertex(VertexId v) const { return vertices_[v]; }
  const HalfEdge& half_edge(HalfEdgeId e) const { return half_edges_[e]; }
  const std::vector<HalfEdgeId>& out_edges(VertexId v) const { return out_by_vertex_[v]; }

  VertexId origin(HalfEdgeId e) const { return half_edges_[e].origin; }
  VertexId terminus(HalfEdgeId e) const { return half_edges_[half_edges_[e].partner].origin; }
  HalfEdgeId partner(HalfEdgeId e) const { return half_edges_[e].partner; }
  const Rat& index(HalfEdgeId e) const { return half_edges_[e].index; }

  VertexId base() const { return base_; }
  const Rat& base_mass() const { return base_mass_; }

  const Rat& mu_vertex(VertexId v) const { return mu_vertex_[v]; }
  const Rat& mu_edge(HalfEdgeId e) const { return mu_edge_[e]; }

  /// Sum of i(e) over half-edges leaving v, exact.
  Rat indeg(VertexId v) const;

  Rat total_volume() const;

  RegularityReport regularity() const;

  std::optional<VertexId> find_vertex(const std::string& name) const;

  /// True when every edge index is an integer.
  bool has_integer_indices() const;

  // [v][e] adjacency: half-edges with origin v.
  const std::vector<std::vector<HalfEdgeId>>& adjacency() const { return out_by_vertex_; }

 private:
  Diagram() = default;
  void validate_and_propagate();

  std::vector<Vertex> vertices_;
  std::vector<HalfEdge> half_edges_;
  std::vector<std::vector<HalfEdgeId>> out_by_vertex_;
  VertexId base_ = 0;
  Rat base_mass_ = 1;
  std::vector<Rat> mu_vertex_;
  std::vector<Rat> mu_edge_;
  std::unordered_map<std::string, VertexId> by_name_;
};

/// mu propagation on its own: walks the path products i(e)/i(partner(e)) from
/// the base and rejects diagrams whose cycles have product != 1 (reported with
/// the offending cycle). Path-independence for accepted diagrams is exact.
std::vector<Rat> propagate_measure(const Diagram& d, VertexId new_base, const Rat& mass);

// ---- DIAG v1 text format ---------------------------------------------------
//
//   diag v1
//   vertex <id> [boundary]
//   edge <id> <from> <to> <i_forward> <i_backward>
//   base <vertex-id> <mass>
//
// One edge line creates a half-edge pair. Rationals are "p/q" or integers.
// Unknown directives are rejected. Serialization is canonical (declaration
// order, reduced rationals, single spaces), so parse -> serialize round-trips
// byte-identically.

/// Syntax only; build validates. Lets the cover unfolder accept edge-indexed
/// graphs that carry no consistent measure (e.g. non-unimodular loops).
DiagramSpec parse_diag_spec(std::istream& in);
DiagramSpec parse_diag_spec_file(const std::string& path);

Diagram parse_diag(std::istream& in);
Diagram parse_diag_string(const std::string& text);
Diagram parse_diag_file(const std::string& path);
std::string to_diag(const Diagram& d);
void write_diag_file(const Diagram& d, const std::string& path);

}  // namespace treegap
