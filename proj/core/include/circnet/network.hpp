#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "circnet/poly_parse.hpp"

namespace circnet {

enum class Role { Source, Sink };
enum class EdgeEnd { Tail, Head };

/// One endpoint of a directed edge. Rotation systems are lists of half-edges
/// so that loops and multiple edges are representable without ambiguity.
struct HalfEdge {
  std::string edge;
  EdgeEnd end = EdgeEnd::Tail;

  bool operator==(const HalfEdge& o) const {
    return edge == o.edge && end == o.end;
  }
  bool operator<(const HalfEdge& o) const {
    return edge != o.edge ? edge < o.edge : end < o.end;
  }
};

struct BoundaryVertex {
  std::string id;
  Role role = Role::Source;
};

struct Edge {
  std::string id;
  std::string tail;
  std::string head;
  WeightExpr weight;
};

struct Violation {
  Errc code;
  std::string detail;
};

/// Directed circular network: boundary vertices in clockwise order, interior
/// vertices, weighted edges, and (in planar mode) a clockwise rotation system
/// at every interior vertex. Values are immutable by convention; every
/// transformation returns a new network.
struct Network {
  std::string name;
  bool planar = true;
  std::vector<BoundaryVertex> boundary;  // clockwise order
  std::vector<std::string> interior;
  std::vector<Edge> edges;
  // interior vertex id -> incident half-edges in clockwise order
  std::map<std::string, std::vector<HalfEdge>> rotation;

  int n() const { return (int)boundary.size(); }
  /// 1-based boundary position, or 0 if the id is not a boundary vertex.
  int boundary_position(const std::string& id) const;
  bool is_boundary(const std::string& id) const;
  bool is_interior(const std::string& id) const;
  bool has_vertex(const std::string& id) const;
  const Edge* edge(const std::string& id) const;
  /// Ascending 1-based positions of the boundary sources (the set I).
  std::vector<int> source_positions() const;
  std::string endpoint(const HalfEdge& h) const;
};

/// Out-/in-edge index for walk and flow enumeration; edge lists are sorted by
/// edge id so traversals are deterministic.
struct Adjacency {
  explicit Adjacency(const Network& n);
  const std::vector<int>& out(const std::string& v) const;
  const std::vector<int>& in(const std::string& v) const;
  int outdeg(const std::string& v) const { return (int)out(v).size(); }
  int indeg(const std::string& v) const { return (int)in(v).size(); }

 private:
  std::map<std::string, std::vector<int>> out_, in_;
  std::vector<int> empty_;
};

Network parse_network(const std::string& json_text);
Network load_network(const std::string& path);
std::string serialize_network(const Network& n);

/// Structural checks; an empty result means every invariant holds.
std::vector<Violation> validate(const Network& n);
void require_valid(const Network& n);

/// True iff every interior vertex has exactly one outgoing edge or exactly
/// one incoming edge.
bool is_perfectly_oriented(const Network& n);

/// Interior vertices whose clockwise half-edge cycle switches orientation at
/// least four times. Requires planar mode with a rotation system.
std::set<std::string> blowup_vertices(const Network& n);

/// Repeatedly removes interior vertices of in-degree 0 or out-degree 0
/// together with their incident edges. Boundary measurements are unchanged.
Network prune_interior_sources_sinks(const Network& n);

/// Removes every interior vertex with exactly one incoming and one outgoing
/// edge, gluing the two edges into one whose weight is their product. A loop
/// at a degree-2 vertex is rejected.
Network suppress_degree_two(const Network& n);

}  // namespace circnet
