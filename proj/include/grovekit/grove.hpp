#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "grovekit/lattice.hpp"

namespace grovekit {

// Edge set of an order-n grove, stored per family as dense presence grids
// over the label indices (u+v <= n-1).
class Grove {
 public:
  explicit Grove(int order);

  int order() const { return order_; }
  int edge_count() const { return edge_count_; }

  bool has(const Label& e) const {
    if (!label_in_range(order_, e)) return false;
    return present_[(int)e.fam][pair_index(e.u, e.v)] != 0;
  }
  void add(const Label& e);
  void remove(const Label& e);

  // All edges, or one family's, sorted by (family, u, v).
  std::vector<Label> edges() const;
  std::vector<Label> family_edges(Family f) const;

  std::string to_json() const;
  static Grove from_json(const std::string& text);

  bool operator==(const Grove& o) const {
    return order_ == o.order_ && present_ == o.present_;
  }

 private:
  int order_;
  int edge_count_ = 0;
  std::array<std::vector<uint8_t>, 3> present_;
};

struct TriangleConfig {
  Triangle t;
  bool a = false, b = false, c = false;
  int count() const { return (a ? 1 : 0) + (b ? 1 : 0) + (c ? 1 : 0); }
};

TriangleConfig triangle_config(const Grove& g, Triangle t);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks the full set of structural rules that characterize groves:
//  - every label in range, at most 2 edges per downward triangle;
//  - exactly floor(n^2/2) edges in total, and no cycles;
//  - for every corner X and distance d = 1..floor(n/2), the two boundary
//    vertices at distance d from X along X's two sides lie in a common
//    connected component;
//  - conversely, any two boundary vertices sharing a component must be
//    such a pair (in particular the three corners are isolated).
ValidationReport validate(const Grove& g);

struct EdgeCountSummary {
  int64_t zero_triangles = 0;  // downward triangles with no edge
  int64_t one_triangles = 0;   // with exactly one edge
  int64_t two_triangles = 0;   // with exactly two edges
};

EdgeCountSummary edge_counts(const Grove& g);

// Connected components of the flat-layer vertices under the grove's edges.
struct Components {
  std::unordered_map<Vertex, int, VertexHash> comp_of;
  int count = 0;
};

Components components(const Grove& g);

// Per-family frozen edges: an edge is frozen when every edge with
// componentwise smaller-or-equal indices in the same family is present.
// The frozen index sets are order ideals (Young diagrams) by construction.
struct FrozenEdges {
  std::array<std::vector<Label>, 3> by_family;  // sorted
  bool is_frozen(const Label& e) const;
};

FrozenEdges frozen_edges(const Grove& g);

// Exponents of the grove's vertex monomial: for every vertex of the three
// interior layers, deg(v) - 2, where deg counts all incident edges of the
// grove's full three-dimensional picture.  Besides the grove's own (long)
// edges, that picture contains a short edge across every absent slot --
// connecting the triangle's center to the center of the adjacent upward
// triangle -- and, on the three boundary walls, permanent chains hanging
// from every flat or down vertex with a zero coordinate (one chain per
// zero coordinate).  Only nonzero exponents are returned, sorted
// lexicographically by vertex.
std::vector<std::pair<Vertex, int>> grove_monomial_exponents(const Grove& g);

}  // namespace grovekit
