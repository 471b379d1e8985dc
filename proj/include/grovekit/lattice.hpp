#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "grovekit/common.hpp"

namespace grovekit {

// A lattice vertex of the order-n triangular region, written in the
// three-coordinate form (i, j, k) with i, j, k <= 0.  The corners of the
// region are (0,0,-n), (0,-n,0) and (-n,0,0); a vertex lies on the
// boundary iff some coordinate is 0.  Vertices with i+j+k = -n form the
// triangular grid itself ("flat" layer); i+j+k = -n+1 are the centers of
// downward triangles ("up" layer) and i+j+k = -n-1 the centers of upward
// triangles ("down" layer).
struct Vertex {
  int i = 0, j = 0, k = 0;

  bool operator==(const Vertex& o) const {
    return i == o.i && j == o.j && k == o.k;
  }
  bool operator!=(const Vertex& o) const { return !(*this == o); }
  bool operator<(const Vertex& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return k < o.k;
  }
  int sum() const { return i + j + k; }
};

struct VertexHash {
  size_t operator()(const Vertex& v) const {
    uint64_t h = (uint64_t)(uint32_t)v.i * 0x9E3779B97F4A7C15ull;
    h ^= (uint64_t)(uint32_t)v.j + 0xBF58476D1CE4E5B9ull + (h << 6);
    h ^= (uint64_t)(uint32_t)v.k + 0x94D049BB133111EBull + (h << 6);
    return (size_t)h;
  }
};

// Downward triangle (p, q) of an order-n grove, 0 <= p+q <= n-1.
// p counts steps from the bottom-right side, q from the bottom-left side;
// its bottom vertex is (-p, -q, -(n-p-q)).
struct Triangle {
  int p = 0, q = 0;
  bool operator==(const Triangle& o) const { return p == o.p && q == o.q; }
  bool operator<(const Triangle& o) const {
    return p != o.p ? p < o.p : q < o.q;
  }
};

enum class Family : uint8_t { A = 0, B = 1, C = 2 };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::C: return "c";
  }
  return "?";
}

// Edge label.  A(p,q) is the horizontal edge of triangle (p,q);
// B(m,p) and C(m,q) are the diagonal edges, indexed by their distance m
// from the top corner together with the p (resp. q) of the owning
// triangle.  Within order n the owning triangle of B(m,p) is
// (p, n-1-p-m) and of C(m,q) is (n-1-q-m, q).
struct Label {
  Family fam = Family::A;
  int u = 0, v = 0;

  bool operator==(const Label& o) const {
    return fam == o.fam && u == o.u && v == o.v;
  }
  bool operator<(const Label& o) const {
    if (fam != o.fam) return (int)fam < (int)o.fam;
    if (u != o.u) return u < o.u;
    return v < o.v;
  }
};

struct TriangleSlots {
  Label a, b, c;
};

inline int triangle_count(int n) { return n * (n + 1) / 2; }

// Dense index for label/triangle pairs (u, v): enumerate by diagonal
// d = u+v, then by v.  Independent of the order, so a label keeps its
// index when the grove grows.
inline int pair_index(int u, int v) {
  const int d = u + v;
  return d * (d + 1) / 2 + v;
}

bool label_in_range(int n, const Label& e);

// All downward triangles of order n, in deterministic (p, then q) order.
std::vector<Triangle> downward_triangles(int n);

// The three slots of downward triangle t in an order-n grove.
TriangleSlots triangle_slots(int n, Triangle t);

// The owning triangle of a label within order n.
Triangle owner_triangle(int n, const Label& e);

// Lattice endpoints of a labelled edge within order n.
std::pair<Vertex, Vertex> label_endpoints(int n, const Label& e);

// All flat-layer vertices (i+j+k = -n) of order n.
std::vector<Vertex> flat_vertices(int n);

// Scales a vertex by 1/n onto the plane x+y+z = -1 (exact rationals).
std::array<Rat, 3> scale_vertex_exact(const Vertex& v, int n);
std::array<double, 3> scale_vertex(const Vertex& v, int n);

}  // namespace grovekit
