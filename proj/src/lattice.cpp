#include "grovekit/lattice.hpp"

namespace grovekit {

bool label_in_range(int n, const Label& e) {
  return e.u >= 0 && e.v >= 0 && e.u + e.v <= n - 1;
}

std::vector<Triangle> downward_triangles(int n) {
  GK_ARG_CHECK(n >= 1, "order must be >= 1");
  std::vector<Triangle> out;
  out.reserve(triangle_count(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; p + q < n; ++q) out.push_back({p, q});
  return out;
}

TriangleSlots triangle_slots(int n, Triangle t) {
  GK_ARG_CHECK(t.p >= 0 && t.q >= 0 && t.p + t.q <= n - 1,
               "triangle out of range");
  const int r = n - 1 - t.p - t.q;
  return {Label{Family::A, t.p, t.q}, Label{Family::B, r, t.p},
          Label{Family::C, r, t.q}};
}

Triangle owner_triangle(int n, const Label& e) {
  GK_ARG_CHECK(label_in_range(n, e), "label out of range");
  switch (e.fam) {
    case Family::A: return {e.u, e.v};
    case Family::B: return {e.v, n - 1 - e.v - e.u};
    case Family::C: return {n - 1 - e.v - e.u, e.v};
  }
  throw std::invalid_argument("bad family");
}

std::pair<Vertex, Vertex> label_endpoints(int n, const Label& e) {
  GK_ARG_CHECK(label_in_range(n, e), "label out of range");
  switch (e.fam) {
    case Family::A: {
      const int p = e.u, q = e.v, r = n - 1 - p - q;
      return {Vertex{-p, -q - 1, -r}, Vertex{-p - 1, -q, -r}};
    }
    case Family::B: {
      const int m = e.u, p = e.v, q = n - 1 - p - m;
      return {Vertex{-p - 1, -q, -m}, Vertex{-p, -q, -m - 1}};
    }
    case Family::C: {
      const int m = e.u, q = e.v, p = n - 1 - q - m;
      return {Vertex{-p, -q, -m - 1}, Vertex{-p, -q - 1, -m}};
    }
  }
  throw std::invalid_argument("bad family");
}

std::vector<Vertex> flat_vertices(int n) {
  std::vector<Vertex> out;
  out.reserve((n + 1) * (n + 2) / 2);
  for (int i = 0; i >= -n; --i)
    for (int j = -n - i; j <= 0; ++j) out.push_back({i, j, -n - i - j});
  return out;
}

std::array<Rat, 3> scale_vertex_exact(const Vertex& v, int n) {
  GK_ARG_CHECK(n >= 1, "order must be >= 1");
  return {Rat(v.i, n), Rat(v.j, n), Rat(v.k, n)};
}

std::array<double, 3> scale_vertex(const Vertex& v, int n) {
  GK_ARG_CHECK(n >= 1, "order must be >= 1");
  const double d = n;
  return {v.i / d, v.j / d, v.k / d};
}

}  // namespace grovekit
