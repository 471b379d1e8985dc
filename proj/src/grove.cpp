#include "grovekit/grove.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace grovekit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false if a and b were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Dense id for a flat vertex of order n (uses -i, -j; -i - j <= n).
int flat_id(const Vertex& v) { return pair_index(-v.i, -v.j); }

}  // namespace

Grove::Grove(int order) : order_(order) {
  GK_ARG_CHECK(order >= 1, "order must be >= 1");
  for (auto& g : present_) g.assign(triangle_count(order), 0);
}

void Grove::add(const Label& e) {
  GK_ARG_CHECK(label_in_range(order_, e), "label out of range for order");
  auto& cell = present_[(int)e.fam][pair_index(e.u, e.v)];
  GK_ARG_CHECK(cell == 0, "label already present");
  cell = 1;
  ++edge_count_;
}

void Grove::remove(const Label& e) {
  GK_ARG_CHECK(has(e), "label not present");
  present_[(int)e.fam][pair_index(e.u, e.v)] = 0;
  --edge_count_;
}

std::vector<Label> Grove::family_edges(Family f) const {
  std::vector<Label> out;
  for (int u = 0; u < order_; ++u)
    for (int v = 0; u + v < order_; ++v)
      if (present_[(int)f][pair_index(u, v)]) out.push_back({f, u, v});
  return out;
}

std::vector<Label> Grove::edges() const {
  std::vector<Label> out;
  out.reserve(edge_count_);
  for (Family f : {Family::A, Family::B, Family::C})
    for (const Label& e : family_edges(f)) out.push_back(e);
  return out;
}

std::string Grove::to_json() const {
  nlohmann::json j;
  j["order"] = order_;
  for (Family f : {Family::A, Family::B, Family::C}) {
    auto arr = nlohmann::json::array();
    for (const Label& e : family_edges(f))
      arr.push_back(nlohmann::json::array({e.u, e.v}));
    j[family_name(f)] = arr;
  }
  return j.dump();
}

Grove Grove::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  GK_ARG_CHECK(j.is_object() && j.contains("order"), "missing order");
  Grove g(j.at("order").get<int>());
  for (Family f : {Family::A, Family::B, Family::C}) {
    if (!j.contains(family_name(f))) continue;
    for (const auto& pair : j.at(family_name(f))) {
      GK_ARG_CHECK(pair.is_array() && pair.size() == 2, "bad label entry");
      g.add({f, pair.at(0).get<int>(), pair.at(1).get<int>()});
    }
  }
  return g;
}

TriangleConfig triangle_config(const Grove& g, Triangle t) {
  const TriangleSlots s = triangle_slots(g.order(), t);
  return {t, g.has(s.a), g.has(s.b), g.has(s.c)};
}

EdgeCountSummary edge_counts(const Grove& g) {
  EdgeCountSummary out;
  for (const Triangle& t : downward_triangles(g.order())) {
    switch (triangle_config(g, t).count()) {
      case 0: ++out.zero_triangles; break;
      case 1: ++out.one_triangles; break;
      case 2: ++out.two_triangles; break;
      default: break;  // invalid grove; validate() reports it
    }
  }
  return out;
}

Components components(const Grove& g) {
  const int n = g.order();
  const auto verts = flat_vertices(n);
  UnionFind uf((n + 1) * (n + 2) / 2);
  for (const Label& e : g.edges()) {
    const auto [u, v] = label_endpoints(n, e);
    uf.unite(flat_id(u), flat_id(v));
  }
  Components out;
  std::unordered_map<int, int> root_to_id;
  for (const Vertex& v : verts) {
    const int root = uf.find(flat_id(v));
    auto [it, inserted] = root_to_id.try_emplace(root, out.count);
    if (inserted) ++out.count;
    out.comp_of[v] = it->second;
  }
  return out;
}

namespace {

// The two boundary vertices at distance d from each corner along that
// corner's two sides.  These are exactly the pairs a valid grove must
// connect (for every d up to floor(n/2)) and the only boundary pairs any
// component may contain.
std::vector<std::pair<Vertex, Vertex>> required_boundary_pairs(int n, int d) {
  return {
      {Vertex{0, -d, -n + d}, Vertex{-d, 0, -n + d}},  // top corner (k)
      {Vertex{0, -n + d, -d}, Vertex{-d, -n + d, 0}},  // left corner (j)
      {Vertex{-n + d, 0, -d}, Vertex{-n + d, -d, 0}},  // right corner (i)
  };
}

std::string vertex_str(const Vertex& v) {
  return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + "," +
         std::to_string(v.k) + ")";
}

}  // namespace

ValidationReport validate(const Grove& g) {
  ValidationReport rep;
  const int n = g.order();
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    if (rep.violations.size() < 32) rep.violations.push_back(std::move(msg));
  };

  for (const Triangle& t : downward_triangles(n)) {
    if (triangle_config(g, t).count() > 2)
      fail("downward triangle (" + std::to_string(t.p) + "," +
           std::to_string(t.q) + ") carries all three edges");
  }

  if (g.edge_count() != n * n / 2)
    fail("edge count " + std::to_string(g.edge_count()) + " != " +
         std::to_string(n * n / 2));

  UnionFind uf((n + 1) * (n + 2) / 2);
  for (const Label& e : g.edges()) {
    const auto [u, v] = label_endpoints(n, e);
    if (!uf.unite(flat_id(u), flat_id(v)))
      fail("cycle through edge " + std::string(family_name(e.fam)) + "(" +
           std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }

  std::set<std::pair<Vertex, Vertex>> allowed;  // canonically ordered pairs
  for (int d = 1; 2 * d <= n; ++d) {
    for (auto [u, v] : required_boundary_pairs(n, d)) {
      if (uf.find(flat_id(u)) != uf.find(flat_id(v)))
        fail("boundary vertices " + vertex_str(u) + " and " + vertex_str(v) +
             " must be connected");
      allowed.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    }
  }

  std::unordered_map<int, std::vector<Vertex>> boundary_by_comp;
  for (const Vertex& v : flat_vertices(n))
    if (v.i == 0 || v.j == 0 || v.k == 0)
      boundary_by_comp[uf.find(flat_id(v))].push_back(v);
  for (const auto& [root, verts] : boundary_by_comp) {
    (void)root;
    for (size_t x = 0; x < verts.size(); ++x)
      for (size_t y = x + 1; y < verts.size(); ++y) {
        const Vertex a = std::min(verts[x], verts[y]);
        const Vertex b = std::max(verts[x], verts[y]);
        if (!allowed.count({a, b}))
          fail("boundary vertices " + vertex_str(a) + " and " + vertex_str(b) +
               " may not share a component");
      }
  }

  return rep;
}

FrozenEdges frozen_edges(const Grove& g) {
  const int n = g.order();
  FrozenEdges out;
  for (Family f : {Family::A, Family::B, Family::C}) {
    std::vector<uint8_t> frozen(triangle_count(n), 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; u + v < n; ++v) {
        const bool below_ok = (u == 0) || frozen[pair_index(u - 1, v)];
        const bool left_ok = (v == 0) || frozen[pair_index(u, v - 1)];
        if (g.has({f, u, v}) && below_ok && left_ok) {
          frozen[pair_index(u, v)] = 1;
          out.by_family[(int)f].push_back({f, u, v});
        }
      }
    std::sort(out.by_family[(int)f].begin(), out.by_family[(int)f].end());
  }
  return out;
}

std::vector<std::pair<Vertex, int>> grove_monomial_exponents(const Grove& g) {
  const int n = g.order();
  std::map<Vertex, int> deg;
  // Long edges contribute to their two flat endpoints.
  for (const Label& e : g.edges()) {
    auto [u, v] = label_endpoints(e, n);
    ++deg[u];
    ++deg[v];
  }
  // Wall chains: one per zero coordinate of a flat or down vertex.
  // Flat vertices also pick up their base degree of 0 here; up and down
  // vertices are handled below.
  for (const Vertex& f : flat_vertices(n)) {
    deg[f] += (f.i == 0) + (f.j == 0) + (f.k == 0);
  }
  for (const Triangle& t : downward_triangles(n)) {
    const TriangleConfig cfg = triangle_config(g, t);
    // Up vertex at the center of triangle t (coordinate sum -(n-1)):
    // one short edge per absent slot.
    const Vertex u{-t.p, -t.q, -(n - 1 - t.p - t.q)};
    deg[u] += 3 - cfg.count();
    // Each absent slot also sends that short edge to a down vertex.
    const int bi = -t.p, bj = -t.q, bk = -(n - t.p - t.q);  // bottom (flat)
    if (!cfg.a) ++deg[Vertex{bi - 1, bj - 1, bk + 1}];
    if (!cfg.b) ++deg[Vertex{bi - 1, bj, bk}];
    if (!cfg.c) ++deg[Vertex{bi, bj - 1, bk}];
  }
  // Down-layer wall chains.
  for (int i = -(n + 1); i <= 0; ++i) {
    for (int j = -(n + 1) - i; j <= 0; ++j) {
      const int k = -(n + 1) - i - j;
      if (k > 0 || k < -(n + 1)) continue;
      deg[Vertex{i, j, k}] += (i == 0) + (j == 0) + (k == 0);
    }
  }
  // Every vertex of the three layers is present in `deg` by now: the loops
  // above touch each one at least once (operator[] inserts zeros), and
  // std::map iteration is already sorted by vertex.
  std::vector<std::pair<Vertex, int>> out;
  for (const auto& [v, d] : deg) {
    if (d != 2) out.emplace_back(v, d - 2);
  }
  return out;
}

bool FrozenEdges::is_frozen(const Label& e) const {
  const auto& v = by_family[(int)e.fam];
  return std::binary_search(v.begin(), v.end(), e);
}

}  // namespace grovekit
