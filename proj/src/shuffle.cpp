#include "grovekit/shuffle.hpp"

#include "grovekit/lattice.hpp"

namespace grovekit {

Grove shuffle_once(const Grove& g, const Bias& bias, RandomSource& rng) {
  bias.require_valid();
  const int k = g.order();
  Grove out(k + 1);
  for (const Triangle& t : downward_triangles(k)) {
    const TriangleSlots s = triangle_slots(k, t);
    const TriangleConfig cfg = triangle_config(g, t);
    GK_CHECK(cfg.count() <= 2, "triangle carries all three slots");
    if (cfg.count() == 2) continue;  // the pair annihilates
    if (cfg.count() == 1) {          // a lone label survives unchanged
      if (cfg.a) out.add(s.a);
      if (cfg.b) out.add(s.b);
      if (cfg.c) out.add(s.c);
      continue;
    }
    switch (rng.pick3(bias)) {  // an empty triangle creates a pair
      case 0:
        out.add(s.b);
        out.add(s.c);
        break;
      case 1:
        out.add(s.a);
        out.add(s.c);
        break;
      default:
        out.add(s.a);
        out.add(s.b);
        break;
    }
  }
  GK_CHECK(out.edge_count() == (k + 1) * (k + 1) / 2,
           "shuffle produced the wrong edge count");
  return out;
}

Grove generate(int order, const Bias& bias, uint64_t seed) {
  GK_ARG_CHECK(order >= 1, "order must be positive");
  bias.require_valid();
  RandomSource rng(seed);
  Grove g(1);
  for (int k = 1; k < order; ++k) g = shuffle_once(g, bias, rng);
  return g;
}

BigInt shuffle_preimage_count(const Grove& g) {
  const int k = g.order() - 1;
  GK_ARG_CHECK(k >= 1, "order must be at least 2");
  int exponent = 0;
  for (const Triangle& t : downward_triangles(k)) {
    const TriangleSlots s = triangle_slots(k, t);
    if (!g.has(s.a) && !g.has(s.b) && !g.has(s.c)) ++exponent;
  }
  BigInt r = 1;
  for (; exponent > 0; --exponent) r *= 3;
  return r;
}

}  // namespace grovekit
