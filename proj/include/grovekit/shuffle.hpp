// Random growth of groves, one order at a time.
#pragma once

#include <cstdint>

#include "grovekit/common.hpp"
#include "grovekit/grove.hpp"
#include "grovekit/rng.hpp"

namespace grovekit {

// One growth step: order k -> k + 1.  Every downward triangle of the
// current order is visited in the canonical scan order; a triangle carrying
// two slots drops both, a triangle carrying one keeps it, and an empty
// triangle creates one of the three pairs
//   {right, left} / {horizontal, left} / {horizontal, right}
// with probabilities alpha / beta / gamma.  Labels keep their (u, v)
// indices unchanged as the order grows.
Grove shuffle_once(const Grove& g, const Bias& bias, RandomSource& rng);

// Grows a grove of the requested order from the empty order-1 grove by
// repeated shuffling, using a private generator seeded with `seed`.
Grove generate(int order, const Bias& bias, uint64_t seed);

// Number of groves of order g.order() - 1 that shuffle to g: 3^c, where c
// counts the triangles of the previous order with all three slots absent
// from g.
BigInt shuffle_preimage_count(const Grove& g);

}  // namespace grovekit
