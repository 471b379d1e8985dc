// Frozen-region boundaries: exact inside/on/outside predicates for the
// limiting circle (uniform) and ellipse (biased), sector classification of
// frozen edges, the limiting temperate-area ratio, and empirical misfit
// statistics for sampled groves.
//
// Points live in the scaled coordinates of lattice.hpp: vertices divided by
// the order, so the corners sit at (0,0,-1), (0,-1,0), (-1,0,0) and every
// scaled vertex lies on the plane x + y + z = -1.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "grovekit/common.hpp"
#include "grovekit/grove.hpp"
#include "grovekit/lattice.hpp"

namespace grovekit {

enum class Position { kInside, kOn, kOutside };

// Uniform-bias boundary: for points on the plane x + y + z = -1 the
// temperate region's limit boundary is the inscribed circle
// x^2 + y^2 + z^2 = 1/2, tangent to the triangle's sides at their
// midpoints.
Position circle_position(const Rat& x, const Rat& y, const Rat& z);

// General boundary: with r = (alpha+beta) x, s = (alpha+gamma) y,
// t = (beta+gamma) z, a point is outside the temperate region iff
//   r s + r t + s t < (r^2 + s^2 + t^2) / 2,
// on the boundary at equality.  At the uniform bias, and on the plane
// x + y + z = -1, this agrees exactly with circle_position.
Position ellipse_position(const Bias& bias, const Rat& x, const Rat& y,
                          const Rat& z);

// Frozen family of a point strictly outside the boundary, identified by the
// strictly smallest of the scaled coordinates (r, s, t):
//   t minimal -> A (horizontal edges; the cap at the bottom corner),
//   s minimal -> B (right diagonals),   r minimal -> C (left diagonals).
Family sector_of(const Bias& bias, const Rat& x, const Rat& y, const Rat& z);

// Limiting fraction of the triangle's area covered by the temperate
// region:
//   pi fa fb fc / (fa fb + fa fc + fb fc)^(3/2)
// with fa = alpha+beta, fb = alpha+gamma, fc = beta+gamma and
// gamma = 1 - alpha - beta.  When a factor vanishes the region collapses
// and the ratio is reported as 0 with the degenerate flag set.
struct TemperateRatio {
  double value = 0.0;
  bool degenerate = false;
};

TemperateRatio temperate_ratio(const Rat& alpha, const Rat& beta);

// Empirical boundary test for one grove: every present edge is mapped to
// the midpoint of its scaled endpoints, pulled toward the triangle center
// by 1/(1+epsilon), and classified against the boundary.  Edges landing
// strictly outside must belong to their sector's family; `fraction` is the
// share that do not (0 when nothing lands outside).
struct MisfitReport {
  int64_t outside_edges = 0;
  int64_t mismatched = 0;
  double fraction = 0.0;
};

MisfitReport misfit_stats(const Grove& g, double epsilon, const Bias& bias);

// Misfit statistics over freshly sampled groves, one row per order.
// Replicate r of order index i uses the derived seed (i * samples + r), so
// results are independent of scheduling.
struct ConvergenceRow {
  int order = 0;
  int samples = 0;
  double mean_misfit = 0.0;
  double std_misfit = 0.0;
};

std::vector<ConvergenceRow> convergence_experiment(
    const std::vector<int>& orders, int samples, double epsilon,
    const Bias& bias, uint64_t seed);

// Closed polyline tracing the boundary on the plane x + y + z = -1, found
// by bisection along rays from the triangle center.  Empty for degenerate
// biases (the region collapses).
std::vector<std::array<double, 3>> boundary_polyline(const Bias& bias,
                                                     int segments);

}  // namespace grovekit
