// Domino tilings of Aztec diamonds: representation, validation, the
// annihilate/slide/fill growth step, exhaustive enumeration, and the
// arctic-circle misfit statistic.
//
// The order-n Aztec diamond is the set of unit cells centered at
// half-integer points (a, b) with |a| + |b| <= n.  Cell centers are stored
// doubled (i2 = 2a, j2 = 2b), so all coordinates are odd integers.  A cell
// is white when a + b has the same parity as n + 1.
#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "grovekit/common.hpp"
#include "grovekit/rng.hpp"

namespace grovekit {

// One domino, identified by its left (horizontal) or bottom (vertical)
// cell in doubled coordinates.
struct Domino {
  int i2 = 0;
  int j2 = 0;
  bool horizontal = false;

  bool operator==(const Domino& o) const {
    return i2 == o.i2 && j2 == o.j2 && horizontal == o.horizontal;
  }
  // Canonical order: bottom-to-top rows, left to right.
  bool operator<(const Domino& o) const {
    if (j2 != o.j2) return j2 < o.j2;
    if (i2 != o.i2) return i2 < o.i2;
    return horizontal < o.horizontal;
  }
};

bool cell_is_white(int i2, int j2, int n);

// Travel direction of a domino under the growth step, determined by its
// colors: a horizontal domino goes north when its left cell is white;
// a vertical domino goes west when its top cell is white, east when the
// top cell is black.
enum class Compass : uint8_t { kNorth, kSouth, kEast, kWest };

Compass classify(const Domino& d, int n);

// A complete tiling of the order-n diamond.  Construction validates that
// the dominoes tile the diamond exactly and stores them canonically sorted.
class AztecTiling {
 public:
  AztecTiling(int order, std::vector<Domino> dominoes);

  int order() const { return order_; }
  const std::vector<Domino>& dominoes() const { return dominoes_; }

  bool operator==(const AztecTiling& o) const {
    return order_ == o.order_ && dominoes_ == o.dominoes_;
  }

  std::string to_json() const;
  static AztecTiling from_json(const std::string& text);

 private:
  int order_;
  std::vector<Domino> dominoes_;
};

// One growth step, order n -> n + 1: exchanging pairs annihilate (a north
// domino with a south domino directly above it, or an east domino with a
// west domino directly to its right), survivors slide one cell along their
// compass direction, and the remaining area is filled 2x2 block by 2x2
// block with a fair coin choosing two horizontals or two verticals.
AztecTiling domino_shuffle_once(const AztecTiling& t, RandomSource& rng);

// Grows a tiling of the requested order from a fair coin over the two
// order-1 tilings followed by growth steps.
AztecTiling generate_tiling(int order, uint64_t seed);

// All tilings of the order-n diamond, in a deterministic order.
// Cost guard: n <= 4.
std::vector<AztecTiling> enumerate_all_tilings(int n);

// Face monomial of a tiling: for every face (i, j) with |i| + |j| <= n,
// the exponent 1 - (number of dominoes covering two of the four cells
// around the face), together with the face's layer (0 when i + j + n is
// even, -1 otherwise).  Rows (i, j, layer, exponent), sorted by (i, j).
std::vector<std::tuple<int, int, int, int>> tiling_face_exponents(
    const AztecTiling& t);

// Arctic-circle misfit: cells scaled by 1/(n+1) put the diamond's corners
// at distance 1 and the limiting circle at radius 1/sqrt(2).  Domino
// centers pulled toward the origin by 1/(1+epsilon) that land strictly
// outside the circle must match their quadrant (north quadrant y >= |x|,
// and so on; points on a quadrant seam accept either side).
struct TilingMisfitReport {
  int64_t outside = 0;
  int64_t mismatched = 0;
  double fraction = 0.0;
};

TilingMisfitReport tiling_misfit_stats(const AztecTiling& t, double epsilon);

}  // namespace grovekit
