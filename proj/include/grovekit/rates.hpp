// Exact edge-placement rates: the influence table E and the per-triangle
// placement probabilities for groves, and the north-domino tables for
// Aztec diamonds.  Everything here is exact rational arithmetic.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "grovekit/common.hpp"
#include "grovekit/lattice.hpp"

namespace grovekit {

// Sparse trivariate polynomial with exact rational coefficients.
class Trivar {
 public:
  using Key = std::array<int, 3>;

  static Trivar one();
  static Trivar term(int dx, int dy, int dz, const Rat& c);
  void add_term(int dx, int dy, int dz, const Rat& c);

  Trivar operator+(const Trivar& o) const;
  Trivar operator-(const Trivar& o) const;
  Trivar operator*(const Trivar& o) const;

  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int dx, int dy, int dz) const;
  const std::map<Key, Rat>& terms() const { return terms_; }

 private:
  std::map<Key, Rat> terms_;  // zero coefficients are never stored
};

// 1 + xyz - gamma (x + yz) - beta (y + xz) - alpha (z + xy):
// the denominator of the placement-rate generating function.  The table E
// below is its reciprocal power series.
Trivar denominator_poly(const Bias& bias);

// Dense tetrahedral grid over nonnegative (r, s, t) with r + s + t <= depth.
class Grid3 {
 public:
  explicit Grid3(int depth);
  int depth() const { return depth_; }
  Rat& at(int r, int s, int t);
  const Rat& at(int r, int s, int t) const;
  bool operator==(const Grid3& o) const {
    return depth_ == o.depth_ && cells_ == o.cells_;
  }

 private:
  int depth_;
  std::vector<Rat> cells_;
};

// The influence table: E(r, s, t) is the coefficient of x^r y^s z^t in the
// reciprocal series of denominator_poly.  Three routes:
//  - grove_E_dp evaluates the explicit boundary/interior recurrences;
//  - grove_E_series runs generic power-series inversion of the denominator
//    and verifies it by multiplying back;
//  - grove_E runs both and insists on exact agreement.
Grid3 grove_E_dp(int depth, const Bias& bias);
Grid3 grove_E_series(int depth, const Bias& bias);
Grid3 grove_E(int depth, const Bias& bias);

// Exact per-triangle placement rates for random groves of one order:
//  - p(t): probability that the horizontal slot of downward triangle t is
//    present; equals (beta + gamma) * sum of E(t.p, t.q, l) for
//    l <= order - t.p - t.q - 2;
//  - E(t): the scaled order-derivative of p at t, i.e. the table entry
//    E(t.p, t.q, order - 1 - t.p - t.q).
struct GroveRates {
  int order = 0;
  Bias bias;
  std::vector<Rat> p_by_triangle;  // indexed by pair_index(t.p, t.q)
  std::vector<Rat> e_by_triangle;

  Rat p(const Triangle& t) const;
  Rat E(const Triangle& t) const;
};

GroveRates grove_rates(int order, const Bias& bias);

// Dense rational table on the square |i| <= radius, |j| <= radius.
class SquareGrid {
 public:
  explicit SquareGrid(int radius);
  int radius() const { return radius_; }
  Rat& at(int i, int j);
  const Rat& at(int i, int j) const;
  // Reads with zero extension outside the square.
  Rat get(int i, int j) const;

 private:
  int radius_;
  std::vector<Rat> cells_;
};

// Aztec-diamond tables, all on the square of radius n + 2.  Both E and h
// satisfy the same linear recurrence
//   f_l(i, j) = (f_{l-1}(i+1, j) + f_{l-1}(i-1, j)
//              + f_{l-1}(i, j+1) + f_{l-1}(i, j-1)) / 2 - f_{l-2}(i, j)
// and differ only in their seeds: E_{-1} = E_0 = delta at the origin, while
// h_{-1} = 0, h_0 = delta.
SquareGrid aztec_E(int n);
SquareGrid aztec_h(int n);

// Exact probability that a random tiling of the order-n Aztec diamond
// contains a north-going domino covering the two cells just left and right
// above face (i, j):
//   p_n(i, j) = (1/2) * sum over l < n of h_l(i, j - (n - 1 - l)).
// Faces with i + j + n even can only carry south-going horizontal dominoes
// there, so their probability is exactly zero.
SquareGrid aztec_p(int n);

}  // namespace grovekit
