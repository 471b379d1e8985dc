#include "grovekit/rates.hpp"

#include <algorithm>
#include <cstdlib>

namespace grovekit {

Trivar Trivar::one() { return term(0, 0, 0, Rat(1)); }

Trivar Trivar::term(int dx, int dy, int dz, const Rat& c) {
  Trivar t;
  t.add_term(dx, dy, dz, c);
  return t;
}

void Trivar::add_term(int dx, int dy, int dz, const Rat& c) {
  if (c == 0) return;
  const Key k{dx, dy, dz};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Trivar Trivar::operator+(const Trivar& o) const {
  Trivar r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k[0], k[1], k[2], c);
  return r;
}

Trivar Trivar::operator-(const Trivar& o) const {
  Trivar r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k[0], k[1], k[2], -c);
  return r;
}

Trivar Trivar::operator*(const Trivar& o) const {
  Trivar r;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      r.add_term(ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ca * cb);
    }
  }
  return r;
}

Rat Trivar::coeff(int dx, int dy, int dz) const {
  auto it = terms_.find(Key{dx, dy, dz});
  return it == terms_.end() ? Rat(0) : it->second;
}

Trivar denominator_poly(const Bias& bias) {
  bias.require_valid();
  Trivar d;
  d.add_term(0, 0, 0, Rat(1));
  d.add_term(1, 1, 1, Rat(1));
  d.add_term(1, 0, 0, -bias.gamma);
  d.add_term(0, 1, 1, -bias.gamma);
  d.add_term(0, 1, 0, -bias.beta);
  d.add_term(1, 0, 1, -bias.beta);
  d.add_term(0, 0, 1, -bias.alpha);
  d.add_term(1, 1, 0, -bias.alpha);
  return d;
}

namespace {

// Index of (r, s, t) in the tetrahedral layout: levels by r + s + t, then
// rows by r, then s.
size_t tetra_index(int r, int s, int t) {
  const int64_t level = r + s + t;
  const int64_t base = level * (level + 1) * (level + 2) / 6;
  const int64_t within = static_cast<int64_t>(r) * (level + 1) -
                         static_cast<int64_t>(r) * (r - 1) / 2 + s;
  return static_cast<size_t>(base + within);
}

size_t tetra_size(int depth) {
  return static_cast<size_t>(static_cast<int64_t>(depth + 1) * (depth + 2) *
                             (depth + 3) / 6);
}

}  // namespace

Grid3::Grid3(int depth) : depth_(depth), cells_(tetra_size(depth)) {
  GK_ARG_CHECK(depth >= 0, "depth must be nonnegative");
}

Rat& Grid3::at(int r, int s, int t) {
  GK_ARG_CHECK(r >= 0 && s >= 0 && t >= 0 && r + s + t <= depth_,
               "grid point out of range");
  return cells_[tetra_index(r, s, t)];
}

const Rat& Grid3::at(int r, int s, int t) const {
  GK_ARG_CHECK(r >= 0 && s >= 0 && t >= 0 && r + s + t <= depth_,
               "grid point out of range");
  return cells_[tetra_index(r, s, t)];
}

Grid3 grove_E_dp(int depth, const Bias& bias) {
  bias.require_valid();
  const Rat& al = bias.alpha;
  const Rat& be = bias.beta;
  const Rat& ga = bias.gamma;
  Grid3 g(depth);
  g.at(0, 0, 0) = Rat(1);
  for (int level = 1; level <= depth; ++level) {
    for (int r = 0; r <= level; ++r) {
      for (int s = 0; s + r <= level; ++s) {
        const int t = level - r - s;
        Rat v;
        if (r > 0 && s > 0 && t > 0) {
          v = -g.at(r - 1, s - 1, t - 1) +
              ga * (g.at(r - 1, s, t) + g.at(r, s - 1, t - 1)) +
              be * (g.at(r, s - 1, t) + g.at(r - 1, s, t - 1)) +
              al * (g.at(r, s, t - 1) + g.at(r - 1, s - 1, t));
        } else if (t == 0 && r > 0 && s > 0) {
          v = ga * g.at(r - 1, s, 0) + be * g.at(r, s - 1, 0) +
              al * g.at(r - 1, s - 1, 0);
        } else if (s == 0 && r > 0 && t > 0) {
          v = ga * g.at(r - 1, 0, t) + be * g.at(r - 1, 0, t - 1) +
              al * g.at(r, 0, t - 1);
        } else if (r == 0 && s > 0 && t > 0) {
          v = ga * g.at(0, s - 1, t - 1) + be * g.at(0, s - 1, t) +
              al * g.at(0, s, t - 1);
        } else if (s == 0 && t == 0) {
          v = ga * g.at(r - 1, 0, 0);
        } else if (r == 0 && t == 0) {
          v = be * g.at(0, s - 1, 0);
        } else {
          v = al * g.at(0, 0, t - 1);
        }
        g.at(r, s, t) = v;
      }
    }
  }
  return g;
}

Grid3 grove_E_series(int depth, const Bias& bias) {
  const Trivar den = denominator_poly(bias);
  const Rat lead = den.coeff(0, 0, 0);
  GK_CHECK(lead != 0, "denominator has no constant term");
  Grid3 g(depth);
  for (int level = 0; level <= depth; ++level) {
    for (int r = 0; r <= level; ++r) {
      for (int s = 0; s + r <= level; ++s) {
        const int t = level - r - s;
        Rat acc = (level == 0) ? Rat(1) : Rat(0);
        for (const auto& [k, c] : den.terms()) {
          if (k[0] == 0 && k[1] == 0 && k[2] == 0) continue;
          const int rr = r - k[0], ss = s - k[1], tt = t - k[2];
          if (rr < 0 || ss < 0 || tt < 0) continue;
          acc -= c * g.at(rr, ss, tt);
        }
        g.at(r, s, t) = acc / lead;
      }
    }
  }
  // Multiply back: den * series must be exactly 1 through this depth.
  for (int level = 0; level <= depth; ++level) {
    for (int r = 0; r <= level; ++r) {
      for (int s = 0; s + r <= level; ++s) {
        const int t = level - r - s;
        Rat acc;
        for (const auto& [k, c] : den.terms()) {
          const int rr = r - k[0], ss = s - k[1], tt = t - k[2];
          if (rr < 0 || ss < 0 || tt < 0) continue;
          acc += c * g.at(rr, ss, tt);
        }
        GK_CHECK(acc == ((level == 0) ? Rat(1) : Rat(0)),
                 "series inversion failed to multiply back to 1");
      }
    }
  }
  return g;
}

Grid3 grove_E(int depth, const Bias& bias) {
  Grid3 dp = grove_E_dp(depth, bias);
  const Grid3 series = grove_E_series(depth, bias);
  GK_CHECK(dp == series, "influence-table routes disagree");
  return dp;
}

Rat GroveRates::p(const Triangle& t) const {
  return p_by_triangle.at(static_cast<size_t>(pair_index(t.p, t.q)));
}

Rat GroveRates::E(const Triangle& t) const {
  return e_by_triangle.at(static_cast<size_t>(pair_index(t.p, t.q)));
}

GroveRates grove_rates(int order, const Bias& bias) {
  GK_ARG_CHECK(order >= 1, "order must be positive");
  bias.require_valid();
  const Grid3 table = grove_E(order > 0 ? order - 1 : 0, bias);
  const Rat creation = bias.beta + bias.gamma;
  GroveRates rates;
  rates.order = order;
  rates.bias = bias;
  const size_t nt = static_cast<size_t>(triangle_count(order));
  rates.p_by_triangle.assign(nt, Rat(0));
  rates.e_by_triangle.assign(nt, Rat(0));
  for (const Triangle& t : downward_triangles(order)) {
    const size_t idx = static_cast<size_t>(pair_index(t.p, t.q));
    Rat sum;
    for (int l = 0; l <= order - t.p - t.q - 2; ++l) {
      sum += table.at(t.p, t.q, l);
    }
    rates.p_by_triangle[idx] = creation * sum;
    rates.e_by_triangle[idx] = table.at(t.p, t.q, order - 1 - t.p - t.q);
  }
  return rates;
}

SquareGrid::SquareGrid(int radius)
    : radius_(radius),
      cells_(static_cast<size_t>(2 * radius + 1) *
             static_cast<size_t>(2 * radius + 1)) {
  GK_ARG_CHECK(radius >= 0, "radius must be nonnegative");
}

Rat& SquareGrid::at(int i, int j) {
  GK_ARG_CHECK(std::abs(i) <= radius_ && std::abs(j) <= radius_,
               "grid point out of range");
  return cells_[static_cast<size_t>(i + radius_) *
                    static_cast<size_t>(2 * radius_ + 1) +
                static_cast<size_t>(j + radius_)];
}

const Rat& SquareGrid::at(int i, int j) const {
  GK_ARG_CHECK(std::abs(i) <= radius_ && std::abs(j) <= radius_,
               "grid point out of range");
  return cells_[static_cast<size_t>(i + radius_) *
                    static_cast<size_t>(2 * radius_ + 1) +
                static_cast<size_t>(j + radius_)];
}

Rat SquareGrid::get(int i, int j) const {
  if (std::abs(i) > radius_ || std::abs(j) > radius_) return Rat(0);
  return at(i, j);
}

namespace {

// One step of the shared Aztec recurrence.
SquareGrid aztec_step(const SquareGrid& prev, const SquareGrid& prev2) {
  SquareGrid cur(prev.radius());
  const Rat half(1, 2);
  for (int i = -cur.radius(); i <= cur.radius(); ++i) {
    for (int j = -cur.radius(); j <= cur.radius(); ++j) {
      cur.at(i, j) = half * (prev.get(i + 1, j) + prev.get(i - 1, j) +
                             prev.get(i, j + 1) + prev.get(i, j - 1)) -
                     prev2.get(i, j);
    }
  }
  return cur;
}

SquareGrid aztec_table(int n, bool seed_prev2_delta) {
  GK_ARG_CHECK(n >= 0, "order must be nonnegative");
  const int radius = n + 2;
  SquareGrid prev2(radius);  // the (l-2) table, seeded at l = 1
  SquareGrid prev(radius);   // the (l-1) table
  if (seed_prev2_delta) prev2.at(0, 0) = Rat(1);
  prev.at(0, 0) = Rat(1);
  if (n == 0) return prev;
  SquareGrid cur(radius);
  for (int l = 1; l <= n; ++l) {
    cur = aztec_step(prev, prev2);
    prev2 = prev;
    prev = cur;
  }
  return prev;
}

}  // namespace

SquareGrid aztec_E(int n) { return aztec_table(n, /*seed_prev2_delta=*/true); }

SquareGrid aztec_h(int n) { return aztec_table(n, /*seed_prev2_delta=*/false); }

SquareGrid aztec_p(int n) {
  GK_ARG_CHECK(n >= 1, "order must be positive");
  const int radius = n + 2;
  SquareGrid p(radius);
  SquareGrid prev2(radius);
  SquareGrid prev(radius);
  prev.at(0, 0) = Rat(1);  // h_0
  const Rat half(1, 2);
  for (int l = 0; l <= n - 1; ++l) {
    if (l > 0) {
      SquareGrid cur = aztec_step(prev, prev2);
      prev2 = prev;
      prev = cur;
    }
    const int shift = n - 1 - l;
    for (int i = -radius; i <= radius; ++i) {
      for (int j = -radius; j <= radius; ++j) {
        const Rat h = prev.get(i, j - shift);
        if (h != 0) p.at(i, j) += half * h;
      }
    }
  }
  return p;
}

}  // namespace grovekit
