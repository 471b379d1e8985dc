#include "grovekit/aztec.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "json.hpp"

namespace grovekit {

namespace {

int64_t cell_key(int i2, int j2) {
  return (static_cast<int64_t>(i2) << 32) ^ static_cast<uint32_t>(j2);
}

bool in_diamond(int i2, int j2, int n) {
  return std::abs(i2) + std::abs(j2) <= 2 * n;
}

// The two cells a domino covers, in doubled coordinates.
std::array<std::pair<int, int>, 2> domino_cells(const Domino& d) {
  if (d.horizontal) {
    return {{{d.i2, d.j2}, {d.i2 + 2, d.j2}}};
  }
  return {{{d.i2, d.j2}, {d.i2, d.j2 + 2}}};
}

}  // namespace

bool cell_is_white(int i2, int j2, int n) {
  const int sum = (i2 + j2) / 2;  // a + b is an integer for cell centers
  return ((sum % 2) + 2) % 2 == ((n + 1) % 2);
}

Compass classify(const Domino& d, int n) {
  if (d.horizontal) {
    return cell_is_white(d.i2, d.j2, n) ? Compass::kNorth : Compass::kSouth;
  }
  return cell_is_white(d.i2, d.j2 + 2, n) ? Compass::kWest : Compass::kEast;
}

AztecTiling::AztecTiling(int order, std::vector<Domino> dominoes)
    : order_(order), dominoes_(std::move(dominoes)) {
  GK_ARG_CHECK(order >= 1, "order must be positive");
  std::sort(dominoes_.begin(), dominoes_.end());
  std::set<std::pair<int, int>> covered;
  for (const Domino& d : dominoes_) {
    GK_ARG_CHECK((d.i2 % 2 != 0) && (d.j2 % 2 != 0),
                 "cell centers must be half-integers");
    for (const auto& [ci, cj] : domino_cells(d)) {
      GK_ARG_CHECK(in_diamond(ci, cj, order_), "cell outside the diamond");
      GK_ARG_CHECK(covered.emplace(ci, cj).second, "overlapping dominoes");
    }
  }
  GK_ARG_CHECK(static_cast<int>(covered.size()) == 2 * order_ * (order_ + 1),
               "dominoes do not cover the diamond");
}

std::string AztecTiling::to_json() const {
  nlohmann::json out;
  out["order"] = order_;
  auto& arr = out["dominoes"] = nlohmann::json::array();
  for (const Domino& d : dominoes_) {
    arr.push_back({{"i", d.i2}, {"j", d.j2}, {"orient", d.horizontal ? "h" : "v"}});
  }
  return out.dump();
}

AztecTiling AztecTiling::from_json(const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid tiling JSON: ") +
                                e.what());
  }
  GK_ARG_CHECK(in.is_object() && in.contains("order") &&
                   in.contains("dominoes") && in["order"].is_number_integer() &&
                   in["dominoes"].is_array(),
               "tiling JSON needs integer 'order' and array 'dominoes'");
  std::vector<Domino> ds;
  for (const auto& entry : in["dominoes"]) {
    GK_ARG_CHECK(entry.is_object() && entry.contains("i") &&
                     entry.contains("j") && entry.contains("orient") &&
                     entry["i"].is_number_integer() &&
                     entry["j"].is_number_integer() &&
                     entry["orient"].is_string(),
                 "each domino needs integer 'i', 'j' and string 'orient'");
    const std::string orient = entry["orient"].get<std::string>();
    GK_ARG_CHECK(orient == "h" || orient == "v",
                 "domino orientation must be 'h' or 'v'");
    ds.push_back(Domino{entry["i"].get<int>(), entry["j"].get<int>(),
                        orient == "h"});
  }
  return AztecTiling(in["order"].get<int>(), std::move(ds));
}

AztecTiling domino_shuffle_once(const AztecTiling& t, RandomSource& rng) {
  const int n = t.order();
  const std::vector<Domino>& ds = t.dominoes();
  std::map<int64_t, size_t> cell_of;
  for (size_t idx = 0; idx < ds.size(); ++idx) {
    for (const auto& [ci, cj] : domino_cells(ds[idx])) {
      cell_of.emplace(cell_key(ci, cj), idx);
    }
  }

  // Annihilate exchanging pairs.
  std::vector<bool> dead(ds.size(), false);
  for (size_t idx = 0; idx < ds.size(); ++idx) {
    if (dead[idx]) continue;
    const Domino& d = ds[idx];
    const Compass c = classify(d, n);
    if (d.horizontal && c == Compass::kNorth) {
      auto it = cell_of.find(cell_key(d.i2, d.j2 + 2));
      if (it == cell_of.end() || dead[it->second]) continue;
      const Domino& other = ds[it->second];
      if (other.horizontal && other.i2 == d.i2 && other.j2 == d.j2 + 2) {
        GK_CHECK(classify(other, n) == Compass::kSouth,
                 "domino above a north domino must be south");
        dead[idx] = dead[it->second] = true;
      }
    } else if (!d.horizontal && c == Compass::kEast) {
      auto it = cell_of.find(cell_key(d.i2 + 2, d.j2));
      if (it == cell_of.end() || dead[it->second]) continue;
      const Domino& other = ds[it->second];
      if (!other.horizontal && other.i2 == d.i2 + 2 && other.j2 == d.j2) {
        GK_CHECK(classify(other, n) == Compass::kWest,
                 "domino right of an east domino must be west");
        dead[idx] = dead[it->second] = true;
      }
    }
  }

  // Slide survivors one cell along their direction.
  std::vector<Domino> next;
  next.reserve(ds.size() + 2 * static_cast<size_t>(n) + 2);
  for (size_t idx = 0; idx < ds.size(); ++idx) {
    if (dead[idx]) continue;
    Domino d = ds[idx];
    switch (classify(d, n)) {
      case Compass::kNorth:
        d.j2 += 2;
        break;
      case Compass::kSouth:
        d.j2 -= 2;
        break;
      case Compass::kEast:
        d.i2 += 2;
        break;
      case Compass::kWest:
        d.i2 -= 2;
        break;
    }
    next.push_back(d);
  }

  std::set<std::pair<int, int>> covered;
  for (const Domino& d : next) {
    for (const auto& [ci, cj] : domino_cells(d)) {
      GK_CHECK(in_diamond(ci, cj, n + 1), "slide left the larger diamond");
      GK_CHECK(covered.emplace(ci, cj).second, "slide produced an overlap");
    }
  }

  // Fill the vacated area 2x2 block by 2x2 block, scanning rows bottom-up.
  for (int j2 = -2 * (n + 1) + 1; j2 <= 2 * (n + 1) - 1; j2 += 2) {
    for (int i2 = -2 * (n + 1) + 1; i2 <= 2 * (n + 1) - 1; i2 += 2) {
      if (!in_diamond(i2, j2, n + 1) || covered.count({i2, j2})) continue;
      // The lowest-leftmost empty cell anchors an empty 2x2 block.
      for (const auto& [ci, cj] : {std::pair<int, int>{i2 + 2, j2},
                                   std::pair<int, int>{i2, j2 + 2},
                                   std::pair<int, int>{i2 + 2, j2 + 2}}) {
        GK_CHECK(in_diamond(ci, cj, n + 1) && !covered.count({ci, cj}),
                 "vacated area is not a union of 2x2 blocks");
      }
      if (rng.below(2) == 0) {
        next.push_back(Domino{i2, j2, true});
        next.push_back(Domino{i2, j2 + 2, true});
      } else {
        next.push_back(Domino{i2, j2, false});
        next.push_back(Domino{i2 + 2, j2, false});
      }
      covered.emplace(i2, j2);
      covered.emplace(i2 + 2, j2);
      covered.emplace(i2, j2 + 2);
      covered.emplace(i2 + 2, j2 + 2);
    }
  }
  return AztecTiling(n + 1, std::move(next));
}

AztecTiling generate_tiling(int order, uint64_t seed) {
  GK_ARG_CHECK(order >= 1, "order must be positive");
  RandomSource rng(seed);
  std::vector<Domino> base;
  if (rng.below(2) == 0) {
    base = {Domino{-1, -1, true}, Domino{-1, 1, true}};
  } else {
    base = {Domino{-1, -1, false}, Domino{1, -1, false}};
  }
  AztecTiling t(1, std::move(base));
  for (int k = 1; k < order; ++k) t = domino_shuffle_once(t, rng);
  return t;
}

namespace {

void enumerate_rec(int n, const std::vector<std::pair<int, int>>& cells,
                   size_t hint, std::set<std::pair<int, int>>& covered,
                   std::vector<Domino>& cur,
                   std::vector<AztecTiling>& out) {
  size_t i = hint;
  while (i < cells.size() && covered.count(cells[i]) != 0) ++i;
  if (i == cells.size()) {
    out.push_back(AztecTiling(n, cur));
    return;
  }
  const auto [a, b] = cells[i];
  covered.emplace(a, b);
  if (in_diamond(a + 2, b, n) && covered.count({a + 2, b}) == 0) {
    covered.emplace(a + 2, b);
    cur.push_back(Domino{a, b, true});
    enumerate_rec(n, cells, i + 1, covered, cur, out);
    cur.pop_back();
    covered.erase({a + 2, b});
  }
  if (in_diamond(a, b + 2, n) && covered.count({a, b + 2}) == 0) {
    covered.emplace(a, b + 2);
    cur.push_back(Domino{a, b, false});
    enumerate_rec(n, cells, i + 1, covered, cur, out);
    cur.pop_back();
    covered.erase({a, b + 2});
  }
  covered.erase({a, b});
}

}  // namespace

std::vector<AztecTiling> enumerate_all_tilings(int n) {
  GK_ARG_CHECK(n >= 1, "order must be positive");
  enforce_cost_guard(n <= 4, "tiling enumeration is limited to order 4");
  std::vector<std::pair<int, int>> cells;
  for (int j2 = -2 * n + 1; j2 <= 2 * n - 1; j2 += 2) {
    for (int i2 = -2 * n + 1; i2 <= 2 * n - 1; i2 += 2) {
      if (in_diamond(i2, j2, n)) cells.emplace_back(i2, j2);
    }
  }
  std::set<std::pair<int, int>> covered;
  std::vector<Domino> cur;
  std::vector<AztecTiling> out;
  enumerate_rec(n, cells, 0, covered, cur, out);
  return out;
}

std::vector<std::tuple<int, int, int, int>> tiling_face_exponents(
    const AztecTiling& t) {
  const int n = t.order();
  std::map<int64_t, const Domino*> at;
  for (const Domino& d : t.dominoes()) at.emplace(cell_key(d.i2, d.j2), &d);

  const auto starts_here = [&](int i2, int j2, bool horizontal) {
    auto it = at.find(cell_key(i2, j2));
    return it != at.end() && it->second->horizontal == horizontal;
  };

  std::vector<std::tuple<int, int, int, int>> out;
  for (int i = -n; i <= n; ++i) {
    for (int j = -(n - std::abs(i)); j <= n - std::abs(i); ++j) {
      int deg = 0;
      if (starts_here(2 * i - 1, 2 * j - 1, true)) ++deg;   // bottom pair
      if (starts_here(2 * i - 1, 2 * j + 1, true)) ++deg;   // top pair
      if (starts_here(2 * i - 1, 2 * j - 1, false)) ++deg;  // left pair
      if (starts_here(2 * i + 1, 2 * j - 1, false)) ++deg;  // right pair
      const int layer = ((i + j + n) % 2 + 2) % 2 == 0 ? 0 : -1;
      out.emplace_back(i, j, layer, 1 - deg);
    }
  }
  return out;
}

TilingMisfitReport tiling_misfit_stats(const AztecTiling& t, double epsilon) {
  GK_ARG_CHECK(epsilon >= 0.0, "epsilon must be nonnegative");
  const int n = t.order();
  const double scale = 1.0 / (n + 1) / (1.0 + epsilon);
  TilingMisfitReport rep;
  for (const Domino& d : t.dominoes()) {
    const double x = (d.horizontal ? d.i2 + 1 : d.i2) * 0.5 * scale;
    const double y = (d.horizontal ? d.j2 : d.j2 + 1) * 0.5 * scale;
    if (x * x + y * y <= 0.5) continue;  // inside or on: not scored
    ++rep.outside;
    const double ax = std::abs(x), ay = std::abs(y);
    bool ok = false;
    switch (classify(d, n)) {
      case Compass::kNorth:
        ok = y >= ax;
        break;
      case Compass::kSouth:
        ok = -y >= ax;
        break;
      case Compass::kEast:
        ok = x >= ay;
        break;
      case Compass::kWest:
        ok = -x >= ay;
        break;
    }
    if (!ok) ++rep.mismatched;
  }
  rep.fraction = rep.outside == 0 ? 0.0
                                  : static_cast<double>(rep.mismatched) /
                                        static_cast<double>(rep.outside);
  return rep;
}

}  // namespace grovekit
