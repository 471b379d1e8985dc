#include "grovekit/arctic.hpp"

#include <cmath>
#include <future>
#include <thread>

#include "grovekit/rng.hpp"
#include "grovekit/shuffle.hpp"

namespace grovekit {

Position circle_position(const Rat& x, const Rat& y, const Rat& z) {
  const Rat norm2 = x * x + y * y + z * z;
  const Rat half(1, 2);
  if (norm2 > half) return Position::kOutside;
  if (norm2 < half) return Position::kInside;
  return Position::kOn;
}

namespace {

std::array<Rat, 3> scaled_dual(const Bias& bias, const Rat& x, const Rat& y,
                               const Rat& z) {
  return {(bias.alpha + bias.beta) * x, (bias.alpha + bias.gamma) * y,
          (bias.beta + bias.gamma) * z};
}

}  // namespace

Position ellipse_position(const Bias& bias, const Rat& x, const Rat& y,
                          const Rat& z) {
  bias.require_valid();
  const auto [r, s, t] = scaled_dual(bias, x, y, z);
  const Rat lhs = r * s + r * t + s * t;
  const Rat rhs = (r * r + s * s + t * t) / 2;
  if (lhs < rhs) return Position::kOutside;
  if (lhs > rhs) return Position::kInside;
  return Position::kOn;
}

Family sector_of(const Bias& bias, const Rat& x, const Rat& y, const Rat& z) {
  GK_ARG_CHECK(ellipse_position(bias, x, y, z) == Position::kOutside,
               "sector is defined only strictly outside the boundary");
  const auto [r, s, t] = scaled_dual(bias, x, y, z);
  if (t < s && t < r) return Family::A;
  if (s < t && s < r) return Family::B;
  if (r < t && r < s) return Family::C;
  throw internal_error("no strictly smallest scaled coordinate");
}

TemperateRatio temperate_ratio(const Rat& alpha, const Rat& beta) {
  GK_ARG_CHECK(alpha >= 0 && beta >= 0 && alpha + beta <= 1,
               "bias weights must be nonnegative and sum to at most 1");
  const Rat gamma = Rat(1) - alpha - beta;
  const Rat fa = alpha + beta;
  const Rat fb = alpha + gamma;
  const Rat fc = beta + gamma;
  TemperateRatio out;
  if (fa == 0 || fb == 0 || fc == 0) {
    out.degenerate = true;
    return out;
  }
  const double a = static_cast<double>(fa);
  const double b = static_cast<double>(fb);
  const double c = static_cast<double>(fc);
  const double denom = std::pow(a * b + a * c + b * c, 1.5);
  out.value = M_PI * a * b * c / denom;
  return out;
}

MisfitReport misfit_stats(const Grove& g, double epsilon, const Bias& bias) {
  GK_ARG_CHECK(epsilon >= 0.0, "epsilon must be nonnegative");
  bias.require_valid();
  const int n = g.order();
  const double fa = static_cast<double>(bias.alpha + bias.beta);
  const double fb = static_cast<double>(bias.alpha + bias.gamma);
  const double fc = static_cast<double>(bias.beta + bias.gamma);
  const double shrink = 1.0 / (1.0 + epsilon);
  MisfitReport rep;
  for (const Label& e : g.edges()) {
    const auto [u, v] = label_endpoints(e, n);
    const auto pu = scale_vertex(u, n);
    const auto pv = scale_vertex(v, n);
    // Midpoint, pulled toward the triangle center.
    const double x = -1.0 / 3 + ((pu[0] + pv[0]) / 2 + 1.0 / 3) * shrink;
    const double y = -1.0 / 3 + ((pu[1] + pv[1]) / 2 + 1.0 / 3) * shrink;
    const double z = -1.0 / 3 + ((pu[2] + pv[2]) / 2 + 1.0 / 3) * shrink;
    const double r = fa * x, s = fb * y, t = fc * z;
    const double q = r * s + r * t + s * t - (r * r + s * s + t * t) / 2;
    if (q >= 0.0) continue;  // inside or on the boundary: not scored
    ++rep.outside_edges;
    Family sector;
    if (t < s && t < r) {
      sector = Family::A;
    } else if (s <= r) {
      sector = Family::B;
    } else {
      sector = Family::C;
    }
    if (sector != e.fam) ++rep.mismatched;
  }
  rep.fraction = rep.outside_edges == 0
                     ? 0.0
                     : static_cast<double>(rep.mismatched) /
                           static_cast<double>(rep.outside_edges);
  return rep;
}

std::vector<ConvergenceRow> convergence_experiment(
    const std::vector<int>& orders, int samples, double epsilon,
    const Bias& bias, uint64_t seed) {
  GK_ARG_CHECK(samples >= 1, "need at least one sample");
  bias.require_valid();
  std::vector<ConvergenceRow> rows;
  for (size_t oi = 0; oi < orders.size(); ++oi) {
    const int order = orders[oi];
    GK_ARG_CHECK(order >= 1, "order must be positive");
    std::vector<double> fractions(static_cast<size_t>(samples), 0.0);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int stride =
        static_cast<int>(std::min<size_t>(hw, static_cast<size_t>(samples)));
    std::vector<std::future<void>> futures;
    for (int c = 0; c < stride; ++c) {
      futures.push_back(std::async(std::launch::async, [&, c] {
        for (int r = c; r < samples; r += stride) {
          const uint64_t replicate_seed = RandomSource::derive(
              seed, oi * static_cast<uint64_t>(samples) +
                        static_cast<uint64_t>(r));
          const Grove g = generate(order, bias, replicate_seed);
          fractions[static_cast<size_t>(r)] =
              misfit_stats(g, epsilon, bias).fraction;
        }
      }));
    }
    for (auto& f : futures) f.get();
    double mean = 0.0;
    for (double f : fractions) mean += f;
    mean /= samples;
    double var = 0.0;
    for (double f : fractions) var += (f - mean) * (f - mean);
    const double stddev = samples > 1 ? std::sqrt(var / (samples - 1)) : 0.0;
    rows.push_back(ConvergenceRow{order, samples, mean, stddev});
  }
  return rows;
}

std::vector<std::array<double, 3>> boundary_polyline(const Bias& bias,
                                                     int segments) {
  GK_ARG_CHECK(segments >= 3, "need at least 3 segments");
  bias.require_valid();
  const double fa = static_cast<double>(bias.alpha + bias.beta);
  const double fb = static_cast<double>(bias.alpha + bias.gamma);
  const double fc = static_cast<double>(bias.beta + bias.gamma);
  std::vector<std::array<double, 3>> pts;
  if (fa == 0.0 || fb == 0.0 || fc == 0.0) return pts;
  const auto form = [&](double x, double y, double z) {
    const double r = fa * x, s = fb * y, t = fc * z;
    return r * s + r * t + s * t - (r * r + s * s + t * t) / 2;
  };
  // Orthonormal basis of the plane x + y + z = const.
  const double u0 = 1 / std::sqrt(2.0), u1 = -u0, u2 = 0.0;
  const double w0 = 1 / std::sqrt(6.0), w1 = w0, w2 = -2 * w0;
  const double cx = -1.0 / 3;
  GK_CHECK(form(cx, cx, cx) > 0.0, "triangle center is not inside");
  pts.reserve(static_cast<size_t>(segments));
  for (int k = 0; k < segments; ++k) {
    const double theta = 2.0 * M_PI * k / segments;
    const double dx = std::cos(theta) * u0 + std::sin(theta) * w0;
    const double dy = std::cos(theta) * u1 + std::sin(theta) * w1;
    const double dz = std::cos(theta) * u2 + std::sin(theta) * w2;
    double lo = 0.0, hi = 0.5;
    int grow = 0;
    while (form(cx + hi * dx, cx + hi * dy, cx + hi * dz) > 0.0) {
      hi *= 2;
      GK_CHECK(++grow < 64, "boundary ray never leaves the region");
    }
    for (int it = 0; it < 80; ++it) {
      const double mid = (lo + hi) / 2;
      if (form(cx + mid * dx, cx + mid * dy, cx + mid * dz) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double rho = (lo + hi) / 2;
    pts.push_back({cx + rho * dx, cx + rho * dy, cx + rho * dz});
  }
  return pts;
}

}  // namespace grovekit
