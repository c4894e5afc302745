#ifndef BREGCHEB_RENDER_HPP
#define BREGCHEB_RENDER_HPP

// Data behind the figures: F_C sampled on a planar grid (CSV or binary PPM)
// and level sets {y in U : D(z, y) = r} traced along rays from z.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "bregcheb/farthest.hpp"

namespace bregcheb::render {

struct Region {
  double x0 = 0.0, y0 = 0.0, x1 = 10.0, y1 = 10.0;
};

/// [0,10]^2 for small segments (a < 10), [0,50]^2 otherwise.
inline Region default_region(double a) {
  const double side = a < 10.0 ? 10.0 : 50.0;
  return {0.0, 0.0, side, side};
}

/// Row-major N x N samples: row j has y = y0 + j (y1 - y0)/(N - 1), column i likewise in x.
struct Grid {
  Region region;
  int res = 0;
  std::vector<double> values;

  double x(int i) const { return region.x0 + (region.x1 - region.x0) * i / (res - 1); }
  double y(int j) const { return region.y0 + (region.y1 - region.y0) * j / (res - 1); }
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * res + i]; }
};

inline Grid colormap_grid(const LegendreFunction& F, const EnumeratedSet& S, const Region& region,
                          int res) {
  if (F.dimension() != 2) throw InvalidInput("colormap requires a planar generator");
  if (res < 2) throw InvalidInput("colormap resolution must be >= 2");
  if (!(region.x1 > region.x0) || !(region.y1 > region.y0))
    throw InvalidInput("degenerate colormap region");
  Grid g{region, res, {}};
  g.values.reserve(static_cast<std::size_t>(res) * res);
  for (int j = 0; j < res; ++j)
    for (int i = 0; i < res; ++i) g.values.push_back(farthest_value(F, S, Point{{g.x(i), g.y(j)}}));
  return g;
}

inline std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string grid_csv(const Grid& g) {
  std::string out = "x,y,value\n";
  for (int j = 0; j < g.res; ++j)
    for (int i = 0; i < g.res; ++i)
      out += format_real(g.x(i)) + "," + format_real(g.y(j)) + "," + format_real(g.at(i, j)) + "\n";
  return out;
}

/// Binary P6 image, top row = largest y.  Finite cells are min-max normalized
/// onto a 256-step blue-to-red ramp; non-finite cells are black.
inline std::string grid_ppm(const Grid& g) {
  double lo = kInf, hi = -kInf;
  for (double v : g.values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  std::string out = "P6\n" + std::to_string(g.res) + " " + std::to_string(g.res) + "\n255\n";
  for (int j = g.res - 1; j >= 0; --j) {
    for (int i = 0; i < g.res; ++i) {
      const double v = g.at(i, j);
      unsigned char rgb[3] = {0, 0, 0};
      if (std::isfinite(v)) {
        const double s = hi > lo ? (v - lo) / (hi - lo) : 0.0;
        const int step = std::clamp(static_cast<int>(s * 255.0 + 0.5), 0, 255);
        rgb[0] = static_cast<unsigned char>(step);
        rgb[2] = static_cast<unsigned char>(255 - step);
      }
      out.append(reinterpret_cast<const char*>(rgb), 3);
    }
  }
  return out;
}

struct SphereSample {
  int ray = 0;
  double angle = 0.0;
  int crossing = -1;  // -1: no crossing on this ray
  Point point;
};

namespace detail {

/// Largest t with z + t u still in U (infinite for full-space generators).
inline double ray_extent(const LegendreFunction& F, const Point& z, const Point& u) {
  if (F.kind() == Kind::Energy || F.kind() == Kind::Quadratic) return kInf;
  double t = kInf;
  for (Eigen::Index j = 0; j < z.size(); ++j)
    if (u[j] < 0.0) t = std::min(t, z[j] / -u[j]);
  return t;
}

}  // namespace detail

/// Boundary samples of the right Bregman sphere of radius r around z along
/// `rays` equally spaced directions.  Each ray is pre-scanned at 64 points;
/// every sign change of D(z, .) - r is refined by bisection.
inline std::vector<SphereSample> sphere(const LegendreFunction& F, const Point& z, double r,
                                        int rays, double tol = 1e-10) {
  if (F.dimension() != 2) throw InvalidInput("sphere requires a planar generator");
  if (!(r >= 0.0)) throw InvalidInput("sphere radius must be nonnegative");
  if (rays < 1) throw InvalidInput("sphere needs at least one ray");
  if (!in_interior(F, z)) throw DomainError("sphere center outside int dom f");

  std::vector<SphereSample> out;
  constexpr int kScan = 64;
  for (int k = 0; k < rays; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / rays;
    const Point u{{std::cos(angle), std::sin(angle)}};
    if (r == 0.0) {
      out.push_back({k, angle, 0, z});
      continue;
    }
    auto level = [&](double t) { return distance(F, z, Point(z + t * u)) - r; };

    const double extent = detail::ray_extent(F, z, u);
    double t_hi;
    if (std::isfinite(extent)) {
      t_hi = extent * (1.0 - 1e-12);
    } else {
      t_hi = 1.0;
      while (level(t_hi) < 0.0 && t_hi < 1e12) t_hi *= 2.0;
    }

    int found = 0;
    double t_prev = 0.0;
    double h_prev = -r;
    for (int s = 1; s <= kScan; ++s) {
      const double t = t_hi * s / kScan;
      const double h = level(t);
      if ((h_prev < 0.0) != (h < 0.0)) {
        double lo = t_prev, hi = t;
        const bool rising = h_prev < 0.0;
        while (hi - lo > tol * std::max(1.0, hi)) {
          const double mid = 0.5 * (lo + hi);
          if (mid <= lo || mid >= hi) break;
          ((level(mid) < 0.0) == rising ? lo : hi) = mid;
        }
        out.push_back({k, angle, found++, Point(z + 0.5 * (lo + hi) * u)});
      }
      t_prev = t;
      h_prev = h;
    }
    if (found == 0) {
      out.push_back({k, angle, -1, Point::Constant(2, std::nan(""))});
    }
  }
  return out;
}

inline std::string sphere_csv(const std::vector<SphereSample>& samples) {
  std::string out = "ray,angle,crossing,x,y\n";
  for (const auto& s : samples) {
    out += std::to_string(s.ray) + "," + format_real(s.angle) + "," + std::to_string(s.crossing) +
           "," + format_real(s.point[0]) + "," + format_real(s.point[1]) + "\n";
  }
  return out;
}

}  // namespace bregcheb::render

#endif  // BREGCHEB_RENDER_HPP
