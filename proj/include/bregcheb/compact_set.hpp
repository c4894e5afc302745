#ifndef BREGCHEB_COMPACT_SET_HPP
#define BREGCHEB_COMPACT_SET_HPP

#include <string>
#include <utility>
#include <vector>

#include "bregcheb/legendre.hpp"

namespace bregcheb {

/// A nonempty compact set C inside U: either a finite list of points or a
/// line segment sampled at equally spaced parameters (endpoints included).
class CompactSet {
 public:
  enum class Kind { Finite, Segment };

  static CompactSet finite(std::vector<Point> points) {
    if (points.empty()) throw InvalidInput("compact set must be nonempty");
    check_points(points);
    return CompactSet(Kind::Finite, std::move(points), 0);
  }

  static CompactSet segment(Point c0, Point c1, int samples) {
    if (samples < 2) throw InvalidInput("segment needs at least 2 samples");
    std::vector<Point> ends{std::move(c0), std::move(c1)};
    check_points(ends);
    if (ends[0] == ends[1]) throw InvalidInput("segment endpoints must be distinct");
    return CompactSet(Kind::Segment, std::move(ends), samples);
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  int samples() const noexcept { return samples_; }
  int dimension() const { return static_cast<int>(points_.front().size()); }

  /// Finite: insertion order.  Segment: increasing lambda, c_lambda = (1-lambda) c0 + lambda c1.
  std::vector<Point> enumerate() const {
    if (kind_ == Kind::Finite) return points_;
    std::vector<Point> out;
    out.reserve(samples_);
    const int last = samples_ - 1;
    for (int i = 0; i <= last; ++i) {
      if (i == 0) {
        out.push_back(points_[0]);
      } else if (i == last) {
        out.push_back(points_[1]);
      } else {
        const double lambda = static_cast<double>(i) / last;
        out.push_back((1.0 - lambda) * points_[0] + lambda * points_[1]);
      }
    }
    return out;
  }

  std::size_t size() const { return kind_ == Kind::Finite ? points_.size() : samples_; }

  /// Number of pairwise distinct enumerated points.
  std::size_t distinct_count() const {
    if (kind_ == Kind::Segment) return samples_;
    std::vector<Point> seen;
    for (const auto& p : points_) {
      bool dup = false;
      for (const auto& q : seen) dup = dup || p == q;
      if (!dup) seen.push_back(p);
    }
    return seen.size();
  }

 private:
  CompactSet(Kind kind, std::vector<Point> points, int samples)
      : kind_(kind), points_(std::move(points)), samples_(samples) {}

  static void check_points(const std::vector<Point>& points) {
    const auto dim = points.front().size();
    if (dim < 1) throw InvalidInput("points must have dimension >= 1");
    for (const auto& p : points) {
      if (p.size() != dim) throw InvalidInput("points have mixed dimensions");
      if (!p.allFinite()) throw InvalidInput("points must have finite coordinates");
    }
  }

  Kind kind_;
  std::vector<Point> points_;
  int samples_;
};

/// Every enumerated point must lie in U.  Orthant domains are convex, so
/// checking the samples of a segment is exact there.
inline void validate(const CompactSet& C, const LegendreFunction& F) {
  if (C.dimension() != F.dimension()) throw InvalidInput("set and generator dimensions differ");
  const auto pts = C.enumerate();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!in_interior(F, pts[i]))
      throw DomainError("compact set point outside int dom f", static_cast<long>(i));
  }
}

/// The two-dimensional test segment from (1, a) to (a, 1), validated against F.
inline CompactSet make_segment(const LegendreFunction& F, double a, int samples) {
  if (!(a > 1.0)) throw InvalidInput("segment parameter a must exceed 1");
  if (samples < 3 || samples % 2 == 0)
    throw InvalidInput("segment samples must be odd and >= 3 so that lambda = 1/2 is sampled");
  if (F.dimension() != 2) throw InvalidInput("segment requires a two-dimensional generator");
  auto C = CompactSet::segment(Point{{1.0, a}}, Point{{a, 1.0}}, samples);
  validate(C, F);
  return C;
}

inline constexpr int kDefaultSegmentSamples = 2049;

}  // namespace bregcheb

#endif  // BREGCHEB_COMPACT_SET_HPP
