#ifndef BREGCHEB_IO_HPP
#define BREGCHEB_IO_HPP

// JSON forms:
//   generator    {"kind": "energy"|"quad"|"negentropy"|"neglog", "dimension": J, "matrix": [[..]]}
//   compact set  {"kind": "finite"|"segment", "points": [[..], ..], "samples": N}
//   farthest     {"value": v, "argmax": [[..], ..], "witness_indices": [..]}
//   certificate  every CenterCertificate field
// Non-finite reals are written as the strings "inf", "-inf" and "nan".

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"

#include "bregcheb/center.hpp"

namespace bregcheb::io {

using nlohmann::json;

inline json real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline double real_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    if (s == "nan") return std::nan("");
    throw InvalidInput("expected a number, got '" + s + "'");
  }
  return j.get<double>();
}

inline json point(const Point& p) {
  json arr = json::array();
  for (double v : p) arr.push_back(real(v));
  return arr;
}

inline Point point_from(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("point must be a nonempty array");
  Point p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) p[static_cast<Eigen::Index>(i)] = real_from(j[i]);
  return p;
}

inline json points(const std::vector<Point>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(point(p));
  return arr;
}

inline json to_json(const LegendreFunction& F) {
  json j{{"kind", std::string(to_string(F.kind()))}, {"dimension", F.dimension()}};
  if (F.has_matrix()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < F.matrix().rows(); ++r) rows.push_back(point(F.matrix().row(r).transpose()));
    j["matrix"] = rows;
  }
  return j;
}

inline LegendreFunction legendre_from_json(const json& j) {
  const Kind kind = kind_from_string(j.at("kind").get<std::string>());
  const int dim = j.at("dimension").get<int>();
  if (kind != Kind::Quadratic) return LegendreFunction::make(kind, dim);
  const auto& rows = j.at("matrix");
  if (static_cast<int>(rows.size()) != dim) throw InvalidInput("matrix row count != dimension");
  Eigen::MatrixXd A(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const Point row = point_from(rows[r]);
    if (row.size() != dim) throw InvalidInput("matrix column count != dimension");
    A.row(r) = row.transpose();
  }
  return LegendreFunction::quadratic(A);
}

inline json to_json(const CompactSet& C) {
  json j{{"kind", C.kind() == CompactSet::Kind::Finite ? "finite" : "segment"},
         {"points", points(C.points())}};
  if (C.kind() == CompactSet::Kind::Segment) j["samples"] = C.samples();
  return j;
}

inline CompactSet compact_set_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  std::vector<Point> pts;
  for (const auto& p : j.at("points")) pts.push_back(point_from(p));
  if (kind == "finite") return CompactSet::finite(std::move(pts));
  if (kind == "segment") {
    if (pts.size() != 2) throw InvalidInput("segment needs exactly two endpoints");
    return CompactSet::segment(pts[0], pts[1], j.at("samples").get<int>());
  }
  throw InvalidInput("unknown compact set kind '" + kind + "'");
}

inline json to_json(const FarthestResult& r) {
  return json{{"value", real(r.value)},
              {"argmax", points(r.argmax)},
              {"witness_indices", r.witness_indices}};
}

inline json to_json(const CenterCertificate& c) {
  json w = json::array();
  for (double v : c.weights) w.push_back(real(v));
  return json{{"center", point(c.center)},
              {"radius", real(c.radius)},
              {"farthest", points(c.farthest)},
              {"farthest_indices", c.farthest_indices},
              {"weights", w},
              {"membership_gap", real(c.membership_gap)},
              {"iterations", c.iterations},
              {"solver", std::string(to_string(c.solver))},
              {"valid", c.valid}};
}

}  // namespace bregcheb::io

#endif  // BREGCHEB_IO_HPP
