#include <gtest/gtest.h>

#include "bregcheb/center.hpp"
#include "bregcheb/io.hpp"

using namespace bregcheb;
using nlohmann::json;

namespace {

TEST(Io, RealsRoundTripIncludingInfinities) {
  for (double v : {0.0, -1.5, 1e-300, 6.5, kInf, -kInf}) EXPECT_EQ(io::real_from(io::real(v)), v);
  EXPECT_TRUE(std::isnan(io::real_from(io::real(std::nan("")))));
  EXPECT_EQ(io::real(kInf), json("inf"));
  EXPECT_THROW(io::real_from(json("banana")), InvalidInput);
}

TEST(Io, PointsRoundTrip) {
  const Point p{{0.1, -2.0, 1e10}};
  EXPECT_EQ(io::point_from(io::point(p)), p);
  EXPECT_THROW(io::point_from(json::array()), InvalidInput);
}

TEST(Io, GeneratorsRoundTrip) {
  Eigen::MatrixXd A(2, 2);
  A << 2.0, 0.3, 0.3, 1.0;
  for (const auto& F : {LegendreFunction::energy(3), LegendreFunction::neg_entropy(2),
                        LegendreFunction::neg_log(4), LegendreFunction::quadratic(A)}) {
    const auto G = io::legendre_from_json(io::to_json(F));
    EXPECT_EQ(G.kind(), F.kind());
    EXPECT_EQ(G.dimension(), F.dimension());
    if (F.has_matrix()) {
      EXPECT_EQ(G.matrix(), F.matrix());
    }
  }
  EXPECT_THROW(io::legendre_from_json(json{{"kind", "cosh"}, {"dimension", 2}}), InvalidInput);
  EXPECT_THROW(io::legendre_from_json(json{{"kind", "quad"}, {"dimension", 2}, {"matrix", {{1.0, 0.0}}}}),
               InvalidInput);
}

TEST(Io, CompactSetsRoundTrip) {
  const auto seg = CompactSet::segment(Point{{1.0, 4.0}}, Point{{4.0, 1.0}}, 7);
  const auto seg2 = io::compact_set_from_json(io::to_json(seg));
  EXPECT_EQ(seg2.kind(), CompactSet::Kind::Segment);
  EXPECT_EQ(seg2.enumerate(), seg.enumerate());
  const auto fin = CompactSet::finite({Point{{1.0, 2.0}}, Point{{3.0, 4.0}}});
  EXPECT_EQ(io::compact_set_from_json(io::to_json(fin)).points(), fin.points());
  EXPECT_THROW(io::compact_set_from_json(json{{"kind", "ball"}, {"points", json::array()}}), InvalidInput);
}

TEST(Io, CertificateFields) {
  const auto F = LegendreFunction::energy(2);
  const auto cert = certify(F, make_segment(F, 4.0, 9), Point{{2.5, 2.5}});
  const json j = io::to_json(cert);
  EXPECT_EQ(io::point_from(j.at("center")), cert.center);
  EXPECT_EQ(io::real_from(j.at("radius")), cert.radius);
  EXPECT_EQ(j.at("farthest").size(), 2u);
  EXPECT_EQ(j.at("weights").size(), 2u);
  EXPECT_EQ(j.at("valid"), true);
  EXPECT_EQ(j.at("solver"), "closed");
}

TEST(Io, FarthestResultFields) {
  const auto F = LegendreFunction::neg_log(2);
  const json j = io::to_json(farthest(F, make_segment(F, 4.0, 9), Point{{-1.0, 1.0}}));
  EXPECT_EQ(j.at("value"), "inf");
  EXPECT_TRUE(j.at("argmax").empty());
}

}  // namespace
