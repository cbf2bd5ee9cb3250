#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pts/datasets.hpp"
#include "pts/persistence.hpp"
#include "test_util.hpp"

using namespace pts;

namespace {

PointCloud cloud2d(std::initializer_list<std::pair<double, double>> pts) {
  PointCloud c(pts.size(), 2);
  std::size_t i = 0;
  for (const auto& [x, y] : pts) {
    c(i, 0) = x;
    c(i, 1) = y;
    ++i;
  }
  return c;
}

double second_largest_lifetime(const PersistenceDiagram& pd) {
  double first = 0.0, second = 0.0;
  for (const auto& p : pd.points) {
    if (p.essential) continue;
    const double l = p.lifetime();
    if (l > first) {
      second = first;
      first = l;
    } else if (l > second) {
      second = l;
    }
  }
  return second;
}

double largest_lifetime(const PersistenceDiagram& pd) {
  double best = 0.0;
  for (const auto& p : pd.points)
    if (!p.essential) best = std::max(best, p.lifetime());
  return best;
}

}  // namespace

TEST_CASE("two points merge at their distance") {
  const auto diagrams = vr_persistence(cloud2d({{0, 0}, {2, 0}}), 0, 10.0);
  REQUIRE(diagrams.size() == 1);
  const auto pts = testutil::sorted_points(diagrams[0]);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].birth == 0.0);
  CHECK(pts[0].death == 2.0);
  CHECK_FALSE(pts[0].essential);
  CHECK(pts[1].birth == 0.0);
  CHECK(pts[1].death == 10.0);
  CHECK(pts[1].essential);
}

TEST_CASE("unit square has one H1 bar from 1 to sqrt(2)") {
  const auto diagrams = vr_persistence(cloud2d({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 1, 2.0);
  REQUIRE(diagrams.size() == 2);
  const auto& h1 = diagrams[1];
  REQUIRE(h1.size() == 1);
  CHECK(h1.points[0].birth == 1.0);
  CHECK(h1.points[0].death == Catch::Approx(std::sqrt(2.0)).margin(1e-15));
  CHECK_FALSE(h1.points[0].essential);
}

TEST_CASE("below the minimum distance every point is its own essential class") {
  ShapeSpec spec;
  spec.shape = ShapeClass::circle;
  spec.n = 12;
  spec.seed = 5;
  const PointCloud cloud = sample_shape(spec);
  const auto diagrams = vr_persistence(cloud, 0, 1e-6);
  REQUIRE(diagrams[0].size() == 12);
  for (const auto& p : diagrams[0].points) CHECK(p.essential);
}

TEST_CASE("H0 bar count equals point count") {
  rng::Stream stream(rng::derive(11, 0));
  for (int round = 0; round < 5; ++round) {
    const int n = 5 + static_cast<int>(stream.next_u64() % 40);
    PointCloud cloud(static_cast<std::size_t>(n), 3);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < 3; ++c) cloud(i, c) = stream.next_normal();
    const auto diagrams = vr_persistence(cloud, 0, 2.0);
    CHECK(diagrams[0].size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("vr output is invariant to rigid motions") {
  rng::Stream stream(rng::derive(23, 0));
  PointCloud cloud(10, 3);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t c = 0; c < 3; ++c) cloud(i, c) = stream.next_normal();

  const Eigen::MatrixXd q = testutil::random_orthogonal(stream, 3);
  const Eigen::Vector3d shift(0.3, -1.8, 2.5);
  PointCloud moved(10, 3);
  for (std::size_t i = 0; i < 10; ++i) {
    Eigen::Vector3d x(cloud(i, 0), cloud(i, 1), cloud(i, 2));
    const Eigen::Vector3d y = q * x + shift;
    for (std::size_t c = 0; c < 3; ++c) moved(i, c) = y(static_cast<Eigen::Index>(c));
  }

  const auto a = vr_persistence(cloud, 1, 3.0);
  const auto b = vr_persistence(moved, 1, 3.0);
  CHECK(testutil::diagrams_close(a[0], b[0], 1e-9));
  CHECK(testutil::diagrams_close(a[1], b[1], 1e-9));
}

TEST_CASE("scaling the cloud scales every finite bar") {
  rng::Stream stream(rng::derive(29, 0));
  PointCloud cloud(12, 2);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t c = 0; c < 2; ++c) cloud(i, c) = stream.next_normal();

  const double factor = 2.75;
  PointCloud scaled = cloud;
  for (double& v : scaled.data()) v *= factor;

  const auto a = vr_persistence(cloud, 1, 2.0);
  const auto b = vr_persistence(scaled, 1, 2.0 * factor);
  for (int d = 0; d <= 1; ++d) {
    const auto pa = testutil::sorted_points(a[d]);
    const auto pb = testutil::sorted_points(b[d]);
    REQUIRE(pa.size() == pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
      CHECK(pb[i].birth == Catch::Approx(factor * pa[i].birth).margin(1e-12));
      CHECK(pb[i].death == Catch::Approx(factor * pa[i].death).margin(1e-12));
    }
  }
}

TEST_CASE("constructed complexes satisfy filtration monotonicity") {
  ShapeSpec spec;
  spec.shape = ShapeClass::figure_eight;
  spec.n = 30;
  spec.seed = 3;
  const PointCloud cloud = sample_shape(spec);
  CHECK_NOTHROW(validate_filtration(vr_complex(cloud, 2, 1.5)));
}

TEST_CASE("vr error paths") {
  CHECK_THROWS_AS(vr_persistence(PointCloud{}, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(vr_persistence(cloud2d({{0, 0}}), 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(vr_persistence(cloud2d({{0, 0}}), 0, 0.0), std::invalid_argument);
}

TEST_CASE("path graph sublevel persistence follows the elder rule") {
  ScalarGraph graph;
  graph.vertex_count = 4;
  graph.edges = {{0, 1}, {1, 2}, {2, 3}};
  graph.values = {0.0, 2.0, 1.0, 3.0};

  const PersistenceDiagram pd = scalar_field_h0(graph, FieldDirection::sublevel);
  const auto pts = testutil::sorted_points(pd);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].birth == 0.0);
  CHECK(pts[0].death == 3.0);
  CHECK(pts[0].essential);
  CHECK(pts[1].birth == 1.0);
  CHECK(pts[1].death == 2.0);
  CHECK_FALSE(pts[1].essential);
}

TEST_CASE("single vertex yields one zero-length essential bar") {
  ScalarGraph graph;
  graph.vertex_count = 1;
  graph.values = {5.0};
  const PersistenceDiagram pd = scalar_field_h0(graph, FieldDirection::sublevel);
  REQUIRE(pd.size() == 1);
  CHECK(pd.points[0].birth == 5.0);
  CHECK(pd.points[0].death == 5.0);
  CHECK(pd.points[0].essential);
}

TEST_CASE("constant field produces no finite bars") {
  ScalarGraph graph;
  graph.vertex_count = 5;
  graph.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  graph.values.assign(5, 1.25);
  const PersistenceDiagram pd = scalar_field_h0(graph, FieldDirection::sublevel);
  REQUIRE(pd.size() == 1);
  CHECK(pd.points[0].essential);
  CHECK(pd.points[0].birth == 1.25);
}

TEST_CASE("sublevel on g equals superlevel on -g negated") {
  rng::Stream stream(rng::derive(31, 0));
  ScalarGraph graph;
  graph.vertex_count = 20;
  for (std::size_t i = 0; i < 20; ++i) graph.values.push_back(stream.next_normal());
  for (int i = 0; i + 1 < 20; ++i) graph.edges.push_back({i, i + 1});
  graph.edges.push_back({0, 10});
  graph.edges.push_back({5, 15});

  ScalarGraph negated = graph;
  for (double& v : negated.values) v = -v;

  const PersistenceDiagram sub = scalar_field_h0(graph, FieldDirection::sublevel);
  PersistenceDiagram super = scalar_field_h0(negated, FieldDirection::superlevel);
  for (auto& p : super.points) {
    p.birth = -p.birth;
    p.death = -p.death;
  }
  super.cap = -super.cap;
  CHECK(testutil::diagrams_close(sub, super, 1e-12));
}

TEST_CASE("scalar graph rejects bad edges") {
  ScalarGraph graph;
  graph.vertex_count = 2;
  graph.values = {0.0, 1.0};
  graph.edges = {{0, 5}};
  CHECK_THROWS_AS(scalar_field_h0(graph, FieldDirection::sublevel), std::invalid_argument);
}

TEST_CASE("delay embedding windows the series") {
  const auto cloud = delay_embed({1, 2, 3, 4, 5}, 2, 1);
  REQUIRE(cloud.size() == 4);
  REQUIRE(cloud.dim() == 2);
  CHECK(cloud(0, 0) == 1.0);
  CHECK(cloud(0, 1) == 2.0);
  CHECK(cloud(3, 0) == 4.0);
  CHECK(cloud(3, 1) == 5.0);
}

TEST_CASE("dimension-1 delay embedding is the identity") {
  const std::vector<double> series = {3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0, 5.0, 3.0};
  const auto cloud = delay_embed(series, 1, 7);
  REQUIRE(cloud.size() == series.size());
  for (std::size_t i = 0; i < series.size(); ++i) CHECK(cloud(i, 0) == series[i]);
}

TEST_CASE("short series reports the required length") {
  CHECK_THROWS_WITH(delay_embed({1, 2, 3}, 3, 2), Catch::Matchers::ContainsSubstring("5"));
}

TEST_CASE("sine embedding carries one dominant loop") {
  std::vector<double> series(200);
  for (int t = 0; t < 200; ++t) series[t] = std::sin(2.0 * M_PI * t / 50.0);
  const PointCloud cloud = deduplicate(delay_embed(series, 2, 12));
  const auto diagrams = vr_persistence(cloud, 1, 2.0);
  const double top = largest_lifetime(diagrams[1]);
  CHECK(top > 0.5);
  CHECK(top > 5.0 * second_largest_lifetime(diagrams[1]));
}

TEST_CASE("duplicate points collapse under the tolerance") {
  const PointCloud cloud = deduplicate(cloud2d({{0, 0}, {0, 0}, {1, 0}}));
  CHECK(cloud.size() == 2);
}
