#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pts/learn.hpp"
#include "test_util.hpp"

using namespace pts;

namespace {

/// 1-dim subspace of R^n tilted from axis `i` toward axis `j` by `angle`.
GrassmannPoint tilted(int n, int i, int j, double angle) {
  GrassmannPoint p;
  p.basis = Eigen::MatrixXd::Zero(n, 1);
  p.basis(i, 0) = std::cos(angle);
  p.basis(j, 0) = std::sin(angle);
  return p;
}

}  // namespace

TEST_CASE("an exact training twin wins at k = 1") {
  rng::Stream stream(rng::derive(900, 0));
  std::vector<GrassmannPoint> train;
  for (int i = 0; i < 6; ++i) train.push_back(testutil::random_subspace(stream, 10, 2));
  const std::vector<int> labels = {0, 1, 2, 3, 4, 5};
  const std::vector<GrassmannPoint> test = {train[3]};
  const auto out = knn_classify(train, labels, test, Metric{Metric::Kind::chordal}, 1);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == 3);
}

TEST_CASE("separable clusters classify perfectly with chordal 1-NN") {
  rng::Stream stream(rng::derive(901, 0));
  std::vector<GrassmannPoint> train;
  std::vector<int> labels;
  std::vector<GrassmannPoint> test;
  std::vector<int> expected;
  for (int i = 0; i < 10; ++i) {
    const double angle = stream.next_uniform(-0.1, 0.1);
    if (i % 2 == 0) {
      train.push_back(tilted(5, 0, 2, angle));
      labels.push_back(0);
    } else {
      train.push_back(tilted(5, 1, 3, angle));
      labels.push_back(1);
    }
  }
  for (int i = 0; i < 8; ++i) {
    const double angle = stream.next_uniform(-0.1, 0.1);
    test.push_back(i % 2 == 0 ? tilted(5, 0, 2, angle) : tilted(5, 1, 3, angle));
    expected.push_back(i % 2);
  }
  CHECK(knn_classify(train, labels, test, Metric{Metric::Kind::chordal}, 1) == expected);
}

TEST_CASE("k equal to the training size votes for the commonest label") {
  rng::Stream stream(rng::derive(902, 0));
  std::vector<GrassmannPoint> train;
  std::vector<int> labels;
  for (int i = 0; i < 7; ++i) {
    train.push_back(testutil::random_subspace(stream, 8, 2));
    labels.push_back(i < 4 ? 2 : 1);  // label 2 is the majority
  }
  const std::vector<GrassmannPoint> test = {testutil::random_subspace(stream, 8, 2)};
  const auto out =
      knn_classify(train, labels, test, Metric{Metric::Kind::chordal}, int(train.size()));
  CHECK(out[0] == 2);
}

TEST_CASE("classification ignores training order") {
  rng::Stream stream(rng::derive(903, 0));
  std::vector<GrassmannPoint> train;
  std::vector<int> labels;
  for (int i = 0; i < 9; ++i) {
    train.push_back(testutil::random_subspace(stream, 12, 2));
    labels.push_back(i % 3);
  }
  std::vector<GrassmannPoint> test;
  for (int i = 0; i < 5; ++i) test.push_back(testutil::random_subspace(stream, 12, 2));

  const auto baseline = knn_classify(train, labels, test, Metric{Metric::Kind::chordal}, 3);

  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), 0);
  for (int round = 0; round < 6; ++round) {
    // deterministic shuffle via the seeded stream
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[stream.next_u64() % i]);
    std::vector<GrassmannPoint> shuffled_train;
    std::vector<int> shuffled_labels;
    for (const std::size_t idx : order) {
      shuffled_train.push_back(train[idx]);
      shuffled_labels.push_back(labels[idx]);
    }
    CHECK(knn_classify(shuffled_train, shuffled_labels, test, Metric{Metric::Kind::chordal},
                       3) == baseline);
  }
}

TEST_CASE("duplicated items classify themselves in leave-one-out") {
  rng::Stream stream(rng::derive(904, 0));
  std::vector<GrassmannPoint> items;
  std::vector<int> labels;
  for (int i = 0; i < 4; ++i) {
    const auto point = testutil::random_subspace(stream, 10, 2);
    items.push_back(point);
    items.push_back(point);  // duplicate pair shares a label
    labels.push_back(i);
    labels.push_back(i);
  }
  for (std::size_t held_out = 0; held_out < items.size(); ++held_out) {
    std::vector<GrassmannPoint> train;
    std::vector<int> train_labels;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i == held_out) continue;
      train.push_back(items[i]);
      train_labels.push_back(labels[i]);
    }
    const auto out = knn_classify(train, train_labels, {items[held_out]},
                                  Metric{Metric::Kind::chordal}, 1);
    CHECK(out[0] == labels[held_out]);
  }
}

TEST_CASE("mismatched metric and feature kinds are rejected") {
  rng::Stream stream(rng::derive(905, 0));
  const std::vector<GrassmannPoint> train = {testutil::random_subspace(stream, 6, 2)};
  CHECK_THROWS_AS(knn_classify(train, {0}, train, Metric{Metric::Kind::wasserstein}, 1),
                  std::invalid_argument);
  const std::vector<PersistenceDiagram> pd_train = {testutil::random_diagram(stream, 3)};
  CHECK_THROWS_AS(knn_classify(pd_train, {0}, pd_train, Metric{Metric::Kind::chordal}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(knn_classify(train, {0}, train, Metric{Metric::Kind::chordal}, 2),
                  std::invalid_argument);
}

TEST_CASE("gram export matches pairwise kernel calls") {
  rng::Stream stream(rng::derive(906, 0));
  std::vector<GrassmannPoint> points;
  for (int i = 0; i < 8; ++i) points.push_back(testutil::random_subspace(stream, 14, 3));
  const Kernel kernel{Kernel::Kind::projection};
  const GramResult gram = compute_gram(points, kernel);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      CHECK(std::abs(gram.matrix(i, j) - kernel(points[i], points[j])) <= 1e-12);
  CHECK(gram.psd);
}

TEST_CASE("single-item gram is the self-kernel") {
  rng::Stream stream(rng::derive(907, 0));
  const GramResult gram =
      compute_gram({testutil::random_subspace(stream, 9, 4)}, Kernel{Kernel::Kind::projection});
  REQUIRE(gram.matrix.rows() == 1);
  CHECK(gram.matrix(0, 0) == Catch::Approx(4.0).margin(1e-9));
}
