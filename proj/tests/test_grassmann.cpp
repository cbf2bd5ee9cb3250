#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pts/grassmann.hpp"
#include "pts/learn.hpp"
#include "test_util.hpp"

using namespace pts;

namespace {

GrassmannPoint axis(int n, int i) {
  GrassmannPoint p;
  p.basis = Eigen::MatrixXd::Zero(n, 1);
  p.basis(i, 0) = 1.0;
  return p;
}

GrassmannPoint diagonal_e1_e2(int n) {
  GrassmannPoint p;
  p.basis = Eigen::MatrixXd::Zero(n, 1);
  p.basis(0, 0) = 1.0 / std::sqrt(2.0);
  p.basis(1, 0) = 1.0 / std::sqrt(2.0);
  return p;
}

}  // namespace

TEST_CASE("principal angle reference values") {
  const GrassmannPoint e1 = axis(3, 0), e2 = axis(3, 1);
  const GrassmannPoint mix = diagonal_e1_e2(3);

  CHECK(principal_angles(e1, e1)[0] == Catch::Approx(0.0).margin(1e-12));
  CHECK(principal_angles(e1, e2)[0] == Catch::Approx(M_PI / 2).margin(1e-9));
  CHECK(principal_angles(e1, mix)[0] == Catch::Approx(M_PI / 4).margin(1e-9));
}

TEST_CASE("angles come back ascending in [0, pi/2]") {
  rng::Stream stream(rng::derive(640, 0));
  for (int i = 0; i < 40; ++i) {
    const auto x = testutil::random_subspace(stream, 12, 3);
    const auto y = testutil::random_subspace(stream, 12, 5);
    const auto angles = principal_angles(x, y);
    REQUIRE(angles.size() == 3);
    for (std::size_t a = 0; a < angles.size(); ++a) {
      CHECK(angles[a] >= 0.0);
      CHECK(angles[a] <= M_PI / 2 + 1e-12);
      if (a) CHECK(angles[a] >= angles[a - 1]);
    }
  }
}

TEST_CASE("geodesic distance reference values") {
  const GrassmannPoint e1 = axis(3, 0), e2 = axis(3, 1);
  CHECK(geodesic_distance(e1, e1) == 0.0);
  CHECK(geodesic_distance(e1, e2) == Catch::Approx(M_PI / 2).margin(1e-9));
  CHECK(normalized_geodesic(e1, e2) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("geodesic requires equal dimensions") {
  rng::Stream stream(rng::derive(641, 0));
  const auto x = testutil::random_subspace(stream, 10, 2);
  const auto y = testutil::random_subspace(stream, 10, 3);
  CHECK_THROWS_WITH(geodesic_distance(x, y), Catch::Matchers::ContainsSubstring("chordal"));
}

TEST_CASE("geodesic triangle inequality on random subspaces") {
  rng::Stream stream(rng::derive(642, 0));
  for (int i = 0; i < 600; ++i) {
    const auto x = testutil::random_subspace(stream, 25, 2);
    const auto y = testutil::random_subspace(stream, 25, 2);
    const auto z = testutil::random_subspace(stream, 25, 2);
    CHECK(geodesic_distance(x, z) <=
          geodesic_distance(x, y) + geodesic_distance(y, z) + 1e-9);
  }
}

TEST_CASE("chordal distance reference values") {
  const GrassmannPoint e1 = axis(3, 0), e2 = axis(3, 1);
  CHECK(chordal_distance(e1, e1) == 0.0);
  CHECK(chordal_distance(e1, e2) == Catch::Approx(1.0).margin(1e-12));
  CHECK(chordal_distance(e1, diagonal_e1_e2(3)) ==
        Catch::Approx(std::sqrt(0.5)).margin(1e-12));
}

TEST_CASE("chordal accepts unequal dimensions") {
  rng::Stream stream(rng::derive(643, 0));
  const auto x = testutil::random_subspace(stream, 10, 2);
  const auto y = testutil::random_subspace(stream, 10, 4);
  const double d = chordal_distance(x, y);
  CHECK(d >= 0.0);
  CHECK(d <= 2.0);
  CHECK(chordal_distance(y, x) == Catch::Approx(d).margin(1e-12));
}

TEST_CASE("projection kernel and chordal identity") {
  rng::Stream stream(rng::derive(644, 0));
  for (int i = 0; i < 100; ++i) {
    const auto x = testutil::random_subspace(stream, 15, 3);
    const auto y = testutil::random_subspace(stream, 15, 3);
    const double kp = projection_kernel(x, y);
    const double d = chordal_distance(x, y);
    CHECK(kp >= -1e-12);
    CHECK(kp <= 3.0 + 1e-12);
    CHECK(kp == Catch::Approx(3.0 - d * d).margin(1e-9));
  }
}

TEST_CASE("kernel values at the extremes") {
  const GrassmannPoint e1 = axis(4, 0), e2 = axis(4, 1);
  rng::Stream stream(rng::derive(645, 0));
  const auto x = testutil::random_subspace(stream, 9, 3);
  CHECK(projection_kernel(x, x) == Catch::Approx(3.0).margin(1e-9));
  CHECK(rbf_kernel(x, x, 1.0) == Catch::Approx(std::exp(-3.0)).margin(1e-9));
  CHECK(projection_kernel(e1, e2) == Catch::Approx(0.0).margin(1e-12));
  CHECK(rbf_kernel(e1, e2, 1.0) == Catch::Approx(1.0).margin(1e-12));
  CHECK(rbf_kernel(e1, e2, 2.0, RbfForm::conventional) ==
        Catch::Approx(std::exp(-2.0)).margin(1e-12));
}

TEST_CASE("distances and kernels ignore the basis choice") {
  rng::Stream stream(rng::derive(646, 0));
  for (int i = 0; i < 30; ++i) {
    const auto x = testutil::random_subspace(stream, 12, 3);
    const auto y = testutil::random_subspace(stream, 12, 3);
    GrassmannPoint rotated = x;
    rotated.basis = x.basis * testutil::random_orthogonal(stream, 3);

    CHECK(std::abs(geodesic_distance(x, y) - geodesic_distance(rotated, y)) <= 1e-9);
    CHECK(std::abs(chordal_distance(x, y) - chordal_distance(rotated, y)) <= 1e-9);
    CHECK(std::abs(projection_kernel(x, y) - projection_kernel(rotated, y)) <= 1e-9);
    CHECK(std::abs(rbf_kernel(x, y, 1.0) - rbf_kernel(rotated, y, 1.0)) <= 1e-9);
  }
}

TEST_CASE("rounding above 1 never yields non-real angles") {
  rng::Stream stream(rng::derive(647, 0));
  for (int i = 0; i < 50; ++i) {
    const auto x = testutil::random_subspace(stream, 30, 4);
    GrassmannPoint nudged = x;
    nudged.basis = x.basis * testutil::random_orthogonal(stream, 4);
    for (const double a : principal_angles(x, nudged)) {
      CHECK(std::isfinite(a));
      CHECK(a >= 0.0);
    }
    CHECK(geodesic_distance(x, nudged) <= 1e-6);
  }
}

TEST_CASE("projection-kernel gram matrices are positive semidefinite") {
  rng::Stream stream(rng::derive(648, 0));
  std::vector<GrassmannPoint> points;
  for (int i = 0; i < 25; ++i) points.push_back(testutil::random_subspace(stream, 20, 3));
  const GramResult gram = compute_gram(points, Kernel{Kernel::Kind::projection});
  CHECK(gram.psd);
  CHECK(gram.min_eigenvalue >= -1e-8);
  CHECK((gram.matrix - gram.matrix.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("mismatched ambient dimensions are rejected") {
  rng::Stream stream(rng::derive(649, 0));
  const auto x = testutil::random_subspace(stream, 10, 2);
  const auto y = testutil::random_subspace(stream, 11, 2);
  CHECK_THROWS_AS(principal_angles(x, y), std::invalid_argument);
  CHECK_THROWS_AS(chordal_distance(x, y), std::invalid_argument);
  CHECK_THROWS_AS(projection_kernel(x, y), std::invalid_argument);
}
