#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pts/pd_metrics.hpp"
#include "pts/surface.hpp"
#include "test_util.hpp"

using namespace pts;

namespace {

PersistenceDiagram diagram(std::initializer_list<std::pair<double, double>> bars) {
  PersistenceDiagram pd;
  for (const auto& [b, d] : bars) pd.add(b, d);
  return pd;
}

/// Random diagram already in transformed (mean, lifetime) coordinates, kept
/// away from the grid border and with lifetimes bounded below so the kernel
/// mass stays on-grid and unmatched bars carry real matching cost.
PersistenceDiagram random_transformed(rng::Stream& stream, int max_points) {
  PersistenceDiagram pd;
  const int n = 1 + static_cast<int>(stream.next_u64() % static_cast<std::uint64_t>(max_points));
  for (int i = 0; i < n; ++i)
    pd.add(stream.next_uniform(0.15, 0.85), stream.next_uniform(0.3, 0.85));
  return pd;
}

}  // namespace

TEST_CASE("axis transform maps (birth, death) to (mean, lifetime)") {
  const PersistenceDiagram out = transform_axes(diagram({{0, 4}, {1, 1}, {2, 6}}));
  CHECK(out.points[0].birth == 2.0);
  CHECK(out.points[0].death == 4.0);
  CHECK(out.points[1].birth == 1.0);
  CHECK(out.points[1].death == 0.0);
  CHECK(out.points[2].birth == 4.0);
  CHECK(out.points[2].death == 4.0);
}

TEST_CASE("axis transform rejects inverted bars") {
  PersistenceDiagram bad;
  bad.add(2.0, 1.0);
  CHECK_THROWS_AS(transform_axes(bad), std::invalid_argument);
}

TEST_CASE("degenerate bounding box falls back to unit width") {
  const Scaling s = fit_scaling({diagram({{2, 4}})}, 0.0);
  CHECK(s.min_x == Catch::Approx(1.5));
  CHECK(s.max_x == Catch::Approx(2.5));
  CHECK(s.min_y == Catch::Approx(3.5));
  CHECK(s.max_y == Catch::Approx(4.5));
}

TEST_CASE("two-point collection spans the unit box") {
  const Scaling s = fit_scaling({diagram({{0, 0}}), diagram({{1, 1}})}, 0.0);
  CHECK(s.min_x == 0.0);
  CHECK(s.max_x == 1.0);
  CHECK(s.min_y == 0.0);
  CHECK(s.max_y == 1.0);
}

TEST_CASE("margin expands the box by a fraction per side") {
  const Scaling s = fit_scaling({diagram({{0, 0}}), diagram({{10, 10}})}, 0.05);
  CHECK(s.min_x == Catch::Approx(-0.5));
  CHECK(s.max_x == Catch::Approx(10.5));
  CHECK(s.min_y == Catch::Approx(-0.5));
  CHECK(s.max_y == Catch::Approx(10.5));
}

TEST_CASE("fit_scaling error paths") {
  CHECK_THROWS_AS(fit_scaling({}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fit_scaling({PersistenceDiagram{}}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fit_scaling({diagram({{0, 1}})}, 0.5), std::invalid_argument);
}

TEST_CASE("zero radius leaves every perturbed copy identical") {
  PtsConfig cfg;
  cfg.perturb_r = 0.0;
  cfg.perturb_m = 5;
  const PersistenceDiagram pd = transform_axes(diagram({{0, 1}, {0.5, 2}}));
  const Scaling scaling = fit_scaling({pd}, cfg.margin);
  for (const auto& copy : perturb(pd, cfg, scaling)) {
    REQUIRE(copy.size() == pd.size());
    for (std::size_t i = 0; i < pd.size(); ++i) {
      CHECK(copy.points[i].birth == pd.points[i].birth);
      CHECK(copy.points[i].death == pd.points[i].death);
    }
  }
}

TEST_CASE("perturbation is deterministic for a fixed seed") {
  PtsConfig cfg;
  cfg.seed = 99;
  const PersistenceDiagram pd = transform_axes(diagram({{0, 1}, {0.5, 2}, {1, 4}}));
  const Scaling scaling = fit_scaling({pd}, cfg.margin);
  const auto a = perturb(pd, cfg, scaling);
  const auto b = perturb(pd, cfg, scaling);
  REQUIRE(a.size() == b.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < a[j].size(); ++i) {
      CHECK(a[j].points[i].birth == b[j].points[i].birth);
      CHECK(a[j].points[i].death == b[j].points[i].death);
    }
}

TEST_CASE("lifetimes stay nonnegative under perturbation") {
  PtsConfig cfg;
  cfg.perturb_r = 0.3;
  cfg.perturb_m = 50;
  const PersistenceDiagram pd = transform_axes(diagram({{1, 1}, {2, 2}}));  // on the axis
  const Scaling scaling = fit_scaling({pd}, cfg.margin);
  for (const auto& copy : perturb(pd, cfg, scaling))
    for (const auto& p : copy.points) CHECK(p.death >= 0.0);
}

TEST_CASE("surface of a centered point is 90-degree symmetric and normalized") {
  PersistenceDiagram pd;
  pd.add(0.5, 0.5);
  const Scaling unit{0.0, 1.0, 0.0, 1.0};
  const PersistenceSurface s = kde_surface(pd, 0.08, 20, unit);
  CHECK(s.values.sum() == Catch::Approx(1.0).margin(1e-9));
  for (int ix = 0; ix < 20; ++ix)
    for (int iy = 0; iy < 20; ++iy) {
      CHECK(s.values(ix, iy) == Catch::Approx(s.values(19 - iy, ix)).margin(1e-12));
      CHECK(s.values(ix, iy) >= 0.0);
    }
}

TEST_CASE("coincident points change nothing after normalization") {
  PersistenceDiagram one, two;
  one.add(0.4, 0.6);
  two.add(0.4, 0.6);
  two.add(0.4, 0.6);
  const Scaling unit{0.0, 1.0, 0.0, 1.0};
  const PersistenceSurface a = kde_surface(one, 0.05, 16, unit);
  const PersistenceSurface b = kde_surface(two, 0.05, 16, unit);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() <= 1e-12);
}

namespace {

/// Original-coordinate diagram whose transformed points land in the unit box
/// (identity scaling keeps the bound's units consistent).
PersistenceDiagram untransform(const PersistenceDiagram& transformed) {
  PersistenceDiagram pd;
  for (const auto& p : transformed.points)
    pd.add(p.birth - p.death / 2.0, p.birth + p.death / 2.0);
  return pd;
}

}  // namespace

TEST_CASE("surfaces are 1-Wasserstein stable in L1") {
  // Discrete analog of the Gaussian-surface stability bound
  // |rho_B - rho_B'|_1 <= sqrt(10/pi) (1/sigma) d_1(B, B'), with d_1 taken
  // between the original diagrams and the surfaces over their transforms.
  const Scaling unit{0.0, 1.0, 0.0, 1.0};
  const double factor = std::sqrt(10.0 / M_PI);
  rng::Stream stream(rng::derive(7007, 0));
  for (const double sigma : {0.01, 0.05, 0.1}) {
    for (int i = 0; i < 34; ++i) {
      const PersistenceDiagram x = random_transformed(stream, 5);
      PersistenceDiagram y;
      if (stream.next_unit() < 0.5) {
        // jittered copy, occasionally with an extra bar
        y = x;
        for (auto& p : y.points) {
          p.birth += stream.next_uniform(-0.05, 0.05);
          p.death += stream.next_uniform(-0.05, 0.05);
        }
        if (stream.next_unit() < 0.3) y.add(stream.next_uniform(0.15, 0.85),
                                            stream.next_uniform(0.3, 0.85));
      } else {
        y = random_transformed(stream, 5);
      }
      const double d1 = wasserstein(untransform(x), untransform(y), 1.0);
      const double l1 =
          (kde_surface(x, sigma, 50, unit).values - kde_surface(y, sigma, 50, unit).values)
              .cwiseAbs()
              .sum();
      CHECK(l1 <= factor * d1 / sigma + 1e-12);
    }
  }
}

TEST_CASE("kde rejects empty diagrams") {
  const Scaling unit{0.0, 1.0, 0.0, 1.0};
  CHECK_THROWS_AS(kde_surface(PersistenceDiagram{}, 0.1, 10, unit), std::invalid_argument);
}

TEST_CASE("config invariants are enforced") {
  PtsConfig cfg;
  cfg.sigma = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.perturb_r = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.subspace_p = cfg.perturb_m + 2;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  CHECK_NOTHROW(cfg.validate());
}
