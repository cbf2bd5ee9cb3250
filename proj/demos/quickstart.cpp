// Minimal end-to-end walk: sample two shapes, compute diagrams, embed them
// as Grassmann points, and compare with diagram and subspace metrics.

#include <cstdio>

#include "pts/pts.hpp"

int main() {
  using namespace pts;

  ShapeSpec circle{ShapeClass::circle, 120, 0.0, 7};
  ShapeSpec eight{ShapeClass::figure_eight, 120, 0.0, 7};

  const auto pd_circle = vr_persistence(sample_shape(circle), 1, 3.0);
  const auto pd_eight = vr_persistence(sample_shape(eight), 1, 3.0);

  std::printf("H1 bars: circle=%zu figure_eight=%zu\n", pd_circle[1].size(),
              pd_eight[1].size());
  std::printf("w1(H1)        = %.4f\n", wasserstein(pd_circle[1], pd_eight[1], 1.0));
  std::printf("bottleneck(H1)= %.4f\n", bottleneck(pd_circle[1], pd_eight[1]));

  PtsConfig cfg;
  cfg.sigma = 0.02;
  cfg.subspace_p = 3;
  const Scaling scaling = fit_scaling(
      {transform_axes(pd_circle[1]), transform_axes(pd_eight[1])}, cfg.margin);
  const GrassmannPoint a = pts_embed(pd_circle[1], cfg, scaling);
  const GrassmannPoint b = pts_embed(pd_eight[1], cfg, scaling);

  std::printf("d_G  = %.4f\n", geodesic_distance(a, b));
  std::printf("d_NG = %.4f\n", normalized_geodesic(a, b));
  std::printf("d_D  = %.4f\n", chordal_distance(a, b));
  std::printf("k_p  = %.4f\n", projection_kernel(a, b));
  return 0;
}
