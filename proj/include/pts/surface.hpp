#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pts/diagram.hpp"
#include "pts/rng.hpp"

namespace pts {

/// Pipeline hyperparameters. sigma / perturb_r are in normalized [0,1]^2
/// grid units. sigma_list, when nonempty, stacks one surface per bandwidth
/// for every diagram copy before the SVD.
struct PtsConfig {
  double sigma = 0.0004;
  int grid_k = 50;
  int perturb_m = 40;
  double perturb_r = 0.02;
  int subspace_p = 10;
  std::uint64_t seed = 42;
  double margin = 0.05;
  std::vector<double> sigma_list;

  std::size_t surfaces_per_diagram() const {
    return sigma_list.empty() ? 1 : sigma_list.size();
  }

  void validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("config: sigma must be positive");
    for (double s : sigma_list)
      if (!(s > 0.0)) throw std::invalid_argument("config: sigma_list entries must be positive");
    if (grid_k < 2) throw std::invalid_argument("config: grid_k must be >= 2");
    if (perturb_m < 1) throw std::invalid_argument("config: perturb_m must be >= 1");
    if (!(perturb_r >= 0.0 && perturb_r < 1.0))
      throw std::invalid_argument("config: perturb_r must be in [0, 1)");
    const long long stack_cols =
        static_cast<long long>(perturb_m + 1) * static_cast<long long>(surfaces_per_diagram());
    const long long n = static_cast<long long>(grid_k) * grid_k;
    if (subspace_p < 1 || subspace_p > std::min(stack_cols, n))
      throw std::invalid_argument("config: subspace_p must be in [1, min(perturb_m+1, grid_k^2)]");
    if (!(margin >= 0.0 && margin < 0.5))
      throw std::invalid_argument("config: margin must be in [0, 0.5)");
  }
};

/// Axis transform (b, d) -> ((b+d)/2, d-b). The result reuses the diagram
/// type with birth holding the mean and death the lifetime.
inline PersistenceDiagram transform_axes(const PersistenceDiagram& pd) {
  PersistenceDiagram out;
  out.cap = pd.cap;
  out.points.reserve(pd.size());
  for (const DiagramPoint& p : pd.points) {
    if (p.birth > p.death)
      throw std::invalid_argument("transform_axes: diagram point with birth > death");
    out.points.push_back({(p.birth + p.death) / 2.0, p.death - p.birth, p.dim, p.essential});
  }
  return out;
}

/// Axis-aligned box mapped linearly onto [0,1]^2.
struct Scaling {
  double min_x = 0.0, max_x = 1.0;
  double min_y = 0.0, max_y = 1.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }

  void to_unit(double x, double y, double& u, double& v) const {
    u = (x - min_x) / width();
    v = (y - min_y) / height();
  }
  void from_unit(double u, double v, double& x, double& y) const {
    x = min_x + u * width();
    y = min_y + v * height();
  }
};

/// Dataset-wide bounding box of transformed diagrams, expanded by `margin`
/// (a fraction of each axis extent) per side. A zero-extent axis falls back
/// to a unit-width interval centered on the data before the margin applies.
inline Scaling fit_scaling(const std::vector<PersistenceDiagram>& transformed, double margin) {
  if (!(margin >= 0.0 && margin < 0.5))
    throw std::invalid_argument("fit_scaling: margin must be in [0, 0.5)");
  if (transformed.empty()) throw std::invalid_argument("fit_scaling: empty collection");

  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = max_x;
  bool any = false;
  for (const PersistenceDiagram& pd : transformed)
    for (const DiagramPoint& p : pd.points) {
      any = true;
      min_x = std::min(min_x, p.birth);
      max_x = std::max(max_x, p.birth);
      min_y = std::min(min_y, p.death);
      max_y = std::max(max_y, p.death);
    }
  if (!any) throw std::invalid_argument("fit_scaling: all diagrams are empty");

  auto expand_axis = [margin](double& lo, double& hi) {
    const double center = (lo + hi) / 2.0;
    if (hi - lo <= 1e-12 * std::max(1.0, std::abs(center))) {
      lo = center - 0.5;
      hi = center + 0.5;
    }
    const double pad = margin * (hi - lo);
    lo -= pad;
    hi += pad;
  };
  expand_axis(min_x, max_x);
  expand_axis(min_y, max_y);
  return {min_x, max_x, min_y, max_y};
}

/// m randomly displaced copies of a transformed diagram. Each point of copy j
/// moves by an independent uniform draw from [-r, r]^2 in normalized units;
/// the draw depends only on (seed, j, point index). Displaced lifetimes are
/// clamped to stay nonnegative.
inline std::vector<PersistenceDiagram> perturb(const PersistenceDiagram& transformed,
                                               const PtsConfig& cfg, const Scaling& scaling) {
  if (transformed.empty()) throw std::invalid_argument("perturb: empty diagram");
  std::vector<PersistenceDiagram> copies(static_cast<std::size_t>(cfg.perturb_m));
  for (int j = 0; j < cfg.perturb_m; ++j) {
    PersistenceDiagram& copy = copies[static_cast<std::size_t>(j)];
    copy.cap = transformed.cap;
    copy.points.reserve(transformed.size());
    for (std::size_t i = 0; i < transformed.size(); ++i) {
      const DiagramPoint& p = transformed.points[i];
      rng::Stream stream(rng::derive(cfg.seed, static_cast<std::uint64_t>(j) + 1, i));
      const double du = stream.next_uniform(-cfg.perturb_r, cfg.perturb_r);
      const double dv = stream.next_uniform(-cfg.perturb_r, cfg.perturb_r);
      double u, v;
      scaling.to_unit(p.birth, p.death, u, v);
      double x, y;
      scaling.from_unit(u + du, v + dv, x, y);
      copy.points.push_back({x, std::max(0.0, y), p.dim, p.essential});
    }
  }
  return copies;
}

/// k x k grid of nonnegative cell masses over [0,1]^2 summing to 1. Cell
/// centers sit at ((i+0.5)/k, (j+0.5)/k); values(ix, iy) indexes the x cell
/// first, and vectorization is column-major (x index fastest).
struct PersistenceSurface {
  int grid_k = 0;
  Eigen::MatrixXd values;  // grid_k x grid_k

  Eigen::Map<const Eigen::VectorXd> vectorized() const {
    return {values.data(), values.size()};
  }
};

/// Gaussian-KDE surface of a transformed diagram: an equal-weight Gaussian of
/// bandwidth sigma (normalized units) at every point, evaluated at the cell
/// centers and normalized so the cell masses sum to 1.
inline PersistenceSurface kde_surface(const PersistenceDiagram& transformed, double sigma,
                                      int grid_k, const Scaling& scaling) {
  if (transformed.empty()) throw std::invalid_argument("kde_surface: empty diagram");
  if (!(sigma > 0.0)) throw std::invalid_argument("kde_surface: sigma must be positive");
  if (grid_k < 2) throw std::invalid_argument("kde_surface: grid_k must be >= 2");

  PersistenceSurface surface;
  surface.grid_k = grid_k;
  surface.values = Eigen::MatrixXd::Zero(grid_k, grid_k);

  const double inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);
  const double cell = 1.0 / grid_k;
  for (const DiagramPoint& p : transformed.points) {
    double u, v;
    scaling.to_unit(p.birth, p.death, u, v);
    for (int ix = 0; ix < grid_k; ++ix) {
      const double dx = (ix + 0.5) * cell - u;
      for (int iy = 0; iy < grid_k; ++iy) {
        const double dy = (iy + 0.5) * cell - v;
        surface.values(ix, iy) += std::exp(-(dx * dx + dy * dy) * inv_two_sigma_sq);
      }
    }
  }

  const double total = surface.values.sum();
  if (!(total > 0.0))
    throw std::runtime_error("kde_surface: all kernel mass underflowed off the grid");
  surface.values /= total;
  return surface;
}

}  // namespace pts
