#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pts/grassmann.hpp"
#include "pts/parallel.hpp"
#include "pts/surface.hpp"

namespace pts {

namespace detail {

/// Fix each column's sign so its first nonzero entry is positive, making
/// serialized bases byte-reproducible.
inline void fix_column_signs(Eigen::MatrixXd& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) != 0.0) {
        if (m(r, c) < 0.0) m.col(c) = -m.col(c);
        break;
      }
    }
  }
}

/// Leading left singular vectors of `stack`. Errors when the requested
/// count exceeds the numerical rank.
inline Eigen::MatrixXd leading_singular_basis(const Eigen::MatrixXd& stack, int p,
                                              const char* where) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(stack, Eigen::ComputeThinU);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double tol = std::max(stack.rows(), stack.cols()) *
                     std::numeric_limits<double>::epsilon() *
                     (sigma.size() > 0 ? sigma[0] : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma[i] > tol) ++rank;
  if (p > rank)
    throw std::invalid_argument(std::string(where) + ": requested subspace dimension " +
                                std::to_string(p) + " exceeds achievable rank " +
                                std::to_string(rank));
  Eigen::MatrixXd basis = svd.matrixU().leftCols(p);
  fix_column_signs(basis);
  return basis;
}

}  // namespace detail

/// Which columns enter the SVD stack: the perturbed surfaces themselves
/// (the pipeline's construction) or their differences from the unperturbed
/// surface (the small-perturbation tangent span).
enum class StackMode { surfaces, differences };

/// Full diagram-to-subspace pipeline: axis transform, perturbation set,
/// KDE surface per copy (one per bandwidth when sigma_list is set), SVD of
/// the stacked vectorized surfaces, top subspace_p left singular vectors.
/// Deterministic for a fixed (diagram, config, scaling).
inline GrassmannPoint pts_embed(const PersistenceDiagram& pd, const PtsConfig& cfg,
                                const Scaling& scaling,
                                StackMode mode = StackMode::surfaces, int threads = 1) {
  cfg.validate();
  if (pd.empty()) throw std::invalid_argument("pts_embed: empty diagram");

  const PersistenceDiagram transformed = transform_axes(pd);
  const std::vector<PersistenceDiagram> copies = perturb(transformed, cfg, scaling);

  std::vector<double> sigmas =
      cfg.sigma_list.empty() ? std::vector<double>{cfg.sigma} : cfg.sigma_list;

  const Eigen::Index n = static_cast<Eigen::Index>(cfg.grid_k) * cfg.grid_k;
  const std::size_t diagram_count = copies.size() + 1;
  Eigen::MatrixXd stack(n, static_cast<Eigen::Index>(diagram_count * sigmas.size()));

  parallel_for(diagram_count, threads, [&](std::size_t d) {
    const PersistenceDiagram& diagram = d == 0 ? transformed : copies[d - 1];
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
      const PersistenceSurface surface = kde_surface(diagram, sigmas[s], cfg.grid_k, scaling);
      stack.col(static_cast<Eigen::Index>(d * sigmas.size() + s)) = surface.vectorized();
    }
  });

  if (mode == StackMode::surfaces) {
    // Unit-length columns: cell masses sum to 1, so sharp bandwidths carry
    // far larger L2 norms and would otherwise dominate the leading singular
    // directions of a multi-scale stack. Spans are unaffected.
    for (Eigen::Index c = 0; c < stack.cols(); ++c) stack.col(c).normalize();
  }

  if (mode == StackMode::differences) {
    // Columns become (perturbed - unperturbed); the unperturbed block drops out.
    const std::size_t per = sigmas.size();
    Eigen::MatrixXd diff(n, stack.cols() - static_cast<Eigen::Index>(per));
    for (Eigen::Index c = static_cast<Eigen::Index>(per); c < stack.cols(); ++c)
      diff.col(c - static_cast<Eigen::Index>(per)) =
          stack.col(c) - stack.col(c % static_cast<Eigen::Index>(per));
    stack.swap(diff);
  }

  GrassmannPoint point;
  point.grid_k = cfg.grid_k;
  point.basis = detail::leading_singular_basis(stack, cfg.subspace_p, "pts_embed");
  return point;
}

/// Analytic linear subspaces of small surface motions: the translation model
/// spans [rho_x, rho_y] (p = 2); the affine model adds the coordinate-scaled
/// derivatives [x rho_x, x rho_y, y rho_x, y rho_y] (p = 6). Derivatives are
/// central differences on the grid, one-sided at the borders.
enum class TangentModel { translation, affine };

inline GrassmannPoint analytic_tangent_subspace(const PersistenceSurface& surface,
                                                TangentModel model) {
  const int k = surface.grid_k;
  if (k < 2) throw std::invalid_argument("analytic_tangent_subspace: grid too small");
  const double h = 1.0 / k;

  Eigen::MatrixXd rho_x(k, k), rho_y(k, k);
  for (int ix = 0; ix < k; ++ix)
    for (int iy = 0; iy < k; ++iy) {
      if (ix == 0)
        rho_x(ix, iy) = (surface.values(1, iy) - surface.values(0, iy)) / h;
      else if (ix == k - 1)
        rho_x(ix, iy) = (surface.values(k - 1, iy) - surface.values(k - 2, iy)) / h;
      else
        rho_x(ix, iy) = (surface.values(ix + 1, iy) - surface.values(ix - 1, iy)) / (2.0 * h);

      if (iy == 0)
        rho_y(ix, iy) = (surface.values(ix, 1) - surface.values(ix, 0)) / h;
      else if (iy == k - 1)
        rho_y(ix, iy) = (surface.values(ix, k - 1) - surface.values(ix, k - 2)) / h;
      else
        rho_y(ix, iy) = (surface.values(ix, iy + 1) - surface.values(ix, iy - 1)) / (2.0 * h);
    }

  const Eigen::Index n = static_cast<Eigen::Index>(k) * k;
  const int cols = model == TangentModel::translation ? 2 : 6;
  Eigen::MatrixXd span(n, cols);
  span.col(0) = Eigen::Map<const Eigen::VectorXd>(rho_x.data(), n);
  span.col(1) = Eigen::Map<const Eigen::VectorXd>(rho_y.data(), n);

  if (model == TangentModel::affine) {
    Eigen::MatrixXd x_coord(k, k), y_coord(k, k);
    for (int ix = 0; ix < k; ++ix)
      for (int iy = 0; iy < k; ++iy) {
        x_coord(ix, iy) = (ix + 0.5) * h;
        y_coord(ix, iy) = (iy + 0.5) * h;
      }
    const auto vec = [n](const Eigen::MatrixXd& m) {
      return Eigen::Map<const Eigen::VectorXd>(m.data(), n);
    };
    span.col(2) = vec(x_coord).cwiseProduct(span.col(0));
    span.col(3) = vec(x_coord).cwiseProduct(span.col(1));
    span.col(4) = vec(y_coord).cwiseProduct(span.col(0));
    span.col(5) = vec(y_coord).cwiseProduct(span.col(1));
  }

  GrassmannPoint point;
  point.grid_k = k;
  point.basis = detail::leading_singular_basis(span, cols, "analytic_tangent_subspace");
  return point;
}

/// Stacks the first `leading` columns of each input point, takes the SVD,
/// and keeps the out_p leading left singular vectors as one combined point.
inline GrassmannPoint aggregate_embeddings(const std::vector<GrassmannPoint>& points,
                                           int leading, int out_p) {
  if (points.empty()) throw std::invalid_argument("aggregate_embeddings: no points");
  const Eigen::Index n = points.front().ambient_dim();
  long long total = 0;
  for (const GrassmannPoint& pt : points) {
    if (pt.ambient_dim() != n)
      throw std::invalid_argument("aggregate_embeddings: ambient dimensions differ");
    if (leading < 1 || leading > pt.subspace_dim())
      throw std::invalid_argument("aggregate_embeddings: leading exceeds a point's dimension");
    total += leading;
  }
  if (out_p < 1 || out_p > total)
    throw std::invalid_argument("aggregate_embeddings: out_p exceeds stacked column count");

  Eigen::MatrixXd stack(n, static_cast<Eigen::Index>(total));
  Eigen::Index col = 0;
  for (const GrassmannPoint& pt : points) {
    stack.middleCols(col, leading) = pt.basis.leftCols(leading);
    col += leading;
  }

  GrassmannPoint out;
  out.grid_k = points.front().grid_k;
  out.basis = detail::leading_singular_basis(stack, out_p, "aggregate_embeddings");
  return out;
}

/// Upper bound on the normalized geodesic distance between translation-model
/// tangent subspaces of two surfaces in terms of the 1-Wasserstein distance
/// d1 between the diagrams:
///   (k_max / sqrt(g)) * sqrt((10/pi)(2/sigma^6) d1^2 + 2 (K^2/sigma^4) k_max^2 N)
/// with K = 1/(2 pi sigma^2). g is the caller-calibrated lower bound for
/// lambda_min(X^T X) / k_max^2 over the corpus.
inline double stability_bound(double d1, double sigma, int k_max, long long n_samples,
                              double g_value) {
  if (!(sigma > 0.0)) throw std::invalid_argument("stability_bound: sigma must be positive");
  if (!(g_value > 0.0)) throw std::invalid_argument("stability_bound: g_value must be positive");
  if (k_max < 1) throw std::invalid_argument("stability_bound: k_max must be >= 1");
  if (n_samples < 1) throw std::invalid_argument("stability_bound: N must be >= 1");
  if (d1 < 0.0) throw std::invalid_argument("stability_bound: d1 must be nonnegative");

  constexpr double kPi = 3.14159265358979323846;
  const double kernel_peak = 1.0 / (2.0 * kPi * sigma * sigma);
  const double sigma_sq = sigma * sigma;
  const double term_w1 = (10.0 / kPi) * (2.0 / (sigma_sq * sigma_sq * sigma_sq)) * d1 * d1;
  const double term_grid = 2.0 * (kernel_peak * kernel_peak / (sigma_sq * sigma_sq)) *
                           static_cast<double>(k_max) * k_max * static_cast<double>(n_samples);
  return (static_cast<double>(k_max) / std::sqrt(g_value)) * std::sqrt(term_w1 + term_grid);
}

}  // namespace pts
