#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace pts {

/// A p-dimensional subspace of R^N given by an N x p column-orthonormal
/// basis. grid_k records the surface resolution the point came from (0 when
/// not grid-derived).
struct GrassmannPoint {
  int grid_k = 0;
  Eigen::MatrixXd basis;

  Eigen::Index ambient_dim() const { return basis.rows(); }
  Eigen::Index subspace_dim() const { return basis.cols(); }

  /// Orthonormality check, max-norm tolerance 1e-8. Run at construction and
  /// deserialization boundaries; the metrics below assume it already holds.
  void validate() const {
    if (basis.cols() < 1) throw std::invalid_argument("grassmann point: p must be >= 1");
    if (basis.rows() < basis.cols())
      throw std::invalid_argument("grassmann point: basis has more columns than rows");
    const Eigen::MatrixXd gram = basis.transpose() * basis;
    const double err = (gram - Eigen::MatrixXd::Identity(basis.cols(), basis.cols()))
                           .cwiseAbs()
                           .maxCoeff();
    if (err > 1e-8)
      throw std::invalid_argument("grassmann point: basis not orthonormal (|B^T B - I| = " +
                                  std::to_string(err) + ")");
  }
};

namespace detail {
inline void check_same_ambient(const GrassmannPoint& x, const GrassmannPoint& y,
                               const char* where) {
  if (x.ambient_dim() != y.ambient_dim())
    throw std::invalid_argument(std::string(where) + ": ambient dimensions differ (" +
                                std::to_string(x.ambient_dim()) + " vs " +
                                std::to_string(y.ambient_dim()) + ")");
}
}  // namespace detail

/// Principal angles between two subspaces, ascending, length min(p1, p2).
/// theta = arccos(S) with S the singular values of X^T Y clamped to [0,1];
/// near-zero angles (cosine > 1/sqrt(2)) are refined through the sine route
/// asin(svd(Y - X X^T Y)) where arccos loses half the significant digits.
inline std::vector<double> principal_angles(const GrassmannPoint& x, const GrassmannPoint& y) {
  detail::check_same_ambient(x, y, "principal_angles");
  const Eigen::MatrixXd product = x.basis.transpose() * y.basis;
  Eigen::JacobiSVD<Eigen::MatrixXd> cos_svd(product);
  const Eigen::VectorXd& cosines = cos_svd.singularValues();  // descending
  const Eigen::Index count = cosines.size();

  // Singular values of (I - X X^T) Y are the sines of the same angles.
  Eigen::JacobiSVD<Eigen::MatrixXd> sin_svd(y.basis - x.basis * product);
  Eigen::VectorXd sines = sin_svd.singularValues();
  std::sort(sines.data(), sines.data() + sines.size());  // ascending

  std::vector<double> angles(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i) {
    const double c = std::clamp(cosines[i], 0.0, 1.0);
    angles[static_cast<std::size_t>(i)] =
        c > 0.7071067811865476 && i < sines.size()
            ? std::asin(std::clamp(sines[i], 0.0, 1.0))
            : std::acos(c);
  }
  return angles;
}

/// Geodesic distance sqrt(sum of squared principal angles). Defined only for
/// equal subspace dimensions.
inline double geodesic_distance(const GrassmannPoint& x, const GrassmannPoint& y) {
  if (x.subspace_dim() != y.subspace_dim())
    throw std::invalid_argument(
        "geodesic_distance: subspace dimensions differ; use chordal_distance for mixed "
        "dimensions");
  const std::vector<double> angles = principal_angles(x, y);
  double sum_sq = 0.0;
  for (const double a : angles) sum_sq += a * a;
  return std::sqrt(sum_sq);
}

/// Geodesic distance divided by its maximum (pi/2)*sqrt(p); lies in [0,1].
inline double normalized_geodesic(const GrassmannPoint& x, const GrassmannPoint& y) {
  const double p = static_cast<double>(x.subspace_dim());
  return geodesic_distance(x, y) /
         (1.5707963267948966 * std::sqrt(p));
}

/// Projection kernel k_p = |X^T Y|_F^2, in [0, min(k, l)].
inline double projection_kernel(const GrassmannPoint& x, const GrassmannPoint& y) {
  detail::check_same_ambient(x, y, "projection_kernel");
  return (x.basis.transpose() * y.basis).squaredNorm();
}

/// Symmetric directional (chordal) distance
/// d = sqrt(max(k, l) - |X^T Y|_F^2); valid for unequal subspace dimensions.
inline double chordal_distance(const GrassmannPoint& x, const GrassmannPoint& y) {
  detail::check_same_ambient(x, y, "chordal_distance");
  const double kp = (x.basis.transpose() * y.basis).squaredNorm();
  const double max_dim = static_cast<double>(std::max(x.subspace_dim(), y.subspace_dim()));
  return std::sqrt(std::max(0.0, max_dim - kp));
}

/// Grassmann RBF kernel. `as_printed` is exp(-beta |X^T Y|_F^2), which
/// decreases with similarity; `conventional` uses the chordal distance in the
/// exponent, exp(-beta d^2) = exp(-beta (max(k,l) - |X^T Y|_F^2)).
enum class RbfForm { as_printed, conventional };

inline double rbf_kernel(const GrassmannPoint& x, const GrassmannPoint& y, double beta,
                         RbfForm form = RbfForm::as_printed) {
  if (!(beta > 0.0)) throw std::invalid_argument("rbf_kernel: beta must be positive");
  const double kp = projection_kernel(x, y);
  if (form == RbfForm::as_printed) return std::exp(-beta * kp);
  const double max_dim = static_cast<double>(std::max(x.subspace_dim(), y.subspace_dim()));
  return std::exp(-beta * std::max(0.0, max_dim - kp));
}

}  // namespace pts
