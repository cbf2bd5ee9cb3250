#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pts/diagram.hpp"
#include "pts/grassmann.hpp"
#include "pts/parallel.hpp"
#include "pts/pd_metrics.hpp"

namespace pts {

/// Distance selector usable for both diagram and subspace features.
struct Metric {
  enum class Kind { bottleneck, wasserstein, geodesic, normalized_geodesic, chordal };
  Kind kind = Kind::chordal;
  double p = 1.0;  // Wasserstein order

  bool for_diagrams() const {
    return kind == Kind::bottleneck || kind == Kind::wasserstein;
  }

  double operator()(const PersistenceDiagram& a, const PersistenceDiagram& b) const {
    switch (kind) {
      case Kind::bottleneck:
        return bottleneck(a, b);
      case Kind::wasserstein:
        return wasserstein(a, b, p);
      default:
        throw std::invalid_argument("metric: subspace metric applied to diagrams");
    }
  }

  double operator()(const GrassmannPoint& a, const GrassmannPoint& b) const {
    switch (kind) {
      case Kind::geodesic:
        return geodesic_distance(a, b);
      case Kind::normalized_geodesic:
        return normalized_geodesic(a, b);
      case Kind::chordal:
        return chordal_distance(a, b);
      default:
        throw std::invalid_argument("metric: diagram metric applied to subspaces");
    }
  }
};

/// k-nearest-neighbor majority vote. The neighbor set is every training item
/// whose distance is <= the k-th smallest, so distance ties at the boundary
/// are all included and the result does not depend on training order. Vote
/// ties break by smaller summed distance, then lower label id.
template <typename Feature, typename Distance>
std::vector<int> knn_classify(const std::vector<Feature>& train, const std::vector<int>& labels,
                              const std::vector<Feature>& test, Distance distance, int k,
                              int threads = 1) {
  if (train.empty()) throw std::invalid_argument("knn_classify: empty training set");
  if (train.size() != labels.size())
    throw std::invalid_argument("knn_classify: label count != training count");
  if (k < 1 || static_cast<std::size_t>(k) > train.size())
    throw std::invalid_argument("knn_classify: k must be in [1, |train|]");
  for (const int label : labels)
    if (label < 0) throw std::invalid_argument("knn_classify: labels must be nonnegative");

  std::vector<int> predictions(test.size(), -1);
  parallel_for(test.size(), threads, [&](std::size_t t) {
    std::vector<double> dist(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) dist[i] = distance(test[t], train[i]);

    std::vector<double> sorted = dist;
    std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end());
    const double boundary = sorted[static_cast<std::size_t>(k - 1)];

    std::map<int, std::pair<int, double>> votes;  // label -> (count, summed distance)
    for (std::size_t i = 0; i < train.size(); ++i) {
      if (dist[i] > boundary) continue;
      auto& [count, sum] = votes[labels[i]];
      ++count;
      sum += dist[i];
    }

    int best_label = -1;
    int best_count = -1;
    double best_sum = 0.0;
    for (const auto& [label, tally] : votes) {
      const auto& [count, sum] = tally;
      const bool wins = count > best_count || (count == best_count && sum < best_sum);
      // equal count and sum: keep the lower label id (map iterates ascending)
      if (wins) {
        best_label = label;
        best_count = count;
        best_sum = sum;
      }
    }
    predictions[t] = best_label;
  });
  return predictions;
}

inline std::vector<int> knn_classify(const std::vector<PersistenceDiagram>& train,
                                     const std::vector<int>& labels,
                                     const std::vector<PersistenceDiagram>& test,
                                     const Metric& metric, int k, int threads = 1) {
  if (!metric.for_diagrams())
    throw std::invalid_argument("knn_classify: metric does not apply to diagrams");
  return knn_classify(train, labels, test,
                      [&](const auto& a, const auto& b) { return metric(a, b); }, k, threads);
}

inline std::vector<int> knn_classify(const std::vector<GrassmannPoint>& train,
                                     const std::vector<int>& labels,
                                     const std::vector<GrassmannPoint>& test,
                                     const Metric& metric, int k, int threads = 1) {
  if (metric.for_diagrams())
    throw std::invalid_argument("knn_classify: metric does not apply to subspaces");
  return knn_classify(train, labels, test,
                      [&](const auto& a, const auto& b) { return metric(a, b); }, k, threads);
}

/// Kernel selector for Gram-matrix export.
struct Kernel {
  enum class Kind { projection, rbf };
  Kind kind = Kind::projection;
  double beta = 1.0;
  RbfForm form = RbfForm::as_printed;

  double operator()(const GrassmannPoint& a, const GrassmannPoint& b) const {
    return kind == Kind::projection ? projection_kernel(a, b) : rbf_kernel(a, b, beta, form);
  }
};

struct GramResult {
  Eigen::MatrixXd matrix;
  bool psd = true;         // min eigenvalue >= -1e-8 (checked for projection kernel)
  double min_eigenvalue = 0.0;
};

/// Symmetric Gram matrix over a point set. The projection kernel's matrix is
/// checked for positive semidefiniteness; a failure is reported, not fatal.
inline GramResult compute_gram(const std::vector<GrassmannPoint>& points, const Kernel& kernel,
                               int threads = 1) {
  if (points.empty()) throw std::invalid_argument("compute_gram: no points");
  const std::size_t n = points.size();
  GramResult result;
  result.matrix = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                        static_cast<Eigen::Index>(n));
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = kernel(points[i], points[j]);
      result.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      result.matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  });

  if (kernel.kind == Kernel::Kind::projection) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(result.matrix,
                                                       Eigen::EigenvaluesOnly);
    result.min_eigenvalue = eig.eigenvalues().minCoeff();
    result.psd = result.min_eigenvalue >= -1e-8;
  }
  return result;
}

}  // namespace pts
