#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <vector>

#include "pts/diagram.hpp"
#include "pts/grassmann.hpp"
#include "pts/rng.hpp"

namespace testutil {

inline std::vector<pts::DiagramPoint> sorted_points(const pts::PersistenceDiagram& pd) {
  std::vector<pts::DiagramPoint> pts = pd.points;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death != b.death) return a.death < b.death;
    return a.essential < b.essential;
  });
  return pts;
}

inline bool diagrams_close(const pts::PersistenceDiagram& a, const pts::PersistenceDiagram& b,
                           double tol) {
  if (a.size() != b.size()) return false;
  const auto pa = sorted_points(a);
  const auto pb = sorted_points(b);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i].dim != pb[i].dim || pa[i].essential != pb[i].essential) return false;
    if (std::abs(pa[i].birth - pb[i].birth) > tol) return false;
    if (std::abs(pa[i].death - pb[i].death) > tol) return false;
  }
  return true;
}

/// Random diagram with up to max_points bars, lifetimes in [0, max_life].
inline pts::PersistenceDiagram random_diagram(pts::rng::Stream& stream, int max_points,
                                              double max_birth = 2.0, double max_life = 2.0) {
  pts::PersistenceDiagram pd;
  pd.cap = max_birth + max_life;
  const int n = static_cast<int>(stream.next_u64() % static_cast<std::uint64_t>(max_points + 1));
  for (int i = 0; i < n; ++i) {
    const double birth = stream.next_uniform(0.0, max_birth);
    pd.add(birth, birth + stream.next_uniform(0.0, max_life), 0, false);
  }
  return pd;
}

/// Haar-ish random p-dimensional subspace of R^n (QR of a Gaussian matrix).
inline pts::GrassmannPoint random_subspace(pts::rng::Stream& stream, int n, int p) {
  Eigen::MatrixXd g(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) g(i, j) = stream.next_normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  pts::GrassmannPoint point;
  point.basis = qr.householderQ() * Eigen::MatrixXd::Identity(n, p);
  return point;
}

/// Random orthogonal matrix (for basis-invariance checks).
inline Eigen::MatrixXd random_orthogonal(pts::rng::Stream& stream, int p) {
  return random_subspace(stream, p, p).basis;
}

}  // namespace testutil
