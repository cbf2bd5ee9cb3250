#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pts {

/// One bar of a persistence diagram. For sublevel/VR filtrations birth <= death;
/// superlevel scalar-field diagrams keep the function's own scale, so there
/// birth >= death and lifetime() takes the absolute value.
struct DiagramPoint {
  double birth = 0.0;
  double death = 0.0;
  int dim = 0;
  bool essential = false;

  double lifetime() const { return std::abs(death - birth); }
};

/// Multiset of (birth, death) bars plus the cap value used to truncate
/// essential (never-dying) classes.
struct PersistenceDiagram {
  std::vector<DiagramPoint> points;
  double cap = 0.0;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  void add(double birth, double death, int dim = 0, bool essential = false) {
    points.push_back({birth, death, dim, essential});
  }

  /// Checks the sublevel-convention invariants (birth <= death, essential
  /// bars die exactly at the cap). Superlevel diagrams fail this by design.
  void validate() const {
    for (const DiagramPoint& pt : points) {
      if (!std::isfinite(pt.birth) || !std::isfinite(pt.death))
        throw std::invalid_argument("diagram point has non-finite coordinates");
      if (pt.birth > pt.death)
        throw std::invalid_argument("diagram point has birth > death");
      if (pt.essential && pt.death != cap)
        throw std::invalid_argument("essential point does not die at the cap");
      if (pt.dim < 0) throw std::invalid_argument("negative homology dimension");
    }
  }
};

/// Fixed-dimension point set, row-major flat storage.
class PointCloud {
 public:
  PointCloud() = default;
  PointCloud(std::size_t n, std::size_t dim) : n_(n), dim_(dim), data_(n * dim, 0.0) {}

  static PointCloud from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    PointCloud cloud(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cloud.dim_)
        throw std::invalid_argument("point cloud rows have mixed dimensions");
      for (std::size_t j = 0; j < cloud.dim_; ++j) cloud(i, j) = rows[i][j];
    }
    return cloud;
  }

  std::size_t size() const { return n_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return n_ == 0; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double distance(std::size_t i, std::size_t j) const {
    double s = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) {
      const double d = data_[i * dim_ + c] - data_[j * dim_ + c];
      s += d * d;
    }
    return std::sqrt(s);
  }

  void validate() const {
    if (dim_ == 0 && n_ > 0) throw std::invalid_argument("points must have dimension >= 1");
    for (double v : data_)
      if (!std::isfinite(v)) throw std::invalid_argument("point cloud has non-finite coordinate");
  }

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Graph with one real value per vertex (the scalar field g).
struct ScalarGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> values;

  void validate() const {
    if (values.size() != vertex_count)
      throw std::invalid_argument("scalar graph: value count != vertex count");
    for (double v : values)
      if (!std::isfinite(v)) throw std::invalid_argument("scalar graph: non-finite vertex value");
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count ||
          static_cast<std::size_t>(v) >= vertex_count)
        throw std::invalid_argument("scalar graph: edge references missing vertex " +
                                    std::to_string(u) + "," + std::to_string(v));
      if (u == v) throw std::invalid_argument("scalar graph: self-loop at vertex " + std::to_string(u));
    }
  }
};

/// Simplex of dimension <= 2. Unused vertex slots hold -1.
struct Simplex {
  std::array<int, 3> vertices{-1, -1, -1};
  int dim = 0;
  double value = 0.0;
};

/// Simplices with filtration values; every face must be present with a value
/// no larger than the coface's.
struct FilteredComplex {
  std::vector<Simplex> simplices;
  int max_dim = 0;
};

}  // namespace pts
