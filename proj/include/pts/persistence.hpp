#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "pts/diagram.hpp"

namespace pts {

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void link(int root_keep, int root_absorb) { parent_[root_absorb] = root_keep; }

 private:
  std::vector<int> parent_;
};

inline bool simplex_order(const Simplex& a, const Simplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.vertices < b.vertices;
}

}  // namespace detail

/// Vietoris-Rips complex up to simplex dimension `complex_dim` (<= 2). A
/// simplex enters at the largest pairwise distance among its vertices; edges
/// enter at exactly the pairwise distance. Only simplices with value
/// <= max_eps are included.
inline FilteredComplex vr_complex(const PointCloud& cloud, int complex_dim, double max_eps) {
  if (cloud.empty()) throw std::invalid_argument("vr_complex: empty point cloud");
  if (complex_dim < 0 || complex_dim > 2)
    throw std::invalid_argument("vr_complex: complex dimension must be in {0,1,2}");
  if (!(max_eps > 0.0)) throw std::invalid_argument("vr_complex: max_eps must be positive");
  cloud.validate();

  const int n = static_cast<int>(cloud.size());
  FilteredComplex complex;
  complex.max_dim = complex_dim;

  for (int i = 0; i < n; ++i) complex.simplices.push_back({{i, -1, -1}, 0, 0.0});

  if (complex_dim >= 1) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double d = cloud.distance(i, j);
        if (d <= max_eps) complex.simplices.push_back({{i, j, -1}, 1, d});
      }
  }

  if (complex_dim >= 2) {
    // Precompute the distance matrix once; triangle value = max edge length.
    std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        dist[i * n + j] = dist[j * n + i] = cloud.distance(i, j);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double dij = dist[i * n + j];
        if (dij > max_eps) continue;
        for (int k = j + 1; k < n; ++k) {
          const double v = std::max({dij, dist[i * n + k], dist[j * n + k]});
          if (v <= max_eps) complex.simplices.push_back({{i, j, k}, 2, v});
        }
      }
  }

  std::sort(complex.simplices.begin(), complex.simplices.end(), detail::simplex_order);
  return complex;
}

/// Checks filtration monotonicity: every face of every simplex is present
/// with a filtration value no larger than the simplex's own.
inline void validate_filtration(const FilteredComplex& complex) {
  struct Key {
    std::array<int, 3> v;
    bool operator<(const Key& o) const { return v < o.v; }
  };
  std::vector<std::pair<Key, double>> index;
  index.reserve(complex.simplices.size());
  for (const Simplex& s : complex.simplices) index.push_back({{s.vertices}, s.value});
  std::sort(index.begin(), index.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  auto value_of = [&](std::array<int, 3> v) {
    const auto it = std::lower_bound(
        index.begin(), index.end(), std::make_pair(Key{v}, 0.0),
        [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it == index.end() || it->first.v != v)
      throw std::invalid_argument("filtration: missing face");
    return it->second;
  };

  for (const Simplex& s : complex.simplices) {
    if (s.dim == 1) {
      for (int drop = 0; drop < 2; ++drop) {
        const int kept = s.vertices[1 - drop];
        if (value_of({kept, -1, -1}) > s.value)
          throw std::invalid_argument("filtration: face enters after coface");
      }
    } else if (s.dim == 2) {
      const std::array<std::array<int, 3>, 3> faces = {{
          {s.vertices[0], s.vertices[1], -1},
          {s.vertices[0], s.vertices[2], -1},
          {s.vertices[1], s.vertices[2], -1},
      }};
      for (const auto& f : faces)
        if (value_of(f) > s.value)
          throw std::invalid_argument("filtration: face enters after coface");
    }
  }
}

/// Persistence of a Vietoris-Rips filtration for homology dimensions
/// 0..max_dim (max_dim in {0,1}).
///
/// H0 runs a union-find sweep over the sorted edges: every point is born at
/// scale 0 and one bar per input point is emitted (the component surviving at
/// max_eps becomes an essential bar capped there), so H0 cardinality always
/// equals the point count. H1 reduces the edge/triangle boundary matrix over
/// Z/2; zero-persistence H1 pairs are dropped.
inline std::vector<PersistenceDiagram> vr_persistence(const PointCloud& cloud, int max_dim,
                                                      double max_eps) {
  if (cloud.empty()) throw std::invalid_argument("vr_persistence: empty point cloud");
  if (max_dim != 0 && max_dim != 1)
    throw std::invalid_argument("vr_persistence: unsupported homology dimension " +
                                std::to_string(max_dim) + " (only 0 and 1)");
  if (!(max_eps > 0.0)) throw std::invalid_argument("vr_persistence: max_eps must be positive");

  const FilteredComplex complex = vr_complex(cloud, max_dim == 0 ? 1 : 2, max_eps);
  const int n = static_cast<int>(cloud.size());

  std::vector<PersistenceDiagram> diagrams(static_cast<std::size_t>(max_dim) + 1);
  for (auto& d : diagrams) d.cap = max_eps;

  // Edges in filtration order; positions index the boundary-matrix rows.
  std::vector<const Simplex*> edges;
  for (const Simplex& s : complex.simplices)
    if (s.dim == 1) edges.push_back(&s);

  // --- H0: union-find over edges. Negative edges kill the younger component.
  detail::UnionFind uf(static_cast<std::size_t>(n));
  std::vector<char> edge_is_negative(edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int ra = uf.find(edges[e]->vertices[0]);
    const int rb = uf.find(edges[e]->vertices[1]);
    if (ra == rb) continue;
    edge_is_negative[e] = 1;
    // All H0 births are 0; the elder-rule tie falls to the lower root index.
    uf.link(std::min(ra, rb), std::max(ra, rb));
    diagrams[0].add(0.0, edges[e]->value, 0, false);
  }
  for (int v = 0; v < n; ++v)
    if (uf.find(v) == v) diagrams[0].add(0.0, max_eps, 0, true);

  if (max_dim == 0) return diagrams;

  // --- H1: column reduction of the triangle boundary matrix over Z/2.
  // Rows are edge positions; a reduced column's pivot pairs its triangle with
  // the cycle-creating (positive) edge it kills.
  std::vector<int> edge_row(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t e = 0; e < edges.size(); ++e)
    edge_row[static_cast<std::size_t>(edges[e]->vertices[0]) * n + edges[e]->vertices[1]] =
        static_cast<int>(e);

  auto row_of = [&](int u, int v) { return edge_row[static_cast<std::size_t>(u) * n + v]; };

  std::vector<int> pivot_owner(edges.size(), -1);        // row -> reduced column id
  std::vector<std::vector<int>> reduced_columns;         // kept only while reducing
  std::vector<char> edge_killed_by_triangle(edges.size(), 0);
  std::vector<int> column, scratch;

  for (const Simplex& s : complex.simplices) {
    if (s.dim != 2) continue;
    column = {row_of(s.vertices[0], s.vertices[1]), row_of(s.vertices[0], s.vertices[2]),
              row_of(s.vertices[1], s.vertices[2])};
    std::sort(column.begin(), column.end());
    while (!column.empty()) {
      const int low = column.back();
      const int owner = pivot_owner[static_cast<std::size_t>(low)];
      if (owner < 0) break;
      // Z/2 column addition = symmetric difference of sorted index sets.
      const std::vector<int>& other = reduced_columns[static_cast<std::size_t>(owner)];
      scratch.clear();
      std::set_symmetric_difference(column.begin(), column.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      column.swap(scratch);
    }
    if (column.empty()) continue;  // triangle creates an (unreported) 2-cycle
    const int low = column.back();
    pivot_owner[static_cast<std::size_t>(low)] = static_cast<int>(reduced_columns.size());
    reduced_columns.push_back(column);
    edge_killed_by_triangle[static_cast<std::size_t>(low)] = 1;
    const double birth = edges[static_cast<std::size_t>(low)]->value;
    if (birth != s.value) diagrams[1].add(birth, s.value, 1, false);
  }

  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!edge_is_negative[e] && !edge_killed_by_triangle[e])
      diagrams[1].add(edges[e]->value, max_eps, 1, true);

  return diagrams;
}

/// Sub/superlevel-set H0 persistence of a vertex-valued graph via the
/// union-find sweep. Bars follow the elder rule; zero-persistence finite bars
/// are dropped. Superlevel bars are reported in the function's own scale
/// (birth >= death) with cap = global minimum.
enum class FieldDirection { sublevel, superlevel };

inline PersistenceDiagram scalar_field_h0(const ScalarGraph& graph, FieldDirection direction) {
  graph.validate();
  if (graph.vertex_count == 0)
    throw std::invalid_argument("scalar_field_h0: graph has no vertices");

  const std::size_t n = graph.vertex_count;
  const bool sub = direction == FieldDirection::sublevel;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (graph.values[a] != graph.values[b])
      return sub ? graph.values[a] < graph.values[b] : graph.values[a] > graph.values[b];
    return a < b;
  });

  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> adjacency(n);
  for (const auto& [u, v] : graph.edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  detail::UnionFind uf(n);
  // Per root: processing position of the component's birth vertex. Smaller
  // position = older component (encodes the value order plus the index tie-break).
  std::vector<int> birth_position(n, -1);

  // Last processed vertex carries the cap: global max for sublevel, min for superlevel.
  const double cap = graph.values[order.back()];
  PersistenceDiagram diagram;
  diagram.cap = cap;

  for (std::size_t step = 0; step < n; ++step) {
    const int v = order[step];
    birth_position[v] = static_cast<int>(step);
    for (const int u : adjacency[v]) {
      if (birth_position[u] < 0) continue;  // edge activates once both ends are active
      const int rv = uf.find(v);
      const int ru = uf.find(u);
      if (rv == ru) continue;
      const int elder = birth_position[ru] < birth_position[rv] ? ru : rv;
      const int younger = elder == ru ? rv : ru;
      const double birth = graph.values[order[birth_position[younger]]];
      const double death = graph.values[v];
      if (birth != death) diagram.add(birth, death, 0, false);
      uf.link(elder, younger);
    }
  }

  for (std::size_t v = 0; v < n; ++v)
    if (uf.find(static_cast<int>(v)) == static_cast<int>(v))
      diagram.add(graph.values[order[birth_position[v]]], cap, 0, true);

  return diagram;
}

/// Takens delay embedding: point i = (x_i, x_{i+lag}, ..., x_{i+(dim-1)*lag}).
inline PointCloud delay_embed(const std::vector<double>& series, int embed_dim, int lag) {
  if (embed_dim < 1) throw std::invalid_argument("delay_embed: embed_dim must be >= 1");
  if (lag < 1) throw std::invalid_argument("delay_embed: lag must be >= 1");
  const std::size_t required = static_cast<std::size_t>(embed_dim - 1) * lag + 1;
  if (series.size() < required)
    throw std::invalid_argument("delay_embed: series too short, need at least " +
                                std::to_string(required) + " samples, got " +
                                std::to_string(series.size()));

  const std::size_t count = series.size() - (static_cast<std::size_t>(embed_dim - 1) * lag);
  PointCloud cloud(count, static_cast<std::size_t>(embed_dim));
  for (std::size_t i = 0; i < count; ++i)
    for (int c = 0; c < embed_dim; ++c)
      cloud(i, static_cast<std::size_t>(c)) = series[i + static_cast<std::size_t>(c) * lag];
  return cloud;
}

/// Removes points closer than `tol` to an already-kept point (first kept wins).
inline PointCloud deduplicate(const PointCloud& cloud, double tol = 1e-12) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    bool duplicate = false;
    for (const std::size_t j : keep)
      if (cloud.distance(i, j) < tol) {
        duplicate = true;
        break;
      }
    if (!duplicate) keep.push_back(i);
  }
  PointCloud out(keep.size(), cloud.dim());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t c = 0; c < cloud.dim(); ++c) out(i, c) = cloud(keep[i], c);
  return out;
}

}  // namespace pts
