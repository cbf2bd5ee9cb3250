#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pts/diagram.hpp"

namespace pts {

/// Whether essential (capped) bars take part in the matching. Excluding them
/// is the default; including them requires both diagrams to share a cap.
enum class EssentialPolicy { exclude, include_shared_cap };

namespace detail {

struct PlanarPoint {
  double b, d;
};

/// L-infinity ground distance on the birth/death plane.
inline double linf(const PlanarPoint& x, const PlanarPoint& y) {
  return std::max(std::abs(x.b - y.b), std::abs(x.d - y.d));
}

/// Cost of matching a point to its diagonal projection ((b+d)/2, (b+d)/2).
inline double diagonal_cost(const PlanarPoint& x) { return std::abs(x.d - x.b) / 2.0; }

inline std::vector<PlanarPoint> matched_points(const PersistenceDiagram& diagram,
                                               EssentialPolicy policy) {
  std::vector<PlanarPoint> pts;
  pts.reserve(diagram.size());
  for (const DiagramPoint& p : diagram.points) {
    if (p.essential && policy == EssentialPolicy::exclude) continue;
    pts.push_back({p.birth, p.death});
  }
  return pts;
}

inline void check_policy(const PersistenceDiagram& x, const PersistenceDiagram& y,
                         EssentialPolicy policy) {
  if (policy != EssentialPolicy::include_shared_cap) return;
  const bool x_has = std::any_of(x.points.begin(), x.points.end(),
                                 [](const DiagramPoint& p) { return p.essential; });
  const bool y_has = std::any_of(y.points.begin(), y.points.end(),
                                 [](const DiagramPoint& p) { return p.essential; });
  if (x_has && y_has && x.cap != y.cap)
    throw std::invalid_argument("essential points included but diagram caps differ (" +
                                std::to_string(x.cap) + " vs " + std::to_string(y.cap) + ")");
}

/// Cost of assigning row i to column j in the diagonal-augmented square
/// problem: rows = X points then Y-diagonal slots, columns = Y points then
/// X-diagonal slots. Slot-to-slot cells cost 0.
inline double augmented_cost(const std::vector<PlanarPoint>& xs,
                             const std::vector<PlanarPoint>& ys, std::size_t i, std::size_t j) {
  const std::size_t n1 = xs.size(), n2 = ys.size();
  if (i < n1 && j < n2) return linf(xs[i], ys[j]);
  if (i < n1) return diagonal_cost(xs[i]);
  if (j < n2) return diagonal_cost(ys[j]);
  return 0.0;
}

/// Exact min-cost perfect matching on a dense square matrix (shortest
/// augmenting paths with potentials, O(n^3)). Returns the total cost.
inline double hungarian(const std::vector<double>& cost, std::size_t n) {
  if (n == 0) return 0.0;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> row_potential(n + 1, 0.0), col_potential(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0);  // match[j] = row assigned to column j (1-based)
  std::vector<std::size_t> path(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> min_slack(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced =
            cost[(i0 - 1) * n + (j - 1)] - row_potential[i0] - col_potential[j];
        if (reduced < min_slack[j]) {
          min_slack[j] = reduced;
          path[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          row_potential[match[j]] += delta;
          col_potential[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = path[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  double total = 0.0;
  for (std::size_t j = 1; j <= n; ++j) total += cost[(match[j] - 1) * n + (j - 1)];
  return total;
}

/// Maximum bipartite matching (Hopcroft-Karp). Adjacency supplied as a
/// callable rows x cols -> bool.
template <typename Adjacency>
std::size_t max_bipartite_matching(std::size_t n, Adjacency adjacent) {
  constexpr int kUnmatched = -1;
  std::vector<int> match_left(n, kUnmatched), match_right(n, kUnmatched);
  std::vector<int> level(n);
  std::vector<std::size_t> queue(n);

  auto bfs = [&]() {
    std::size_t head = 0, tail = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (match_left[u] == kUnmatched) {
        level[u] = 0;
        queue[tail++] = u;
      } else {
        level[u] = -1;
      }
    }
    bool reachable = false;
    while (head < tail) {
      const std::size_t u = queue[head++];
      for (std::size_t v = 0; v < n; ++v) {
        if (!adjacent(u, v)) continue;
        const int w = match_right[v];
        if (w == kUnmatched) {
          reachable = true;
        } else if (level[w] < 0) {
          level[w] = level[u] + 1;
          queue[tail++] = static_cast<std::size_t>(w);
        }
      }
    }
    return reachable;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!adjacent(u, v)) continue;
      const int w = match_right[v];
      if (w == kUnmatched ||
          (level[w] == level[u] + 1 && dfs(static_cast<std::size_t>(w)))) {
        match_left[u] = static_cast<int>(v);
        match_right[v] = static_cast<int>(u);
        return true;
      }
    }
    level[u] = -1;
    return false;
  };

  std::size_t matched = 0;
  while (bfs()) {
    for (std::size_t u = 0; u < n; ++u)
      if (match_left[u] == kUnmatched && dfs(u)) ++matched;
  }
  return matched;
}

}  // namespace detail

/// Bottleneck distance between two diagrams: the smallest threshold c such
/// that the diagonal-augmented bipartite graph restricted to costs <= c has a
/// perfect matching. Exact: c is found by binary search over the sorted
/// multiset of realizable costs.
inline double bottleneck(const PersistenceDiagram& x, const PersistenceDiagram& y,
                         EssentialPolicy policy = EssentialPolicy::exclude) {
  detail::check_policy(x, y, policy);
  const auto xs = detail::matched_points(x, policy);
  const auto ys = detail::matched_points(y, policy);
  const std::size_t n = xs.size() + ys.size();
  if (n == 0) return 0.0;

  std::vector<double> candidates = {0.0};
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) candidates.push_back(detail::linf(xs[i], ys[j]));
  for (const auto& p : xs) candidates.push_back(detail::diagonal_cost(p));
  for (const auto& p : ys) candidates.push_back(detail::diagonal_cost(p));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto feasible = [&](double c) {
    return detail::max_bipartite_matching(n, [&](std::size_t i, std::size_t j) {
             return detail::augmented_cost(xs, ys, i, j) <= c;
           }) == n;
  };

  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

/// p-Wasserstein distance (L-infinity ground metric, diagonal-augmented):
/// the Hungarian algorithm on the (n1+n2)-square matrix of cost^p, then the
/// p-th root of the optimum.
inline double wasserstein(const PersistenceDiagram& x, const PersistenceDiagram& y, double p,
                          EssentialPolicy policy = EssentialPolicy::exclude) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("wasserstein: p must be finite and >= 1");
  detail::check_policy(x, y, policy);
  const auto xs = detail::matched_points(x, policy);
  const auto ys = detail::matched_points(y, policy);
  const std::size_t n = xs.size() + ys.size();
  if (n == 0) return 0.0;

  std::vector<double> cost(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cost[i * n + j] = std::pow(detail::augmented_cost(xs, ys, i, j), p);

  return std::pow(detail::hungarian(cost, n), 1.0 / p);
}

enum class MatchMode { bottleneck, wasserstein };

/// Exhaustive-enumeration reference for both distances. Limited to
/// |X| + |Y| <= 8 points; every partial matching (with diagonal assignments
/// for the rest) is evaluated.
inline double brute_force_distance(const PersistenceDiagram& x, const PersistenceDiagram& y,
                                   MatchMode mode, double p = 1.0,
                                   EssentialPolicy policy = EssentialPolicy::exclude) {
  if (mode == MatchMode::wasserstein && (!(p >= 1.0) || !std::isfinite(p)))
    throw std::invalid_argument("brute_force_distance: p must be finite and >= 1");
  detail::check_policy(x, y, policy);
  const auto xs = detail::matched_points(x, policy);
  const auto ys = detail::matched_points(y, policy);
  if (xs.size() + ys.size() > 8)
    throw std::invalid_argument("brute_force_distance: more than 8 points total");

  std::vector<char> used(ys.size(), 0);
  double best = std::numeric_limits<double>::infinity();

  // Accumulate either max cost (bottleneck) or sum of cost^p (Wasserstein).
  auto combine = [&](double acc, double c) {
    return mode == MatchMode::bottleneck ? std::max(acc, c) : acc + std::pow(c, p);
  };

  std::function<void(std::size_t, double)> recurse = [&](std::size_t i, double acc) {
    if (acc >= best) return;
    if (i == xs.size()) {
      double total = acc;
      for (std::size_t j = 0; j < ys.size(); ++j)
        if (!used[j]) total = combine(total, detail::diagonal_cost(ys[j]));
      best = std::min(best, total);
      return;
    }
    recurse(i + 1, combine(acc, detail::diagonal_cost(xs[i])));
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      recurse(i + 1, combine(acc, detail::linf(xs[i], ys[j])));
      used[j] = 0;
    }
  };
  recurse(0, 0.0);

  return mode == MatchMode::bottleneck ? best : std::pow(best, 1.0 / p);
}

}  // namespace pts
