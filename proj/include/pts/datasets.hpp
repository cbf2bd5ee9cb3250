#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pts/diagram.hpp"
#include "pts/parallel.hpp"
#include "pts/rng.hpp"

namespace pts {

enum class ShapeClass { circle, two_circles, figure_eight, sphere, torus, blob };

inline const char* shape_name(ShapeClass c) {
  switch (c) {
    case ShapeClass::circle: return "circle";
    case ShapeClass::two_circles: return "two_circles";
    case ShapeClass::figure_eight: return "figure_eight";
    case ShapeClass::sphere: return "sphere";
    case ShapeClass::torus: return "torus";
    case ShapeClass::blob: return "blob";
  }
  throw std::invalid_argument("unknown shape class");
}

inline ShapeClass shape_from_name(const std::string& name) {
  for (const ShapeClass c : {ShapeClass::circle, ShapeClass::two_circles,
                             ShapeClass::figure_eight, ShapeClass::sphere, ShapeClass::torus,
                             ShapeClass::blob})
    if (name == shape_name(c)) return c;
  throw std::invalid_argument("unknown shape class: " + name);
}

struct ShapeSpec {
  ShapeClass shape = ShapeClass::circle;
  int n = 100;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  // Extra stream index for the jitter draw only; lets one base cloud carry
  // independent noise realizations while staying deterministic.
  std::uint64_t jitter_salt = 0;
};

/// Samples one shape. Base samples are drawn from the noiseless shape with
/// seed-derived parameters; Gaussian jitter of sd noise_sigma is then added
/// per coordinate. Deterministic given the seed.
inline PointCloud sample_shape(const ShapeSpec& spec) {
  if (spec.n < 3) throw std::invalid_argument("sample_shape: need n >= 3");
  if (spec.noise_sigma < 0.0)
    throw std::invalid_argument("sample_shape: noise_sigma must be nonnegative");
  constexpr double kTwoPi = 6.283185307179586476925286766559;

  rng::Stream base(rng::derive(spec.seed, 0));
  PointCloud cloud;

  switch (spec.shape) {
    case ShapeClass::circle: {
      cloud = PointCloud(static_cast<std::size_t>(spec.n), 2);
      for (int i = 0; i < spec.n; ++i) {
        const double theta = base.next_uniform(0.0, kTwoPi);
        cloud(i, 0) = std::cos(theta);
        cloud(i, 1) = std::sin(theta);
      }
      break;
    }
    case ShapeClass::two_circles: {
      // Unit circles centered at (-2, 0) and (2, 0).
      cloud = PointCloud(static_cast<std::size_t>(spec.n), 2);
      for (int i = 0; i < spec.n; ++i) {
        const double theta = base.next_uniform(0.0, kTwoPi);
        const double center = i % 2 == 0 ? -2.0 : 2.0;
        cloud(i, 0) = center + std::cos(theta);
        cloud(i, 1) = std::sin(theta);
      }
      break;
    }
    case ShapeClass::figure_eight: {
      // Unit circles centered at (-1, 0) and (1, 0), touching at the origin.
      cloud = PointCloud(static_cast<std::size_t>(spec.n), 2);
      for (int i = 0; i < spec.n; ++i) {
        const double theta = base.next_uniform(0.0, kTwoPi);
        const double center = i % 2 == 0 ? -1.0 : 1.0;
        cloud(i, 0) = center + std::cos(theta);
        cloud(i, 1) = std::sin(theta);
      }
      break;
    }
    case ShapeClass::sphere: {
      cloud = PointCloud(static_cast<std::size_t>(spec.n), 3);
      for (int i = 0; i < spec.n; ++i) {
        double x = base.next_normal(), y = base.next_normal(), z = base.next_normal();
        double norm = std::sqrt(x * x + y * y + z * z);
        while (norm < 1e-12) {
          x = base.next_normal();
          y = base.next_normal();
          z = base.next_normal();
          norm = std::sqrt(x * x + y * y + z * z);
        }
        cloud(i, 0) = x / norm;
        cloud(i, 1) = y / norm;
        cloud(i, 2) = z / norm;
      }
      break;
    }
    case ShapeClass::torus: {
      // Major radius 2, tube radius 0.6.
      cloud = PointCloud(static_cast<std::size_t>(spec.n), 3);
      for (int i = 0; i < spec.n; ++i) {
        const double u = base.next_uniform(0.0, kTwoPi);
        const double v = base.next_uniform(0.0, kTwoPi);
        const double ring = 2.0 + 0.6 * std::cos(v);
        cloud(i, 0) = ring * std::cos(u);
        cloud(i, 1) = ring * std::sin(u);
        cloud(i, 2) = 0.6 * std::sin(v);
      }
      break;
    }
    case ShapeClass::blob: {
      cloud = PointCloud(static_cast<std::size_t>(spec.n), 3);
      for (int i = 0; i < spec.n; ++i)
        for (int c = 0; c < 3; ++c) cloud(i, c) = 0.75 * base.next_normal();
      break;
    }
  }

  if (spec.noise_sigma > 0.0) {
    rng::Stream jitter(rng::derive(spec.seed, 1, spec.jitter_salt));
    for (std::size_t i = 0; i < cloud.size(); ++i)
      for (std::size_t c = 0; c < cloud.dim(); ++c)
        cloud(i, c) += spec.noise_sigma * jitter.next_normal();
  }
  return cloud;
}

struct CorpusEntry {
  PointCloud cloud;
  ShapeClass shape = ShapeClass::circle;
  double level = 0.0;
  int trial = 0;
};

/// Seed of the base (clean) cloud for class index `ci`, trial `trial`.
inline std::uint64_t ladder_base_seed(std::uint64_t master_seed, std::size_t ci, int trial) {
  return rng::derive(master_seed, ci, static_cast<std::uint64_t>(trial));
}

/// Noise-ladder corpus: for each class, level, and trial, one jittered cloud.
/// The base cloud is fixed per (class, trial), so the level-0 entry is the
/// clean twin of every noisy variant in the same trial.
inline std::vector<CorpusEntry> noise_ladder(const std::vector<ShapeClass>& classes, int n,
                                             const std::vector<double>& levels, int trials,
                                             std::uint64_t master_seed) {
  if (classes.empty()) throw std::invalid_argument("noise_ladder: no classes");
  if (levels.empty()) throw std::invalid_argument("noise_ladder: no levels");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i] < levels[i - 1])
      throw std::invalid_argument("noise_ladder: levels must be ascending");
  if (trials < 1) throw std::invalid_argument("noise_ladder: trials must be >= 1");

  std::vector<CorpusEntry> corpus;
  corpus.reserve(classes.size() * levels.size() * static_cast<std::size_t>(trials));
  for (std::size_t ci = 0; ci < classes.size(); ++ci)
    for (int trial = 0; trial < trials; ++trial) {
      const std::uint64_t base_seed = ladder_base_seed(master_seed, ci, trial);
      for (std::size_t li = 0; li < levels.size(); ++li) {
        ShapeSpec spec;
        spec.shape = classes[ci];
        spec.n = n;
        spec.noise_sigma = levels[li];
        spec.seed = base_seed;  // same base points at every level
        spec.jitter_salt = li;  // independent noise realization per level
        corpus.push_back({sample_shape(spec), classes[ci], levels[li], trial});
      }
    }
  return corpus;
}

enum class SeriesKind { sine, sum_of_sines, lorenz_x };

struct SeriesParams {
  std::vector<double> periods = {50.0};     // sine / sum_of_sines
  std::vector<double> amplitudes = {1.0};   // sum_of_sines (sine uses amplitude 1)
  double dt = 0.01;                         // lorenz_x step
  int transient_steps = 1000;               // lorenz_x discarded prefix
};

/// Deterministic scalar series generators. lorenz_x integrates the Lorenz
/// system (sigma 10, rho 28, beta 8/3) with fixed-step RK4 and returns x.
inline std::vector<double> sample_series(SeriesKind kind, int length, const SeriesParams& params,
                                         std::uint64_t seed) {
  if (length < 10) throw std::invalid_argument("sample_series: length must be >= 10");
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  std::vector<double> series(static_cast<std::size_t>(length), 0.0);

  switch (kind) {
    case SeriesKind::sine: {
      if (params.periods.empty() || !(params.periods[0] > 0.0))
        throw std::invalid_argument("sample_series: sine needs a positive period");
      for (int t = 0; t < length; ++t) series[t] = std::sin(kTwoPi * t / params.periods[0]);
      break;
    }
    case SeriesKind::sum_of_sines: {
      if (params.periods.empty()) throw std::invalid_argument("sample_series: no periods");
      if (params.amplitudes.size() != params.periods.size())
        throw std::invalid_argument("sample_series: amplitude count != period count");
      for (std::size_t s = 0; s < params.periods.size(); ++s) {
        if (!(params.periods[s] > 0.0))
          throw std::invalid_argument("sample_series: periods must be positive");
        for (int t = 0; t < length; ++t)
          series[t] += params.amplitudes[s] * std::sin(kTwoPi * t / params.periods[s]);
      }
      break;
    }
    case SeriesKind::lorenz_x: {
      if (!(params.dt > 0.0)) throw std::invalid_argument("sample_series: dt must be positive");
      if (params.transient_steps < 0)
        throw std::invalid_argument("sample_series: negative transient");
      rng::Stream start(rng::derive(seed, 7));
      double x = 1.0 + 0.1 * start.next_normal();
      double y = 1.0 + 0.1 * start.next_normal();
      double z = 20.0 + 0.1 * start.next_normal();
      const auto step = [&](double& sx, double& sy, double& sz) {
        const auto f = [](double ax, double ay, double az, int c) {
          switch (c) {
            case 0: return 10.0 * (ay - ax);
            case 1: return ax * (28.0 - az) - ay;
            default: return ax * ay - (8.0 / 3.0) * az;
          }
        };
        const double h = params.dt;
        double k1x = f(sx, sy, sz, 0), k1y = f(sx, sy, sz, 1), k1z = f(sx, sy, sz, 2);
        double k2x = f(sx + h / 2 * k1x, sy + h / 2 * k1y, sz + h / 2 * k1z, 0);
        double k2y = f(sx + h / 2 * k1x, sy + h / 2 * k1y, sz + h / 2 * k1z, 1);
        double k2z = f(sx + h / 2 * k1x, sy + h / 2 * k1y, sz + h / 2 * k1z, 2);
        double k3x = f(sx + h / 2 * k2x, sy + h / 2 * k2y, sz + h / 2 * k2z, 0);
        double k3y = f(sx + h / 2 * k2x, sy + h / 2 * k2y, sz + h / 2 * k2z, 1);
        double k3z = f(sx + h / 2 * k2x, sy + h / 2 * k2y, sz + h / 2 * k2z, 2);
        double k4x = f(sx + h * k3x, sy + h * k3y, sz + h * k3z, 0);
        double k4y = f(sx + h * k3x, sy + h * k3y, sz + h * k3z, 1);
        double k4z = f(sx + h * k3x, sy + h * k3y, sz + h * k3z, 2);
        sx += h / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
        sy += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
        sz += h / 6 * (k1z + 2 * k2z + 2 * k3z + k4z);
      };
      for (int t = 0; t < params.transient_steps; ++t) step(x, y, z);
      for (int t = 0; t < length; ++t) {
        series[t] = x;
        step(x, y, z);
      }
      break;
    }
  }
  return series;
}

}  // namespace pts
