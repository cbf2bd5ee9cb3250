#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pts/datasets.hpp"
#include "pts/embedding.hpp"
#include "pts/grassmann.hpp"
#include "pts/io.hpp"
#include "pts/learn.hpp"
#include "pts/parallel.hpp"
#include "pts/pd_metrics.hpp"
#include "pts/persistence.hpp"
#include "pts/surface.hpp"

namespace pts {

namespace detail {

inline std::string environment_stamp_json_free_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

inline nlohmann::json environment_stamp(int threads) {
  return {{"timestamp", environment_stamp_json_free_timestamp()},
          {"compiler", __VERSION__},
          {"threads", threads}};
}

/// Median of per-batch mean call times, with one discarded warm-up batch.
/// Returns {mean_seconds, std_seconds}. Runs strictly single-threaded.
template <typename Fn>
std::pair<double, double> time_calls(Fn&& call, int repetitions, int batches) {
  if (batches < 1) batches = 1;
  const int per_batch = std::max(1, repetitions / batches);
  double acc = 0.0;

  for (int i = 0; i < per_batch; ++i) acc += call(i);  // warm-up, discarded

  std::vector<double> batch_means(static_cast<std::size_t>(batches));
  int call_index = 0;
  for (int b = 0; b < batches; ++b) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < per_batch; ++i) acc += call(call_index++);
    const auto stop = std::chrono::steady_clock::now();
    batch_means[static_cast<std::size_t>(b)] =
        std::chrono::duration<double>(stop - start).count() / per_batch;
  }
  // Keep the accumulated results observable so the calls cannot be elided.
  static volatile double sink;
  sink = acc;

  std::vector<double> sorted = batch_means;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  double mean = 0.0;
  for (const double m : batch_means) mean += m;
  mean /= static_cast<double>(batch_means.size());
  double var = 0.0;
  for (const double m : batch_means) var += (m - mean) * (m - mean);
  var /= static_cast<double>(batch_means.size());
  return {median, std::sqrt(var)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Noise-robustness experiment
// ---------------------------------------------------------------------------

struct NoiseExperimentConfig {
  std::vector<ShapeClass> classes = {ShapeClass::circle, ShapeClass::two_circles,
                                     ShapeClass::figure_eight, ShapeClass::torus,
                                     ShapeClass::blob};
  int points_per_cloud = 80;
  std::vector<double> levels = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
  int trials = 20;
  std::uint64_t master_seed = 1;
  double max_eps = 3.0;
  int max_homology_dim = 1;  // diagram distances sum over dims 0..max_homology_dim
  int knn_k = 1;
  int threads = 1;
  // Embeddings use finite bars only by default, matching the diagram metrics'
  // essential-exclusion default; capped essential deaths would otherwise
  // stretch the scaling box by the arbitrary max_eps.
  bool embed_essential = false;
  PtsConfig pts;

  void validate() const {
    if (classes.empty()) throw std::invalid_argument("experiment: no classes");
    if (points_per_cloud < 3) throw std::invalid_argument("experiment: points_per_cloud < 3");
    if (levels.empty()) throw std::invalid_argument("experiment: no noise levels");
    if (trials < 1) throw std::invalid_argument("experiment: trials < 1");
    if (!(max_eps > 0.0)) throw std::invalid_argument("experiment: max_eps must be positive");
    if (max_homology_dim != 0 && max_homology_dim != 1)
      throw std::invalid_argument("experiment: max_homology_dim must be 0 or 1");
    if (knn_k < 1) throw std::invalid_argument("experiment: knn_k < 1");
    pts.validate();
  }
};

struct MethodResult {
  std::string id;            // pd_w1 | pd_bottleneck | pts_geodesic | pts_chordal
  std::string display_name;
  std::vector<double> per_level_accuracy;
  double mean_accuracy = 0.0;
  std::vector<double> per_class_accuracy;
  std::vector<std::vector<int>> confusion;  // [true class][predicted class]
  double mean_distance_seconds = 0.0;
  double std_distance_seconds = 0.0;
  int timing_repetitions = 0;
};

struct ExperimentReport {
  nlohmann::json config;
  std::vector<std::string> class_names;
  std::vector<double> levels;
  std::vector<MethodResult> methods;
  nlohmann::json environment;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["config"] = config;
    j["classes"] = class_names;
    j["levels"] = levels;
    nlohmann::json methods_json = nlohmann::json::object();
    for (const MethodResult& m : methods) {
      nlohmann::json mj;
      mj["display_name"] = m.display_name;
      mj["per_level_accuracy"] = m.per_level_accuracy;
      mj["mean_accuracy"] = m.mean_accuracy;
      mj["per_class_accuracy"] = m.per_class_accuracy;
      mj["confusion"] = m.confusion;
      methods_json[m.id] = mj;
    }
    j["methods"] = methods_json;
    nlohmann::json timing = nlohmann::json::object();
    for (const MethodResult& m : methods)
      timing[m.id] = {{"mean_seconds", m.mean_distance_seconds},
                      {"std_seconds", m.std_distance_seconds},
                      {"repetitions", m.timing_repetitions}};
    j["environment"] = environment;
    j["environment"]["distance_timing"] = timing;
    return j;
  }

  /// Aligned table in the layout of the classification results tables:
  /// one row per method, accuracy per noise level, then the averages.
  std::string to_table() const {
    std::ostringstream out;
    out << std::left << std::setw(22) << "Method";
    for (const double level : levels) {
      std::ostringstream head;
      head << "n=" << level;
      out << std::right << std::setw(9) << head.str();
    }
    out << std::right << std::setw(14) << "Avg Acc (%)" << std::setw(22)
        << "Avg Time (1e-4 sec)" << '\n';
    for (const MethodResult& m : methods) {
      out << std::left << std::setw(22) << m.display_name;
      for (const double acc : m.per_level_accuracy)
        out << std::right << std::setw(9) << std::fixed << std::setprecision(2) << 100.0 * acc;
      out << std::right << std::setw(14) << std::fixed << std::setprecision(2)
          << 100.0 * m.mean_accuracy << std::setw(22) << std::fixed << std::setprecision(3)
          << m.mean_distance_seconds * 1e4 << '\n';
    }
    return out.str();
  }
};

namespace detail {

struct TrialFeatures {
  // [item][homology dim]
  std::vector<std::vector<PersistenceDiagram>> gallery_pds, query_pds;
  std::vector<std::vector<GrassmannPoint>> gallery_embeddings, query_embeddings;
  std::vector<int> gallery_labels, query_labels;
  std::vector<std::size_t> query_level_index;
};

}  // namespace detail

/// Desk-scale analog of the noisy-shape classification experiment: per trial,
/// the clean shapes form a 1-NN gallery and their noisy variants are queries.
/// Reports per-level accuracy for Wasserstein-1 and Bottleneck on diagrams
/// and geodesic/chordal metrics on PTS embeddings. Deterministic given the
/// master seed, for any thread count.
inline ExperimentReport run_noise_experiment(const NoiseExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t n_classes = cfg.classes.size();
  const std::size_t n_levels = cfg.levels.size();
  const int dims = cfg.max_homology_dim + 1;

  // --- Diagrams for every gallery and query cloud, all trials.
  const std::size_t gallery_per_trial = n_classes;
  const std::size_t queries_per_trial = n_classes * n_levels;
  const std::size_t trials = static_cast<std::size_t>(cfg.trials);

  std::vector<detail::TrialFeatures> features(trials);
  for (auto& f : features) {
    f.gallery_pds.resize(gallery_per_trial);
    f.query_pds.resize(queries_per_trial);
    f.gallery_labels.resize(gallery_per_trial);
    f.query_labels.resize(queries_per_trial);
    f.query_level_index.resize(queries_per_trial);
  }

  parallel_for(trials * (gallery_per_trial + queries_per_trial), cfg.threads,
               [&](std::size_t flat) {
    const std::size_t per_trial = gallery_per_trial + queries_per_trial;
    const std::size_t trial = flat / per_trial;
    const std::size_t slot = flat % per_trial;

    ShapeSpec spec;
    spec.n = cfg.points_per_cloud;
    detail::TrialFeatures& f = features[trial];

    std::size_t ci;
    if (slot < gallery_per_trial) {
      ci = slot;
      spec.shape = cfg.classes[ci];
      spec.noise_sigma = 0.0;
    } else {
      const std::size_t q = slot - gallery_per_trial;
      ci = q / n_levels;
      const std::size_t li = q % n_levels;
      spec.shape = cfg.classes[ci];
      spec.noise_sigma = cfg.levels[li];
      spec.jitter_salt = li;
      f.query_level_index[q] = li;
      f.query_labels[q] = static_cast<int>(ci);
    }
    spec.seed = ladder_base_seed(cfg.master_seed, ci, static_cast<int>(trial));

    const PointCloud cloud = deduplicate(sample_shape(spec));
    auto diagrams = vr_persistence(cloud, cfg.max_homology_dim, cfg.max_eps);
    if (slot < gallery_per_trial) {
      f.gallery_labels[slot] = static_cast<int>(ci);
      f.gallery_pds[slot] = std::move(diagrams);
    } else {
      f.query_pds[slot - gallery_per_trial] = std::move(diagrams);
    }
  });

  // --- Dataset-wide scaling per homology dimension, then embeddings.
  // Empty diagrams would have no surface; a zero-lifetime sentinel keeps
  // every item embeddable without affecting diagram distances.
  auto embeddable = [&](const PersistenceDiagram& pd) {
    PersistenceDiagram fixed;
    fixed.cap = pd.cap;
    for (const DiagramPoint& p : pd.points)
      if (cfg.embed_essential || !p.essential) fixed.points.push_back(p);
    if (fixed.empty()) fixed.add(0.0, 0.0, 0, false);
    return fixed;
  };

  std::vector<Scaling> scaling_by_dim(static_cast<std::size_t>(dims));
  for (int d = 0; d < dims; ++d) {
    std::vector<PersistenceDiagram> transformed;
    for (const auto& f : features) {
      for (const auto& pds : f.gallery_pds) transformed.push_back(transform_axes(embeddable(pds[d])));
      for (const auto& pds : f.query_pds) transformed.push_back(transform_axes(embeddable(pds[d])));
    }
    scaling_by_dim[static_cast<std::size_t>(d)] = fit_scaling(transformed, cfg.pts.margin);
  }

  for (auto& f : features) {
    f.gallery_embeddings.resize(gallery_per_trial);
    f.query_embeddings.resize(queries_per_trial);
  }
  parallel_for(trials * (gallery_per_trial + queries_per_trial), cfg.threads,
               [&](std::size_t flat) {
    const std::size_t per_trial = gallery_per_trial + queries_per_trial;
    detail::TrialFeatures& f = features[flat / per_trial];
    const std::size_t slot = flat % per_trial;
    const bool is_gallery = slot < gallery_per_trial;
    const auto& pds = is_gallery ? f.gallery_pds[slot] : f.query_pds[slot - gallery_per_trial];
    auto& out = is_gallery ? f.gallery_embeddings[slot]
                           : f.query_embeddings[slot - gallery_per_trial];
    out.reserve(static_cast<std::size_t>(dims));
    for (int d = 0; d < dims; ++d)
      out.push_back(pts_embed(embeddable(pds[d]), cfg.pts,
                              scaling_by_dim[static_cast<std::size_t>(d)]));
  });

  // --- Classification, one method at a time.
  struct MethodSpec {
    std::string id, display;
    bool on_diagrams;
    Metric metric;
  };
  const std::vector<MethodSpec> method_specs = {
      {"pd_w1", "PD (1-Wasserstein)", true, {Metric::Kind::wasserstein, 1.0}},
      {"pd_bottleneck", "PD (Bottleneck)", true, {Metric::Kind::bottleneck, 1.0}},
      {"pts_geodesic", "PTS (d_G)", false, {Metric::Kind::geodesic, 1.0}},
      {"pts_chordal", "PTS (d_Delta)", false, {Metric::Kind::chordal, 1.0}},
  };

  ExperimentReport report;
  for (const ShapeClass c : cfg.classes) report.class_names.push_back(shape_name(c));
  report.levels = cfg.levels;

  for (const MethodSpec& spec : method_specs) {
    MethodResult result;
    result.id = spec.id;
    result.display_name = spec.display;
    result.per_level_accuracy.assign(n_levels, 0.0);
    result.per_class_accuracy.assign(n_classes, 0.0);
    result.confusion.assign(n_classes, std::vector<int>(n_classes, 0));

    std::vector<std::vector<int>> predictions(trials);
    parallel_for(trials, cfg.threads, [&](std::size_t trial) {
      const detail::TrialFeatures& f = features[trial];
      if (spec.on_diagrams) {
        auto distance = [&](const std::vector<PersistenceDiagram>& a,
                            const std::vector<PersistenceDiagram>& b) {
          double sum = 0.0;
          for (int d = 0; d < dims; ++d) sum += spec.metric(a[d], b[d]);
          return sum;
        };
        predictions[trial] =
            knn_classify(f.gallery_pds, f.gallery_labels, f.query_pds, distance, cfg.knn_k);
      } else {
        auto distance = [&](const std::vector<GrassmannPoint>& a,
                            const std::vector<GrassmannPoint>& b) {
          double sum = 0.0;
          for (int d = 0; d < dims; ++d) sum += spec.metric(a[d], b[d]);
          return sum;
        };
        predictions[trial] = knn_classify(f.gallery_embeddings, f.gallery_labels,
                                          f.query_embeddings, distance, cfg.knn_k);
      }
    });

    std::vector<int> level_correct(n_levels, 0), level_total(n_levels, 0);
    std::vector<int> class_correct(n_classes, 0), class_total(n_classes, 0);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const detail::TrialFeatures& f = features[trial];
      for (std::size_t q = 0; q < queries_per_trial; ++q) {
        const int truth = f.query_labels[q];
        const int predicted = predictions[trial][q];
        const std::size_t li = f.query_level_index[q];
        ++level_total[li];
        ++class_total[static_cast<std::size_t>(truth)];
        ++result.confusion[static_cast<std::size_t>(truth)][static_cast<std::size_t>(predicted)];
        if (predicted == truth) {
          ++level_correct[li];
          ++class_correct[static_cast<std::size_t>(truth)];
        }
      }
    }
    for (std::size_t li = 0; li < n_levels; ++li)
      result.per_level_accuracy[li] =
          static_cast<double>(level_correct[li]) / static_cast<double>(level_total[li]);
    for (std::size_t ci = 0; ci < n_classes; ++ci)
      result.per_class_accuracy[ci] =
          static_cast<double>(class_correct[ci]) / static_cast<double>(class_total[ci]);
    result.mean_accuracy = 0.0;
    for (const double a : result.per_level_accuracy) result.mean_accuracy += a;
    result.mean_accuracy /= static_cast<double>(n_levels);

    report.methods.push_back(std::move(result));
  }

  // --- Per-metric distance timing (single-threaded; lives in the
  // environment section so seeded reports stay byte-comparable).
  {
    const detail::TrialFeatures& f = features.front();
    const int reps = 200, batches = 5;
    for (std::size_t mi = 0; mi < method_specs.size(); ++mi) {
      const MethodSpec& spec = method_specs[mi];
      auto [mean, stdev] = detail::time_calls(
          [&](int i) {
            const std::size_t g = static_cast<std::size_t>(i) % gallery_per_trial;
            const std::size_t q = static_cast<std::size_t>(i) % queries_per_trial;
            double sum = 0.0;
            for (int d = 0; d < dims; ++d)
              sum += spec.on_diagrams ? spec.metric(f.gallery_pds[g][d], f.query_pds[q][d])
                                      : spec.metric(f.gallery_embeddings[g][d],
                                                    f.query_embeddings[q][d]);
            return sum;
          },
          reps, batches);
      report.methods[mi].mean_distance_seconds = mean;
      report.methods[mi].std_distance_seconds = stdev;
      report.methods[mi].timing_repetitions = reps;
    }
  }

  nlohmann::json config_json;
  config_json["classes"] = report.class_names;
  config_json["points_per_cloud"] = cfg.points_per_cloud;
  config_json["levels"] = cfg.levels;
  config_json["trials"] = cfg.trials;
  config_json["master_seed"] = cfg.master_seed;
  config_json["max_eps"] = cfg.max_eps;
  config_json["max_homology_dim"] = cfg.max_homology_dim;
  config_json["knn_k"] = cfg.knn_k;
  config_json["pts"] = io::config_to_json(cfg.pts);
  report.config = config_json;
  report.environment = detail::environment_stamp(cfg.threads);
  return report;
}

// ---------------------------------------------------------------------------
// Timing benchmark
// ---------------------------------------------------------------------------

struct TimingBenchmarkConfig {
  int diagram_points = 60;
  int pair_count = 8;
  int repetitions = 300;
  int batches = 10;
  int grid_k = 50;
  int subspace_p = 10;
  std::vector<int> grid_sweep = {};  // optional d_G/d_Delta sweep over grid sizes
  std::uint64_t seed = 7;

  void validate() const {
    if (diagram_points < 1) throw std::invalid_argument("benchmark: diagram_points < 1");
    if (pair_count < 1) throw std::invalid_argument("benchmark: pair_count < 1");
    if (repetitions < 100) throw std::invalid_argument("benchmark: repetitions must be >= 100");
    if (grid_k < 2) throw std::invalid_argument("benchmark: grid_k < 2");
    if (subspace_p < 1) throw std::invalid_argument("benchmark: subspace_p < 1");
    for (const int k : grid_sweep)
      if (k < 2) throw std::invalid_argument("benchmark: sweep grid size < 2");
  }
};

struct TimingEntry {
  std::string id;
  double mean_seconds = 0.0;
  double std_seconds = 0.0;
  int repetitions = 0;
  double ratio_to_chordal = 0.0;
};

struct TimingReport {
  nlohmann::json config;
  std::vector<TimingEntry> metrics;
  // grid_sweep[i] = {k, geodesic entry, chordal entry}
  std::vector<std::tuple<int, TimingEntry, TimingEntry>> grid_sweep;
  nlohmann::json environment;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["config"] = config;
    nlohmann::json m = nlohmann::json::object();
    for (const TimingEntry& e : metrics)
      m[e.id] = {{"mean_seconds", e.mean_seconds},
                 {"std_seconds", e.std_seconds},
                 {"repetitions", e.repetitions},
                 {"ratio_to_chordal", e.ratio_to_chordal}};
    j["metrics"] = m;
    nlohmann::json sweep = nlohmann::json::array();
    for (const auto& [k, geo, chordal] : grid_sweep)
      sweep.push_back({{"grid_k", k},
                       {"geodesic_mean_seconds", geo.mean_seconds},
                       {"chordal_mean_seconds", chordal.mean_seconds}});
    j["grid_sweep"] = sweep;
    j["environment"] = environment;
    return j;
  }

  std::string to_table() const {
    std::ostringstream out;
    out << std::left << std::setw(14) << "Metric" << std::right << std::setw(22)
        << "Avg Time (1e-4 sec)" << std::setw(20) << "Ratio vs d_Delta" << '\n';
    for (const TimingEntry& e : metrics)
      out << std::left << std::setw(14) << e.id << std::right << std::setw(22) << std::fixed
          << std::setprecision(3) << e.mean_seconds * 1e4 << std::setw(20) << std::fixed
          << std::setprecision(2) << e.ratio_to_chordal << '\n';
    if (!grid_sweep.empty()) {
      out << '\n'
          << std::left << std::setw(14) << "Grid size (k)" << std::right << std::setw(22)
          << "d_G (1e-4 sec)" << std::setw(22) << "d_Delta (1e-4 sec)" << '\n';
      for (const auto& [k, geo, chordal] : grid_sweep)
        out << std::left << std::setw(14) << k << std::right << std::setw(22) << std::fixed
            << std::setprecision(3) << geo.mean_seconds * 1e4 << std::setw(22) << std::fixed
            << std::setprecision(3) << chordal.mean_seconds * 1e4 << '\n';
    }
    return out.str();
  }
};

namespace detail {

inline PersistenceDiagram random_test_diagram(int points, rng::Stream& stream) {
  PersistenceDiagram pd;
  pd.cap = 3.0;
  for (int i = 0; i < points; ++i) {
    const double birth = stream.next_uniform(0.0, 1.0);
    const double lifetime = stream.next_uniform(0.05, 1.0);
    pd.add(birth, birth + lifetime, 0, false);
  }
  return pd;
}

}  // namespace detail

/// Wall-clock cost of one distance evaluation for each metric, median of
/// batch means with a discarded warm-up batch. Runs single-threaded by
/// contract: parallel timing would corrupt the per-call numbers.
inline TimingReport run_timing_benchmark(const TimingBenchmarkConfig& cfg) {
  cfg.validate();

  rng::Stream stream(rng::derive(cfg.seed, 0xbe));
  std::vector<PersistenceDiagram> diagrams;
  diagrams.reserve(static_cast<std::size_t>(cfg.pair_count) * 2);
  for (int i = 0; i < cfg.pair_count * 2; ++i)
    diagrams.push_back(detail::random_test_diagram(cfg.diagram_points, stream));

  auto embeddings_at = [&](int grid_k) {
    PtsConfig pts_cfg;
    pts_cfg.grid_k = grid_k;
    pts_cfg.subspace_p = cfg.subspace_p;
    pts_cfg.sigma = 0.02;
    pts_cfg.perturb_m = std::max(cfg.subspace_p + 1, 12);
    pts_cfg.seed = cfg.seed;
    std::vector<PersistenceDiagram> transformed;
    for (const auto& pd : diagrams) transformed.push_back(transform_axes(pd));
    const Scaling scaling = fit_scaling(transformed, pts_cfg.margin);
    std::vector<GrassmannPoint> points;
    points.reserve(diagrams.size());
    for (const auto& pd : diagrams) points.push_back(pts_embed(pd, pts_cfg, scaling));
    return points;
  };
  const std::vector<GrassmannPoint> embeddings = embeddings_at(cfg.grid_k);

  const std::size_t pairs = static_cast<std::size_t>(cfg.pair_count);
  auto diagram_pair = [&](int i) -> std::pair<const PersistenceDiagram&,
                                              const PersistenceDiagram&> {
    const std::size_t p = static_cast<std::size_t>(i) % pairs;
    return {diagrams[2 * p], diagrams[2 * p + 1]};
  };
  auto embedding_pair = [&](int i) -> std::pair<const GrassmannPoint&, const GrassmannPoint&> {
    const std::size_t p = static_cast<std::size_t>(i) % pairs;
    return {embeddings[2 * p], embeddings[2 * p + 1]};
  };

  TimingReport report;
  auto push_metric = [&](const std::string& id, auto&& call) {
    auto [mean, stdev] = detail::time_calls(call, cfg.repetitions, cfg.batches);
    report.metrics.push_back({id, mean, stdev, cfg.repetitions, 0.0});
  };

  push_metric("w1", [&](int i) {
    const auto [a, b] = diagram_pair(i);
    return wasserstein(a, b, 1.0);
  });
  push_metric("w2", [&](int i) {
    const auto [a, b] = diagram_pair(i);
    return wasserstein(a, b, 2.0);
  });
  push_metric("bottleneck", [&](int i) {
    const auto [a, b] = diagram_pair(i);
    return bottleneck(a, b);
  });
  push_metric("geodesic", [&](int i) {
    const auto [a, b] = embedding_pair(i);
    return geodesic_distance(a, b);
  });
  push_metric("chordal", [&](int i) {
    const auto [a, b] = embedding_pair(i);
    return chordal_distance(a, b);
  });

  const double chordal_mean = report.metrics.back().mean_seconds;
  for (TimingEntry& e : report.metrics)
    e.ratio_to_chordal = chordal_mean > 0.0 ? e.mean_seconds / chordal_mean : 0.0;

  for (const int k : cfg.grid_sweep) {
    const std::vector<GrassmannPoint> sweep_embeddings = embeddings_at(k);
    auto pair_at = [&](int i) -> std::pair<const GrassmannPoint&, const GrassmannPoint&> {
      const std::size_t p = static_cast<std::size_t>(i) % pairs;
      return {sweep_embeddings[2 * p], sweep_embeddings[2 * p + 1]};
    };
    auto [geo_mean, geo_std] = detail::time_calls(
        [&](int i) {
          const auto [a, b] = pair_at(i);
          return geodesic_distance(a, b);
        },
        cfg.repetitions, cfg.batches);
    auto [ch_mean, ch_std] = detail::time_calls(
        [&](int i) {
          const auto [a, b] = pair_at(i);
          return chordal_distance(a, b);
        },
        cfg.repetitions, cfg.batches);
    report.grid_sweep.emplace_back(
        k, TimingEntry{"geodesic", geo_mean, geo_std, cfg.repetitions, 0.0},
        TimingEntry{"chordal", ch_mean, ch_std, cfg.repetitions, 0.0});
  }

  nlohmann::json config_json;
  config_json["diagram_points"] = cfg.diagram_points;
  config_json["pair_count"] = cfg.pair_count;
  config_json["repetitions"] = cfg.repetitions;
  config_json["batches"] = cfg.batches;
  config_json["grid_k"] = cfg.grid_k;
  config_json["subspace_p"] = cfg.subspace_p;
  config_json["grid_sweep"] = cfg.grid_sweep;
  config_json["seed"] = cfg.seed;
  report.config = config_json;
  report.environment = detail::environment_stamp(1);
  return report;
}

}  // namespace pts
