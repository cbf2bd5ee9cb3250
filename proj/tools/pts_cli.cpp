// Command-line front end: diagram computation, embedding, distances,
// classification, Gram export, synthetic data generation, and the
// experiment/benchmark drivers. Errors leave as JSON on stderr with a
// nonzero exit code.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pts/pts.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct MetricChoice {
  bool on_diagrams = false;
  pts::Metric metric;                       // distances
  std::optional<pts::Kernel> kernel;        // kp / krbf similarities
  pts::EssentialPolicy policy = pts::EssentialPolicy::exclude;
};

MetricChoice parse_metric(const std::string& name, bool conventional_rbf,
                          bool include_essential) {
  MetricChoice choice;
  choice.policy = include_essential ? pts::EssentialPolicy::include_shared_cap
                                    : pts::EssentialPolicy::exclude;
  if (name == "bottleneck") {
    choice.on_diagrams = true;
    choice.metric = {pts::Metric::Kind::bottleneck, 1.0};
  } else if (name == "w1") {
    choice.on_diagrams = true;
    choice.metric = {pts::Metric::Kind::wasserstein, 1.0};
  } else if (name == "w2") {
    choice.on_diagrams = true;
    choice.metric = {pts::Metric::Kind::wasserstein, 2.0};
  } else if (name.rfind("wp:", 0) == 0) {
    choice.on_diagrams = true;
    choice.metric = {pts::Metric::Kind::wasserstein, std::stod(name.substr(3))};
  } else if (name == "geo") {
    choice.metric = {pts::Metric::Kind::geodesic, 1.0};
  } else if (name == "ngeo") {
    choice.metric = {pts::Metric::Kind::normalized_geodesic, 1.0};
  } else if (name == "chordal") {
    choice.metric = {pts::Metric::Kind::chordal, 1.0};
  } else if (name == "kp") {
    choice.kernel = pts::Kernel{pts::Kernel::Kind::projection};
  } else if (name.rfind("krbf:", 0) == 0) {
    choice.kernel = pts::Kernel{pts::Kernel::Kind::rbf, std::stod(name.substr(5)),
                                conventional_rbf ? pts::RbfForm::conventional
                                                 : pts::RbfForm::as_printed};
  } else {
    throw std::invalid_argument("unknown metric '" + name + "'");
  }
  return choice;
}

bool is_embedding_path(const std::string& path) {
  return fs::path(path).extension() == ".pts";
}

/// Diagrams grouped by homology dimension; missing dims are empty diagrams.
std::map<int, pts::PersistenceDiagram> split_by_dim(const pts::PersistenceDiagram& pd) {
  std::map<int, pts::PersistenceDiagram> by_dim;
  for (const auto& p : pd.points) {
    auto& d = by_dim[p.dim];
    d.cap = pd.cap;
    d.points.push_back(p);
  }
  if (by_dim.empty()) by_dim[0] = pd;
  return by_dim;
}

/// Distance between diagram files: the metric summed over all homology
/// dimensions present in either file.
double diagram_file_distance(const pts::PersistenceDiagram& a, const pts::PersistenceDiagram& b,
                             const pts::Metric& metric, pts::EssentialPolicy policy) {
  auto by_dim_a = split_by_dim(a);
  auto by_dim_b = split_by_dim(b);
  std::set<int> dims;
  for (const auto& [d, _] : by_dim_a) dims.insert(d);
  for (const auto& [d, _] : by_dim_b) dims.insert(d);
  double sum = 0.0;
  for (const int d : dims) {
    const pts::PersistenceDiagram& da = by_dim_a[d];
    const pts::PersistenceDiagram& db = by_dim_b[d];
    sum += metric.kind == pts::Metric::Kind::bottleneck
               ? pts::bottleneck(da, db, policy)
               : pts::wasserstein(da, db, metric.p, policy);
  }
  return sum;
}

std::vector<std::string> list_directory(const std::string& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".csv" || ext == ".pts") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no .csv or .pts files in " + dir);
  return files;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) values.push_back(std::stod(field));
  return values;
}

pts::PtsConfig load_pts_config(const std::string& config_path, std::uint64_t seed_override,
                               bool seed_given) {
  pts::PtsConfig cfg;
  if (!config_path.empty()) cfg = pts::io::load_config(config_path);
  if (seed_given) cfg.seed = seed_override;
  return cfg;
}

int run(int argc, char** argv) {
  CLI::App app{"Perturbed topological signatures: persistence diagrams, subspace "
               "embeddings, and Grassmann metrics"};
  app.require_subcommand(1);
  app.fallthrough();  // global --seed/--config/--threads may follow the subcommand

  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string config_path;
  int threads = 1;
  app.add_option("--seed", seed, "Override the seed of the invoked subcommand")
      ->each([&](const std::string&) { seed_given = true; });
  app.add_option("--config", config_path, "JSON config file (pipeline or experiment)");
  app.add_option("--threads", threads, "Worker threads for parallel stages");

  // ---- gen
  auto* gen = app.add_subcommand("gen", "Sample a synthetic shape or time series");
  std::string gen_class = "circle", gen_series, gen_out;
  int gen_n = 100, gen_length = 200;
  double gen_noise = 0.0;
  std::string gen_periods = "50", gen_amplitudes = "1";
  gen->add_option("--class", gen_class, "Shape class: circle|two_circles|figure_eight|sphere|torus|blob");
  gen->add_option("-n", gen_n, "Sample count");
  gen->add_option("--noise", gen_noise, "Gaussian jitter standard deviation");
  gen->add_option("--series", gen_series, "Series kind instead of a shape: sine|sum_of_sines|lorenz_x");
  gen->add_option("--length", gen_length, "Series length");
  gen->add_option("--periods", gen_periods, "Comma-separated series periods");
  gen->add_option("--amplitudes", gen_amplitudes, "Comma-separated series amplitudes");
  gen->add_option("-o,--out", gen_out, "Output CSV")->required();

  // ---- gen-corpus
  auto* gen_corpus = app.add_subcommand("gen-corpus", "Noise-ladder corpus with a JSON manifest");
  std::string corpus_classes = "circle,two_circles,figure_eight,torus,blob";
  std::string corpus_levels = "0,0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5";
  std::string corpus_dir;
  int corpus_n = 80, corpus_trials = 5;
  gen_corpus->add_option("--classes", corpus_classes, "Comma-separated shape classes");
  gen_corpus->add_option("--levels", corpus_levels, "Comma-separated ascending noise levels");
  gen_corpus->add_option("-n", corpus_n, "Points per cloud");
  gen_corpus->add_option("--trials", corpus_trials, "Trials per class and level");
  gen_corpus->add_option("-o,--out", corpus_dir, "Output directory")->required();

  // ---- compute-pd
  auto* compute = app.add_subcommand("compute-pd", "Persistence diagram of a point cloud, "
                                                   "series, or vertex-valued graph");
  std::string pd_input, pd_out, pd_graph_edges, pd_graph_values, pd_direction = "sublevel";
  int pd_max_dim = 1, pd_embed_dim = 0, pd_lag = 1;
  double pd_max_eps = 0.0, pd_dedup = 1e-12;
  compute->add_option("input", pd_input, "Point-cloud or series CSV");
  compute->add_option("--max-dim", pd_max_dim, "Top homology dimension (0 or 1)");
  compute->add_option("--max-eps", pd_max_eps, "Filtration cap (required for VR input)");
  compute->add_option("--embed-dim", pd_embed_dim, "Delay-embed the input series first");
  compute->add_option("--lag", pd_lag, "Delay-embedding lag");
  compute->add_option("--graph-edges", pd_graph_edges, "Edge CSV for scalar-field input");
  compute->add_option("--graph-values", pd_graph_values, "Vertex-value CSV for scalar-field input");
  compute->add_option("--direction", pd_direction, "sublevel|superlevel (scalar field)");
  compute->add_option("--dedup", pd_dedup, "Duplicate-point tolerance before VR");
  compute->add_option("-o,--out", pd_out, "Output diagram CSV")->required();

  // ---- embed
  auto* embed = app.add_subcommand("embed", "Embed a diagram as a Grassmann point");
  std::string embed_input, embed_out, embed_scaling;
  int embed_dim_select = -1;
  embed->add_option("input", embed_input, "Diagram CSV")->required();
  embed->add_option("--dim", embed_dim_select, "Homology dimension to embed (required when mixed)");
  embed->add_option("--scaling", embed_scaling,
                    "min_x,max_x,min_y,max_y transformed-plane box (default: fit to input)");
  embed->add_option("-o,--out", embed_out, "Output .pts file")->required();

  // ---- dist
  auto* dist = app.add_subcommand("dist", "Distance or kernel value between two files");
  std::string dist_metric, dist_a, dist_b;
  bool dist_conventional = false, dist_include_essential = false;
  dist->add_option("--metric", dist_metric,
                   "bottleneck|w1|w2|wp:<p> (diagram CSVs) or geo|ngeo|chordal|kp|krbf:<beta> "
                   "(.pts embeddings)")
      ->required();
  dist->add_flag("--conventional", dist_conventional,
                 "Use exp(-beta d^2) for krbf instead of the similarity-decreasing printed form");
  dist->add_flag("--include-essential", dist_include_essential,
                 "Match essential bars too (caps must agree)");
  dist->add_option("a", dist_a)->required();
  dist->add_option("b", dist_b)->required();

  // ---- knn
  auto* knn = app.add_subcommand("knn", "k-nearest-neighbor classification");
  std::string knn_train, knn_test, knn_labels, knn_metric = "chordal", knn_out;
  int knn_k = 1;
  bool knn_include_essential = false;
  knn->add_option("--train", knn_train, "Directory of training features")->required();
  knn->add_option("--labels", knn_labels, "CSV of `file,label` for the training set")->required();
  knn->add_option("--test", knn_test, "Directory of query features")->required();
  knn->add_option("--metric", knn_metric, "Distance metric (must match the feature kind)");
  knn->add_option("-k", knn_k, "Neighbor count");
  knn->add_flag("--include-essential", knn_include_essential, "Match essential bars too");
  knn->add_option("-o,--out", knn_out, "Predictions CSV (default: stdout)");

  // ---- gram
  auto* gram = app.add_subcommand("gram", "Kernel Gram matrix over a directory of embeddings");
  std::string gram_kernel = "kp", gram_dir, gram_out, gram_labels_in, gram_labels_out;
  bool gram_conventional = false;
  gram->add_option("--kernel", gram_kernel, "kp|krbf:<beta>");
  gram->add_flag("--conventional", gram_conventional, "Conventional RBF form");
  gram->add_option("dir", gram_dir, "Directory of .pts files")->required();
  gram->add_option("-o,--out", gram_out, "Output CSV")->required();
  gram->add_option("--labels", gram_labels_in, "Optional `file,label` CSV to re-emit");
  gram->add_option("--labels-out", gram_labels_out, "Label column output path");

  // ---- noise-exp
  auto* noise = app.add_subcommand("noise-exp", "Noise-robustness classification experiment");
  std::string noise_out, noise_table;
  noise->add_option("-o,--out", noise_out, "Report JSON path")->required();
  noise->add_option("--table", noise_table, "Also write the aligned-text table here");

  // ---- bench
  auto* bench = app.add_subcommand("bench", "Distance timing benchmark");
  std::string bench_out, bench_table;
  bench->add_option("-o,--out", bench_out, "Report JSON path")->required();
  bench->add_option("--table", bench_table, "Also write the aligned-text table here");

  CLI11_PARSE(app, argc, argv);

  // ------------------------------------------------------------------
  if (gen->parsed()) {
    if (!gen_series.empty()) {
      pts::SeriesParams params;
      params.periods = parse_double_list(gen_periods);
      params.amplitudes = parse_double_list(gen_amplitudes);
      if (params.amplitudes.size() == 1 && params.periods.size() > 1)
        params.amplitudes.assign(params.periods.size(), params.amplitudes[0]);
      pts::SeriesKind kind;
      if (gen_series == "sine") kind = pts::SeriesKind::sine;
      else if (gen_series == "sum_of_sines") kind = pts::SeriesKind::sum_of_sines;
      else if (gen_series == "lorenz_x") kind = pts::SeriesKind::lorenz_x;
      else throw std::invalid_argument("unknown series kind '" + gen_series + "'");
      pts::io::save_series_csv(pts::sample_series(kind, gen_length, params, seed), gen_out);
    } else {
      pts::ShapeSpec spec;
      spec.shape = pts::shape_from_name(gen_class);
      spec.n = gen_n;
      spec.noise_sigma = gen_noise;
      spec.seed = seed;
      pts::io::save_cloud_csv(pts::sample_shape(spec), gen_out);
    }
    return 0;
  }

  if (gen_corpus->parsed()) {
    std::vector<pts::ShapeClass> classes;
    {
      std::stringstream ss(corpus_classes);
      std::string name;
      while (std::getline(ss, name, ',')) classes.push_back(pts::shape_from_name(name));
    }
    const std::vector<double> levels = parse_double_list(corpus_levels);
    const auto corpus = pts::noise_ladder(classes, corpus_n, levels, corpus_trials, seed);
    fs::create_directories(corpus_dir);
    json manifest = json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& entry = corpus[i];
      char name[128];
      std::snprintf(name, sizeof(name), "%s_L%02zu_T%03d.csv", pts::shape_name(entry.shape),
                    static_cast<std::size_t>(
                        std::find(levels.begin(), levels.end(), entry.level) - levels.begin()),
                    entry.trial);
      const std::string path = (fs::path(corpus_dir) / name).string();
      pts::io::save_cloud_csv(entry.cloud, path);
      manifest.push_back({{"file", name},
                          {"class", pts::shape_name(entry.shape)},
                          {"level", entry.level},
                          {"trial", entry.trial}});
    }
    std::ofstream mf(fs::path(corpus_dir) / "manifest.json");
    mf << manifest.dump(2) << '\n';
    return 0;
  }

  if (compute->parsed()) {
    pts::PersistenceDiagram merged;
    if (!pd_graph_values.empty() || !pd_graph_edges.empty()) {
      if (pd_graph_values.empty() || pd_graph_edges.empty())
        throw std::invalid_argument("scalar-field input needs --graph-edges and --graph-values");
      const pts::ScalarGraph graph = pts::io::load_scalar_graph(pd_graph_edges, pd_graph_values);
      const auto direction = [&] {
        if (pd_direction == "sublevel") return pts::FieldDirection::sublevel;
        if (pd_direction == "superlevel") return pts::FieldDirection::superlevel;
        throw std::invalid_argument("direction must be sublevel or superlevel");
      }();
      merged = pts::scalar_field_h0(graph, direction);
    } else {
      if (pd_input.empty()) throw std::invalid_argument("missing input file");
      if (!(pd_max_eps > 0.0)) throw std::invalid_argument("--max-eps must be positive");
      pts::PointCloud cloud;
      if (pd_embed_dim > 0) {
        cloud = pts::delay_embed(pts::io::load_series_csv(pd_input), pd_embed_dim, pd_lag);
      } else {
        cloud = pts::io::load_cloud_csv(pd_input);
      }
      cloud = pts::deduplicate(cloud, pd_dedup);
      const auto diagrams = pts::vr_persistence(cloud, pd_max_dim, pd_max_eps);
      merged.cap = pd_max_eps;
      for (const auto& d : diagrams)
        merged.points.insert(merged.points.end(), d.points.begin(), d.points.end());
    }
    pts::io::save_diagram_csv(merged, pd_out);
    return 0;
  }

  if (embed->parsed()) {
    pts::PtsConfig cfg = load_pts_config(config_path, seed, seed_given);
    const pts::PersistenceDiagram loaded = pts::io::load_diagram_csv(embed_input);
    auto by_dim = split_by_dim(loaded);
    pts::PersistenceDiagram selected;
    if (embed_dim_select >= 0) {
      if (!by_dim.count(embed_dim_select))
        throw std::invalid_argument("diagram has no points of dimension " +
                                    std::to_string(embed_dim_select));
      selected = by_dim[embed_dim_select];
    } else if (by_dim.size() == 1) {
      selected = by_dim.begin()->second;
    } else {
      throw std::invalid_argument("diagram mixes homology dimensions; pass --dim");
    }
    const pts::PersistenceDiagram transformed = pts::transform_axes(selected);
    pts::Scaling scaling;
    if (!embed_scaling.empty()) {
      const auto box = parse_double_list(embed_scaling);
      if (box.size() != 4) throw std::invalid_argument("--scaling needs 4 numbers");
      scaling = {box[0], box[1], box[2], box[3]};
    } else {
      scaling = pts::fit_scaling({transformed}, cfg.margin);
    }
    pts::io::save_grassmann(pts::pts_embed(selected, cfg, scaling,
                                           pts::StackMode::surfaces, threads),
                            embed_out);
    return 0;
  }

  if (dist->parsed()) {
    const MetricChoice choice =
        parse_metric(dist_metric, dist_conventional, dist_include_essential);
    const bool embeddings = is_embedding_path(dist_a);
    if (embeddings != is_embedding_path(dist_b))
      throw std::invalid_argument("cannot mix a diagram CSV with a .pts embedding");
    double value = 0.0;
    if (embeddings) {
      if (choice.on_diagrams)
        throw std::invalid_argument("metric '" + dist_metric + "' applies to diagram CSVs");
      const pts::GrassmannPoint a = pts::io::load_grassmann(dist_a);
      const pts::GrassmannPoint b = pts::io::load_grassmann(dist_b);
      value = choice.kernel ? (*choice.kernel)(a, b) : choice.metric(a, b);
    } else {
      if (!choice.on_diagrams)
        throw std::invalid_argument("metric '" + dist_metric + "' applies to .pts embeddings");
      value = diagram_file_distance(pts::io::load_diagram_csv(dist_a),
                                    pts::io::load_diagram_csv(dist_b), choice.metric,
                                    choice.policy);
    }
    std::cout << pts::io::format_double(value) << '\n';
    return 0;
  }

  if (knn->parsed()) {
    const MetricChoice choice = parse_metric(knn_metric, false, knn_include_essential);
    if (choice.kernel) throw std::invalid_argument("knn needs a distance metric, not a kernel");
    const auto train_files = list_directory(knn_train);
    const auto test_files = list_directory(knn_test);

    std::map<std::string, int> label_map;
    for (const auto& [file, label] : pts::io::load_labels_csv(knn_labels)) label_map[file] = label;
    std::vector<int> labels;
    for (const auto& file : train_files) {
      const std::string base = fs::path(file).filename().string();
      const auto it = label_map.count(base) ? label_map.find(base) : label_map.find(file);
      if (it == label_map.end()) throw std::runtime_error("no label for " + base);
      labels.push_back(it->second);
    }

    std::vector<int> predictions;
    if (choice.on_diagrams) {
      std::vector<pts::PersistenceDiagram> train, test;
      for (const auto& f : train_files) train.push_back(pts::io::load_diagram_csv(f));
      for (const auto& f : test_files) test.push_back(pts::io::load_diagram_csv(f));
      predictions = pts::knn_classify(
          train, labels, test,
          [&](const pts::PersistenceDiagram& a, const pts::PersistenceDiagram& b) {
            return diagram_file_distance(a, b, choice.metric, choice.policy);
          },
          knn_k, threads);
    } else {
      std::vector<pts::GrassmannPoint> train, test;
      for (const auto& f : train_files) train.push_back(pts::io::load_grassmann(f));
      for (const auto& f : test_files) test.push_back(pts::io::load_grassmann(f));
      predictions = pts::knn_classify(train, labels, test, choice.metric, knn_k, threads);
    }

    std::ostringstream out;
    for (std::size_t i = 0; i < test_files.size(); ++i)
      out << fs::path(test_files[i]).filename().string() << ',' << predictions[i] << '\n';
    if (knn_out.empty()) {
      std::cout << out.str();
    } else {
      std::ofstream f(knn_out);
      f << out.str();
    }
    return 0;
  }

  if (gram->parsed()) {
    const MetricChoice choice = parse_metric(gram_kernel, gram_conventional, false);
    if (!choice.kernel) throw std::invalid_argument("gram needs kp or krbf:<beta>");
    const auto files = list_directory(gram_dir);
    std::vector<pts::GrassmannPoint> points;
    for (const auto& f : files) points.push_back(pts::io::load_grassmann(f));
    const pts::GramResult result = pts::compute_gram(points, *choice.kernel, threads);
    if (!result.psd)
      std::cerr << json{{"warning", "projection-kernel gram is not PSD"},
                        {"min_eigenvalue", result.min_eigenvalue}}
                       .dump()
                << '\n';
    std::ofstream out(gram_out);
    if (!out) throw std::runtime_error("cannot open for writing: " + gram_out);
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (i) out << ',';
      out << fs::path(files[i]).filename().string();
    }
    out << '\n';
    for (Eigen::Index i = 0; i < result.matrix.rows(); ++i) {
      for (Eigen::Index j = 0; j < result.matrix.cols(); ++j) {
        if (j) out << ',';
        out << pts::io::format_double(result.matrix(i, j));
      }
      out << '\n';
    }
    if (!gram_labels_in.empty()) {
      if (gram_labels_out.empty())
        throw std::invalid_argument("--labels needs --labels-out");
      std::map<std::string, int> label_map;
      for (const auto& [file, label] : pts::io::load_labels_csv(gram_labels_in))
        label_map[file] = label;
      std::ofstream lf(gram_labels_out);
      for (const auto& f : files) {
        const std::string base = fs::path(f).filename().string();
        if (!label_map.count(base)) throw std::runtime_error("no label for " + base);
        lf << base << ',' << label_map[base] << '\n';
      }
    }
    return 0;
  }

  if (noise->parsed()) {
    pts::NoiseExperimentConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open " + config_path);
      json j;
      in >> j;
      if (j.contains("classes")) {
        cfg.classes.clear();
        for (const auto& name : j.at("classes"))
          cfg.classes.push_back(pts::shape_from_name(name.get<std::string>()));
      }
      if (j.contains("points_per_cloud")) cfg.points_per_cloud = j.at("points_per_cloud");
      if (j.contains("levels")) cfg.levels = j.at("levels").get<std::vector<double>>();
      if (j.contains("trials")) cfg.trials = j.at("trials");
      if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed");
      if (j.contains("max_eps")) cfg.max_eps = j.at("max_eps");
      if (j.contains("max_homology_dim")) cfg.max_homology_dim = j.at("max_homology_dim");
      if (j.contains("knn_k")) cfg.knn_k = j.at("knn_k");
      if (j.contains("pts")) cfg.pts = pts::io::config_from_json(j.at("pts"));
    }
    if (seed_given) cfg.master_seed = seed;
    cfg.threads = threads;
    const pts::ExperimentReport report = pts::run_noise_experiment(cfg);
    std::ofstream out(noise_out);
    if (!out) throw std::runtime_error("cannot open for writing: " + noise_out);
    out << report.to_json().dump(2) << '\n';
    const std::string table = report.to_table();
    if (!noise_table.empty()) {
      std::ofstream tf(noise_table);
      tf << table;
    }
    std::cout << table;
    return 0;
  }

  if (bench->parsed()) {
    if (threads != 1)
      std::cerr << json{{"warning", "--threads ignored: the benchmark runs single-threaded "
                                    "to keep per-call times meaningful"}}
                       .dump()
                << '\n';
    pts::TimingBenchmarkConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open " + config_path);
      json j;
      in >> j;
      if (j.contains("diagram_points")) cfg.diagram_points = j.at("diagram_points");
      if (j.contains("pair_count")) cfg.pair_count = j.at("pair_count");
      if (j.contains("repetitions")) cfg.repetitions = j.at("repetitions");
      if (j.contains("batches")) cfg.batches = j.at("batches");
      if (j.contains("grid_k")) cfg.grid_k = j.at("grid_k");
      if (j.contains("subspace_p")) cfg.subspace_p = j.at("subspace_p");
      if (j.contains("grid_sweep")) cfg.grid_sweep = j.at("grid_sweep").get<std::vector<int>>();
      if (j.contains("seed")) cfg.seed = j.at("seed");
    }
    if (seed_given) cfg.seed = seed;
    const pts::TimingReport report = pts::run_timing_benchmark(cfg);
    std::ofstream out(bench_out);
    if (!out) throw std::runtime_error("cannot open for writing: " + bench_out);
    out << report.to_json().dump(2) << '\n';
    const std::string table = report.to_table();
    if (!bench_table.empty()) {
      std::ofstream tf(bench_table);
      tf << table;
    }
    std::cout << table;
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return 1;
  }
}
