#pragma once

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pts/diagram.hpp"
#include "pts/grassmann.hpp"
#include "pts/surface.hpp"

namespace pts::io {

/// Shortest exact decimal form (round-trips through strtod).
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

inline std::ofstream open_output(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

inline double parse_double(const std::string& text, const std::string& context) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str()) throw std::runtime_error("bad number '" + text + "' in " + context);
  return v;
}

inline bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace detail

// --- Point clouds: one row per point, comma-separated floats, no header.

inline PointCloud load_cloud_csv(const std::string& path) {
  auto in = detail::open_input(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (detail::blank(line)) continue;
    std::vector<double> row;
    for (const std::string& f : detail::split_csv_line(line))
      row.push_back(detail::parse_double(f, path));
    rows.push_back(std::move(row));
  }
  PointCloud cloud = PointCloud::from_rows(rows);
  cloud.validate();
  return cloud;
}

inline void save_cloud_csv(const PointCloud& cloud, const std::string& path) {
  auto out = detail::open_output(path);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t c = 0; c < cloud.dim(); ++c) {
      if (c) out << ',';
      out << format_double(cloud(i, c));
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

// --- Series: one float per line.

inline std::vector<double> load_series_csv(const std::string& path) {
  auto in = detail::open_input(path);
  std::vector<double> series;
  std::string line;
  while (std::getline(in, line)) {
    if (detail::blank(line)) continue;
    series.push_back(detail::parse_double(line, path));
  }
  return series;
}

inline void save_series_csv(const std::vector<double>& series, const std::string& path) {
  auto out = detail::open_output(path);
  for (const double v : series) out << format_double(v) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

// --- Persistence diagrams: header `birth,death,dim,essential`.

inline PersistenceDiagram load_diagram_csv(const std::string& path) {
  auto in = detail::open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty diagram file: " + path);
  if (line.rfind("birth,death,dim,essential", 0) != 0)
    throw std::runtime_error("missing diagram header in " + path);

  PersistenceDiagram pd;
  double max_cap = 0.0;
  bool has_essential = false;
  while (std::getline(in, line)) {
    if (detail::blank(line)) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != 4) throw std::runtime_error("expected 4 columns in " + path);
    DiagramPoint p;
    p.birth = detail::parse_double(fields[0], path);
    p.death = detail::parse_double(fields[1], path);
    p.dim = static_cast<int>(detail::parse_double(fields[2], path));
    const std::string& ess = fields[3];
    if (ess != "0" && ess != "1") throw std::runtime_error("essential flag must be 0 or 1 in " + path);
    p.essential = ess == "1";
    if (p.essential) {
      max_cap = has_essential ? std::max(max_cap, p.death) : p.death;
      has_essential = true;
    }
    pd.points.push_back(p);
  }
  // The file format carries no explicit cap; essential deaths define it.
  if (has_essential) pd.cap = max_cap;
  return pd;
}

inline void save_diagram_csv(const PersistenceDiagram& pd, const std::string& path) {
  auto out = detail::open_output(path);
  out << "birth,death,dim,essential\n";
  for (const DiagramPoint& p : pd.points)
    out << format_double(p.birth) << ',' << format_double(p.death) << ',' << p.dim << ','
        << (p.essential ? 1 : 0) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

// --- Scalar graphs: edge CSV (u,v per line) + vertex value CSV (one per line).

inline ScalarGraph load_scalar_graph(const std::string& edges_path,
                                     const std::string& values_path) {
  ScalarGraph graph;
  {
    auto in = detail::open_input(values_path);
    std::string line;
    while (std::getline(in, line)) {
      if (detail::blank(line)) continue;
      graph.values.push_back(detail::parse_double(line, values_path));
    }
    graph.vertex_count = graph.values.size();
  }
  {
    auto in = detail::open_input(edges_path);
    std::string line;
    while (std::getline(in, line)) {
      if (detail::blank(line)) continue;
      const auto fields = detail::split_csv_line(line);
      if (fields.size() != 2) throw std::runtime_error("expected 2 columns in " + edges_path);
      graph.edges.emplace_back(static_cast<int>(detail::parse_double(fields[0], edges_path)),
                               static_cast<int>(detail::parse_double(fields[1], edges_path)));
    }
  }
  graph.validate();
  return graph;
}

// --- Grassmann points: binary, magic "PTS1", little-endian u32 grid_k, u32 N,
// --- u32 p, then N*p f64 values column-major.

inline void save_grassmann(const GrassmannPoint& point, const std::string& path) {
  point.validate();
  auto out = detail::open_output(path, true);
  const char magic[4] = {'P', 'T', 'S', '1'};
  out.write(magic, 4);
  const std::uint32_t k = static_cast<std::uint32_t>(point.grid_k);
  const std::uint32_t n = static_cast<std::uint32_t>(point.ambient_dim());
  const std::uint32_t p = static_cast<std::uint32_t>(point.subspace_dim());
  out.write(reinterpret_cast<const char*>(&k), 4);
  out.write(reinterpret_cast<const char*>(&n), 4);
  out.write(reinterpret_cast<const char*>(&p), 4);
  // Eigen stores column-major, so the coefficient array is already in order.
  out.write(reinterpret_cast<const char*>(point.basis.data()),
            static_cast<std::streamsize>(sizeof(double)) * point.basis.size());
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline GrassmannPoint load_grassmann(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "PTS1", 4) != 0)
    throw std::runtime_error("not a PTS1 embedding file: " + path);
  std::uint32_t k = 0, n = 0, p = 0;
  in.read(reinterpret_cast<char*>(&k), 4);
  in.read(reinterpret_cast<char*>(&n), 4);
  in.read(reinterpret_cast<char*>(&p), 4);
  if (!in || n == 0 || p == 0 || p > n)
    throw std::runtime_error("corrupt embedding header in " + path);
  GrassmannPoint point;
  point.grid_k = static_cast<int>(k);
  point.basis.resize(n, p);
  in.read(reinterpret_cast<char*>(point.basis.data()),
          static_cast<std::streamsize>(sizeof(double)) * point.basis.size());
  if (!in) throw std::runtime_error("truncated embedding file: " + path);
  point.validate();
  return point;
}

// --- Config JSON.

inline PtsConfig config_from_json(const nlohmann::json& j) {
  PtsConfig cfg;
  if (j.contains("sigma")) cfg.sigma = j.at("sigma").get<double>();
  if (j.contains("grid_k")) cfg.grid_k = j.at("grid_k").get<int>();
  if (j.contains("perturb_m")) cfg.perturb_m = j.at("perturb_m").get<int>();
  if (j.contains("perturb_r")) cfg.perturb_r = j.at("perturb_r").get<double>();
  if (j.contains("subspace_p")) cfg.subspace_p = j.at("subspace_p").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("margin")) cfg.margin = j.at("margin").get<double>();
  if (j.contains("sigma_list")) cfg.sigma_list = j.at("sigma_list").get<std::vector<double>>();
  cfg.validate();
  return cfg;
}

inline nlohmann::json config_to_json(const PtsConfig& cfg) {
  nlohmann::json j{{"sigma", cfg.sigma},          {"grid_k", cfg.grid_k},
                   {"perturb_m", cfg.perturb_m},  {"perturb_r", cfg.perturb_r},
                   {"subspace_p", cfg.subspace_p},{"seed", cfg.seed},
                   {"margin", cfg.margin}};
  if (!cfg.sigma_list.empty()) j["sigma_list"] = cfg.sigma_list;
  return j;
}

inline PtsConfig load_config(const std::string& path) {
  auto in = detail::open_input(path);
  nlohmann::json j;
  in >> j;
  return config_from_json(j);
}

// --- Labels: `file,label` lines (no header). Paths are keys as written.

inline std::vector<std::pair<std::string, int>> load_labels_csv(const std::string& path) {
  auto in = detail::open_input(path);
  std::vector<std::pair<std::string, int>> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (detail::blank(line)) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != 2) throw std::runtime_error("expected `file,label` in " + path);
    labels.emplace_back(fields[0], static_cast<int>(detail::parse_double(fields[1], path)));
  }
  return labels;
}

}  // namespace pts::io
