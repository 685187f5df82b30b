#include "tsg/var_sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tsg/errors.hpp"
#include "tsg/rng.hpp"

namespace tsg::var_sim {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void check_shape(const VarModel& model) {
  const int m = static_cast<int>(model.vertices.size());
  if (m == 0) throw model_error("model has no vertices");
  std::set<std::string> seen(model.vertices.begin(), model.vertices.end());
  if (static_cast<int>(seen.size()) != m)
    throw model_error("duplicate vertex label in model");
  if (model.order < 1) throw model_error("model order must be positive");
  if (static_cast<int>(model.phi.size()) != model.order)
    throw model_error("model needs one coefficient matrix per lag");
  for (const auto& mat : model.phi) {
    if (mat.rows() != m || mat.cols() != m)
      throw model_error("coefficient matrix dimensions do not match the vertex count");
    if (!mat.allFinite()) throw model_error("model entries must be finite");
  }
  if (model.sigma.rows() != m || model.sigma.cols() != m)
    throw model_error("innovation covariance dimensions do not match the vertex count");
  if (!model.sigma.allFinite()) throw model_error("model entries must be finite");
  if ((model.sigma - model.sigma.transpose()).cwiseAbs().maxCoeff() > 1e-9)
    throw model_error("innovation covariance must be symmetric");
}

// Position of each model vertex in the graph; the two must name the same set.
std::vector<int> graph_indices(const std::vector<std::string>& vertices,
                               const MixedGraph& g) {
  if (static_cast<int>(vertices.size()) != g.vertex_count())
    throw model_error("model vertices do not match graph vertices");
  std::vector<int> idx(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto found = g.find(vertices[i]);
    if (!found)
      throw model_error("model vertex " + vertices[i] + " is not in the graph");
    idx[i] = *found;
  }
  return idx;
}

Eigen::MatrixXd companion_matrix(const VarModel& model) {
  const int m = static_cast<int>(model.vertices.size());
  const int p = model.order;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(p * m, p * m);
  for (int u = 0; u < p; ++u) c.block(0, u * m, m, m) = model.phi[u];
  for (int u = 1; u < p; ++u) c.block(u * m, (u - 1) * m, m, m).setIdentity();
  return c;
}

// Exact spectral radius for internal rescaling; the public check uses the
// pinned power iteration instead.
double eigen_spectral_radius(const VarModel& model) {
  const Eigen::EigenSolver<Eigen::MatrixXd> es(companion_matrix(model), false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

std::vector<std::string> validate_var(const VarModel& model,
                                      const MixedGraph& g) {
  check_shape(model);
  const std::vector<int> gidx = graph_indices(model.vertices, g);
  const int m = static_cast<int>(model.vertices.size());

  std::vector<std::string> violations;
  for (int u = 0; u < model.order; ++u)
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a) {
        if (a == b || g.has_directed(gidx[a], gidx[b])) continue;
        const double v = model.phi[u](b, a);
        if (std::abs(v) > 1e-12)
          violations.push_back("lag " + std::to_string(u + 1) +
                               " coefficient " + num(v) +
                               " on absent directed edge " + model.vertices[a] +
                               " -> " + model.vertices[b]);
      }

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(model.sigma);
  if (es.eigenvalues().minCoeff() <= 1e-10)
    throw model_error("innovation covariance is singular or not positive definite");
  const Eigen::MatrixXd k = model.sigma.inverse();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (g.has_undirected(gidx[a], gidx[b])) continue;
      const double v = k(a, b);
      if (std::abs(v) > 1e-8)
        violations.push_back("concentration " + num(v) +
                             " on absent undirected edge " + model.vertices[a] +
                             " -- " + model.vertices[b]);
    }
  return violations;
}

StationarityResult is_stationary(const VarModel& model) {
  check_shape(model);
  const Eigen::MatrixXd c = companion_matrix(model);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(c.rows());
  v /= v.norm();
  double radius = 0.0;
  bool converged = false;
  for (int it = 0; it < 500; ++it) {
    const Eigen::VectorXd w = c * v;
    const double nrm = w.norm();
    if (nrm == 0.0) return {true, 0.0};
    const double prev = radius;
    radius = nrm;
    v = w / nrm;
    if (it > 0 && std::abs(radius - prev) < 1e-9) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    // The per-step ratio oscillates when the dominant eigenvalues form a
    // complex pair; the growth rate over a block of steps does not.
    double log_growth = 0.0;
    for (int it = 0; it < 50; ++it) {
      const Eigen::VectorXd w = c * v;
      const double nrm = w.norm();
      if (nrm == 0.0) return {true, 0.0};
      log_growth += std::log(nrm);
      v = w / nrm;
    }
    radius = std::exp(log_growth / 50);
  }
  return {radius < 1.0 - 1e-6, radius};
}

VarModel random_var(const MixedGraph& g, int p, std::uint64_t seed,
                    double target_radius) {
  if (p < 1) throw model_error("model order must be positive");
  if (!(target_radius > 0.0 && target_radius < 1.0))
    throw model_error("target spectral radius must lie in (0, 1)");
  const int m = g.vertex_count();
  if (m == 0) throw model_error("graph has no vertices");

  Rng rng(seed);
  VarModel model;
  model.vertices = g.labels();
  model.order = p;
  model.phi.assign(p, Eigen::MatrixXd::Zero(m, m));
  for (int u = 0; u < p; ++u)
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a)
        if (a == b || g.has_directed(a, b))
          model.phi[u](b, a) = rng.uniform(-1.0, 1.0);

  double radius = eigen_spectral_radius(model);
  for (int round = 0; radius > target_radius + 1e-9; ++round) {
    if (round >= 100)
      throw model_error("could not rescale coefficients to the target radius");
    const double s = target_radius / radius;
    for (auto& mat : model.phi) mat *= s;
    radius = eigen_spectral_radius(model);
  }

  const auto& und = g.undirected_edges();
  if (und.empty()) {
    model.sigma = Eigen::MatrixXd::Identity(m, m);
    return model;
  }
  bool ok = false;
  Eigen::MatrixXd k;
  for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
    k = Eigen::MatrixXd::Identity(m, m);
    for (const auto& e : und) {
      const double v = rng.uniform01() < 0.5 ? 0.3 : -0.3;
      k(e.first, e.second) = v;
      k(e.second, e.first) = v;
    }
    // Alternate between flooring the spectrum and restoring the zero pattern.
    for (int round = 0; round < 50; ++round) {
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
      if (es.eigenvalues().minCoeff() > 0.04) {
        ok = true;
        break;
      }
      const Eigen::VectorXd floored = es.eigenvalues().cwiseMax(0.05);
      k = es.eigenvectors() * floored.asDiagonal() *
          es.eigenvectors().transpose();
      k = 0.5 * (k + k.transpose());
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (!g.has_undirected(i, j)) {
            k(i, j) = 0.0;
            k(j, i) = 0.0;
          }
    }
  }
  if (!ok)
    throw model_error("could not construct a positive definite innovation covariance");
  const Eigen::MatrixXd sigma = k.inverse();
  model.sigma = 0.5 * (sigma + sigma.transpose());
  return model;
}

VarModel fit_var(const TimeSeries& series, const MixedGraph& g, int p) {
  if (p < 1) throw query_error("lag order must be positive");
  const int m = static_cast<int>(series.labels.size());
  if (m == 0 || series.data.cols() != m)
    throw model_error("series columns do not match its labels");
  std::vector<int> gidx;
  try {
    gidx = graph_indices(series.labels, g);
  } catch (const model_error&) {
    throw model_error("series labels do not match graph vertices");
  }
  const int n = static_cast<int>(series.data.rows());
  if (n <= 10 * p * m)
    throw estimation_error("series too short: need more than " +
                           std::to_string(10 * p * m) + " rows, got " +
                           std::to_string(n));

  const int t_rows = n - p;
  VarModel model;
  model.vertices = series.labels;
  model.order = p;
  model.phi.assign(p, Eigen::MatrixXd::Zero(m, m));
  Eigen::MatrixXd resid(t_rows, m);

  for (int b = 0; b < m; ++b) {
    std::vector<int> cols;
    for (int a = 0; a < m; ++a)
      if (a == b || g.has_directed(gidx[a], gidx[b])) cols.push_back(a);
    const int nc = static_cast<int>(cols.size());
    const int k = p * nc;
    Eigen::MatrixXd z(t_rows, k);
    Eigen::VectorXd y(t_rows);
    for (int r = 0; r < t_rows; ++r) {
      const int t = p + r;
      y(r) = series.data(t, b);
      for (int u = 1; u <= p; ++u)
        for (int ai = 0; ai < nc; ++ai)
          z(r, (u - 1) * nc + ai) = series.data(t - u, cols[ai]);
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(z);
    if (qr.rank() < k)
      throw estimation_error("rank-deficient regressor matrix for component " +
                             series.labels[b]);
    const Eigen::VectorXd beta = qr.solve(y);
    for (int u = 1; u <= p; ++u)
      for (int ai = 0; ai < nc; ++ai)
        model.phi[u - 1](b, cols[ai]) = beta((u - 1) * nc + ai);
    resid.col(b) = y - z * beta;
  }

  const Eigen::MatrixXd sigma =
      (resid.transpose() * resid) / static_cast<double>(t_rows);
  model.sigma = 0.5 * (sigma + sigma.transpose());
  return model;
}

std::string model_to_json(const VarModel& model) {
  check_shape(model);
  const int m = static_cast<int>(model.vertices.size());
  nlohmann::json j;
  j["vertices"] = model.vertices;
  j["order"] = model.order;
  nlohmann::json lags = nlohmann::json::array();
  for (const auto& mat : model.phi) {
    std::vector<double> flat;
    flat.reserve(m * m);
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a) flat.push_back(mat(b, a));
    lags.push_back(flat);
  }
  j["phi"] = std::move(lags);
  std::vector<double> flat;
  flat.reserve(m * m);
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) flat.push_back(model.sigma(b, a));
  j["sigma"] = std::move(flat);
  return j.dump(2) + "\n";
}

namespace {

// Labels appear in CSV headers and JSON; keep them printable and delimiter
// free.
void check_io_label(const std::string& s) {
  if (s.empty()) throw parse_error("empty vertex label");
  if (s.find_first_of(",\n\r\"") != std::string::npos)
    throw parse_error("vertex label may not contain quotes, commas or line breaks: " + s);
}

Eigen::MatrixXd matrix_from_flat(const nlohmann::json& arr, int m,
                                 const char* what) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != m * m)
    throw parse_error(std::string(what) + " must hold " + std::to_string(m * m) +
                      " numbers");
  Eigen::MatrixXd mat(m, m);
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) {
      const auto& cell = arr[b * m + a];
      if (!cell.is_number())
        throw parse_error(std::string(what) + " entries must be numbers");
      const double v = cell.get<double>();
      if (!std::isfinite(v))
        throw parse_error(std::string(what) + " entries must be finite");
      mat(b, a) = v;
    }
  return mat;
}

}  // namespace

VarModel model_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("model JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("model JSON must be an object");
  for (const char* key : {"vertices", "order", "phi", "sigma"})
    if (!j.contains(key))
      throw parse_error(std::string("model JSON missing field: ") + key);

  VarModel model;
  if (!j["vertices"].is_array() || j["vertices"].empty())
    throw parse_error("vertices must be a nonempty array of labels");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw parse_error("vertex labels must be strings");
    model.vertices.push_back(v.get<std::string>());
    check_io_label(model.vertices.back());
  }
  const std::set<std::string> seen(model.vertices.begin(),
                                   model.vertices.end());
  if (seen.size() != model.vertices.size())
    throw parse_error("duplicate vertex label in model");
  const int m = static_cast<int>(model.vertices.size());

  if (!j["order"].is_number_integer() || j["order"].get<int>() < 1)
    throw parse_error("order must be a positive integer");
  model.order = j["order"].get<int>();

  if (!j["phi"].is_array() ||
      static_cast<int>(j["phi"].size()) != model.order)
    throw parse_error("phi must hold one matrix per lag");
  for (int u = 0; u < model.order; ++u)
    model.phi.push_back(matrix_from_flat(j["phi"][u], m, "phi"));
  model.sigma = matrix_from_flat(j["sigma"], m, "sigma");
  if ((model.sigma - model.sigma.transpose()).cwiseAbs().maxCoeff() > 1e-9)
    throw parse_error("sigma must be symmetric");
  return model;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

VarModel load_model(const std::string& path) {
  return model_from_json(read_file(path));
}

std::string series_to_csv(const TimeSeries& series) {
  const int m = static_cast<int>(series.labels.size());
  if (m == 0 || series.data.cols() != m || series.data.rows() < 1)
    throw model_error("series must have labelled columns and at least one row");
  for (const auto& l : series.labels) check_io_label(l);
  std::string out;
  for (int c = 0; c < m; ++c) {
    if (c > 0) out += ',';
    out += series.labels[c];
  }
  out += '\n';
  char buf[64];
  for (int r = 0; r < series.data.rows(); ++r) {
    for (int c = 0; c < m; ++c) {
      if (c > 0) out += ',';
      std::snprintf(buf, sizeof buf, "%.10g", series.data(r, c));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (const char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

TimeSeries series_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  TimeSeries series;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (!have_header) {
      for (const auto& f : fields) check_io_label(f);
      const std::set<std::string> seen(fields.begin(), fields.end());
      if (seen.size() != fields.size())
        throw parse_error("duplicate column label in series header");
      series.labels = fields;
      have_header = true;
      continue;
    }
    if (fields.size() != series.labels.size())
      throw parse_error("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(series.labels.size()) + " fields, got " +
                        std::to_string(fields.size()));
    std::vector<double> row(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const std::string& f = fields[c];
      double v = 0.0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size() ||
          !std::isfinite(v))
        throw parse_error("line " + std::to_string(lineno) +
                          ": bad number: " + f);
      row[c] = v;
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw parse_error("series CSV is empty");
  if (rows.empty()) throw parse_error("series CSV has no data rows");
  series.data.resize(static_cast<int>(rows.size()),
                     static_cast<int>(series.labels.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      series.data(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return series;
}

TimeSeries load_series(const std::string& path) {
  return series_from_csv(read_file(path));
}

}  // namespace tsg::var_sim
