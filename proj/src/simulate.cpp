#include "tsg/var_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tsg/errors.hpp"
#include "tsg/rng.hpp"
#include "tsg/stats.hpp"

namespace tsg::var_sim {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// One row of innovations: m standard normals coloured by the lower Cholesky
// factor.  With an identity factor the output equals the raw draws bit for
// bit, which keeps the linear additive model and simulate_var interchangeable.
void draw_innovations(Rng& rng, const Eigen::MatrixXd& lower,
                      std::vector<double>& z, std::vector<double>& eps) {
  const int m = static_cast<int>(z.size());
  for (int k = 0; k < m; ++k) z[k] = rng.normal();
  for (int b = 0; b < m; ++b) {
    double acc = 0.0;
    for (int k = 0; k <= b; ++k) acc += lower(b, k) * z[k];
    eps[b] = acc;
  }
}

void check_sim_args(int n, int burnin) {
  if (n < 1) throw model_error("sample length must be positive");
  if (burnin < 0) throw model_error("burn-in must be nonnegative");
}

double catalog_term(int tag, double x) {
  switch (tag) {
    case static_cast<int>(FunctionTag::Linear):
      return 0.4 * x;
    case static_cast<int>(FunctionTag::Saturating):
      return 0.8 * x / (1.0 + x * x);
    case static_cast<int>(FunctionTag::Oscillatory):
      return 0.5 * std::sin(x);
    default:
      return 0.0 * x;
  }
}

}  // namespace

TimeSeries simulate_var(const VarModel& model, int n, int burnin,
                        std::uint64_t seed) {
  const StationarityResult st = is_stationary(model);
  if (!st.stationary)
    throw model_error("model is not stationary (spectral radius " +
                      num(st.spectral_radius) + ")");
  check_sim_args(n, burnin);
  const int m = static_cast<int>(model.vertices.size());
  const Eigen::LLT<Eigen::MatrixXd> llt(model.sigma);
  if (llt.info() != Eigen::Success)
    throw model_error("innovation covariance is not positive definite");
  const Eigen::MatrixXd lower = llt.matrixL();

  const int total = burnin + n;
  Eigen::MatrixXd x(total, m);
  Rng rng(seed);
  std::vector<double> z(m), eps(m);
  for (int t = 0; t < total; ++t) {
    draw_innovations(rng, lower, z, eps);
    for (int b = 0; b < m; ++b) {
      double acc = 0.0;
      for (int u = 1; u <= model.order; ++u) {
        if (t - u < 0) continue;
        for (int a = 0; a < m; ++a) acc += model.phi[u - 1](b, a) * x(t - u, a);
      }
      x(t, b) = acc + eps[b];
    }
  }
  return {model.vertices, x.bottomRows(n)};
}

TimeSeries simulate_additive(const MixedGraph& g, int p,
                             const FunctionCatalog& catalog, int n, int burnin,
                             std::uint64_t seed) {
  if (p < 1) throw model_error("lag order must be positive");
  check_sim_args(n, burnin);
  const int m = g.vertex_count();
  if (m == 0) throw model_error("graph has no vertices");

  std::vector<std::vector<int>> tag(m, std::vector<int>(m, -1));
  for (const auto& [key, fn] : catalog) {
    const auto target = g.find(key.first);
    const auto source = g.find(key.second);
    if (!target || !source)
      throw model_error("catalog names an unknown vertex: " + key.first +
                        ", " + key.second);
    if (*target != *source && !g.has_directed(*source, *target))
      throw model_error("catalog entry needs the directed edge " + key.second +
                        " -> " + key.first);
    tag[*target][*source] = static_cast<int>(fn);
  }

  const Eigen::MatrixXd lower = Eigen::MatrixXd::Identity(m, m);
  const int total = burnin + n;
  Eigen::MatrixXd x(total, m);
  Rng rng(seed);
  std::vector<double> z(m), eps(m);
  for (int t = 0; t < total; ++t) {
    draw_innovations(rng, lower, z, eps);
    for (int b = 0; b < m; ++b) {
      double acc = 0.0;
      for (int u = 1; u <= p; ++u) {
        if (t - u < 0) continue;
        for (int a = 0; a < m; ++a) acc += catalog_term(tag[b][a], x(t - u, a));
      }
      x(t, b) = acc + eps[b];
    }
  }

  const Eigen::MatrixXd kept = x.bottomRows(n);
  if (!kept.allFinite())
    throw model_error("explosive additive simulation: non-finite values");
  if (n >= 2)
    for (int c = 0; c < m; ++c) {
      const double mean = kept.col(c).mean();
      const double var =
          (kept.col(c).array() - mean).square().sum() / (n - 1);
      if (var > 1e6)
        throw model_error("explosive additive simulation: component " +
                          g.label(c) + " has sample variance " + num(var));
    }
  return {g.labels(), kept};
}

TimeSeries simulate_spike(const MixedGraph& g, const SpikeParams& params,
                          int n, std::uint64_t seed) {
  const int m = g.vertex_count();
  if (m == 0) throw model_error("graph has no vertices");
  if (n < 1) throw model_error("sample length must be positive");
  if (params.horizon < 1) throw model_error("horizon must be positive");
  if (!std::isfinite(params.theta)) throw model_error("theta must be finite");

  std::vector<std::vector<const std::vector<double>*>> kern(
      m, std::vector<const std::vector<double>*>(m, nullptr));
  for (const auto& [key, ker] : params.kernels) {
    const auto target = g.find(key.first);
    const auto source = g.find(key.second);
    if (!target || !source)
      throw model_error("kernel names an unknown vertex: " + key.first + ", " +
                        key.second);
    if (!g.has_directed(*source, *target))
      throw model_error("kernel entry needs the directed edge " + key.second +
                        " -> " + key.first);
    for (const double v : ker)
      if (!std::isfinite(v)) throw model_error("kernel values must be finite");
    kern[*target][*source] = &ker;
  }

  Eigen::MatrixXd x(n, m);
  x.row(0).setOnes();
  std::vector<int> last_event(m, 0);
  Rng rng(seed);
  for (int t = 1; t < n; ++t) {
    for (int b = 0; b < m; ++b) {
      const int gamma = std::min(t - last_event[b], params.horizon);
      double input = 0.0;
      for (int a = 0; a < m; ++a) {
        const std::vector<double>* ker = kern[b][a];
        if (!ker) continue;
        const int len = std::min(gamma, static_cast<int>(ker->size()));
        for (int u = 1; u <= len; ++u) input += (*ker)[u - 1] * x(t - u, a);
      }
      const double prob = stats::normal_cdf(input - params.theta);
      x(t, b) = rng.uniform01() <= prob ? 1.0 : 0.0;
      if (x(t, b) == 1.0) last_event[b] = t;
    }
  }
  return {g.labels(), x};
}

TimeSeries simulate_threshold(const ThresholdParams& params, int n,
                              std::uint64_t seed) {
  if (!(std::abs(params.rho) < 1.0))
    throw model_error("rho must satisfy |rho| < 1");
  if (!(params.c > 0.0) || !std::isfinite(params.c))
    throw model_error("threshold c must be positive");
  if (n < 1) throw model_error("sample length must be positive");

  TimeSeries out;
  out.labels = {"1", "2", "3"};
  out.data.resize(n, 3);
  Rng rng(seed);
  for (int t = 0; t < n; ++t) {
    const double z1 = rng.normal();
    const double z2 = rng.normal();
    const double z3 = rng.normal();
    const double rho_t =
        (t > 0 && std::abs(out.data(t - 1, 2)) > params.c) ? params.rho : 0.0;
    out.data(t, 0) = z1;
    out.data(t, 1) = rho_t * z1 + std::sqrt(1.0 - rho_t * rho_t) * z2;
    out.data(t, 2) = z3;
  }
  return out;
}

}  // namespace tsg::var_sim
