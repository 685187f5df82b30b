#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tsg/markov.hpp"
#include "tsg/mixed_graph.hpp"

namespace tsg::var_sim {

using graph::MixedGraph;
using graph::VertexSet;

// Vector autoregression of order `order` over the named components.
// phi[u-1](b, a) is the coefficient of X_a(t-u) in the equation for X_b(t).
struct VarModel {
  std::vector<std::string> vertices;
  int order = 1;
  std::vector<Eigen::MatrixXd> phi;
  Eigen::MatrixXd sigma;  // innovation covariance, symmetric positive definite
};

// Observations row by row; column j holds the component named labels[j].
struct TimeSeries {
  std::vector<std::string> labels;
  Eigen::MatrixXd data;
};

// Outcome of an empirical check of one statement.  The statement's sets are
// indexed over the series columns; decision_at_alpha is true when the
// statement is rejected by the data.
struct TestReport {
  markov::MarkovStatement statement;
  double statistic = 0.0;
  double p_value = 1.0;
  bool decision_at_alpha = false;
  int n_used = 0;
};

struct StationarityResult {
  bool stationary;
  double spectral_radius;
};

// Regime-switching correlation model: the third component is white noise and
// drives the correlation of the first two at the next step.
struct ThresholdParams {
  double rho = 0.6;
  double c = 0.67449;
};

// Binary autoregressive model: component b fires with probability
// Phi(sum_a U_ba(t) - theta) where U_ba sums kernel-weighted past events of
// the parent a back to b's own last event, capped at `horizon` steps.
struct SpikeParams {
  std::map<std::pair<std::string, std::string>, std::vector<double>>
      kernels;  // (target, source) -> g(1..len); source must be a parent
  double theta = 0.0;
  int horizon = 50;
};

// Shape catalog for the additive model; every entry maps x to a bounded-slope
// transform of one lagged component.
enum class FunctionTag { Linear, Saturating, Oscillatory };
// (target, source): source == target selects own lags, otherwise the directed
// edge source -> target must be present.
using FunctionCatalog = std::map<std::pair<std::string, std::string>, FunctionTag>;

// Zero-pattern check of a model against a graph: coefficients of absent
// directed edges must vanish (tolerance 1e-12) and concentrations of absent
// undirected pairs must vanish (tolerance 1e-8).  Returns one message per
// violation; empty means compliant.
std::vector<std::string> validate_var(const VarModel& model,
                                      const MixedGraph& g);

// Spectral radius of the companion matrix, estimated by power iteration
// (at most 500 steps, tolerance 1e-9, all-ones start); stationary iff the
// estimate stays below 1 - 1e-6.
StationarityResult is_stationary(const VarModel& model);

// Random model compliant with the graph: coefficients uniform on [-1, 1] over
// permitted entries, rescaled by a common factor until the spectral radius is
// at most target_radius; concentration matrix with +-0.3 entries on permitted
// undirected pairs, projected to positive definite.  Deterministic in seed.
VarModel random_var(const MixedGraph& g, int p, std::uint64_t seed,
                    double target_radius = 0.6);

// Gaussian simulation from zero initial state; the first `burnin` rows are
// discarded.  Deterministic in seed.
TimeSeries simulate_var(const VarModel& model, int n, int burnin,
                        std::uint64_t seed);

// Per-equation least squares with regressors restricted to lags of the
// component itself and of its parents in g; excluded coefficients are zero.
// sigma is the sample covariance of the residuals and is not projected onto
// the graph's concentration pattern.
VarModel fit_var(const TimeSeries& series, const MixedGraph& g, int p);

// F-test of the joint nullity of the A-lag block in the regression of each
// b in B on lags 1..p of A u B u S, Bonferroni-corrected over B; rejection
// contradicts "A does not Granger-cause B at information set A u B u S".
TestReport test_noncausal(const TimeSeries& series,
                          const std::vector<std::string>& A,
                          const std::vector<std::string>& B,
                          const std::vector<std::string>& S, int p,
                          double alpha = 0.01);

// Fisher z-test of the residual partial correlations between A and B after a
// full VAR on A u B u S, Bonferroni-corrected over the pairs; rejection
// contradicts contemporaneous conditional independence.
TestReport test_contemp(const TimeSeries& series,
                        const std::vector<std::string>& A,
                        const std::vector<std::string>& B,
                        const std::vector<std::string>& S, int p,
                        double alpha = 0.01);

// Additive autoregression: X_b(t) sums catalog transforms of lagged parent
// and own values plus unit-variance Gaussian noise.  An all-Linear catalog
// reproduces simulate_var with coefficients 0.4 exactly.  Simulations whose
// sample variance explodes past 1e6 are rejected.
TimeSeries simulate_additive(const MixedGraph& g, int p,
                             const FunctionCatalog& catalog, int n, int burnin,
                             std::uint64_t seed);

// Binary event simulation; row 0 starts all components at 1 so elapsed times
// are defined.  Output values are 0/1.
TimeSeries simulate_spike(const MixedGraph& g, const SpikeParams& params,
                          int n, std::uint64_t seed);

// Regime-switching simulation over components "1", "2", "3".
TimeSeries simulate_threshold(const ThresholdParams& params, int n,
                              std::uint64_t seed);

struct KsCheck {
  std::string component;
  int regime;  // 0: |X3(t-1)| <= c, 1: |X3(t-1)| > c
  double statistic;
  double p_value;
  bool pass;
};

struct RegimeCorrelation {
  int n0;
  int n1;
  double r0;
  double r1;
};

// Empirical confrontation of the threshold process with two graphs: one that
// only carries the undirected 1 -- 2 edge, and one that adds 3 -> 1 and
// 3 -> 2.  The first graph's pairwise statements all hold, yet its block
// statement for {1,2} fails a regime-difference test; the richer graph makes
// that statement vacuous.
struct CounterexampleReport {
  ThresholdParams params;
  int n = 0;
  std::uint64_t seed = 0;
  RegimeCorrelation regimes;
  std::vector<KsCheck> marginals;  // components 1 and 2 in both regimes
  std::vector<TestReport> graph_a_pairwise;
  TestReport graph_a_block;  // regime-difference test, expected to reject
  std::vector<TestReport> graph_b_pairwise;
  bool graph_b_block_vacuous = false;
  bool marginals_pass = false;
  bool graph_a_pairwise_pass = false;
  bool graph_a_block_rejected = false;
  bool graph_b_pass = false;
};

CounterexampleReport counterexample_report(const ThresholdParams& params,
                                           int n, std::uint64_t seed);

// The three-component labels used by the threshold model and its graphs.
MixedGraph counterexample_graph_a();
MixedGraph counterexample_graph_b();

// JSON model format: {"vertices": [...], "order": p, "phi": [p row-major
// matrices], "sigma": [row-major]}.
std::string model_to_json(const VarModel& model);
VarModel model_from_json(const std::string& text);
VarModel load_model(const std::string& path);

// CSV series format: header row of labels, then one row per time step.
std::string series_to_csv(const TimeSeries& series);
TimeSeries series_from_csv(const std::string& text);
TimeSeries load_series(const std::string& path);

}  // namespace tsg::var_sim
