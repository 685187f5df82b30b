#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "tsg/errors.hpp"
#include "tsg/markov.hpp"
#include "tsg/mixed_graph.hpp"
#include "tsg/random_graph.hpp"
#include "tsg/rng.hpp"
#include "tsg/stats.hpp"
#include "tsg/var_sim.hpp"

using namespace tsg;
using namespace tsg::graph;
using namespace tsg::var_sim;

namespace {

MixedGraph g5() {
  return parse_mg(
      "vertices: 1 2 3 4 5\n"
      "1 -> 3\n3 -> 1\n2 -> 3\n3 -> 4\n3 -> 5\n5 -> 4\n4 -> 2\n2 -- 3\n");
}

MixedGraph g3() { return parse_mg("vertices: 1 2 3\n3 -> 2\n2 -> 1\n"); }

VarModel trivariate_fixture() {
  VarModel m;
  m.vertices = {"1", "2", "3"};
  m.order = 1;
  Eigen::MatrixXd phi(3, 3);
  phi << 0.5, 0.3, 0.0,
         0.0, 0.5, 0.3,
         0.0, 0.0, 0.5;
  m.phi = {phi};
  m.sigma = Eigen::MatrixXd::Identity(3, 3);
  return m;
}

VarModel diagonal_model(int m, double coeff) {
  VarModel model;
  for (int i = 0; i < m; ++i) model.vertices.push_back(std::to_string(i + 1));
  model.order = 1;
  model.phi = {Eigen::MatrixXd::Identity(m, m) * coeff};
  model.sigma = Eigen::MatrixXd::Identity(m, m);
  return model;
}

double lag1_autocov(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  const double mean = x.mean();
  double acc = 0.0;
  for (int t = 1; t < n; ++t) acc += (x(t) - mean) * (x(t - 1) - mean);
  return acc / (n - 1);
}

double column_variance(const Eigen::VectorXd& x) {
  const double mean = x.mean();
  return (x.array() - mean).square().sum() / (x.size() - 1);
}

// Runs the matching empirical test for an enumerated statement.
TestReport run_statement(const TimeSeries& series, const MixedGraph& g,
                         const markov::MarkovStatement& st, int p) {
  const auto src = g.labels_of(st.source);
  const auto tgt = g.labels_of(st.target);
  const auto rest = g.labels_of(st.information - (st.source | st.target));
  if (st.kind == markov::StatementKind::Noncausal)
    return test_noncausal(series, src, tgt, rest, p);
  return test_contemp(series, src, tgt, rest, p);
}

}  // namespace

TEST_CASE("validation flags exactly the coefficients of absent edges") {
  const auto g = g3();
  const auto fixture = trivariate_fixture();
  CHECK(validate_var(fixture, g).empty());

  auto broken = fixture;
  broken.phi[0](0, 2) = 0.5;  // coefficient of X_3 in the equation of X_1
  const auto violations = validate_var(broken, g);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("3 -> 1") != std::string::npos);
  CHECK(violations[0].find("lag 1") != std::string::npos);
  CHECK(violations[0].find("0.5") != std::string::npos);

  auto coupled = fixture;
  coupled.sigma(0, 1) = coupled.sigma(1, 0) = 0.5;
  const auto conc = validate_var(coupled, g);
  REQUIRE(conc.size() == 1);
  CHECK(conc[0].find("1 -- 2") != std::string::npos);

  CHECK_THROWS_AS(validate_var(fixture, g5()), model_error);
  auto singular = fixture;
  singular.sigma.setZero();
  CHECK_THROWS_AS(validate_var(singular, g), model_error);
}

TEST_CASE("stationarity radius estimates") {
  const auto half = is_stationary(diagonal_model(4, 0.5));
  CHECK(half.stationary);
  CHECK(half.spectral_radius == doctest::Approx(0.5).epsilon(1e-9));

  const auto unit = is_stationary(diagonal_model(3, 1.0));
  CHECK_FALSE(unit.stationary);
  CHECK(unit.spectral_radius == doctest::Approx(1.0).epsilon(1e-9));

  const auto fixture = is_stationary(trivariate_fixture());
  CHECK(fixture.stationary);
  CHECK(std::abs(fixture.spectral_radius - 0.5) < 0.01);

  // Two lags with an oscillating dominant pair: radius is sqrt(0.49).
  VarModel two_lag = diagonal_model(2, 0.0);
  two_lag.order = 2;
  two_lag.phi = {Eigen::MatrixXd::Zero(2, 2),
                 Eigen::MatrixXd::Identity(2, 2) * 0.49};
  const auto osc = is_stationary(two_lag);
  CHECK(osc.stationary);
  CHECK(osc.spectral_radius == doctest::Approx(0.7).epsilon(1e-6));

  const auto zero = is_stationary(diagonal_model(2, 0.0));
  CHECK(zero.stationary);
  CHECK(zero.spectral_radius == doctest::Approx(0.0));
}

TEST_CASE("random models respect the graph and the target radius") {
  const auto g = g3();
  for (const std::uint64_t seed : {1ull, 2ull, 3ull, 17ull}) {
    const auto model = random_var(g, 1, seed);
    CHECK(validate_var(model, g).empty());
    const auto st = is_stationary(model);
    CHECK(st.stationary);
    CHECK(st.spectral_radius < 0.6 + 1e-6);
  }

  const MixedGraph edgeless({"a", "b", "c"}, {}, {});
  const auto diag = random_var(edgeless, 1, 5);
  for (int b = 0; b < 3; ++b)
    for (int a = 0; a < 3; ++a)
      if (a != b) {
        CHECK(diag.phi[0](b, a) == 0.0);
        CHECK(diag.sigma(b, a) == 0.0);
      }

  CHECK(model_to_json(random_var(g5(), 2, 99)) ==
        model_to_json(random_var(g5(), 2, 99)));
  CHECK(model_to_json(random_var(g5(), 2, 99)) !=
        model_to_json(random_var(g5(), 2, 100)));

  const auto wide = random_var(g5(), 2, 31, 0.5);
  CHECK(validate_var(wide, g5()).empty());
  CHECK(is_stationary(wide).stationary);

  CHECK_THROWS_AS(random_var(g, 0, 1), model_error);
  CHECK_THROWS_AS(random_var(g, 1, 1, 1.5), model_error);
}

TEST_CASE("simulation matches the analytic moments of the fixture") {
  const auto series = simulate_var(trivariate_fixture(), 2000, 1000, 42);
  REQUIRE(series.data.rows() == 2000);
  REQUIRE(series.labels == std::vector<std::string>{"1", "2", "3"});
  // X_3 is a pure AR(1) with phi = 0.5: variance 4/3, lag-1 autocovariance 2/3.
  CHECK(std::abs(column_variance(series.data.col(2)) - 4.0 / 3.0) < 0.1);
  CHECK(std::abs(lag1_autocov(series.data.col(2)) - 2.0 / 3.0) < 0.1);

  const auto noise = simulate_var(diagonal_model(3, 0.0), 2000, 1000, 7);
  for (int c = 0; c < 3; ++c) {
    CHECK(std::abs(noise.data.col(c).mean()) < 0.1);
    CHECK(std::abs(column_variance(noise.data.col(c)) - 1.0) < 0.15);
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const double cov = ((noise.data.col(a).array() - noise.data.col(a).mean()) *
                          (noise.data.col(b).array() - noise.data.col(b).mean()))
                             .sum() /
                         (noise.data.rows() - 1);
      CHECK(std::abs(cov) < 0.15);
    }

  CHECK(series_to_csv(simulate_var(trivariate_fixture(), 100, 50, 9)) ==
        series_to_csv(simulate_var(trivariate_fixture(), 100, 50, 9)));
  CHECK(series_to_csv(simulate_var(trivariate_fixture(), 100, 50, 9)) !=
        series_to_csv(simulate_var(trivariate_fixture(), 100, 50, 10)));

  CHECK_THROWS_AS(simulate_var(diagonal_model(2, 1.0), 10, 0, 1), model_error);
  auto bad_sigma = diagonal_model(2, 0.5);
  bad_sigma.sigma << 1.0, 2.0, 2.0, 1.0;
  CHECK_THROWS_AS(simulate_var(bad_sigma, 10, 0, 1), model_error);
  CHECK_THROWS_AS(simulate_var(diagonal_model(2, 0.5), 0, 0, 1), model_error);
}

TEST_CASE("fitting recovers the generator on the graph pattern") {
  const auto truth = trivariate_fixture();
  const auto series = simulate_var(truth, 5000, 1000, 7);
  const auto fitted = fit_var(series, g3(), 1);
  REQUIRE(fitted.order == 1);
  CHECK((fitted.phi[0] - truth.phi[0]).cwiseAbs().maxCoeff() < 0.1);
  CHECK((fitted.sigma - truth.sigma).cwiseAbs().maxCoeff() < 0.1);
  // Absent directed edges stay structurally zero.
  CHECK(fitted.phi[0](2, 0) == 0.0);
  CHECK(fitted.phi[0](2, 1) == 0.0);
  CHECK(fitted.phi[0](0, 2) == 0.0);
  CHECK(fitted.phi[0](1, 0) == 0.0);
  // The residual concentration pattern is reported, never imposed.
  for (const auto& v : validate_var(fitted, g3()))
    CHECK(v.find("undirected") != std::string::npos);

  const MixedGraph full({"1", "2", "3"},
                        {{"1", "2"}, {"2", "1"}, {"1", "3"}, {"3", "1"},
                         {"2", "3"}, {"3", "2"}},
                        {});
  const auto unrestricted = fit_var(series, full, 1);
  CHECK((unrestricted.phi[0] - truth.phi[0]).cwiseAbs().maxCoeff() < 0.1);

  const auto white = simulate_var(diagonal_model(3, 0.0), 5000, 100, 3);
  TimeSeries relabelled{{"1", "2", "3"}, white.data};
  const auto flat = fit_var(relabelled, full, 1);
  CHECK(flat.phi[0].cwiseAbs().maxCoeff() < 0.1);

  TimeSeries tiny{series.labels, series.data.topRows(20)};
  CHECK_THROWS_AS(fit_var(tiny, g3(), 1), estimation_error);
  CHECK_THROWS_AS(fit_var(series, g5(), 1), model_error);
  CHECK_THROWS_AS(fit_var(series, g3(), 0), query_error);
}

TEST_CASE("noncausality test: licensed statements hold, planted effects reject") {
  const auto series = simulate_var(trivariate_fixture(), 2000, 1000, 11);

  const auto licensed = test_noncausal(series, {"1"}, {"3"}, {}, 1);
  CHECK_FALSE(licensed.decision_at_alpha);
  CHECK(licensed.p_value >= 0.01);
  CHECK(licensed.n_used == 1999);
  CHECK(licensed.statement.kind == markov::StatementKind::Noncausal);

  const auto planted = test_noncausal(series, {"3"}, {"1"}, {}, 3);
  CHECK(planted.decision_at_alpha);
  CHECK(planted.p_value < 0.01);

  // Full-information licensed statements at a generous lag order.
  CHECK_FALSE(test_noncausal(series, {"1"}, {"3"}, {"2"}, 3).decision_at_alpha);
  CHECK_FALSE(test_noncausal(series, {"2"}, {"3"}, {"1"}, 3).decision_at_alpha);

  CHECK_THROWS_AS(test_noncausal(series, {"1"}, {"1"}, {}, 1), query_error);
  CHECK_THROWS_AS(test_noncausal(series, {}, {"1"}, {}, 1), query_error);
  CHECK_THROWS_AS(test_noncausal(series, {"1"}, {"9"}, {}, 1), query_error);
  TimeSeries tiny{series.labels, series.data.topRows(7)};
  CHECK_THROWS_AS(test_noncausal(tiny, {"1"}, {"3"}, {"2"}, 2),
                  estimation_error);
}

TEST_CASE("white noise rejection rate stays near the level") {
  const auto model = diagonal_model(3, 0.0);
  int rejections = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    const auto series = simulate_var(model, 400, 200, 1000 + s);
    if (test_noncausal(series, {"1"}, {"2"}, {"3"}, 1).decision_at_alpha)
      ++rejections;
  }
  const double rate = static_cast<double>(rejections) / seeds;
  CHECK(std::abs(rate - 0.01) <= 0.02);
}

TEST_CASE("contemporaneous test tracks the innovation coupling") {
  const auto clean = simulate_var(trivariate_fixture(), 2000, 1000, 13);
  const auto independent = test_contemp(clean, {"1"}, {"2"}, {"3"}, 1);
  CHECK_FALSE(independent.decision_at_alpha);
  CHECK(independent.statement.kind == markov::StatementKind::ContempCI);

  auto coupled_model = trivariate_fixture();
  Eigen::MatrixXd conc(3, 3);
  conc << 1.0, 0.4, 0.0,
          0.4, 1.0, 0.0,
          0.0, 0.0, 1.0;
  coupled_model.sigma = conc.inverse();
  const auto coupled_series = simulate_var(coupled_model, 2000, 1000, 13);
  CHECK(test_contemp(coupled_series, {"1"}, {"2"}, {"3"}, 1).decision_at_alpha);

  TimeSeries constant{{"1", "2"}, Eigen::MatrixXd::Ones(300, 2)};
  CHECK_THROWS_AS(test_contemp(constant, {"1"}, {"2"}, {}, 1),
                  estimation_error);
}

TEST_CASE("additive simulator degenerates to the linear model") {
  const auto g = g3();
  FunctionCatalog linear;
  for (const auto& key : std::vector<std::pair<std::string, std::string>>{
           {"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "2"}, {"2", "3"}})
    linear[key] = FunctionTag::Linear;

  VarModel matching;
  matching.vertices = {"1", "2", "3"};
  matching.order = 1;
  Eigen::MatrixXd phi(3, 3);
  phi << 0.4, 0.4, 0.0,
         0.0, 0.4, 0.4,
         0.0, 0.0, 0.4;
  matching.phi = {phi};
  matching.sigma = Eigen::MatrixXd::Identity(3, 3);

  const auto additive = simulate_additive(g, 1, linear, 400, 50, 2024);
  const auto var = simulate_var(matching, 400, 50, 2024);
  CHECK((additive.data - var.data).cwiseAbs().maxCoeff() == 0.0);
  CHECK(series_to_csv(additive) == series_to_csv(var));

  CHECK(series_to_csv(simulate_additive(g, 1, linear, 200, 50, 5)) ==
        series_to_csv(simulate_additive(g, 1, linear, 200, 50, 5)));
  CHECK(series_to_csv(simulate_additive(g, 1, linear, 200, 50, 5)) !=
        series_to_csv(simulate_additive(g, 1, linear, 200, 50, 6)));

  FunctionCatalog bad;
  bad[{"3", "1"}] = FunctionTag::Linear;
  CHECK_THROWS_AS(simulate_additive(g, 1, bad, 100, 10, 1), model_error);
  FunctionCatalog unknown;
  unknown[{"9", "1"}] = FunctionTag::Linear;
  CHECK_THROWS_AS(simulate_additive(g, 1, unknown, 100, 10, 1), model_error);
}

TEST_CASE("saturating additive chain keeps the licensed statement") {
  const auto g = g3();
  FunctionCatalog saturating;
  for (const auto& key : std::vector<std::pair<std::string, std::string>>{
           {"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "2"}, {"2", "3"}})
    saturating[key] = FunctionTag::Saturating;
  const auto series = simulate_additive(g, 1, saturating, 4000, 1000, 21);
  CHECK_FALSE(test_noncausal(series, {"1"}, {"3"}, {}, 1).decision_at_alpha);
  // The reverse direction carries the planted chain 3 -> 2 -> 1.
  CHECK(test_noncausal(series, {"3"}, {"1"}, {}, 2).decision_at_alpha);
}

TEST_CASE("explosive additive parameterizations are rejected") {
  const MixedGraph complete({"1", "2", "3"},
                            {{"1", "2"}, {"2", "1"}, {"1", "3"}, {"3", "1"},
                             {"2", "3"}, {"3", "2"}},
                            {});
  FunctionCatalog all_linear;
  for (const auto& a : {"1", "2", "3"})
    for (const auto& b : {"1", "2", "3"}) all_linear[{a, b}] = FunctionTag::Linear;
  CHECK_THROWS_AS(simulate_additive(complete, 1, all_linear, 200, 0, 1),
                  model_error);
  CHECK_THROWS_AS(simulate_additive(complete, 2, all_linear, 200, 1000, 1),
                  model_error);
}

TEST_CASE("spike simulator fires at the probit rate") {
  const auto g = g3();
  const SpikeParams free{{}, 0.0, 50};
  const auto series = simulate_spike(g, free, 5000, 31);
  REQUIRE(series.data.rows() == 5000);
  CHECK(series.data.row(0).minCoeff() == 1.0);
  for (int c = 0; c < 3; ++c)
    CHECK(std::abs(series.data.col(c).mean() - 0.5) < 0.03);

  const MixedGraph pair({"1", "2"}, {{"1", "2"}}, {});
  SpikeParams silent;
  silent.kernels[{"2", "1"}] = {1.5};
  silent.theta = 10.0;
  const auto quiet = simulate_spike(pair, silent, 200, 4);
  CHECK(quiet.data.bottomRows(199).maxCoeff() == 0.0);
  CHECK(quiet.data.row(0).minCoeff() == 1.0);

  SpikeParams excite;
  excite.kernels[{"2", "1"}] = {1.5, 1.5, 1.5};
  excite.theta = 0.0;
  const auto driven = simulate_spike(pair, excite, 10000, 8);
  double fired_after = 0.0, count_after = 0.0;
  double fired_quiet = 0.0, count_quiet = 0.0;
  for (int t = 1; t < 10000; ++t) {
    if (driven.data(t - 1, 0) == 1.0) {
      fired_after += driven.data(t, 1);
      count_after += 1.0;
    } else {
      fired_quiet += driven.data(t, 1);
      count_quiet += 1.0;
    }
  }
  CHECK(fired_after / count_after - fired_quiet / count_quiet > 0.1);

  CHECK(series_to_csv(simulate_spike(g, free, 300, 12)) ==
        series_to_csv(simulate_spike(g, free, 300, 12)));

  SpikeParams backwards;
  backwards.kernels[{"1", "2"}] = {1.0};
  CHECK_THROWS_AS(simulate_spike(pair, backwards, 100, 1), model_error);
}

TEST_CASE("threshold simulator produces the two regimes") {
  const ThresholdParams params{0.6, 0.67449};
  const auto series = simulate_threshold(params, 20000, 5);
  REQUIRE(series.labels == std::vector<std::string>{"1", "2", "3"});

  std::vector<double> x1_hot, x2_hot, x1_cold, x2_cold;
  for (int t = 1; t < 20000; ++t) {
    if (std::abs(series.data(t - 1, 2)) > params.c) {
      x1_hot.push_back(series.data(t, 0));
      x2_hot.push_back(series.data(t, 1));
    } else {
      x1_cold.push_back(series.data(t, 0));
      x2_cold.push_back(series.data(t, 1));
    }
  }
  CHECK(std::abs(stats::sample_correlation(x1_hot, x2_hot) - 0.6) < 0.07);
  CHECK(std::abs(stats::sample_correlation(x1_cold, x2_cold)) < 0.07);
  // The median split keeps the regimes near balance.
  CHECK(std::abs(static_cast<double>(x1_hot.size()) / 19999 - 0.5) < 0.02);

  for (const auto* sample : {&x1_hot, &x1_cold, &x2_hot, &x2_cold}) {
    const double d = stats::ks_statistic_normal(*sample);
    CHECK(stats::ks_p_value(d, static_cast<int>(sample->size())) >= 0.01);
  }

  const auto flat = simulate_threshold({0.0, 0.67449}, 20000, 5);
  std::vector<double> f1_hot, f2_hot, f1_cold, f2_cold;
  for (int t = 1; t < 20000; ++t) {
    if (std::abs(flat.data(t - 1, 2)) > params.c) {
      f1_hot.push_back(flat.data(t, 0));
      f2_hot.push_back(flat.data(t, 1));
    } else {
      f1_cold.push_back(flat.data(t, 0));
      f2_cold.push_back(flat.data(t, 1));
    }
  }
  CHECK(std::abs(stats::sample_correlation(f1_hot, f2_hot) -
                 stats::sample_correlation(f1_cold, f2_cold)) < 0.05);

  CHECK(series_to_csv(simulate_threshold(params, 500, 77)) ==
        series_to_csv(simulate_threshold(params, 500, 77)));
  CHECK_THROWS_AS(simulate_threshold({1.0, 0.5}, 100, 1), model_error);
  CHECK_THROWS_AS(simulate_threshold({0.6, 0.0}, 100, 1), model_error);
}

TEST_CASE("counterexample report separates the two graph readings") {
  const ThresholdParams params{0.6, 0.67449};
  const auto rep = counterexample_report(params, 20000, 5);

  CHECK(std::abs(rep.regimes.r1 - 0.6) < 0.07);
  CHECK(std::abs(rep.regimes.r0) < 0.07);
  CHECK(rep.marginals.size() == 4);
  CHECK(rep.marginals_pass);
  CHECK(rep.graph_a_pairwise.size() == 8);
  CHECK(rep.graph_a_pairwise_pass);
  CHECK(rep.graph_a_block_rejected);
  CHECK(rep.graph_b_pairwise.size() == 6);
  CHECK(rep.graph_b_block_vacuous);
  CHECK(rep.graph_b_pass);

  const auto again = counterexample_report(params, 20000, 5);
  CHECK(again.regimes.r0 == rep.regimes.r0);
  CHECK(again.regimes.r1 == rep.regimes.r1);
  CHECK(again.graph_a_block.p_value == rep.graph_a_block.p_value);

  const auto degenerate = counterexample_report({0.0, 0.67449}, 20000, 5);
  CHECK_FALSE(degenerate.graph_a_block_rejected);
}

TEST_CASE("statements licensed by the fixture graphs survive repeated sampling") {
  const auto fixture = trivariate_fixture();
  const auto g = g3();
  const auto statements =
      markov::enumerate_statements(g, markov::MarkovLevel::PC);
  int worst = 0;
  int power = 0;
  const int seeds = 10;
  for (int s = 0; s < seeds; ++s) {
    const auto series = simulate_var(fixture, 2000, 1000, 300 + s);
    for (const auto& st : statements)
      if (run_statement(series, g, st, 3).decision_at_alpha) ++worst;
    if (test_noncausal(series, {"3"}, {"1"}, {}, 3).decision_at_alpha)
      ++power;
  }
  CHECK(worst <= 2);
  CHECK(power >= 8);
}

TEST_CASE("model JSON round trip is exact") {
  const auto model = random_var(g5(), 2, 123);
  const std::string text = model_to_json(model);
  const auto back = model_from_json(text);
  CHECK(back.vertices == model.vertices);
  CHECK(back.order == model.order);
  for (int u = 0; u < model.order; ++u)
    CHECK((back.phi[u] - model.phi[u]).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.sigma - model.sigma).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(model_from_json("{"), parse_error);
  CHECK_THROWS_AS(model_from_json("[]"), parse_error);
  CHECK_THROWS_AS(
      model_from_json(R"({"vertices":["a"],"order":1,"phi":[[0.5]]})"),
      parse_error);
  CHECK_THROWS_AS(
      model_from_json(
          R"({"vertices":["a","b"],"order":1,"phi":[[0,0,0,0]],"sigma":[1,0.5,0,1]})"),
      parse_error);
  CHECK_THROWS_AS(
      model_from_json(
          R"({"vertices":["a","a"],"order":1,"phi":[[0,0,0,0]],"sigma":[1,0,0,1]})"),
      parse_error);
}

TEST_CASE("series CSV round trip preserves ten significant digits") {
  const auto series = simulate_var(trivariate_fixture(), 50, 10, 3);
  const auto back = series_from_csv(series_to_csv(series));
  REQUIRE(back.labels == series.labels);
  REQUIRE(back.data.rows() == series.data.rows());
  for (int r = 0; r < series.data.rows(); ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(std::abs(back.data(r, c) - series.data(r, c)) <=
            1e-8 * std::max(1.0, std::abs(series.data(r, c))));

  CHECK_THROWS_AS(series_from_csv(""), parse_error);
  CHECK_THROWS_AS(series_from_csv("a,b\n"), parse_error);
  CHECK_THROWS_AS(series_from_csv("a,b\n1.0\n"), parse_error);
  CHECK_THROWS_AS(series_from_csv("a,b\n1.0,oops\n"), parse_error);
  CHECK_THROWS_AS(series_from_csv("a,a\n1.0,2.0\n"), parse_error);
}

TEST_CASE("model and series files load back") {
  const auto model = random_var(g3(), 1, 8);
  const std::string mpath = "/tmp/tsg_test_model.json";
  const std::string spath = "/tmp/tsg_test_series.csv";
  {
    std::ofstream out(mpath);
    out << model_to_json(model);
  }
  const auto loaded = load_model(mpath);
  CHECK(loaded.vertices == model.vertices);
  CHECK((loaded.phi[0] - model.phi[0]).cwiseAbs().maxCoeff() == 0.0);

  const auto series = simulate_var(model, 30, 5, 1);
  {
    std::ofstream out(spath);
    out << series_to_csv(series);
  }
  const auto sloaded = load_series(spath);
  CHECK(sloaded.labels == series.labels);
  CHECK(sloaded.data.rows() == 30);

  std::remove(mpath.c_str());
  std::remove(spath.c_str());
  CHECK_THROWS_AS(load_model("/tmp/definitely_missing_tsg.json"), parse_error);
  CHECK_THROWS_AS(load_series("/tmp/definitely_missing_tsg.csv"), parse_error);
}

TEST_CASE("random model suite validates cleanly") {
  Rng rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_mixed_graph(rng);
    const auto model = random_var(g, 1 + trial % 2, 9000 + trial);
    CHECK(validate_var(model, g).empty());
  }
}
