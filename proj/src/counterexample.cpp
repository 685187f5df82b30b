#include "tsg/var_sim.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "tsg/errors.hpp"
#include "tsg/stats.hpp"

namespace tsg::var_sim {

MixedGraph counterexample_graph_a() {
  return MixedGraph({"1", "2", "3"}, {}, {{"1", "2"}});
}

MixedGraph counterexample_graph_b() {
  return MixedGraph({"1", "2", "3"}, {{"3", "1"}, {"3", "2"}}, {{"1", "2"}});
}

namespace {

std::vector<TestReport> run_pairwise(const TimeSeries& series,
                                     const MixedGraph& g) {
  std::vector<TestReport> out;
  for (const auto& st :
       markov::enumerate_statements(g, markov::MarkovLevel::PC)) {
    const std::vector<std::string> src = g.labels_of(st.source);
    const std::vector<std::string> tgt = g.labels_of(st.target);
    const std::vector<std::string> rest =
        g.labels_of(st.information - (st.source | st.target));
    if (st.kind == markov::StatementKind::Noncausal)
      out.push_back(test_noncausal(series, src, tgt, rest, 1));
    else
      out.push_back(test_contemp(series, src, tgt, rest, 1));
  }
  return out;
}

bool none_rejected(const std::vector<TestReport>& reports) {
  for (const auto& r : reports)
    if (r.decision_at_alpha) return false;
  return true;
}

}  // namespace

CounterexampleReport counterexample_report(const ThresholdParams& params,
                                           int n, std::uint64_t seed) {
  CounterexampleReport rep;
  rep.params = params;
  rep.n = n;
  rep.seed = seed;

  const TimeSeries series = simulate_threshold(params, n, seed);
  std::vector<double> x1_by[2], x2_by[2];
  for (int t = 1; t < n; ++t) {
    const int regime = std::abs(series.data(t - 1, 2)) > params.c ? 1 : 0;
    x1_by[regime].push_back(series.data(t, 0));
    x2_by[regime].push_back(series.data(t, 1));
  }
  rep.regimes.n0 = static_cast<int>(x1_by[0].size());
  rep.regimes.n1 = static_cast<int>(x1_by[1].size());
  if (rep.regimes.n0 < 4 || rep.regimes.n1 < 4)
    throw estimation_error("too few observations in a regime");
  rep.regimes.r0 = stats::sample_correlation(x1_by[0], x2_by[0]);
  rep.regimes.r1 = stats::sample_correlation(x1_by[1], x2_by[1]);

  for (const int component : {0, 1})
    for (const int regime : {0, 1}) {
      const std::vector<double>& sample =
          component == 0 ? x1_by[regime] : x2_by[regime];
      KsCheck check;
      check.component = series.labels[component];
      check.regime = regime;
      check.statistic = stats::ks_statistic_normal(sample);
      check.p_value =
          stats::ks_p_value(check.statistic, static_cast<int>(sample.size()));
      check.pass = check.p_value >= 0.01;
      rep.marginals.push_back(check);
    }

  const MixedGraph ga = counterexample_graph_a();
  const MixedGraph gb = counterexample_graph_b();
  rep.graph_a_pairwise = run_pairwise(series, ga);
  rep.graph_b_pairwise = run_pairwise(series, gb);

  // Block statement for A = {1,2} under the edgeless-in-3 graph: the past of
  // X_3 should carry nothing about the pair.  The linear tests cannot see the
  // variance effect, so compare the regime correlations directly.
  const graph::VertexSet block = ga.set_of_labels({"1", "2"});
  rep.graph_a_block.statement = {markov::StatementKind::Noncausal,
                                 ga.full_set() - block -
                                     graph::parents(ga, block),
                                 block, ga.full_set()};
  const double z =
      (stats::fisher_z(rep.regimes.r1) - stats::fisher_z(rep.regimes.r0)) /
      std::sqrt(1.0 / (rep.regimes.n1 - 3) + 1.0 / (rep.regimes.n0 - 3));
  rep.graph_a_block.statistic = z;
  rep.graph_a_block.p_value = stats::normal_two_sided_p(z);
  rep.graph_a_block.decision_at_alpha = rep.graph_a_block.p_value < 0.01;
  rep.graph_a_block.n_used = n - 1;

  const graph::VertexSet gb_block = gb.set_of_labels({"1", "2"});
  rep.graph_b_block_vacuous =
      (gb.full_set() - gb_block - graph::parents(gb, gb_block)).empty();

  rep.marginals_pass = true;
  for (const auto& check : rep.marginals)
    rep.marginals_pass = rep.marginals_pass && check.pass;
  rep.graph_a_pairwise_pass = none_rejected(rep.graph_a_pairwise);
  rep.graph_a_block_rejected = rep.graph_a_block.decision_at_alpha;
  rep.graph_b_pass =
      none_rejected(rep.graph_b_pairwise) && rep.graph_b_block_vacuous;
  return rep;
}

}  // namespace tsg::var_sim
