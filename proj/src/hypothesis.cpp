#include "tsg/var_sim.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "tsg/errors.hpp"
#include "tsg/stats.hpp"

namespace tsg::var_sim {

namespace {

std::vector<int> columns_of(const TimeSeries& series,
                            const std::vector<std::string>& labels,
                            const char* which) {
  std::vector<int> out;
  for (const auto& l : labels) {
    const auto it =
        std::find(series.labels.begin(), series.labels.end(), l);
    if (it == series.labels.end())
      throw query_error(std::string(which) +
                        " names an unknown series column: " + l);
    out.push_back(static_cast<int>(it - series.labels.begin()));
  }
  std::vector<int> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw query_error(std::string(which) + " repeats a column");
  return out;
}

void check_test_args(const std::vector<int>& a, const std::vector<int>& b,
                     const std::vector<int>& s, int p, double alpha) {
  if (p < 1) throw query_error("lag order must be positive");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw query_error("alpha must lie in (0, 1)");
  if (a.empty() || b.empty())
    throw query_error("sets A and B must be nonempty");
  std::set<int> seen(a.begin(), a.end());
  for (const int v : b)
    if (!seen.insert(v).second)
      throw query_error("sets A, B, S must be pairwise disjoint");
  for (const int v : s)
    if (!seen.insert(v).second)
      throw query_error("sets A, B, S must be pairwise disjoint");
}

std::vector<int> sorted_union(std::initializer_list<const std::vector<int>*> parts) {
  std::vector<int> out;
  for (const auto* part : parts) out.insert(out.end(), part->begin(), part->end());
  std::sort(out.begin(), out.end());
  return out;
}

// Rows t = p..n-1; column (u-1)*|cols| + i holds X_{cols[i]}(t-u).
Eigen::MatrixXd lag_design(const Eigen::MatrixXd& data,
                           const std::vector<int>& cols, int p) {
  const int t_rows = static_cast<int>(data.rows()) - p;
  const int nc = static_cast<int>(cols.size());
  Eigen::MatrixXd z(t_rows, p * nc);
  for (int r = 0; r < t_rows; ++r)
    for (int u = 1; u <= p; ++u)
      for (int i = 0; i < nc; ++i)
        z(r, (u - 1) * nc + i) = data(p + r - u, cols[i]);
  return z;
}

Eigen::VectorXd ols_residuals(const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& qr,
                              const Eigen::MatrixXd& z,
                              const Eigen::VectorXd& y) {
  return y - z * qr.solve(y);
}

Eigen::ColPivHouseholderQR<Eigen::MatrixXd> checked_qr(
    const Eigen::MatrixXd& z) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(z);
  if (qr.rank() < z.cols())
    throw estimation_error("rank-deficient regressor matrix");
  return qr;
}

markov::MarkovStatement make_statement(markov::StatementKind kind, int m,
                                       const std::vector<int>& a,
                                       const std::vector<int>& b,
                                       const std::vector<int>& info) {
  markov::MarkovStatement st{kind, graph::VertexSet(m), graph::VertexSet(m),
                             graph::VertexSet(m)};
  for (const int v : a) st.source.insert(v);
  for (const int v : b) st.target.insert(v);
  for (const int v : info) st.information.insert(v);
  return st;
}

}  // namespace

TestReport test_noncausal(const TimeSeries& series,
                          const std::vector<std::string>& A,
                          const std::vector<std::string>& B,
                          const std::vector<std::string>& S, int p,
                          double alpha) {
  const std::vector<int> a = columns_of(series, A, "A");
  const std::vector<int> b = columns_of(series, B, "B");
  const std::vector<int> s = columns_of(series, S, "S");
  check_test_args(a, b, s, p, alpha);

  const std::vector<int> full_cols = sorted_union({&a, &b, &s});
  const std::vector<int> restr_cols = sorted_union({&b, &s});
  const int n = static_cast<int>(series.data.rows());
  const int t_rows = n - p;
  const int k_full = p * static_cast<int>(full_cols.size());
  if (t_rows <= k_full)
    throw estimation_error("series too short for lag order " +
                           std::to_string(p) + " on " +
                           std::to_string(full_cols.size()) + " components");

  const Eigen::MatrixXd z_full = lag_design(series.data, full_cols, p);
  const Eigen::MatrixXd z_restr = lag_design(series.data, restr_cols, p);
  const auto qr_full = checked_qr(z_full);
  const auto qr_restr = checked_qr(z_restr);

  const double q = p * static_cast<double>(a.size());
  const double df2 = t_rows - k_full;
  double min_p = 2.0;
  double statistic = 0.0;
  for (const int col : b) {
    const Eigen::VectorXd y = series.data.col(col).segment(p, t_rows);
    const double rss_full = ols_residuals(qr_full, z_full, y).squaredNorm();
    const double rss_restr = ols_residuals(qr_restr, z_restr, y).squaredNorm();
    if (!(rss_full > 0.0))
      throw estimation_error("degenerate residuals in noncausality test");
    const double f = ((rss_restr - rss_full) / q) / (rss_full / df2);
    const double pv = stats::f_upper_p(f, q, df2);
    if (pv < min_p) {
      min_p = pv;
      statistic = f;
    }
  }

  TestReport report;
  report.statement = make_statement(markov::StatementKind::Noncausal,
                                    static_cast<int>(series.labels.size()), a,
                                    b, full_cols);
  report.statistic = statistic;
  report.p_value = std::min(1.0, static_cast<double>(b.size()) * min_p);
  report.decision_at_alpha = report.p_value < alpha;
  report.n_used = t_rows;
  return report;
}

TestReport test_contemp(const TimeSeries& series,
                        const std::vector<std::string>& A,
                        const std::vector<std::string>& B,
                        const std::vector<std::string>& S, int p,
                        double alpha) {
  const std::vector<int> a = columns_of(series, A, "A");
  const std::vector<int> b = columns_of(series, B, "B");
  const std::vector<int> s = columns_of(series, S, "S");
  check_test_args(a, b, s, p, alpha);

  const std::vector<int> w = sorted_union({&a, &b, &s});
  const int nw = static_cast<int>(w.size());
  const int n = static_cast<int>(series.data.rows());
  const int t_rows = n - p;
  const double df = t_rows - (nw - 2) - 3;
  if (t_rows <= p * nw || df < 1.0)
    throw estimation_error("series too short for lag order " +
                           std::to_string(p) + " on " + std::to_string(nw) +
                           " components");

  const Eigen::MatrixXd z = lag_design(series.data, w, p);
  const auto qr = checked_qr(z);
  Eigen::MatrixXd resid(t_rows, nw);
  for (int i = 0; i < nw; ++i)
    resid.col(i) =
        ols_residuals(qr, z, series.data.col(w[i]).segment(p, t_rows));

  const Eigen::MatrixXd cov =
      (resid.transpose() * resid) / static_cast<double>(t_rows);
  const Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success)
    throw estimation_error("singular residual covariance");
  const Eigen::MatrixXd conc =
      llt.solve(Eigen::MatrixXd::Identity(nw, nw));

  std::vector<int> pos(series.labels.size(), -1);
  for (int i = 0; i < nw; ++i) pos[w[i]] = i;

  double min_p = 2.0;
  double statistic = 0.0;
  for (const int ca : a)
    for (const int cb : b) {
      const int ia = pos[ca];
      const int ib = pos[cb];
      const double r =
          -conc(ia, ib) / std::sqrt(conc(ia, ia) * conc(ib, ib));
      const double zstat = stats::fisher_z(r) * std::sqrt(df);
      const double pv = stats::normal_two_sided_p(zstat);
      if (pv < min_p) {
        min_p = pv;
        statistic = zstat;
      }
    }

  TestReport report;
  report.statement = make_statement(markov::StatementKind::ContempCI,
                                    static_cast<int>(series.labels.size()), a,
                                    b, w);
  report.statistic = statistic;
  report.p_value =
      std::min(1.0, static_cast<double>(a.size() * b.size()) * min_p);
  report.decision_at_alpha = report.p_value < alpha;
  report.n_used = t_rows;
  return report;
}

}  // namespace tsg::var_sim
