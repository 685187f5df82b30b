#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsg/errors.hpp"
#include "tsg/markov.hpp"
#include "tsg/mixed_graph.hpp"
#include "tsg/random_graph.hpp"
#include "tsg/rng.hpp"
#include "tsg/separation.hpp"
#include "tsg/var_sim.hpp"

namespace {

using json = nlohmann::ordered_json;
using tsg::graph::MixedGraph;
using tsg::graph::VertexSet;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  for (const char ch : csv) {
    if (ch == ',') {
      out.push_back(item);
      item.clear();
    } else {
      item.push_back(ch);
    }
  }
  if (!item.empty() || !out.empty()) out.push_back(item);
  for (const auto& label : out)
    if (label.empty()) throw tsg::query_error("empty label in vertex list");
  return out;
}

VertexSet set_arg(const MixedGraph& g, const std::string& csv) {
  return g.set_of_labels(split_labels(csv));
}

json labels_json(const std::vector<std::string>& labels, const VertexSet& s) {
  json out = json::array();
  for (const int v : s.members()) out.push_back(labels.at(v));
  return out;
}

const char* kind_name(tsg::markov::StatementKind kind) {
  switch (kind) {
    case tsg::markov::StatementKind::Noncausal: return "noncausal";
    case tsg::markov::StatementKind::ContempCI: return "contemp";
    case tsg::markov::StatementKind::CondIndep: return "condindep";
  }
  return "unknown";
}

json statement_json(const std::vector<std::string>& labels,
                    const tsg::markov::MarkovStatement& st) {
  json out;
  out["kind"] = kind_name(st.kind);
  out["source"] = labels_json(labels, st.source);
  out["target"] = labels_json(labels, st.target);
  out["information"] = labels_json(labels, st.information);
  return out;
}

json report_json(const std::vector<std::string>& labels,
                 const tsg::var_sim::TestReport& r) {
  json out = statement_json(labels, r.statement);
  out["statistic"] = r.statistic;
  out["p_value"] = r.p_value;
  out["reject"] = r.decision_at_alpha;
  out["n_used"] = r.n_used;
  return out;
}

std::string report_line(const std::vector<std::string>& labels,
                        const tsg::var_sim::TestReport& r) {
  return tsg::markov::to_line(labels, r.statement) +
         ": statistic=" + num(r.statistic) + " p_value=" + num(r.p_value) +
         (r.decision_at_alpha ? " reject" : " keep") +
         " n=" + std::to_string(r.n_used);
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tsg::parse_error("cannot write file: " + path);
  out << text;
}

struct GraphQueryArgs {
  std::string graph_path;
  std::string a, b, s;
  bool as_json = false;
};

void add_graph_query_options(CLI::App* cmd, GraphQueryArgs& args) {
  cmd->add_option("-g,--graph", args.graph_path, "graph file (.mg)")
      ->required();
  cmd->add_option("-A", args.a, "source vertex set, comma-separated")
      ->required();
  cmd->add_option("-B", args.b, "target vertex set, comma-separated")
      ->required();
  cmd->add_option("-S", args.s, "conditioning vertex set, comma-separated");
  cmd->add_flag("--json", args.as_json, "emit a JSON document");
}

json query_doc(const char* command, const GraphQueryArgs& args) {
  json doc;
  doc["command"] = command;
  doc["A"] = split_labels(args.a);
  doc["B"] = split_labels(args.b);
  doc["S"] = split_labels(args.s);
  return doc;
}

// Cross-checks the reachability automaton against the literal path oracle and
// the trail-based activity test over every singleton query of the graph.
// Returns the number of queries run; increments disagreements on mismatch.
long check_graph_oracles(const MixedGraph& g, long& disagreements) {
  namespace sep = tsg::sep;
  const int n = g.vertex_count();
  long queries = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      std::vector<int> rest;
      for (int v = 0; v < n; ++v)
        if (v != a && v != b) rest.push_back(v);
      const int m = static_cast<int>(rest.size());
      for (int mask = 0; mask < (1 << m); ++mask) {
        VertexSet s = g.empty_set();
        for (int i = 0; i < m; ++i)
          if (mask & (1 << i)) s.insert(rest[i]);
        ++queries;
        const bool automaton =
            sep::p_connecting_exists(g, a, b, s, sep::PathKind::Any);
        if (automaton != sep::oracle_path_exists(g, a, b, s, sep::PathKind::Any))
          ++disagreements;
        if (automaton != sep::trail_p_active_exists(g, a, b, s))
          ++disagreements;
        if (sep::p_connecting_exists(g, a, b, s, sep::PathKind::BPointing) !=
            sep::oracle_path_exists(g, a, b, s, sep::PathKind::BPointing))
          ++disagreements;
        if (sep::p_connecting_exists(g, a, b, s,
                                     sep::PathKind::ExtendedBiPointing) !=
            sep::oracle_path_exists(g, a, b, s,
                                    sep::PathKind::ExtendedBiPointing))
          ++disagreements;
      }
    }
  }
  return queries;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Queries and simulators for graphical time series models: "
      "p-separation, Granger noncausality, Markov statement enumeration, "
      "VAR/additive/spike/threshold simulation and empirical tests."};
  app.require_subcommand(1);

  // psep
  GraphQueryArgs psep_args;
  auto* psep = app.add_subcommand(
      "psep", "decide whether A and B are p-separated given S");
  add_graph_query_options(psep, psep_args);
  psep->callback([&psep_args] {
    const auto g = tsg::graph::load_mg(psep_args.graph_path);
    const bool separated =
        tsg::sep::p_separated(g, set_arg(g, psep_args.a),
                              set_arg(g, psep_args.b), set_arg(g, psep_args.s));
    if (psep_args.as_json) {
      json doc = query_doc("psep", psep_args);
      doc["separated"] = separated;
      emit(doc);
    } else {
      std::cout << "separated: " << (separated ? "true" : "false") << "\n";
    }
  });

  // noncausal
  GraphQueryArgs nc_args;
  auto* noncausal = app.add_subcommand(
      "noncausal", "decide whether the graph licenses: A does not "
                   "Granger-cause B at information set A u B u S");
  add_graph_query_options(noncausal, nc_args);
  noncausal->callback([&nc_args] {
    const auto g = tsg::graph::load_mg(nc_args.graph_path);
    const bool result =
        tsg::markov::gc_noncausal(g, set_arg(g, nc_args.a),
                                  set_arg(g, nc_args.b), set_arg(g, nc_args.s));
    if (nc_args.as_json) {
      json doc = query_doc("noncausal", nc_args);
      doc["noncausal"] = result;
      emit(doc);
    } else {
      std::cout << "noncausal: " << (result ? "true" : "false") << "\n";
    }
  });

  // contemp
  GraphQueryArgs ct_args;
  auto* contemp = app.add_subcommand(
      "contemp", "decide whether the graph licenses contemporaneous "
                 "conditional independence of A and B given A u B u S");
  add_graph_query_options(contemp, ct_args);
  contemp->callback([&ct_args] {
    const auto g = tsg::graph::load_mg(ct_args.graph_path);
    const bool result =
        tsg::markov::gc_contemp(g, set_arg(g, ct_args.a),
                                set_arg(g, ct_args.b), set_arg(g, ct_args.s));
    if (ct_args.as_json) {
      json doc = query_doc("contemp", ct_args);
      doc["contemp"] = result;
      emit(doc);
    } else {
      std::cout << "contemp: " << (result ? "true" : "false") << "\n";
    }
  });

  // bundle
  GraphQueryArgs bd_args;
  auto* bundle = app.add_subcommand(
      "bundle", "the three Granger statements accompanying a p-separation");
  add_graph_query_options(bundle, bd_args);
  bundle->callback([&bd_args] {
    const auto g = tsg::graph::load_mg(bd_args.graph_path);
    const auto r = tsg::markov::psep_granger_bundle(
        g, set_arg(g, bd_args.a), set_arg(g, bd_args.b), set_arg(g, bd_args.s));
    if (bd_args.as_json) {
      json doc = query_doc("bundle", bd_args);
      doc["a_noncausal_b"] = r.a_noncausal_b;
      doc["b_noncausal_a"] = r.b_noncausal_a;
      doc["contemporaneously_independent"] = r.contemporaneously_independent;
      emit(doc);
    } else {
      std::cout << "a_noncausal_b: " << (r.a_noncausal_b ? "true" : "false")
                << "\n"
                << "b_noncausal_a: " << (r.b_noncausal_a ? "true" : "false")
                << "\n"
                << "contemporaneously_independent: "
                << (r.contemporaneously_independent ? "true" : "false") << "\n";
    }
  });

  // markov
  std::string mk_graph, mk_level;
  int mk_max_block = 3;
  bool mk_json = false;
  auto* markov = app.add_subcommand(
      "markov", "enumerate the statements the graph asserts at a level");
  markov->add_option("-g,--graph", mk_graph, "graph file (.mg)")->required();
  markov->add_option("--level", mk_level, "statement level: pc, lc or bc")
      ->required()
      ->check(CLI::IsMember({"pc", "lc", "bc", "gc", "ga"}));
  markov->add_option("--max-block", mk_max_block,
                     "largest block size enumerated at level bc");
  markov->add_flag("--json", mk_json, "emit a JSON document");
  markov->callback([&] {
    const auto g = tsg::graph::load_mg(mk_graph);
    tsg::markov::MarkovLevel level = tsg::markov::MarkovLevel::PC;
    if (mk_level == "lc") level = tsg::markov::MarkovLevel::LC;
    if (mk_level == "bc") level = tsg::markov::MarkovLevel::BC;
    if (mk_level == "gc") level = tsg::markov::MarkovLevel::GC;
    if (mk_level == "ga") level = tsg::markov::MarkovLevel::GA;
    const auto statements =
        tsg::markov::enumerate_statements(g, level, mk_max_block);
    if (mk_json) {
      json doc;
      doc["command"] = "markov";
      doc["level"] = mk_level;
      doc["statements"] = json::array();
      for (const auto& st : statements)
        doc["statements"].push_back(statement_json(g.labels(), st));
      emit(doc);
    } else {
      std::cout << "statements: " << statements.size() << "\n";
      for (const auto& st : statements)
        std::cout << tsg::markov::to_line(g, st) << "\n";
    }
  });

  // mag
  std::string mag_graph, mag_u, mag_dot;
  bool mag_json = false;
  auto* mag = app.add_subcommand(
      "mag", "marginal ancestral graph of the closure of U");
  mag->add_option("-g,--graph", mag_graph, "graph file (.mg)")->required();
  mag->add_option("-U", mag_u, "retained vertex set, comma-separated")
      ->required();
  mag->add_option("--dot", mag_dot, "also write a DOT rendering to this file");
  mag->add_flag("--json", mag_json, "emit a JSON document");
  mag->callback([&] {
    const auto g = tsg::graph::load_mg(mag_graph);
    const auto m = tsg::graph::marginal_ancestral_graph(g, set_arg(g, mag_u));
    if (!mag_dot.empty()) write_text_file(mag_dot, tsg::graph::to_dot(m));
    if (mag_json) {
      json doc;
      doc["command"] = "mag";
      doc["vertices"] = m.labels();
      doc["directed"] = json::array();
      for (const auto& [from, to] : m.directed_edges())
        doc["directed"].push_back({m.label(from), m.label(to)});
      doc["undirected"] = json::array();
      for (const auto& [x, y] : m.undirected_edges())
        doc["undirected"].push_back({m.label(x), m.label(y)});
      emit(doc);
    } else {
      std::cout << tsg::graph::to_mg(m);
    }
  });

  // oracle
  std::string or_graph;
  int or_trials = 0;
  std::uint64_t or_seed = 1;
  bool or_json = false;
  auto* oracle = app.add_subcommand(
      "oracle", "cross-check the separation automaton against the literal "
                "path oracle and the trail test");
  oracle->add_option("-g,--graph", or_graph, "graph file (.mg)")->required();
  oracle->add_option("--trials", or_trials,
                     "additional random graphs to check");
  oracle->add_option("--seed", or_seed, "random graph seed");
  oracle->add_flag("--json", or_json, "emit a JSON document");
  oracle->callback([&] {
    const auto g = tsg::graph::load_mg(or_graph);
    if (g.vertex_count() > 10)
      throw tsg::query_error(
          "oracle cross-check enumerates all conditioning sets and is "
          "limited to 10 vertices");
    long disagreements = 0;
    json trials = json::array();
    std::vector<std::string> lines;
    long queries = check_graph_oracles(g, disagreements);
    lines.push_back("given graph: queries=" + std::to_string(queries) +
                    " disagreements=" + std::to_string(disagreements));
    if (or_json) {
      json t;
      t["graph"] = "given";
      t["vertices"] = g.vertex_count();
      t["queries"] = queries;
      trials.push_back(t);
    }
    long total = queries;
    tsg::Rng rng(or_seed);
    for (int i = 0; i < or_trials; ++i) {
      const auto rg = tsg::graph::random_mixed_graph(rng);
      const long before = disagreements;
      const long q = check_graph_oracles(rg, disagreements);
      total += q;
      lines.push_back("trial " + std::to_string(i) +
                      ": vertices=" + std::to_string(rg.vertex_count()) +
                      " queries=" + std::to_string(q) + " disagreements=" +
                      std::to_string(disagreements - before));
      if (or_json) {
        json t;
        t["graph"] = "trial " + std::to_string(i);
        t["vertices"] = rg.vertex_count();
        t["queries"] = q;
        trials.push_back(t);
      }
    }
    if (or_json) {
      json doc;
      doc["command"] = "oracle";
      doc["graphs"] = trials;
      doc["total_queries"] = total;
      doc["disagreements"] = disagreements;
      emit(doc);
    } else {
      for (const auto& line : lines) std::cout << line << "\n";
      std::cout << "total: queries=" << total
                << " disagreements=" << disagreements << "\n";
    }
    if (disagreements > 0)
      throw tsg::model_error("oracle cross-check found disagreements");
  });

  // var
  auto* var = app.add_subcommand("var", "vector autoregression tools");
  var->require_subcommand(1);

  std::string vr_graph;
  int vr_p = 1;
  std::uint64_t vr_seed = 1;
  double vr_radius = 0.6;
  auto* vrandom = var->add_subcommand(
      "random", "draw a random model compliant with a graph; prints model "
                "JSON on stdout");
  vrandom->add_option("-g,--graph", vr_graph, "graph file (.mg)")->required();
  vrandom->add_option("-p,--order", vr_p, "autoregression order");
  vrandom->add_option("--seed", vr_seed, "random seed");
  vrandom->add_option("--radius", vr_radius, "target spectral radius");
  vrandom->add_flag("--json", "model JSON is printed either way");
  vrandom->callback([&] {
    const auto g = tsg::graph::load_mg(vr_graph);
    std::cout << tsg::var_sim::model_to_json(
        tsg::var_sim::random_var(g, vr_p, vr_seed, vr_radius));
  });

  std::string vs_model;
  int vs_n = 0, vs_burnin = 1000;
  std::uint64_t vs_seed = 1;
  bool vs_json = false;
  auto* vsimulate = var->add_subcommand(
      "simulate", "simulate a model; prints series CSV on stdout");
  vsimulate->add_option("-m,--model", vs_model, "model JSON file")->required();
  vsimulate->add_option("-n,--length", vs_n, "rows to keep")->required();
  vsimulate->add_option("--burnin", vs_burnin, "rows to discard first");
  vsimulate->add_option("--seed", vs_seed, "random seed");
  vsimulate->add_flag("--json", vs_json, "emit a JSON document instead");
  vsimulate->callback([&] {
    const auto model = tsg::var_sim::load_model(vs_model);
    const auto series =
        tsg::var_sim::simulate_var(model, vs_n, vs_burnin, vs_seed);
    if (vs_json) {
      json doc;
      doc["command"] = "var simulate";
      doc["labels"] = series.labels;
      doc["data"] = json::array();
      for (int r = 0; r < series.data.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < series.data.cols(); ++c)
          row.push_back(series.data(r, c));
        doc["data"].push_back(row);
      }
      emit(doc);
    } else {
      std::cout << tsg::var_sim::series_to_csv(series);
    }
  });

  std::string vf_data, vf_graph;
  int vf_p = 1;
  auto* vfit = var->add_subcommand(
      "fit", "least-squares fit restricted to the graph pattern; prints "
             "model JSON on stdout");
  vfit->add_option("-d,--data", vf_data, "series CSV file")->required();
  vfit->add_option("-g,--graph", vf_graph, "graph file (.mg)")->required();
  vfit->add_option("-p,--order", vf_p, "autoregression order");
  vfit->add_flag("--json", "model JSON is printed either way");
  vfit->callback([&] {
    const auto series = tsg::var_sim::load_series(vf_data);
    const auto g = tsg::graph::load_mg(vf_graph);
    std::cout << tsg::var_sim::model_to_json(
        tsg::var_sim::fit_var(series, g, vf_p));
  });

  std::string vv_model, vv_graph;
  bool vv_json = false;
  auto* vvalidate = var->add_subcommand(
      "validate", "check a model's zero pattern against a graph");
  vvalidate->add_option("-m,--model", vv_model, "model JSON file")->required();
  vvalidate->add_option("-g,--graph", vv_graph, "graph file (.mg)")->required();
  vvalidate->add_flag("--json", vv_json, "emit a JSON document");
  vvalidate->callback([&] {
    const auto model = tsg::var_sim::load_model(vv_model);
    const auto g = tsg::graph::load_mg(vv_graph);
    const auto violations = tsg::var_sim::validate_var(model, g);
    const auto st = tsg::var_sim::is_stationary(model);
    if (vv_json) {
      json doc;
      doc["command"] = "var validate";
      doc["violations"] = violations;
      doc["stationary"] = st.stationary;
      doc["spectral_radius"] = st.spectral_radius;
      emit(doc);
    } else {
      std::cout << "violations: " << violations.size() << "\n";
      for (const auto& v : violations) std::cout << v << "\n";
      std::cout << "stationary: " << (st.stationary ? "true" : "false")
                << " (spectral radius " << num(st.spectral_radius) << ")\n";
    }
  });

  std::string vt_data, vt_a, vt_b, vt_s, vt_kind = "noncausal";
  int vt_p = 1;
  double vt_alpha = 0.01;
  bool vt_json = false;
  auto* vtest = var->add_subcommand(
      "test", "empirical noncausality or contemporaneous-independence test "
              "on a series");
  vtest->add_option("-d,--data", vt_data, "series CSV file")->required();
  vtest->add_option("-A", vt_a, "source component set")->required();
  vtest->add_option("-B", vt_b, "target component set")->required();
  vtest->add_option("-S", vt_s, "conditioning component set");
  vtest->add_option("-p,--order", vt_p, "lag order of the regressions");
  vtest->add_option("--alpha", vt_alpha, "test level");
  vtest->add_option("--kind", vt_kind, "noncausal or contemp")
      ->check(CLI::IsMember({"noncausal", "contemp"}));
  vtest->add_flag("--json", vt_json, "emit a JSON document");
  vtest->callback([&] {
    const auto series = tsg::var_sim::load_series(vt_data);
    const auto a = split_labels(vt_a);
    const auto b = split_labels(vt_b);
    const auto s = split_labels(vt_s);
    const auto report =
        vt_kind == "noncausal"
            ? tsg::var_sim::test_noncausal(series, a, b, s, vt_p, vt_alpha)
            : tsg::var_sim::test_contemp(series, a, b, s, vt_p, vt_alpha);
    if (vt_json) {
      json doc;
      doc["command"] = "var test";
      doc["kind"] = vt_kind;
      doc["alpha"] = vt_alpha;
      doc["report"] = report_json(series.labels, report);
      emit(doc);
    } else {
      std::cout << report_line(series.labels, report) << "\n";
    }
  });

  // counterexample
  double cx_rho = 0.6, cx_c = 0.67449;
  int cx_n = 20000;
  std::uint64_t cx_seed = 1;
  bool cx_json = false;
  auto* cx = app.add_subcommand(
      "counterexample",
      "regime-switching process whose pairwise statements match a graph "
      "that its block statement contradicts");
  cx->add_option("--rho", cx_rho, "in-regime correlation");
  cx->add_option("--c", cx_c, "regime threshold on |X3(t-1)|");
  cx->add_option("-n,--length", cx_n, "series length");
  cx->add_option("--seed", cx_seed, "random seed");
  cx->add_flag("--json", cx_json, "emit a JSON document");
  cx->callback([&] {
    const auto rep =
        tsg::var_sim::counterexample_report({cx_rho, cx_c}, cx_n, cx_seed);
    const std::vector<std::string> labels = {"1", "2", "3"};
    if (cx_json) {
      json doc;
      doc["command"] = "counterexample";
      doc["params"] = {{"rho", rep.params.rho}, {"c", rep.params.c}};
      doc["n"] = rep.n;
      doc["seed"] = rep.seed;
      doc["regimes"] = {{"n0", rep.regimes.n0},
                        {"r0", rep.regimes.r0},
                        {"n1", rep.regimes.n1},
                        {"r1", rep.regimes.r1}};
      doc["marginals"] = json::array();
      for (const auto& ks : rep.marginals)
        doc["marginals"].push_back({{"component", ks.component},
                                    {"regime", ks.regime},
                                    {"statistic", ks.statistic},
                                    {"p_value", ks.p_value},
                                    {"pass", ks.pass}});
      json ga;
      ga["pairwise"] = json::array();
      for (const auto& r : rep.graph_a_pairwise)
        ga["pairwise"].push_back(report_json(labels, r));
      ga["block"] = report_json(labels, rep.graph_a_block);
      ga["pairwise_pass"] = rep.graph_a_pairwise_pass;
      ga["block_rejected"] = rep.graph_a_block_rejected;
      doc["graph_a"] = ga;
      json gb;
      gb["pairwise"] = json::array();
      for (const auto& r : rep.graph_b_pairwise)
        gb["pairwise"].push_back(report_json(labels, r));
      gb["block_vacuous"] = rep.graph_b_block_vacuous;
      gb["pass"] = rep.graph_b_pass;
      doc["graph_b"] = gb;
      doc["marginals_pass"] = rep.marginals_pass;
      emit(doc);
    } else {
      std::cout << "regime 0: n=" << rep.regimes.n0
                << " correlation=" << num(rep.regimes.r0) << "\n"
                << "regime 1: n=" << rep.regimes.n1
                << " correlation=" << num(rep.regimes.r1) << "\n";
      for (const auto& ks : rep.marginals)
        std::cout << "ks component " << ks.component << " regime " << ks.regime
                  << ": statistic=" << num(ks.statistic)
                  << " p_value=" << num(ks.p_value)
                  << (ks.pass ? " pass" : " fail") << "\n";
      std::cout << "graph a pairwise:\n";
      for (const auto& r : rep.graph_a_pairwise)
        std::cout << "  " << report_line(labels, r) << "\n";
      std::cout << "graph a block: " << report_line(labels, rep.graph_a_block)
                << "\n";
      std::cout << "graph b pairwise:\n";
      for (const auto& r : rep.graph_b_pairwise)
        std::cout << "  " << report_line(labels, r) << "\n";
      std::cout << "graph b block: "
                << (rep.graph_b_block_vacuous ? "vacuous" : "stated") << "\n";
      std::cout << "marginals " << (rep.marginals_pass ? "pass" : "fail")
                << "; graph a pairwise "
                << (rep.graph_a_pairwise_pass ? "pass" : "fail")
                << "; graph a block "
                << (rep.graph_a_block_rejected ? "rejected" : "kept")
                << "; graph b " << (rep.graph_b_pass ? "pass" : "fail")
                << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tsg::query_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const tsg::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tsg::model_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tsg::estimation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
